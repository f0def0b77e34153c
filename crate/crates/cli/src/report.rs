//! JSON shapes of every report. `schema/report.schema.json` describes the
//! same documents.

use std::collections::BTreeMap;

use berge_core::construction::HVertex;
use berge_core::elimchain::{ChainReport, StepRecord};
use berge_core::verifier::Extreme;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// `[b, c, d, part]`.
pub fn vertex_json(v: HVertex) -> [u32; 4] {
    [v.b, v.c, v.d, v.part as u32]
}

#[derive(Debug, Serialize)]
pub struct SpotJson {
    pub trials: usize,
    pub skipped: usize,
    pub mismatches: usize,
}

#[derive(Debug, Serialize)]
pub struct StepJson {
    pub index: usize,
    pub line: usize,
    pub kind: &'static str,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
    pub terms: usize,
    pub degrees: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spot: Option<SpotJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub stripped: Vec<(String, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ChainJson {
    pub schema_version: u32,
    pub script: String,
    pub verdict: &'static str,
    pub steps: Vec<StepJson>,
}

impl ChainJson {
    pub fn new(r: &ChainReport, timings: bool) -> ChainJson {
        ChainJson {
            schema_version: SCHEMA_VERSION,
            script: r.script.clone(),
            verdict: r.verdict.as_str(),
            steps: r.steps.iter().map(|s| step_json(s, timings)).collect(),
        }
    }
}

fn step_json(s: &StepRecord, timings: bool) -> StepJson {
    StepJson {
        index: s.index,
        line: s.line,
        kind: s.kind,
        name: s.name.clone(),
        label: s.label.clone(),
        status: s.status.as_str(),
        scalar: s.scalar.as_ref().map(ToString::to_string),
        terms: s.terms,
        degrees: s.degree_profile.iter().cloned().collect(),
        spot: s.spot.as_ref().map(|c| SpotJson { trials: c.trials, skipped: c.skipped, mismatches: c.mismatches }),
        stripped: s.stripped.clone(),
        detail: s.detail.clone(),
        micros: timings.then_some(s.micros),
    }
}

#[derive(Debug, Serialize)]
#[allow(non_snake_case)]
pub struct Sizes {
    pub S1: usize,
    pub S2: usize,
    pub V: u64,
    pub E: usize,
}

#[derive(Debug, Serialize)]
pub struct ConstructJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub p: u64,
    pub chosen_half: &'static str,
    pub sizes: Sizes,
    pub edge_lower_bound: u64,
    pub verdict: &'static str,
    pub edges: Vec<[u32; 4]>,
}

#[derive(Debug, Serialize)]
pub struct GraphJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub q: u64,
    pub n: usize,
    pub edge_count: u64,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjacency: Option<Vec<[usize; 2]>>,
}

#[derive(Debug, Serialize)]
pub struct ExtremeJson {
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<[[u32; 4]; 2]>,
}

impl From<&Extreme> for ExtremeJson {
    fn from(e: &Extreme) -> Self {
        ExtremeJson { count: e.count, pair: e.pair.map(|(a, b)| [vertex_json(a), vertex_json(b)]) }
    }
}

#[derive(Debug, Serialize)]
pub struct PathsJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub p: u64,
    pub paths: u64,
    pub pairs: u64,
    pub max_same_part: ExtremeJson,
    pub max_cross_part: ExtremeJson,
    /// Keyed by signature, e.g. `"1231"`.
    pub per_type_max: BTreeMap<String, ExtremeJson>,
    /// Keyed by the representative signature of each class.
    pub per_class_max: BTreeMap<String, u64>,
    pub bound_check: &'static str,
}

#[derive(Debug, Serialize)]
pub struct CycleJson {
    pub vertices: [[u32; 4]; 4],
    /// `[x1, x2, x3, a]` of each edge.
    pub edges: [[u32; 4]; 4],
}

#[derive(Debug, Serialize)]
pub struct CyclesJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub p: u64,
    pub witnesses: Vec<CycleJson>,
    pub verdict: &'static str,
}

#[derive(Debug, Serialize)]
pub struct ThetaWitnessJson {
    pub a: [u64; 4],
    pub b: [u64; 4],
    pub paths: Vec<[[u64; 4]; 3]>,
}

#[derive(Debug, Serialize)]
pub struct ThetaJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub q: u64,
    pub witness: Option<ThetaWitnessJson>,
    pub verdict: &'static str,
}

#[derive(Debug, Serialize)]
pub struct OctagonJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub q: u64,
    pub samples: u64,
    pub examined: u64,
    pub violations: u64,
    pub truncated: bool,
    pub first_violation: Option<Vec<[u64; 4]>>,
    pub verdict: &'static str,
}

#[derive(Debug, Serialize)]
pub struct ResultantJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub vars: Vec<String>,
    pub var: String,
    pub result: String,
    pub verdict: &'static str,
}

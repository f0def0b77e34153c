//! Declarative elimination chains: define polynomials, take resultants,
//! strip known-nonzero factors and assert displayed identities, degrees and
//! nonvanishing claims.

mod builtin;
mod identity;
mod run;
mod script;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use builtin::{builtin_script, builtin_source, BUILTIN_NAMES};
pub use identity::{assert_identity_up_to_scalar, Mismatch};
pub use run::{run_script, run_script_with_values, ChainReport, Clock, NoClock, RunOptions, Status, StepRecord};
pub use script::parse_script;

use crate::poly::VarTable;

/// How many copies of a factor a `Strip` step removes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StripCount {
    /// Exactly `k`; the step fails if the true multiplicity differs.
    Exactly(u32),
    /// As many as divide.
    Saturate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainStep {
    Define {
        name: String,
        poly: String,
    },
    /// `strip_nonzero` additionally removes every factor of the script's
    /// nonzero list to saturation.
    Resultant {
        target: String,
        f: String,
        g: String,
        var: String,
        strip_nonzero: bool,
    },
    Substitute {
        target: String,
        source: String,
        var: String,
        poly: String,
    },
    Strip {
        target: String,
        source: String,
        factor: String,
        count: StripCount,
    },
    /// Removes every factor of the nonzero list to saturation.
    StripNonzero {
        target: String,
        source: String,
    },
    StripContent {
        target: String,
        source: String,
    },
    CoefficientOf {
        target: String,
        source: String,
        var: String,
        k: u32,
    },
    AssertIdentityUpToScalar {
        name: String,
        expected: String,
    },
    AssertDegree {
        name: String,
        var: String,
        degree: i64,
    },
    AssertNonzeroConstant {
        name: String,
    },
    AssertZero {
        name: String,
    },
}

impl ChainStep {
    pub fn kind(&self) -> &'static str {
        match self {
            ChainStep::Define { .. } => "define",
            ChainStep::Resultant { .. } => "resultant",
            ChainStep::Substitute { .. } => "substitute",
            ChainStep::Strip { .. } => "strip",
            ChainStep::StripNonzero { .. } => "strip_nonzero",
            ChainStep::StripContent { .. } => "strip_content",
            ChainStep::CoefficientOf { .. } => "coefficient",
            ChainStep::AssertIdentityUpToScalar { .. } => "assert_identity",
            ChainStep::AssertDegree { .. } => "assert_degree",
            ChainStep::AssertNonzeroConstant { .. } => "assert_nonzero_constant",
            ChainStep::AssertZero { .. } => "assert_zero",
        }
    }

    /// The name this step defines, if any.
    pub fn target(&self) -> Option<&str> {
        match self {
            ChainStep::Define { name, .. } => Some(name),
            ChainStep::Resultant { target, .. }
            | ChainStep::Substitute { target, .. }
            | ChainStep::Strip { target, .. }
            | ChainStep::StripNonzero { target, .. }
            | ChainStep::StripContent { target, .. }
            | ChainStep::CoefficientOf { target, .. } => Some(target),
            _ => None,
        }
    }

    /// The name the step reports on: its target, or the asserted name.
    pub fn subject(&self) -> &str {
        match self {
            ChainStep::AssertIdentityUpToScalar { name, .. }
            | ChainStep::AssertDegree { name, .. }
            | ChainStep::AssertNonzeroConstant { name }
            | ChainStep::AssertZero { name } => name,
            other => other.target().unwrap(),
        }
    }

    pub fn is_assertion(&self) -> bool {
        self.target().is_none()
    }

    /// Chain names read directly (not counting names inside polynomial text).
    pub fn sources(&self) -> Vec<&str> {
        match self {
            ChainStep::Define { .. } => Vec::new(),
            ChainStep::Resultant { f, g, .. } => alloc::vec![f.as_str(), g.as_str()],
            ChainStep::Substitute { source, .. }
            | ChainStep::Strip { source, .. }
            | ChainStep::StripNonzero { source, .. }
            | ChainStep::StripContent { source, .. }
            | ChainStep::CoefficientOf { source, .. } => alloc::vec![source.as_str()],
            _ => alloc::vec![self.subject()],
        }
    }
}

/// A step with its position in the source text and its optional label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptStep {
    pub step: ChainStep,
    pub line: usize,
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainScript {
    pub name: String,
    pub vars: VarTable,
    /// Polynomial texts of factors known not to vanish.
    pub nonzero: Vec<String>,
    pub steps: Vec<ScriptStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptError {
    /// 1-based; 0 when the error concerns the whole file.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl core::error::Error for ScriptError {}

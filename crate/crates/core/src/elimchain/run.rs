use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{assert_identity_up_to_scalar, ChainScript, ChainStep, StripCount};
use crate::arith::{PrimeField, Rational, RationalField, Ring};
use crate::poly::{content_primitive, parse_poly_with, PolyError, QPoly, VarTable, ZPoly};
use crate::resultant::{resultant_with, spot_check_claimed, Method, SpotCheck};

/// Monotonic time source; the core crate has none of its own.
pub trait Clock {
    fn now_micros(&self) -> u64;
}

/// Reports every step as taking no time.
pub struct NoClock;

impl Clock for NoClock {
    fn now_micros(&self) -> u64 {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Seed for the modular oracles.
    pub seed: u64,
    /// Random points per resultant spot check (0 disables).
    pub spot_trials: usize,
    pub spot_prime: u64,
    /// Random points used to re-check each passed identity.
    pub identity_points: usize,
    pub method: Method,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 20240521, spot_trials: 50, spot_prime: 1009, identity_points: 20, method: Method::Auto }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    /// 1-based position in the script.
    pub index: usize,
    pub line: usize,
    pub kind: &'static str,
    pub name: String,
    pub label: Option<String>,
    pub status: Status,
    /// Proportionality constant of an identity check.
    pub scalar: Option<Rational>,
    /// Degree in every variable that occurs in the step's polynomial.
    pub degree_profile: Vec<(String, i64)>,
    pub terms: usize,
    pub micros: u64,
    pub spot: Option<SpotCheck>,
    /// Factors removed by the step, with multiplicities.
    pub stripped: Vec<(String, u32)>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub script: String,
    pub steps: Vec<StepRecord>,
    pub verdict: Status,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &StepRecord> {
        self.steps.iter().filter(|s| s.status == Status::Fail)
    }
}

/// What one step produced.
#[derive(Default)]
struct Outcome {
    value: Option<ZPoly>,
    fail: Option<String>,
    detail: Option<String>,
    scalar: Option<Rational>,
    spot: Option<SpotCheck>,
    stripped: Vec<(String, u32)>,
}

impl Outcome {
    fn value(v: ZPoly) -> Self {
        Outcome { value: Some(v), ..Outcome::default() }
    }

    fn check(ok: bool, detail: String) -> Self {
        Outcome { fail: (!ok).then(|| detail.clone()), detail: Some(detail), ..Outcome::default() }
    }
}

fn primitive_or_zero(q: &QPoly) -> ZPoly {
    match content_primitive(q) {
        Ok((_, z)) => z,
        Err(_) => ZPoly::zero(crate::arith::IntegerRing, q.nvars()),
    }
}

struct Runner<'a> {
    script: &'a ChainScript,
    opts: &'a RunOptions,
    values: BTreeMap<String, ZPoly>,
    nonzero: Vec<(String, ZPoly)>,
}

impl Runner<'_> {
    fn vars(&self) -> &VarTable {
        &self.script.vars
    }

    fn var(&self, name: &str) -> usize {
        self.vars().index_of(name).expect("validated variable")
    }

    fn get(&self, name: &str) -> Result<&ZPoly, String> {
        self.values.get(name).ok_or_else(|| format!("`{name}` is unavailable because an earlier step failed"))
    }

    /// Parses polynomial text over the rationals, resolving chain names.
    fn parse(&self, text: &str) -> Result<QPoly, String> {
        let lookup = |n: &str| self.values.get(n).map(|p| p.to_rational());
        let missing = |e: PolyError| match e {
            PolyError::UnknownVariable(n) => format!("`{n}` is unavailable because an earlier step failed"),
            e => e.to_string(),
        };
        parse_poly_with(text, self.vars(), RationalField, &lookup).map_err(missing)
    }

    fn rng(&self, index: usize, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.opts.seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }

    fn step(&self, index: usize, step: &ChainStep) -> Result<Outcome, String> {
        match step {
            ChainStep::Define { poly, .. } => Ok(Outcome::value(primitive_or_zero(&self.parse(poly)?))),
            ChainStep::Resultant { f, g, var, strip_nonzero, .. } => {
                let (f, g) = (self.get(f)?, self.get(g)?);
                let v = self.var(var);
                let raw = resultant_with(f, g, v, self.opts.method).map_err(|e| e.to_string())?;
                let mut out = Outcome::default();
                if self.opts.spot_trials > 0 {
                    let mut rng = self.rng(index, 1);
                    let spot = spot_check_claimed(f, g, v, &raw, self.opts.spot_trials, self.opts.spot_prime, &mut rng);
                    if !spot.passed() {
                        out.fail =
                            Some(format!("modular spot check failed at {} of {} points", spot.mismatches, spot.trials));
                    }
                    out.spot = Some(spot);
                }
                let value = raw.primitive();
                if *strip_nonzero {
                    let (rest, stripped) = self.strip_nonzero(value)?;
                    out.stripped = stripped;
                    out.value = Some(rest);
                } else {
                    out.value = Some(value);
                }
                Ok(out)
            }
            ChainStep::Substitute { source, var, poly, .. } => {
                let src = self.get(source)?.to_rational();
                let g = self.parse(poly)?;
                let sub = src.substitute(self.var(var), &g).map_err(|e| e.to_string())?;
                Ok(Outcome::value(primitive_or_zero(&sub)))
            }
            ChainStep::Strip { source, factor, count, .. } => {
                let src = self.get(source)?;
                let g = primitive_or_zero(&self.parse(factor)?);
                if g.is_zero() {
                    return Err("factor is zero".into());
                }
                if g.is_constant() {
                    return Err("factor is a unit constant".into());
                }
                let (k, rest) = src.strip_factor(&g).map_err(|e| e.to_string())?;
                let mut out = Outcome::default();
                match count {
                    StripCount::Saturate => out.value = Some(rest),
                    StripCount::Exactly(e) if k == *e => out.value = Some(rest),
                    StripCount::Exactly(e) => {
                        out.fail = Some(format!("multiplicity of ({factor}) is {k}, expected {e}"));
                        let mut v = src.clone();
                        for _ in 0..k.min(*e) {
                            v = v.div_exact(&g).expect("factor divides");
                        }
                        out.value = Some(v);
                    }
                }
                out.stripped.push((factor.clone(), k));
                Ok(out)
            }
            ChainStep::StripNonzero { source, .. } => {
                let (rest, stripped) = self.strip_nonzero(self.get(source)?.clone())?;
                Ok(Outcome { value: Some(rest), stripped, ..Outcome::default() })
            }
            ChainStep::StripContent { source, .. } => Ok(Outcome::value(self.get(source)?.primitive())),
            ChainStep::CoefficientOf { source, var, k, .. } => {
                let c = self.get(source)?.coefficient_in(self.var(var), *k).map_err(|e| e.to_string())?;
                Ok(Outcome::value(c.primitive()))
            }
            ChainStep::AssertIdentityUpToScalar { name, expected } => {
                let computed = self.get(name)?.to_rational();
                let expected = self.parse(expected)?;
                match assert_identity_up_to_scalar(&computed, &expected) {
                    Ok(lambda) => {
                        let mut out = Outcome { scalar: Some(lambda.clone()), ..Outcome::default() };
                        if let Err(msg) = self.recheck_identity(index, &computed, &expected, &lambda) {
                            out.fail = Some(msg);
                        }
                        Ok(out)
                    }
                    Err(m) => Ok(Outcome { fail: Some(m.describe(self.vars())), ..Outcome::default() }),
                }
            }
            ChainStep::AssertDegree { name, var, degree } => {
                let d = self.get(name)?.degree_in(self.var(var));
                Ok(Outcome::check(d == *degree, format!("degree in {var} is {d}, expected {degree}")))
            }
            ChainStep::AssertNonzeroConstant { name } => {
                let p = self.get(name)?;
                let detail = if p.is_zero() {
                    "value is zero".to_string()
                } else if p.is_constant() {
                    format!("constant {}", p.coeff(0))
                } else {
                    format!("not constant ({} terms)", p.nterms())
                };
                Ok(Outcome::check(p.is_constant() && !p.is_zero(), detail))
            }
            ChainStep::AssertZero { name } => {
                let p = self.get(name)?;
                Ok(Outcome::check(p.is_zero(), format!("{} terms", p.nterms())))
            }
        }
    }

    /// Divides out every factor of the nonzero list as often as it divides.
    fn strip_nonzero(&self, mut value: ZPoly) -> Result<(ZPoly, Vec<(String, u32)>), String> {
        let mut stripped = Vec::new();
        if value.is_zero() {
            return Ok((value, stripped));
        }
        for (text, factor) in &self.nonzero {
            let (k, rest) = value.strip_factor(factor).map_err(|e| e.to_string())?;
            if k > 0 {
                stripped.push((text.clone(), k));
                value = rest;
            }
        }
        Ok((value, stripped))
    }

    /// Evaluates both sides of a passed identity at random points of `F_p`.
    fn recheck_identity(
        &self,
        index: usize,
        computed: &QPoly,
        expected: &QPoly,
        lambda: &Rational,
    ) -> Result<(), String> {
        let p = self.opts.spot_prime;
        let field = PrimeField::new(p);
        let (Some(c), Some(e), Some(l)) =
            (computed.to_prime_field(field), expected.to_prime_field(field), lambda.mod_p(p))
        else {
            return Ok(());
        };
        let mut rng = self.rng(index, 2);
        let mut point = alloc::vec![0u64; computed.nvars()];
        for _ in 0..self.opts.identity_points {
            for x in point.iter_mut() {
                *x = rng.gen_range(0..p);
            }
            let lhs = c.evaluate(&point).expect("full point");
            let rhs = field.mul(&l, &e.evaluate(&point).expect("full point"));
            if lhs != rhs {
                return Err(format!("identity holds formally but not at an evaluation point mod {p}"));
            }
        }
        Ok(())
    }
}

/// Executes every step in order. Failures are recorded and execution
/// continues; steps that depend on a failed computation fail in turn.
pub fn run_script(script: &ChainScript, opts: &RunOptions, clock: &dyn Clock) -> ChainReport {
    run_script_with_values(script, opts, clock).0
}

/// [`run_script`], also returning every polynomial the script named.
pub fn run_script_with_values(
    script: &ChainScript,
    opts: &RunOptions,
    clock: &dyn Clock,
) -> (ChainReport, BTreeMap<String, ZPoly>) {
    let vars = &script.vars;
    let nonzero = script
        .nonzero
        .iter()
        .filter_map(|t| {
            let q = crate::poly::parse_poly(t, vars, RationalField).ok()?;
            Some((t.clone(), primitive_or_zero(&q)))
        })
        .collect();
    let mut runner = Runner { script, opts, values: BTreeMap::new(), nonzero };
    let mut steps = Vec::with_capacity(script.steps.len());
    for (i, s) in script.steps.iter().enumerate() {
        let index = i + 1;
        let start = clock.now_micros();
        let outcome = runner.step(index, &s.step).unwrap_or_else(|e| Outcome { fail: Some(e), ..Outcome::default() });
        let micros = clock.now_micros().saturating_sub(start);
        let shown = outcome.value.as_ref().or_else(|| runner.values.get(s.step.subject()));
        let (degree_profile, terms) = match shown {
            Some(p) => (
                p.degree_profile()
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d > 0)
                    .map(|(k, &d)| (vars.name(k).to_string(), d))
                    .collect(),
                p.nterms(),
            ),
            None => (Vec::new(), 0),
        };
        let status = if outcome.fail.is_some() { Status::Fail } else { Status::Pass };
        steps.push(StepRecord {
            index,
            line: s.line,
            kind: s.step.kind(),
            name: s.step.subject().to_string(),
            label: s.label.clone(),
            status,
            scalar: outcome.scalar,
            degree_profile,
            terms,
            micros,
            spot: outcome.spot,
            stripped: outcome.stripped,
            detail: outcome.fail.or(outcome.detail),
        });
        if let (Some(t), Some(v)) = (s.step.target(), outcome.value) {
            runner.values.insert(t.to_string(), v);
        }
    }
    let verdict = if steps.iter().all(|s| s.status == Status::Pass) { Status::Pass } else { Status::Fail };
    (ChainReport { script: script.name.clone(), steps, verdict }, runner.values)
}

use alloc::vec::Vec;

use super::ConstructionError;
use crate::arith::{is_negated_square, is_prime, univariate_roots_mod_p, PrimeFieldElem, Rational};

/// Smallest prime for which the guaranteed size `(p - 43)/4` of `S_1` is
/// positive.
pub const MIN_PRIME: u64 = 47;

/// Which of the two halves `T_1`, `T_2` was intersected with `T_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    T1,
    T2,
}

impl Half {
    pub fn as_str(self) -> &'static str {
        match self {
            Half::T1 => "T1",
            Half::T2 => "T2",
        }
    }
}

/// The quintic whose roots make up `T_5`, lowest degree first.
pub const T5_QUINTIC: [(i64, i64); 6] = [(-2, 151), (-49, 453), (289, 1359), (1123, 3624), (-12757, 10872), (1, 1)];

/// The sets `T_1..T_5`, `S_1`, `S_2` over `F_p`. Every set is stored as a
/// sorted list of canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    pub p: u64,
    pub t1: Vec<u64>,
    pub t2: Vec<u64>,
    pub t3: Vec<u64>,
    pub t4: Vec<u64>,
    pub t5: Vec<u64>,
    pub s1: Vec<u64>,
    pub s2: Vec<u64>,
    pub chosen_half: Half,
    in_s1: Vec<bool>,
}

impl SetSystem {
    pub fn in_s1(&self, x: u64) -> bool {
        self.in_s1.get(x as usize).copied().unwrap_or(false)
    }

    pub fn in_s2(&self, x: u64) -> bool {
        x > 1 && x < self.p
    }

    /// Position of `x` in `S_1`.
    pub fn s1_index(&self, x: u64) -> Option<usize> {
        self.s1.binary_search(&x).ok()
    }

    /// `n = 3|S_1|(p - 2)^2`.
    pub fn vertex_count(&self) -> u64 {
        3 * self.s1.len() as u64 * (self.p - 2) * (self.p - 2)
    }
}

fn roots(p: u64, coeffs: &[i64]) -> Vec<u64> {
    let c: Vec<PrimeFieldElem> = coeffs.iter().map(|&v| PrimeFieldElem::new(v, p)).collect();
    univariate_roots_mod_p(&c).map(|s| s.into_iter().collect()).unwrap_or_default()
}

fn quintic_mod_p(p: u64) -> Result<Vec<PrimeFieldElem>, ConstructionError> {
    T5_QUINTIC
        .iter()
        .map(|&(n, d)| {
            let q = Rational::new(n.into(), d.into()).expect("nonzero denominator");
            q.mod_p(p).map(|v| PrimeFieldElem::from_u64(v, p)).ok_or(ConstructionError::QuinticUndefined { p })
        })
        .collect()
}

/// Builds every set by exhaustive scan over `F_p`. Primes below
/// [`MIN_PRIME`] are only accepted with `force`, and even then `S_1` must be
/// nonempty.
pub fn build_sets(p: u64, force: bool) -> Result<SetSystem, ConstructionError> {
    if p < 5 || !is_prime(p) {
        return Err(ConstructionError::InvalidField { q: p });
    }
    if p < MIN_PRIME && !force {
        return Err(ConstructionError::TooSmall { p, s1: None });
    }
    let half = (p - 1) / 2;
    let t1: Vec<u64> = (2..=half).collect();
    let t2: Vec<u64> = ((p + 3) / 2..p).collect();
    let t3: Vec<u64> = (0..p).filter(|&x| !is_negated_square(PrimeFieldElem::from_u64(x, p))).collect();

    let mut t4 = roots(p, &[1, -4, 1]);
    t4.extend(roots(p, &[-1, 3]));
    t4.extend(roots(p, &[-2, 3]));
    t4.sort_unstable();
    t4.dedup();
    let t5: Vec<u64> = univariate_roots_mod_p(&quintic_mod_p(p)?).map(|s| s.into_iter().collect()).unwrap_or_default();

    let mut in_t3 = alloc::vec![false; p as usize];
    for &x in &t3 {
        in_t3[x as usize] = true;
    }
    let meet = |t: &[u64]| t.iter().filter(|&&x| in_t3[x as usize]).count();
    let chosen_half = if meet(&t1) >= meet(&t2) { Half::T1 } else { Half::T2 };
    let chosen = match chosen_half {
        Half::T1 => &t1,
        Half::T2 => &t2,
    };
    let s1: Vec<u64> = chosen
        .iter()
        .copied()
        .filter(|&x| in_t3[x as usize] && t4.binary_search(&x).is_err() && t5.binary_search(&x).is_err())
        .collect();
    if s1.is_empty() {
        return Err(ConstructionError::TooSmall { p, s1: Some(0) });
    }
    if !force && 4 * s1.len() as u64 + 43 < p {
        return Err(ConstructionError::InvariantViolated(alloc::format!(
            "|S1| = {} is below (p - 43)/4 for p = {p}",
            s1.len()
        )));
    }
    let s2: Vec<u64> = (2..p).collect();
    let mut in_s1 = alloc::vec![false; p as usize];
    for &x in &s1 {
        in_s1[x as usize] = true;
    }
    Ok(SetSystem { p, t1, t2, t3, t4, t5, s1, s2, chosen_half, in_s1 })
}

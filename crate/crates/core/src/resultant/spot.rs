//! Independent modular oracle for multivariate resultants: specialize every
//! variable but the eliminated one at random points of `F_p`, and compare
//! the univariate resultant of the specializations (computed by a Euclidean
//! remainder sequence, not by a determinant) with the specialized claim.

use alloc::vec::Vec;

use rand::Rng;

use super::{resultant, ResultantError};
use crate::arith::{PrimeField, Ring};
use crate::poly::{FpPoly, QPoly, ZPoly};

/// Outcome of a modular spot check.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SpotCheck {
    /// Points actually compared.
    pub trials: usize,
    /// Draws discarded because a specialized leading coefficient vanished.
    pub skipped: usize,
    pub mismatches: usize,
}

impl SpotCheck {
    pub fn passed(&self) -> bool {
        self.trials > 0 && self.mismatches == 0
    }
}

/// Degenerate draws tolerated per requested point before giving up.
const MAX_DRAWS_PER_TRIAL: usize = 20;

/// Coefficient domains that reduce modulo a prime.
pub trait ModReduce {
    fn reduce_mod(&self, field: PrimeField) -> Option<FpPoly>;
}

impl ModReduce for ZPoly {
    fn reduce_mod(&self, field: PrimeField) -> Option<FpPoly> {
        Some(self.to_prime_field(field))
    }
}

impl ModReduce for QPoly {
    fn reduce_mod(&self, field: PrimeField) -> Option<FpPoly> {
        self.to_prime_field(field)
    }
}

impl ModReduce for FpPoly {
    fn reduce_mod(&self, field: PrimeField) -> Option<FpPoly> {
        (*self.ring() == field).then(|| self.clone())
    }
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo `b` (dense, lowest degree first, `b` nonzero).
fn rem(field: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = field.inv(b[db]).expect("nonzero leading coefficient");
    while r.len() > db {
        let top = *r.last().unwrap();
        if top != 0 {
            let q = field.mul(&top, &inv);
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                let t = field.mul(&q, &bc);
                r[shift + i] = field.sub(&r[shift + i], &t);
            }
        }
        r.pop();
    }
    trim(r)
}

/// Resultant of two dense univariate polynomials over `F_p`, with formal
/// degrees `deg_a = a.len() - 1` and `deg_b = b.len() - 1` (leading
/// coefficients must be nonzero).
///
/// Uses `res(A, B) = (-1)^{mn} lc(B)^{m - r} res(B, A mod B)` with
/// `r = deg(A mod B)`.
pub fn univariate_resultant_mod_p(field: &PrimeField, a: &[u64], b: &[u64]) -> u64 {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut acc = field.one();
    loop {
        let (m, n) = (a.len() - 1, b.len() - 1);
        if n == 0 {
            return field.mul(&acc, &field.pow(&b[0], m as u32));
        }
        if m == 0 {
            return field.mul(&acc, &field.pow(&a[0], n as u32));
        }
        let r = rem(field, &a, &b);
        if r.is_empty() {
            return 0;
        }
        let deg_r = r.len() - 1;
        let mut factor = field.pow(&b[n], (m - deg_r) as u32);
        if (m * n) % 2 == 1 {
            factor = field.neg(&factor);
        }
        acc = field.mul(&acc, &factor);
        a = b;
        b = r;
    }
}

/// Compares `claimed` against `R(f, g, var)` at `trials` random points of
/// `F_p`, redrawing points where either leading coefficient vanishes.
pub fn spot_check_claimed<P: ModReduce, G: Rng>(
    f: &P,
    g: &P,
    var: usize,
    claimed: &P,
    trials: usize,
    p: u64,
    rng: &mut G,
) -> SpotCheck {
    let field = PrimeField::new(p);
    let (Some(ff), Some(gf), Some(cf)) = (f.reduce_mod(field), g.reduce_mod(field), claimed.reduce_mod(field)) else {
        return SpotCheck::default();
    };
    let (m, n) = (ff.degree_in(var).max(0) as usize, gf.degree_in(var).max(0) as usize);
    let mut out = SpotCheck::default();
    let mut point = alloc::vec![0u64; ff.nvars()];
    while out.trials < trials && out.skipped < trials * MAX_DRAWS_PER_TRIAL {
        for x in point.iter_mut() {
            *x = rng.gen_range(0..p);
        }
        let fu = ff.specialize_to_univariate(var, &point);
        let gu = gf.specialize_to_univariate(var, &point);
        if fu.len() != m + 1 || gu.len() != n + 1 {
            out.skipped += 1;
            continue;
        }
        out.trials += 1;
        let expect = univariate_resultant_mod_p(&field, &fu, &gu);
        let got = cf.evaluate(&point).expect("full point");
        if expect != got {
            out.mismatches += 1;
        }
    }
    out
}

/// Computes `R(f, g, var)` and spot-checks it modulo `p`.
pub fn resultant_spot_check<G: Rng>(
    f: &ZPoly,
    g: &ZPoly,
    var: usize,
    trials: usize,
    p: u64,
    rng: &mut G,
) -> Result<SpotCheck, ResultantError> {
    let r = resultant(f, g, var)?;
    Ok(spot_check_claimed(f, g, var, &r, trials, p, rng))
}

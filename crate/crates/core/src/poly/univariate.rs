use alloc::vec;
use alloc::vec::Vec;

use super::{Poly, PolyError, QPoly, ZPoly};
use crate::arith::{Integer, IntegerRing, Rational, Ring};

impl<R: Ring> Poly<R> {
    fn check_var(&self, var: usize) -> Result<(), PolyError> {
        if var >= self.nvars {
            Err(PolyError::VarIndexOutOfRange(var))
        } else {
            Ok(())
        }
    }

    /// Highest exponent of `var`; `-1` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> i64 {
        if self.is_zero() {
            return -1;
        }
        (0..self.nterms()).map(|i| self.exponents(i)[var] as i64).max().unwrap_or(0)
    }

    /// Lowest exponent of `var` over all terms; `-1` for zero.
    pub fn low_degree_in(&self, var: usize) -> i64 {
        if self.is_zero() {
            return -1;
        }
        (0..self.nterms()).map(|i| self.exponents(i)[var] as i64).min().unwrap_or(0)
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, var: usize, k: u32) -> Result<Self, PolyError> {
        self.check_var(var)?;
        let mut out = Poly::with_capacity(self.ring.clone(), self.nvars, 0);
        let mut buf = vec![0u32; self.stride()];
        for i in 0..self.nterms() {
            let ch = self.chunk(i);
            if ch[var + 1] == k {
                buf.copy_from_slice(ch);
                buf[var + 1] = 0;
                buf[0] -= k;
                out.coeffs.push(self.coeffs[i].clone());
                out.exps.extend_from_slice(&buf);
            }
        }
        // removing a variable can reorder terms of different total degree
        out.resort();
        Ok(out)
    }

    /// All coefficients with respect to `var`, lowest power first. Length is
    /// `degree_in(var) + 1` (empty for zero).
    pub fn to_univariate(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var);
        if d < 0 {
            return Vec::new();
        }
        let mut parts: Vec<Poly<R>> = (0..=d).map(|_| Poly::zero(self.ring.clone(), self.nvars)).collect();
        let mut buf = vec![0u32; self.stride()];
        for i in 0..self.nterms() {
            let ch = self.chunk(i);
            let k = ch[var + 1];
            buf.copy_from_slice(ch);
            buf[var + 1] = 0;
            buf[0] -= k;
            let part = &mut parts[k as usize];
            part.coeffs.push(self.coeffs[i].clone());
            part.exps.extend_from_slice(&buf);
        }
        for p in parts.iter_mut() {
            p.resort();
        }
        parts
    }

    /// Inverse of [`to_univariate`](Self::to_univariate).
    pub fn from_univariate(ring: R, nvars: usize, var: usize, parts: &[Self]) -> Self {
        let mut terms = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            for (c, e) in p.terms() {
                let mut e = e.to_vec();
                e[var] += k as u32;
                terms.push((e, c.clone()));
            }
        }
        Poly::from_terms(ring, nvars, terms)
    }

    pub(crate) fn resort(&mut self) {
        let s = self.stride();
        let n = self.nterms();
        let sorted = (1..n).all(|i| self.exps[(i - 1) * s..i * s] > self.exps[i * s..(i + 1) * s]);
        if sorted {
            return;
        }
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| self.exps[b * s..(b + 1) * s].cmp(&self.exps[a * s..(a + 1) * s]));
        let mut coeffs = Vec::with_capacity(n);
        let mut exps = Vec::with_capacity(n * s);
        for i in idx {
            coeffs.push(self.coeffs[i].clone());
            exps.extend_from_slice(&self.exps[i * s..(i + 1) * s]);
        }
        self.coeffs = coeffs;
        self.exps = exps;
    }

    /// Replaces `var` by `g` everywhere and expands.
    pub fn substitute(&self, var: usize, g: &Self) -> Result<Self, PolyError> {
        self.check_var(var)?;
        self.check_compat(g)?;
        let parts = self.to_univariate(var);
        // Horner in g
        let mut acc = Poly::zero(self.ring.clone(), self.nvars);
        for p in parts.iter().rev() {
            acc = &acc.mul(g) + p;
        }
        Ok(acc)
    }

    /// Value at a full assignment of the variables.
    pub fn evaluate(&self, point: &[R::Elem]) -> Result<R::Elem, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::MissingVariable(point.len(), self.nvars));
        }
        let ring = &self.ring;
        // power tables per variable
        let prof = self.degree_profile();
        let tables: Vec<Vec<R::Elem>> = point
            .iter()
            .zip(&prof)
            .map(|(x, &d)| {
                let mut t = vec![ring.one()];
                for k in 1..=d.max(0) as usize {
                    t.push(ring.mul(&t[k - 1], x));
                }
                t
            })
            .collect();
        let mut acc = ring.zero();
        for i in 0..self.nterms() {
            let mut term = self.coeffs[i].clone();
            for (k, &e) in self.exponents(i).iter().enumerate() {
                if e > 0 {
                    term = ring.mul(&term, &tables[k][e as usize]);
                }
            }
            ring.add_assign(&mut acc, &term);
        }
        Ok(acc)
    }

    /// Substitutes constants for every variable except `keep`, returning the
    /// dense univariate coefficients (lowest first, trailing zeros trimmed).
    pub fn specialize_to_univariate(&self, keep: usize, point: &[R::Elem]) -> Vec<R::Elem> {
        let ring = &self.ring;
        let parts = self.to_univariate(keep);
        let mut out: Vec<R::Elem> = parts.iter().map(|p| p.evaluate(point).expect("full point")).collect();
        while out.last().is_some_and(|c| ring.is_zero(c)) {
            out.pop();
        }
        out
    }
}

/// `f = content * primitive` with `primitive` an integer polynomial with
/// coprime coefficients and positive leading coefficient.
pub fn content_primitive(f: &QPoly) -> Result<(Rational, ZPoly), PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut den_lcm = Integer::ONE;
    for c in f.coeffs() {
        let d = c.denom();
        let g = den_lcm.gcd(d);
        den_lcm = (&den_lcm * d).div_known(&g);
    }
    let scaled = f.map_coeffs(IntegerRing, |c| Some((c.numer() * &den_lcm).div_known(c.denom()))).unwrap();
    let g = scaled.integer_content();
    let prim = scaled.primitive();
    let content = Rational::new(g, den_lcm).expect("nonzero denominator");
    Ok((content, prim))
}

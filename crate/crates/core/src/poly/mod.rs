//! Sparse multivariate polynomials over an exact coefficient ring.
//!
//! Terms are kept sorted in descending graded-lexicographic order over the
//! variable order of the owning [`VarTable`]. Each term's exponents are
//! stored as a chunk `[total, e_0, .., e_{n-1}]` in one flat array, so the
//! plain lexicographic comparison of chunks is exactly the graded order and
//! multiplying monomials is chunk-wise addition.

mod div;
mod error;
mod format;
mod heap;
mod mul;
mod parse;
mod univariate;
mod vars;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

pub use error::PolyError;
pub use format::format_poly;
pub use parse::{parse_poly, parse_poly_with, Bindings};
pub use univariate::content_primitive;
pub use vars::{is_identifier, VarTable};

use crate::arith::{Integer, IntegerRing, PrimeField, Rational, RationalField, Ring};

pub type QPoly = Poly<RationalField>;
pub type ZPoly = Poly<IntegerRing>;
pub type FpPoly = Poly<PrimeField>;

#[derive(Clone)]
pub struct Poly<R: Ring> {
    ring: R,
    nvars: usize,
    coeffs: Vec<R::Elem>,
    exps: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Ring operation with a domain compatibility check.
pub fn poly_arith<R: Ring>(op: ArithOp, f: &Poly<R>, g: &Poly<R>) -> Result<Poly<R>, PolyError> {
    f.check_compat(g)?;
    Ok(match op {
        ArithOp::Add => f.add(g),
        ArithOp::Sub => f.sub(g),
        ArithOp::Mul => f.mul(g),
    })
}

impl<R: Ring> Poly<R> {
    pub fn zero(ring: R, nvars: usize) -> Self {
        Poly { ring, nvars, coeffs: Vec::new(), exps: Vec::new() }
    }

    pub fn constant(ring: R, nvars: usize, c: R::Elem) -> Self {
        let mut p = Poly::zero(ring, nvars);
        if !p.ring.is_zero(&c) {
            p.coeffs.push(c);
            p.exps.extend(core::iter::repeat_n(0, nvars + 1));
        }
        p
    }

    pub fn one(ring: R, nvars: usize) -> Self {
        let c = ring.one();
        Poly::constant(ring, nvars, c)
    }

    /// The variable with index `i`.
    pub fn var(ring: R, nvars: usize, i: usize) -> Self {
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        let c = ring.one();
        Poly::monomial(ring, c, &e)
    }

    /// `c * prod x_i^{e_i}`.
    pub fn monomial(ring: R, c: R::Elem, exps: &[u32]) -> Self {
        let nvars = exps.len();
        let mut p = Poly::zero(ring, nvars);
        if !p.ring.is_zero(&c) {
            p.coeffs.push(c);
            p.exps.push(exps.iter().sum());
            p.exps.extend_from_slice(exps);
        }
        p
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated,
    /// unsorted, zero) terms.
    pub fn from_terms<I>(ring: R, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, R::Elem)>,
    {
        let mut items: Vec<(Vec<u32>, R::Elem)> = terms
            .into_iter()
            .map(|(e, c)| {
                assert_eq!(e.len(), nvars, "exponent vector length");
                let mut chunk = Vec::with_capacity(nvars + 1);
                chunk.push(e.iter().sum());
                chunk.extend_from_slice(&e);
                (chunk, c)
            })
            .collect();
        items.sort_by(|a, b| b.0.cmp(&a.0));
        let mut p = Poly::zero(ring, nvars);
        let mut iter = items.into_iter().peekable();
        while let Some((mon, mut c)) = iter.next() {
            while let Some((next, _)) = iter.peek() {
                if *next != mon {
                    break;
                }
                let (_, d) = iter.next().unwrap();
                p.ring.add_assign(&mut c, &d);
            }
            if !p.ring.is_zero(&c) {
                p.coeffs.push(c);
                p.exps.extend_from_slice(&mon);
            }
        }
        p
    }

    pub(crate) fn with_capacity(ring: R, nvars: usize, n: usize) -> Self {
        Poly { ring, nvars, coeffs: Vec::with_capacity(n), exps: Vec::with_capacity(n * (nvars + 1)) }
    }

    /// Appends a term that sorts strictly below every existing term.
    #[inline]
    pub(crate) fn push_term(&mut self, c: R::Elem, mon: &[u32]) {
        debug_assert_eq!(mon.len(), self.nvars + 1);
        debug_assert!(self.nterms() == 0 || self.chunk(self.nterms() - 1) > mon);
        self.coeffs.push(c);
        self.exps.extend_from_slice(mon);
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub(crate) fn stride(&self) -> usize {
        self.nvars + 1
    }

    pub fn nterms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.nterms() == 0 || (self.nterms() == 1 && self.exps[0] == 0)
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.nterms() == 1 && self.ring.is_one(&self.coeffs[0])
    }

    /// Constant value if the polynomial is constant.
    pub fn constant_value(&self) -> Option<R::Elem> {
        if self.is_zero() {
            Some(self.ring.zero())
        } else if self.is_constant() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Exponent chunk `[total, e_0, ..]` of term `i`.
    #[inline]
    pub(crate) fn chunk(&self, i: usize) -> &[u32] {
        let s = self.stride();
        &self.exps[i * s..(i + 1) * s]
    }

    /// Exponent vector of term `i`.
    pub fn exponents(&self, i: usize) -> &[u32] {
        &self.chunk(i)[1..]
    }

    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&R::Elem, &[u32])> + '_ {
        (0..self.nterms()).map(move |i| (&self.coeffs[i], self.exponents(i)))
    }

    /// Leading coefficient in the graded-lex order.
    pub fn lc(&self) -> Option<&R::Elem> {
        self.coeffs.first()
    }

    pub fn total_degree(&self) -> i64 {
        if self.is_zero() {
            -1
        } else {
            self.exps[0] as i64
        }
    }

    pub fn check_compat(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::DomainMismatch(self.ring.name(), other.ring.name()));
        }
        if self.nvars != other.nvars {
            return Err(PolyError::VarCountMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    fn assert_compat(&self, other: &Self) {
        if let Err(e) = self.check_compat(other) {
            panic!("{e}");
        }
    }

    pub fn neg(&self) -> Self {
        Poly {
            ring: self.ring.clone(),
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
            exps: self.exps.clone(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R::Elem) -> Self {
        if self.ring.is_zero(c) {
            return Poly::zero(self.ring.clone(), self.nvars);
        }
        let mut out = Poly::with_capacity(self.ring.clone(), self.nvars, self.nterms());
        for i in 0..self.nterms() {
            let v = self.ring.mul(&self.coeffs[i], c);
            if !self.ring.is_zero(&v) {
                out.coeffs.push(v);
                out.exps.extend_from_slice(self.chunk(i));
            }
        }
        out
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &R::Elem) -> Option<Self> {
        let mut out = self.clone();
        for v in out.coeffs.iter_mut() {
            *v = self.ring.div_exact(v, c)?;
        }
        Some(out)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.assert_compat(other);
        let r = &self.ring;
        let (n, m) = (self.nterms(), other.nterms());
        let mut out = Poly::with_capacity(r.clone(), self.nvars, n + m);
        let (mut i, mut j) = (0, 0);
        let take_other = |j: usize| {
            if negate_other {
                r.neg(&other.coeffs[j])
            } else {
                other.coeffs[j].clone()
            }
        };
        while i < n && j < m {
            match self.chunk(i).cmp(other.chunk(j)) {
                Ordering::Greater => {
                    out.push_term(self.coeffs[i].clone(), self.chunk(i));
                    i += 1;
                }
                Ordering::Less => {
                    out.push_term(take_other(j), other.chunk(j));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        r.sub(&self.coeffs[i], &other.coeffs[j])
                    } else {
                        r.add(&self.coeffs[i], &other.coeffs[j])
                    };
                    if !r.is_zero(&c) {
                        out.push_term(c, self.chunk(i));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < n {
            out.push_term(self.coeffs[i].clone(), self.chunk(i));
            i += 1;
        }
        while j < m {
            out.push_term(take_other(j), other.chunk(j));
            j += 1;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    /// Multiplies by `c * x^e`, preserving the term order.
    pub fn mul_term(&self, c: &R::Elem, e: &[u32]) -> Self {
        let s = self.stride();
        let shift: u32 = e.iter().sum();
        let mut out = Poly::with_capacity(self.ring.clone(), self.nvars, self.nterms());
        let mut buf = vec![0u32; s];
        for i in 0..self.nterms() {
            let v = self.ring.mul(&self.coeffs[i], c);
            if self.ring.is_zero(&v) {
                continue;
            }
            let ch = self.chunk(i);
            buf[0] = ch[0] + shift;
            for k in 0..self.nvars {
                buf[k + 1] = ch[k + 1] + e[k];
            }
            out.coeffs.push(v);
            out.exps.extend_from_slice(&buf);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(self.ring.clone(), self.nvars);
        if e == 0 {
            return acc;
        }
        if self.nterms() == 1 {
            let c = self.ring.pow(&self.coeffs[0], e);
            let exps: Vec<u32> = self.exponents(0).iter().map(|x| x * e).collect();
            return Poly::monomial(self.ring.clone(), c, &exps);
        }
        acc = self.clone();
        for _ in 1..e {
            acc = self.mul(&acc);
        }
        acc
    }

    /// Maps coefficients into another ring. Terms that map to zero are
    /// dropped; `None` if any coefficient has no image.
    pub fn map_coeffs<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> Option<S::Elem>) -> Option<Poly<S>> {
        let mut out = Poly::with_capacity(target, self.nvars, self.nterms());
        for i in 0..self.nterms() {
            let v = f(&self.coeffs[i])?;
            if !out.ring.is_zero(&v) {
                out.coeffs.push(v);
                out.exps.extend_from_slice(self.chunk(i));
            }
        }
        Some(out)
    }

    /// Largest exponent of every variable.
    pub fn degree_profile(&self) -> Vec<i64> {
        if self.is_zero() {
            return vec![-1; self.nvars];
        }
        let mut d = vec![0i64; self.nvars];
        for i in 0..self.nterms() {
            for (k, &e) in self.exponents(i).iter().enumerate() {
                d[k] = d[k].max(e as i64);
            }
        }
        d
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.nvars == other.nvars && self.coeffs == other.coeffs && self.exps == other.exps
    }
}

impl<R: Ring> core::fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Poly[{}; ", self.ring.name())?;
        for (i, (c, e)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{e:?}")?;
        }
        f.write_str("]")
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::add(self, rhs)
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::sub(self, rhs)
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::mul(self, rhs)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::neg(self)
    }
}

impl ZPoly {
    pub fn to_rational(&self) -> QPoly {
        self.map_coeffs(RationalField, |c| Some(Rational::from_integer(c.clone()))).unwrap()
    }

    /// Reduction modulo `p` (exact for every integer coefficient).
    pub fn to_prime_field(&self, field: PrimeField) -> FpPoly {
        let p = field.modulus();
        self.map_coeffs(field, |c| Some(c.rem_euclid_u64(p))).unwrap()
    }

    /// Gcd of the coefficients, with the sign of the leading coefficient.
    pub fn integer_content(&self) -> Integer {
        let mut g = Integer::ZERO;
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_some_and(|c| c.is_negative()) {
            -g
        } else {
            g
        }
    }

    /// Divides out the signed content: positive leading coefficient and
    /// coprime integer coefficients.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.integer_content();
        if g.is_one() {
            return self.clone();
        }
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = c.div_known(&g);
        }
        out
    }

    /// Largest coefficient size in bits.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(Integer::bits).max().unwrap_or(0)
    }
}

impl QPoly {
    /// Integer polynomial proportional to `self`: clears denominators, then
    /// takes the primitive part.
    pub fn to_integer_primitive(&self) -> ZPoly {
        content_primitive(self).map(|(_, p)| p).unwrap_or_else(|_| Poly::zero(IntegerRing, self.nvars))
    }

    pub fn to_prime_field(&self, field: PrimeField) -> Option<FpPoly> {
        self.map_coeffs(field, |c| field.from_rational(c))
    }
}

use alloc::string::String;
use core::fmt;

use super::integer::Integer;
use super::primefield::{add_mod, inv_mod, mul_mod, sub_mod};
use super::rational::Rational;

/// A commutative coefficient ring. The ring value itself carries any runtime
/// parameters (the modulus of `F_p`), so elements can stay plain data.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of a rational; `None` when the denominator is not invertible.
    fn from_rational(&self, q: &Rational) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        self.add_assign(acc, &p);
    }

    /// `acc -= a * b`
    fn sub_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        *acc = self.sub(acc, &p);
    }

    /// Exact quotient, `None` if `b` is zero or does not divide `a`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Whether the element prints with a leading minus sign.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn name(&self) -> String;
}

/// The integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = Integer;

    fn zero(&self) -> Integer {
        Integer::ZERO
    }
    fn one(&self) -> Integer {
        Integer::ONE
    }
    fn from_i64(&self, v: i64) -> Integer {
        Integer::from(v)
    }
    fn from_rational(&self, q: &Rational) -> Option<Integer> {
        q.is_integer().then(|| q.numer().clone())
    }
    fn is_zero(&self, a: &Integer) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Integer) -> bool {
        a.is_one()
    }
    fn add(&self, a: &Integer, b: &Integer) -> Integer {
        a + b
    }
    fn sub(&self, a: &Integer, b: &Integer) -> Integer {
        a - b
    }
    fn mul(&self, a: &Integer, b: &Integer) -> Integer {
        a * b
    }
    fn neg(&self, a: &Integer) -> Integer {
        -a
    }
    #[inline]
    fn add_mul_assign(&self, acc: &mut Integer, a: &Integer, b: &Integer) {
        acc.add_mul_assign(a, b);
    }
    #[inline]
    fn sub_mul_assign(&self, acc: &mut Integer, a: &Integer, b: &Integer) {
        acc.sub_mul_assign(a, b);
    }
    fn div_exact(&self, a: &Integer, b: &Integer) -> Option<Integer> {
        a.div_exact(b)
    }
    fn is_negative(&self, a: &Integer) -> bool {
        a.is_negative()
    }
    fn pow(&self, a: &Integer, e: u32) -> Integer {
        a.pow(e)
    }
    fn name(&self) -> String {
        "ZZ".into()
    }
}

/// The rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::from(v)
    }
    fn from_rational(&self, q: &Rational) -> Option<Rational> {
        Some(q.clone())
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a.add(b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a.sub(b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a.mul(b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        a.neg()
    }
    fn div_exact(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        a.div(b).ok()
    }
    fn is_negative(&self, a: &Rational) -> bool {
        a.is_negative()
    }
    fn pow(&self, a: &Rational, e: u32) -> Rational {
        a.pow(e)
    }
    fn name(&self) -> String {
        "QQ".into()
    }
}

/// The prime field `F_p`; elements are canonical representatives in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be prime and below `2^63`.
    pub fn new(p: u64) -> PrimeField {
        debug_assert!(super::primefield::is_prime(p));
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            inv_mod(a, self.p)
        }
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_rational(&self, q: &Rational) -> Option<u64> {
        q.mod_p(self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, *b, self.p)
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        sub_mod(*a, *b, self.p)
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        sub_mod(0, *a, self.p)
    }
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        Some(mul_mod(*a, self.inv(*b)?, self.p))
    }
    fn pow(&self, a: &u64, e: u32) -> u64 {
        super::primefield::pow_mod(*a, e as u64, self.p)
    }
    fn name(&self) -> String {
        alloc::format!("GF({})", self.p)
    }
}

use alloc::collections::BTreeSet;
use core::fmt;

use super::ArithError;

/// An element of the prime field `F_p`, stored as its canonical
/// representative in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElem {
    value: u64,
    modulus: u64,
}

#[allow(clippy::should_implement_trait)]
impl PrimeFieldElem {
    /// Reduces `v` into `F_p`. The caller guarantees `p` is prime; see
    /// [`is_prime`].
    pub fn new(v: i64, p: u64) -> PrimeFieldElem {
        PrimeFieldElem { value: (v as i128).rem_euclid(p as i128) as u64, modulus: p }
    }

    pub fn from_u64(v: u64, p: u64) -> PrimeFieldElem {
        PrimeFieldElem { value: v % p, modulus: p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, o: PrimeFieldElem) -> Result<(), ArithError> {
        if self.modulus != o.modulus {
            Err(ArithError::ModulusMismatch { left: self.modulus, right: o.modulus })
        } else {
            Ok(())
        }
    }

    pub fn add(self, o: PrimeFieldElem) -> Result<PrimeFieldElem, ArithError> {
        self.check(o)?;
        Ok(PrimeFieldElem { value: add_mod(self.value, o.value, self.modulus), modulus: self.modulus })
    }

    pub fn sub(self, o: PrimeFieldElem) -> Result<PrimeFieldElem, ArithError> {
        self.check(o)?;
        Ok(PrimeFieldElem { value: sub_mod(self.value, o.value, self.modulus), modulus: self.modulus })
    }

    pub fn mul(self, o: PrimeFieldElem) -> Result<PrimeFieldElem, ArithError> {
        self.check(o)?;
        Ok(PrimeFieldElem { value: mul_mod(self.value, o.value, self.modulus), modulus: self.modulus })
    }

    pub fn neg(self) -> PrimeFieldElem {
        PrimeFieldElem { value: sub_mod(0, self.value, self.modulus), modulus: self.modulus }
    }

    pub fn pow(self, e: u64) -> PrimeFieldElem {
        PrimeFieldElem { value: pow_mod(self.value, e, self.modulus), modulus: self.modulus }
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `p` by the extended Euclidean algorithm.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Multiplicative inverse in `F_p`.
pub fn field_inverse(x: PrimeFieldElem) -> Result<PrimeFieldElem, ArithError> {
    if x.is_zero() {
        return Err(ArithError::NotInvertible);
    }
    let v = inv_mod(x.value, x.modulus).ok_or(ArithError::NotInvertible)?;
    Ok(PrimeFieldElem { value: v, modulus: x.modulus })
}

/// Deterministic primality test for 64-bit integers (Miller-Rabin with the
/// first twelve prime bases).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Whether `x = -y^2` for some `y` in `F_p`.
///
/// For odd `p` this is Euler's criterion applied to `-x`; `p = 2` is handled
/// directly since every element is a square there.
pub fn is_negated_square(x: PrimeFieldElem) -> bool {
    let p = x.modulus;
    let minus_x = x.neg().value;
    if minus_x == 0 || p == 2 {
        return true;
    }
    pow_mod(minus_x, (p - 1) / 2, p) == 1
}

/// All roots of `sum coeffs[i] x^i` in `F_p`, by scanning every field
/// element. Coefficients are in ascending degree order.
pub fn univariate_roots_mod_p(coeffs: &[PrimeFieldElem]) -> Result<BTreeSet<u64>, ArithError> {
    let Some(first) = coeffs.first() else {
        return Err(ArithError::ZeroPolynomial);
    };
    let p = first.modulus;
    if let Some(bad) = coeffs.iter().find(|c| c.modulus != p) {
        return Err(ArithError::ModulusMismatch { left: p, right: bad.modulus });
    }
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(ArithError::ZeroPolynomial);
    }
    let mut roots = BTreeSet::new();
    for x in 0..p {
        let mut acc = 0u64;
        for c in coeffs.iter().rev() {
            acc = add_mod(mul_mod(acc, x, p), c.value, p);
        }
        if acc == 0 {
            roots.insert(x);
        }
    }
    Ok(roots)
}

//! Arbitrary-precision integers with an inline fast path for values that fit
//! in an `i64`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact integer. Values representable as `i64` are always stored in the
/// `Small` variant, so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    pub fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Big(b) => b.sign() == Sign::Minus,
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Integer::Small(v) => v.signum() as i32,
            Integer::Big(b) => match b.sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            },
        }
    }

    pub fn abs(&self) -> Integer {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Residue in `[0, m)` for a positive modulus `m < 2^63`.
    pub fn rem_euclid_u64(&self, m: u64) -> u64 {
        match self {
            Integer::Small(v) => (*v as i128).rem_euclid(m as i128) as u64,
            Integer::Big(b) => {
                let r = b.mod_floor(&BigInt::from(m));
                r.to_u64().expect("residue fits in u64")
            }
        }
    }

    pub fn gcd(&self, other: &Integer) -> Integer {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => {
                let g = gcd_u64(a.unsigned_abs(), b.unsigned_abs());
                if g <= i64::MAX as u64 {
                    Integer::Small(g as i64)
                } else {
                    Integer::Big(BigInt::from(g))
                }
            }
            (Integer::Small(s), Integer::Big(b)) | (Integer::Big(b), Integer::Small(s)) => {
                if *s == 0 {
                    return Integer::from_big(b.abs());
                }
                // reduce the big operand first so the rest stays word-sized
                let r = b.mod_floor(&BigInt::from(s.unsigned_abs()));
                let r = r.to_u64().unwrap();
                Integer::from_u64(gcd_u64(s.unsigned_abs(), r))
            }
            (Integer::Big(a), Integer::Big(b)) => Integer::from_big(a.gcd(b)),
        }
    }

    fn from_u64(v: u64) -> Integer {
        if v <= i64::MAX as u64 {
            Integer::Small(v as i64)
        } else {
            Integer::Big(BigInt::from(v))
        }
    }

    /// Exact quotient; `None` if `rhs` is zero or does not divide `self`.
    pub fn div_exact(&self, rhs: &Integer) -> Option<Integer> {
        if rhs.is_zero() {
            return None;
        }
        match (self, rhs) {
            (Integer::Small(a), Integer::Small(b)) => {
                let (a, b) = (*a as i128, *b as i128);
                if a % b != 0 {
                    return None;
                }
                Some(Integer::from_i128(a / b))
            }
            _ => {
                let (q, r) = self.to_big().div_rem(&rhs.to_big());
                if r.is_zero() {
                    Some(Integer::from_big(q))
                } else {
                    None
                }
            }
        }
    }

    /// Quotient that is known to be exact. Panics in debug builds otherwise.
    pub fn div_known(&self, rhs: &Integer) -> Integer {
        match (self, rhs) {
            (Integer::Small(a), Integer::Small(b)) => {
                debug_assert!(*a as i128 % *b as i128 == 0);
                Integer::from_i128(*a as i128 / *b as i128)
            }
            _ => Integer::from_big(self.to_big() / rhs.to_big()),
        }
    }

    #[inline]
    fn from_i128(v: i128) -> Integer {
        if v >= i64::MIN as i128 && v <= i64::MAX as i128 {
            Integer::Small(v as i64)
        } else {
            Integer::Big(BigInt::from(v))
        }
    }

    pub fn pow(&self, e: u32) -> Integer {
        let mut acc = Integer::ONE;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self += a * b`
    #[inline]
    pub fn add_mul_assign(&mut self, a: &Integer, b: &Integer) {
        if let (Integer::Small(s), Integer::Small(x), Integer::Small(y)) = (&*self, a, b) {
            let v = *s as i128 + (*x as i128) * (*y as i128);
            *self = Integer::from_i128(v);
            return;
        }
        let prod = a * b;
        *self = &*self + &prod;
    }

    /// `self -= a * b`
    #[inline]
    pub fn sub_mul_assign(&mut self, a: &Integer, b: &Integer) {
        if let (Integer::Small(s), Integer::Small(x), Integer::Small(y)) = (&*self, a, b) {
            let v = *s as i128 - (*x as i128) * (*y as i128);
            *self = Integer::from_i128(v);
            return;
        }
        let prod = a * b;
        *self = &*self - &prod;
    }

    /// Number of bits in the absolute value.
    pub fn bits(&self) -> u64 {
        match self {
            Integer::Small(v) => 64 - v.unsigned_abs().leading_zeros() as u64,
            Integer::Big(b) => b.bits(),
        }
    }
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<u64> for Integer {
    fn from(v: u64) -> Self {
        Integer::from_u64(v)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl<'a> Add<&'a Integer> for &'a Integer {
    type Output = Integer;
    #[inline]
    fn add(self, rhs: &Integer) -> Integer {
        match (self, rhs) {
            (Integer::Small(a), Integer::Small(b)) => match a.checked_add(*b) {
                Some(v) => Integer::Small(v),
                None => Integer::from_i128(*a as i128 + *b as i128),
            },
            _ => Integer::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Integer> for &'a Integer {
    type Output = Integer;
    #[inline]
    fn sub(self, rhs: &Integer) -> Integer {
        match (self, rhs) {
            (Integer::Small(a), Integer::Small(b)) => match a.checked_sub(*b) {
                Some(v) => Integer::Small(v),
                None => Integer::from_i128(*a as i128 - *b as i128),
            },
            _ => Integer::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl<'a> Mul<&'a Integer> for &'a Integer {
    type Output = Integer;
    #[inline]
    fn mul(self, rhs: &Integer) -> Integer {
        match (self, rhs) {
            (Integer::Small(a), Integer::Small(b)) => match a.checked_mul(*b) {
                Some(v) => Integer::Small(v),
                None => Integer::from_i128(*a as i128 * *b as i128),
            },
            (Integer::Big(a), Integer::Small(b)) | (Integer::Small(b), Integer::Big(a)) => Integer::from_big(a * *b),
            (Integer::Big(a), Integer::Big(b)) => Integer::from_big(a * b),
        }
    }
}

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl Add for Integer {
    type Output = Integer;
    fn add(self, rhs: Integer) -> Integer {
        &self + &rhs
    }
}

impl Mul for Integer {
    type Output = Integer;
    fn mul(self, rhs: Integer) -> Integer {
        &self * &rhs
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Integer::from(i64::MAX);
        let b = &a + &Integer::ONE;
        assert!(matches!(b, Integer::Big(_)));
        let c = &b - &Integer::ONE;
        assert_eq!(c, Integer::Small(i64::MAX));
        let sq = &a * &a;
        assert_eq!(sq.div_exact(&a), Some(a.clone()));
        assert_eq!(-&Integer::Small(i64::MIN), Integer::Big(BigInt::from(i64::MAX) + 1));
    }

    #[test]
    fn gcd_mixed() {
        let big = &Integer::from(i64::MAX) * &Integer::from(6i64);
        assert_eq!(big.gcd(&Integer::from(4i64)), Integer::from(2i64));
        assert_eq!(Integer::from(-12i64).gcd(&Integer::from(18i64)), Integer::from(6i64));
        assert_eq!(Integer::ZERO.gcd(&Integer::from(-5i64)), Integer::from(5i64));
    }

    #[test]
    fn add_mul_accumulates() {
        let mut acc = Integer::from(i64::MAX);
        acc.add_mul_assign(&Integer::from(i64::MAX), &Integer::from(2i64));
        let expect = BigInt::from(i64::MAX) * 3;
        assert_eq!(acc.to_big(), expect);
        acc.sub_mul_assign(&Integer::from(i64::MAX), &Integer::from(3i64));
        assert!(acc.is_zero());
    }

    #[test]
    fn residues() {
        assert_eq!(Integer::from(-1i64).rem_euclid_u64(7), 6);
        let big = Integer::from_big(BigInt::from(10).pow(30) + 3);
        assert_eq!(big.rem_euclid_u64(10), 3);
    }
}

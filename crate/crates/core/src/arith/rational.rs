use core::cmp::Ordering;
use core::fmt;

use super::integer::Integer;
use super::ArithError;

/// A rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Integer,
    den: Integer,
}

impl Rational {
    pub fn zero() -> Rational {
        Rational { num: Integer::ZERO, den: Integer::ONE }
    }

    pub fn one() -> Rational {
        Rational { num: Integer::ONE, den: Integer::ONE }
    }

    pub fn from_integer(n: Integer) -> Rational {
        Rational { num: n, den: Integer::ONE }
    }

    /// Canonical form of `num / den`.
    pub fn new(num: Integer, den: Integer) -> Result<Rational, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Integer, den: Integer) -> Rational {
        if num.is_zero() {
            return Rational::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.div_known(&g), den.div_known(&g)) };
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> &Integer {
        &self.num
    }

    pub fn denom(&self) -> &Integer {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn add(&self, o: &Rational) -> Rational {
        if self.den.is_one() && o.den.is_one() {
            return Rational::from_integer(&self.num + &o.num);
        }
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        Self::reduce(n, &self.den * &o.den)
    }

    pub fn sub(&self, o: &Rational) -> Rational {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rational) -> Rational {
        if self.den.is_one() && o.den.is_one() {
            return Rational::from_integer(&self.num * &o.num);
        }
        Self::reduce(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn neg(&self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Rational, ArithError> {
        if self.is_zero() {
            return Err(ArithError::NotInvertible);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Rational) -> Result<Rational, ArithError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Rational {
        Rational { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Image in `F_p`; `None` if `p` divides the denominator.
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        let d = self.den.rem_euclid_u64(p);
        if d == 0 {
            return None;
        }
        let n = self.num.rem_euclid_u64(p);
        let dinv = super::primefield::inv_mod(d, p)?;
        Some(super::primefield::mul_mod(n, dinv, p))
    }
}

/// Canonical rational `num / den`.
pub fn normalize_rational(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Rational, ArithError> {
    Rational::new(num.into(), den.into())
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(Integer::from(v))
    }
}

impl From<Integer> for Rational {
    fn from(v: Integer) -> Self {
        Rational::from_integer(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        normalize_rational(n, d).unwrap()
    }

    #[test]
    fn normalization_examples() {
        let half = q(2, 4);
        assert_eq!((half.numer().clone(), half.denom().clone()), (Integer::from(1i64), Integer::from(2i64)));
        let neg = q(3, -6);
        assert_eq!((neg.numer().clone(), neg.denom().clone()), (Integer::from(-1i64), Integer::from(2i64)));
        let z = q(0, 7);
        assert_eq!((z.numer().clone(), z.denom().clone()), (Integer::ZERO, Integer::ONE));
        assert_eq!(normalize_rational(1, 0), Err(ArithError::ZeroDenominator));
    }

    #[test]
    fn field_ops() {
        assert_eq!(q(1, 2).add(&q(1, 3)), q(5, 6));
        assert_eq!(q(1, 2).sub(&q(1, 2)), Rational::zero());
        assert_eq!(q(-2, 3).mul(&q(9, 4)), q(-3, 2));
        assert_eq!(q(-2, 3).inv().unwrap(), q(-3, 2));
        assert_eq!(Rational::zero().inv(), Err(ArithError::NotInvertible));
        assert!(q(1, 3) < q(1, 2));
    }

    #[test]
    fn reduction_mod_p() {
        // 1/3 mod 7 = 5
        assert_eq!(q(1, 3).mod_p(7), Some(5));
        assert_eq!(q(-1, 2).mod_p(7), Some(3));
        assert_eq!(q(1, 7).mod_p(7), None);
    }
}

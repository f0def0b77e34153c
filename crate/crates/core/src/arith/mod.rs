//! Exact coefficient domains: integers, rationals and prime fields.

pub mod integer;
pub mod primefield;
pub mod rational;
mod ring;

use core::fmt;

pub use integer::Integer;
pub use primefield::{field_inverse, is_negated_square, is_prime, univariate_roots_mod_p, PrimeFieldElem};
pub use rational::{normalize_rational, Rational};
pub use ring::{IntegerRing, PrimeField, RationalField, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithError {
    ZeroDenominator,
    NotInvertible,
    ZeroPolynomial,
    ModulusMismatch { left: u64, right: u64 },
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::ZeroDenominator => f.write_str("zero denominator"),
            ArithError::NotInvertible => f.write_str("element is not invertible"),
            ArithError::ZeroPolynomial => f.write_str("zero polynomial"),
            ArithError::ModulusMismatch { left, right } => {
                write!(f, "field moduli differ: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for ArithError {}

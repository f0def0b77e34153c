use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::arith::Rational;
use crate::arith::RationalField;
use crate::poly::{format_poly, Poly, QPoly, VarTable};

/// Why `computed = λ·expected` failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    ExpectedZero,
    ComputedZero,
    /// First monomial (in the polynomial order) where the two sides differ
    /// after scaling, with both coefficients there.
    Monomial {
        exponents: Vec<u32>,
        computed: Rational,
        expected: Rational,
    },
}

impl Mismatch {
    pub fn describe(&self, vars: &VarTable) -> String {
        match self {
            Mismatch::ExpectedZero => "expected polynomial is zero".into(),
            Mismatch::ComputedZero => "computed polynomial is zero".into(),
            Mismatch::Monomial { exponents, computed, expected } => {
                let mono = Poly::monomial(RationalField, Rational::one(), exponents);
                alloc::format!(
                    "first differing monomial {}: computed coefficient {}, scaled expected {}",
                    format_poly(&mono, vars),
                    computed,
                    expected
                )
            }
        }
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::ExpectedZero => f.write_str("expected polynomial is zero"),
            Mismatch::ComputedZero => f.write_str("computed polynomial is zero"),
            Mismatch::Monomial { exponents, computed, expected } => {
                write!(f, "monomial {exponents:?}: computed {computed}, scaled expected {expected}")
            }
        }
    }
}

fn order(a: &[u32], b: &[u32]) -> Ordering {
    let (ta, tb): (u32, u32) = (a.iter().sum(), b.iter().sum());
    ta.cmp(&tb).then_with(|| a.cmp(b))
}

/// Returns `λ` with `computed = λ·expected`, or the first point of
/// disagreement.
#[allow(clippy::result_large_err)]
pub fn assert_identity_up_to_scalar(computed: &QPoly, expected: &QPoly) -> Result<Rational, Mismatch> {
    if expected.is_zero() {
        return Err(Mismatch::ExpectedZero);
    }
    if computed.is_zero() {
        return Err(Mismatch::ComputedZero);
    }
    let lambda = computed.coeff(0).div(expected.coeff(0)).expect("nonzero leading coefficient");
    let (mut i, mut j) = (0, 0);
    let (n, m) = (computed.nterms(), expected.nterms());
    while i < n || j < m {
        let ord = match (i < n, j < m) {
            (true, true) => order(computed.exponents(i), expected.exponents(j)),
            (true, false) => Ordering::Greater,
            _ => Ordering::Less,
        };
        let (exps, c, e) = match ord {
            Ordering::Greater => (computed.exponents(i), computed.coeff(i).clone(), Rational::zero()),
            Ordering::Less => (expected.exponents(j), Rational::zero(), lambda.mul(expected.coeff(j))),
            Ordering::Equal => (computed.exponents(i), computed.coeff(i).clone(), lambda.mul(expected.coeff(j))),
        };
        if c != e {
            return Err(Mismatch::Monomial { exponents: exps.to_vec(), computed: c, expected: e });
        }
        match ord {
            Ordering::Greater => i += 1,
            Ordering::Less => j += 1,
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    Ok(lambda)
}

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    Syntax {
        pos: usize,
        msg: String,
    },
    UnknownVariable(String),
    BadVariableName(String),
    DuplicateVariable(String),
    VarIndexOutOfRange(usize),
    DomainMismatch(String, String),
    VarCountMismatch(usize, usize),
    /// A literal has no image in the target coefficient ring.
    BadCoefficient(String),
    ZeroDivisor,
    NotDivisible,
    ZeroPolynomial,
    UnitFactor,
    MissingVariable(usize, usize),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::Syntax { pos, msg } => write!(f, "syntax error at offset {pos}: {msg}"),
            PolyError::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            PolyError::BadVariableName(v) => write!(f, "invalid variable name `{v}`"),
            PolyError::DuplicateVariable(v) => write!(f, "variable `{v}` declared twice"),
            PolyError::VarIndexOutOfRange(i) => write!(f, "variable index {i} out of range"),
            PolyError::DomainMismatch(a, b) => write!(f, "coefficient domains differ: {a} vs {b}"),
            PolyError::VarCountMismatch(a, b) => write!(f, "variable tables differ: {a} vs {b} variables"),
            PolyError::BadCoefficient(c) => write!(f, "coefficient {c} has no image in the coefficient ring"),
            PolyError::ZeroDivisor => f.write_str("division by the zero polynomial"),
            PolyError::NotDivisible => f.write_str("not exactly divisible"),
            PolyError::ZeroPolynomial => f.write_str("zero polynomial"),
            PolyError::UnitFactor => f.write_str("factor is a unit"),
            PolyError::MissingVariable(got, want) => {
                write!(f, "assignment covers {got} of {want} variables")
            }
        }
    }
}

impl core::error::Error for PolyError {}

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::PolyError;

/// Ordered variable names of a computation. Monomial exponent vectors index
/// into this order, and the first variable is the largest in the monomial
/// order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
}

/// `[a-z][a-z0-9_]*`
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<VarTable, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out: Vec<String> = Vec::new();
        for n in names {
            let n = n.as_ref().trim();
            if !is_identifier(n) {
                return Err(PolyError::BadVariableName(n.to_string()));
            }
            if out.iter().any(|m| m == n) {
                return Err(PolyError::DuplicateVariable(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(VarTable { names: out })
    }

    /// Parses a comma-separated list such as `"x_1, x_2, t_3"`.
    pub fn parse_list(list: &str) -> Result<VarTable, PolyError> {
        VarTable::new(list.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

impl fmt::Display for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_validated() {
        let v = VarTable::parse_list("x_2, x_3,a_1").unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(v.index("a_1").unwrap(), 2);
        assert!(matches!(VarTable::parse_list("x,x"), Err(PolyError::DuplicateVariable(_))));
        assert!(matches!(VarTable::parse_list("X1"), Err(PolyError::BadVariableName(_))));
        assert!(matches!(VarTable::parse_list("2x"), Err(PolyError::BadVariableName(_))));
        assert!(matches!(v.index("y"), Err(PolyError::UnknownVariable(_))));
    }
}

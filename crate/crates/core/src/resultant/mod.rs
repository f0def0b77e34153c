//! Resultants with respect to one variable, through Sylvester matrices
//! whose entries are polynomials in the remaining variables.

mod matrix;
mod modular;
mod prs;
mod spot;

use alloc::vec::Vec;
use core::fmt;

pub use matrix::{det_fraction_free, PolyMatrix};
pub use modular::resultant_modular;
pub use spot::{resultant_spot_check, spot_check_claimed, univariate_resultant_mod_p, SpotCheck};

use crate::arith::Ring;
use crate::poly::{Poly, PolyError, ZPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResultantError {
    /// Neither input involves the elimination variable.
    NoEliminationVariable,
    ZeroInput,
    Poly(PolyError),
}

impl From<PolyError> for ResultantError {
    fn from(e: PolyError) -> Self {
        ResultantError::Poly(e)
    }
}

impl fmt::Display for ResultantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultantError::NoEliminationVariable => {
                f.write_str("neither polynomial involves the elimination variable")
            }
            ResultantError::ZeroInput => f.write_str("resultant of the zero polynomial"),
            ResultantError::Poly(e) => write!(f, "{e}"),
        }
    }
}

/// The `(m+n) x (m+n)` Sylvester matrix of `f` (degree `m` in `var`) and `g`
/// (degree `n`): `n` shifted rows of `f`'s coefficients followed by `m`
/// shifted rows of `g`'s, highest power of `var` first.
pub fn sylvester<R: Ring>(f: &Poly<R>, g: &Poly<R>, var: usize) -> Result<PolyMatrix<R>, ResultantError> {
    f.check_compat(g)?;
    if var >= f.nvars() {
        return Err(PolyError::VarIndexOutOfRange(var).into());
    }
    if f.is_zero() || g.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let (m, n) = (f.degree_in(var) as usize, g.degree_in(var) as usize);
    if m == 0 && n == 0 {
        return Err(ResultantError::NoEliminationVariable);
    }
    let dim = m + n;
    let zero = Poly::zero(f.ring().clone(), f.nvars());
    // descending coefficient lists
    let fc: Vec<Poly<R>> = f.to_univariate(var).into_iter().rev().collect();
    let gc: Vec<Poly<R>> = g.to_univariate(var).into_iter().rev().collect();
    let mut entries = Vec::with_capacity(dim * dim);
    for (shifts, coeffs) in [(n, &fc), (m, &gc)] {
        for s in 0..shifts {
            for j in 0..dim {
                let e = if j >= s && j - s < coeffs.len() { coeffs[j - s].clone() } else { zero.clone() };
                entries.push(e);
            }
        }
    }
    Ok(PolyMatrix::from_rows(dim, entries))
}

/// `R(f, g, var)`: the determinant of the Sylvester matrix. The result does
/// not involve `var`.
pub fn resultant<R: Ring>(f: &Poly<R>, g: &Poly<R>, var: usize) -> Result<Poly<R>, ResultantError> {
    let s = sylvester(f, g, var)?;
    Ok(det_fraction_free(&s))
}

/// Same value as [`resultant`], computed by the subresultant sequence.
pub fn resultant_prs<R: Ring>(f: &Poly<R>, g: &Poly<R>, var: usize) -> Result<Poly<R>, ResultantError> {
    let s = sylvester(f, g, var)?;
    let (m, n) = (f.degree_in(var), g.degree_in(var));
    if m == 0 || n == 0 {
        return Ok(det_fraction_free(&s));
    }
    Ok(prs::resultant_subresultant(f, g, var))
}

/// How [`resultant_with`] computes an integer resultant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Sylvester determinant for small inputs, evaluation and interpolation
    /// for large ones.
    #[default]
    Auto,
    Sylvester,
    Modular,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Sylvester => "sylvester",
            Method::Modular => "modular",
        }
    }
}

/// Sylvester dimension times term count above which `Auto` goes modular.
const AUTO_MODULAR_WORK: usize = 1500;

/// `R(f, g, var)` over the integers by the chosen method. The modular route
/// falls back to the determinant when the evaluation grid does not fit.
pub fn resultant_with(f: &ZPoly, g: &ZPoly, var: usize, method: Method) -> Result<ZPoly, ResultantError> {
    let s = sylvester(f, g, var)?;
    let work = s.dim() * (f.nterms() + g.nterms());
    let modular = match method {
        Method::Sylvester => false,
        Method::Modular => true,
        Method::Auto => work >= AUTO_MODULAR_WORK,
    };
    if modular {
        if let Some(r) = resultant_modular(f, g, var) {
            return Ok(r);
        }
    }
    Ok(det_fraction_free(&s))
}

#[cfg(test)]
mod tests;

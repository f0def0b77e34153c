use alloc::vec::Vec;

use crate::arith::Ring;
use crate::poly::Poly;

/// Square matrix of polynomials over one ring and one variable table.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<R: Ring> {
    dim: usize,
    entries: Vec<Poly<R>>,
}

impl<R: Ring> PolyMatrix<R> {
    /// Row-major entries; panics unless `entries.len() == dim * dim`.
    pub fn from_rows(dim: usize, entries: Vec<Poly<R>>) -> Self {
        assert_eq!(entries.len(), dim * dim, "matrix must be square");
        if let Some(first) = entries.first() {
            for e in &entries {
                first.check_compat(e).expect("matrix entries share one domain");
            }
        }
        PolyMatrix { dim, entries }
    }

    pub fn identity(ring: R, nvars: usize, dim: usize) -> Self {
        let entries = (0..dim * dim)
            .map(|k| if k / dim == k % dim { Poly::one(ring.clone(), nvars) } else { Poly::zero(ring.clone(), nvars) })
            .collect();
        PolyMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<R> {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Poly<R>]> + '_ {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// At step `k` every trailing entry is replaced by
/// `(a_kk * a_ij - a_ik * a_kj) / a_{k-1,k-1}`; the division is exact in any
/// integral domain. The pivot in each column is the nonzero candidate with
/// the fewest terms. Panics on the empty matrix, which has no ring context.
pub fn det_fraction_free<R: Ring>(m: &PolyMatrix<R>) -> Poly<R> {
    let n = m.dim;
    if n == 0 {
        panic!("determinant of an empty matrix");
    }
    let ring = m.entries[0].ring().clone();
    let nvars = m.entries[0].nvars();
    let mut a: Vec<Vec<Poly<R>>> = m.entries.chunks(n).map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev = Poly::one(ring.clone(), nvars);
    for k in 0..n {
        let pivot = (k..n).filter(|&r| !a[r][k].is_zero()).min_by_key(|&r| a[r][k].nterms());
        let Some(r) = pivot else {
            return Poly::zero(ring, nvars);
        };
        if r != k {
            a.swap(r, k);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let akk = &pivot_row[k];
        for row in rest.iter_mut() {
            let aik = row[k].clone();
            for j in k + 1..n {
                let mut v = akk.mul(&row[j]);
                if !aik.is_zero() && !pivot_row[j].is_zero() {
                    v = v.sub(&aik.mul(&pivot_row[j]));
                }
                row[j] = if prev.is_one() { v } else { v.div_exact(&prev).expect("Bareiss division is exact") };
            }
            row[k] = Poly::zero(ring.clone(), nvars);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

use alloc::vec::Vec;

use super::heap::ChunkHeap;
use super::{Poly, PolyError};
use crate::arith::Ring;

impl<R: Ring> Poly<R> {
    /// Exact quotient `self / g`, or `NotDivisible` if `g` does not divide.
    ///
    /// Heap division: quotient terms are produced in order, and the pending
    /// products `q_i * g_j` (j >= 1) wait in a heap keyed by monomial, so
    /// each product is formed exactly once.
    pub fn div_exact(&self, g: &Self) -> Result<Self, PolyError> {
        self.check_compat(g)?;
        if g.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let ring = &self.ring;
        if self.is_zero() {
            return Ok(self.clone());
        }
        let s = self.stride();
        let g0 = g.chunk(0);
        if g.nterms() == 1 {
            let mut out = Poly::with_capacity(ring.clone(), self.nvars, self.nterms());
            let mut buf = alloc::vec![0u32; s];
            for i in 0..self.nterms() {
                if !sub_chunk(self.chunk(i), g0, &mut buf) {
                    return Err(PolyError::NotDivisible);
                }
                let c = ring.div_exact(&self.coeffs[i], &g.coeffs[0]).ok_or(PolyError::NotDivisible)?;
                out.push_term(c, &buf);
            }
            return Ok(out);
        }
        if !self.quick_divisibility_filter(g) {
            return Err(PolyError::NotDivisible);
        }

        let (n, m) = (self.nterms(), g.nterms());
        let mut q = Poly::with_capacity(ring.clone(), self.nvars, n / m + 1);
        let mut col: Vec<usize> = Vec::new();
        let mut keys: Vec<u32> = Vec::new();
        let mut heap = ChunkHeap::new(s);
        let mut cur = alloc::vec![0u32; s];
        let mut qmon = alloc::vec![0u32; s];
        let mut k = 0usize;

        let set_key = |keys: &mut [u32], q: &Poly<R>, t: usize, j: usize| {
            let (a, b) = (q.chunk(t), g.chunk(j));
            let dst = &mut keys[t * s..(t + 1) * s];
            for i in 0..s {
                dst[i] = a[i] + b[i];
            }
        };

        loop {
            let top = heap.peek();
            match (k < n, top) {
                (false, None) => break,
                (true, None) => cur.copy_from_slice(self.chunk(k)),
                (false, Some(t)) => cur.copy_from_slice(&keys[t * s..(t + 1) * s]),
                (true, Some(t)) => {
                    let hk = &keys[t * s..(t + 1) * s];
                    if self.chunk(k) >= hk {
                        cur.copy_from_slice(self.chunk(k));
                    } else {
                        cur.copy_from_slice(hk);
                    }
                }
            }
            let mut c = ring.zero();
            if k < n && self.chunk(k) == &cur[..] {
                c = self.coeffs[k].clone();
                k += 1;
            }
            while let Some(t) = heap.peek() {
                if keys[t * s..(t + 1) * s] != cur[..] {
                    break;
                }
                heap.pop(&keys);
                ring.sub_mul_assign(&mut c, &q.coeffs[t], &g.coeffs[col[t]]);
                col[t] += 1;
                if col[t] < m {
                    set_key(&mut keys, &q, t, col[t]);
                    heap.push(&keys, t);
                }
            }
            if ring.is_zero(&c) {
                continue;
            }
            if !sub_chunk(&cur, g0, &mut qmon) {
                return Err(PolyError::NotDivisible);
            }
            let qc = ring.div_exact(&c, &g.coeffs[0]).ok_or(PolyError::NotDivisible)?;
            q.push_term(qc, &qmon);
            let t = q.nterms() - 1;
            col.push(1);
            keys.extend(core::iter::repeat_n(0, s));
            set_key(&mut keys, &q, t, 1);
            heap.push(&keys, t);
        }
        Ok(q)
    }

    /// Necessary conditions for `g | self`: per-variable degrees, and the
    /// smallest term of `self` must be a multiple of the smallest term of
    /// `g` (the order is multiplicative).
    fn quick_divisibility_filter(&self, g: &Self) -> bool {
        let (df, dg) = (self.degree_profile(), g.degree_profile());
        if df.iter().zip(&dg).any(|(a, b)| a < b) {
            return false;
        }
        let (lf, lg) = (self.chunk(self.nterms() - 1), g.chunk(g.nterms() - 1));
        lf.iter().zip(lg).all(|(a, b)| a >= b)
    }

    /// Largest `k` with `g^k | self`, together with `self / g^k`.
    pub fn strip_factor(&self, g: &Self) -> Result<(u32, Self), PolyError> {
        self.check_compat(g)?;
        if g.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if g.is_constant() {
            let c = g.constant_value().unwrap();
            let one = self.ring.one();
            if self.ring.div_exact(&one, &c).is_some() {
                return Err(PolyError::UnitFactor);
            }
        }
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            match cur.div_exact(g) {
                Ok(q) => {
                    k += 1;
                    cur = q;
                }
                Err(PolyError::NotDivisible) => return Ok((k, cur)),
                Err(e) => return Err(e),
            }
        }
    }
}

/// `out = a - b` chunk-wise; false if some component would go negative.
#[inline]
fn sub_chunk(a: &[u32], b: &[u32], out: &mut [u32]) -> bool {
    for i in 0..a.len() {
        if a[i] < b[i] {
            return false;
        }
        out[i] = a[i] - b[i];
    }
    true
}

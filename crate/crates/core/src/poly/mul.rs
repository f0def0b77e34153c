use alloc::vec;

use super::heap::ChunkHeap;
use super::Poly;
use crate::arith::Ring;

impl<R: Ring> Poly<R> {
    /// Product by Johnson's heap merge: rows are the terms of the shorter
    /// factor, and a row enters the heap only once the row above it has
    /// emitted its first product, so the heap stays small and output terms
    /// arrive already sorted.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compat(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ring.clone(), self.nvars);
        }
        let (f, g) = if self.nterms() <= other.nterms() { (self, other) } else { (other, self) };
        if f.nterms() == 1 {
            return g.mul_term(&f.coeffs[0], f.exponents(0));
        }
        let ring = &self.ring;
        let s = self.stride();
        let (n, m) = (f.nterms(), g.nterms());
        let mut col = vec![0usize; n];
        let mut keys = vec![0u32; n * s];
        let set_key = |keys: &mut [u32], i: usize, j: usize| {
            let (a, b) = (f.chunk(i), g.chunk(j));
            let dst = &mut keys[i * s..(i + 1) * s];
            for k in 0..s {
                dst[k] = a[k] + b[k];
            }
        };

        let mut heap = ChunkHeap::new(s);
        set_key(&mut keys, 0, 0);
        heap.push(&keys, 0);

        let mut out = Poly::with_capacity(ring.clone(), self.nvars, n.max(m));
        let mut cur = vec![0u32; s];
        while let Some(top) = heap.peek() {
            cur.copy_from_slice(&keys[top * s..(top + 1) * s]);
            let mut c = ring.zero();
            while let Some(t) = heap.peek() {
                if keys[t * s..(t + 1) * s] != cur[..] {
                    break;
                }
                heap.pop(&keys);
                ring.add_mul_assign(&mut c, &f.coeffs[t], &g.coeffs[col[t]]);
                if col[t] == 0 && t + 1 < n {
                    set_key(&mut keys, t + 1, 0);
                    heap.push(&keys, t + 1);
                }
                col[t] += 1;
                if col[t] < m {
                    set_key(&mut keys, t, col[t]);
                    heap.push(&keys, t);
                }
            }
            if !ring.is_zero(&c) {
                out.push_term(c, &cur);
            }
        }
        out
    }
}

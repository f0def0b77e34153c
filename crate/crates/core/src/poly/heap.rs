//! Binary max-heap of row indices, ordered by exponent chunks stored in a
//! side buffer (`keys[i * stride..]` is the key of row `i`).

use alloc::vec::Vec;

pub(crate) struct ChunkHeap {
    rows: Vec<usize>,
    stride: usize,
}

impl ChunkHeap {
    pub fn new(stride: usize) -> Self {
        ChunkHeap { rows: Vec::new(), stride }
    }

    #[inline]
    fn key<'a>(&self, keys: &'a [u32], row: usize) -> &'a [u32] {
        &keys[row * self.stride..(row + 1) * self.stride]
    }

    pub fn peek(&self) -> Option<usize> {
        self.rows.first().copied()
    }

    pub fn push(&mut self, keys: &[u32], row: usize) {
        self.rows.push(row);
        let mut i = self.rows.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.key(keys, self.rows[parent]) >= self.key(keys, self.rows[i]) {
                break;
            }
            self.rows.swap(parent, i);
            i = parent;
        }
    }

    pub fn pop(&mut self, keys: &[u32]) -> Option<usize> {
        let n = self.rows.len();
        if n == 0 {
            return None;
        }
        self.rows.swap(0, n - 1);
        let top = self.rows.pop();
        let n = n - 1;
        let mut i = 0;
        loop {
            let l = 2 * i + 1;
            if l >= n {
                break;
            }
            let r = l + 1;
            let mut c = l;
            if r < n && self.key(keys, self.rows[r]) > self.key(keys, self.rows[l]) {
                c = r;
            }
            if self.key(keys, self.rows[i]) >= self.key(keys, self.rows[c]) {
                break;
            }
            self.rows.swap(i, c);
            i = c;
        }
        top
    }
}

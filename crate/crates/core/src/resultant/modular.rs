//! Resultants over `Z` by evaluation and interpolation modulo word-size
//! primes, recombined by the Chinese remainder theorem.
//!
//! Per-variable degree bounds come from a maximum-weight assignment on the
//! Sylvester matrix's degree pattern, and the coefficient bound from the
//! permanent of its matrix of coefficient 1-norms, so the number of sample
//! points and of primes is fixed in advance and the result is exact.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::primefield::is_prime;
use crate::arith::{Integer, IntegerRing};
use crate::poly::{Poly, ZPoly};

/// Largest dense box handled per outer sample point.
const INNER_CAP: usize = 1 << 17;
/// Above this size the assignment and permanent bounds fall back to row
/// bounds.
const EXACT_BOUND_DIM: usize = 20;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Mont {
    p: u64,
    ninv: u64,
    r2: u64,
}

impl Mont {
    /// `p` must be an odd prime below `2^62`.
    pub(crate) fn new(p: u64) -> Mont {
        let mut inv = p;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Mont { p, ninv: inv.wrapping_neg(), r2 }
    }

    #[inline(always)]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.ninv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline(always)]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline(always)]
    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub(crate) fn to(&self, a: u64) -> u64 {
        self.mul(a % self.p, self.r2)
    }

    pub(crate) fn from(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    pub(crate) fn one(&self) -> u64 {
        self.to(1)
    }

    pub(crate) fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

/// Replaces every entry by its inverse, with one field inversion in total.
/// Entries must be nonzero.
fn batch_invert(m: &Mont, xs: &mut [u64]) {
    if xs.is_empty() {
        return;
    }
    let mut prefix = Vec::with_capacity(xs.len());
    let mut acc = m.one();
    for &x in xs.iter() {
        prefix.push(acc);
        acc = m.mul(acc, x);
    }
    let mut inv = m.inv(acc);
    for i in (0..xs.len()).rev() {
        let x = xs[i];
        xs[i] = m.mul(inv, prefix[i]);
        inv = m.mul(inv, x);
    }
}

/// Division-free pseudo-remainder: `G_B^(A-B+1) F mod G`, returned with
/// formal degree `B - 1`.
fn prem_into(m: &Mont, f: &[u64], g: &[u64], out: &mut Vec<u64>) {
    let b = g.len() - 1;
    let lead_g = g[b];
    out.clear();
    out.extend_from_slice(f);
    for i in (b..f.len()).rev() {
        let lead = out[i];
        for x in out[..i].iter_mut() {
            *x = m.mul(*x, lead_g);
        }
        let shift = i - b;
        for j in 0..b {
            out[shift + j] = m.sub(out[shift + j], m.mul(lead, g[j]));
        }
        out.pop();
    }
}

/// `det Sylvester_{m,n}(f, g)` with formal degrees `f.len() - 1` and
/// `g.len() - 1`, returned as `(num, den)` with `den` nonzero.
pub(crate) fn formal_resultant(m: &Mont, f: &[u64], g: &[u64]) -> (u64, u64) {
    let mut a: Vec<u64> = f.to_vec();
    let mut b: Vec<u64> = g.to_vec();
    let mut scratch = Vec::with_capacity(a.len().max(b.len()));
    let mut num = m.one();
    let mut den = m.one();
    let mut negate = false;
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        if da == 0 {
            num = m.mul(num, m.pow(a[0], db as u64));
            break;
        }
        if db == 0 {
            num = m.mul(num, m.pow(b[0], da as u64));
            break;
        }
        if a[da] == 0 {
            if b[db] == 0 {
                return (0, m.one());
            }
            num = m.mul(num, b[db]);
            if db % 2 == 1 {
                negate = !negate;
            }
            a.pop();
            continue;
        }
        if b[db] == 0 {
            num = m.mul(num, a[da]);
            b.pop();
            continue;
        }
        if da >= db {
            if (da * db) % 2 == 1 {
                negate = !negate;
            }
            let e = ((da - db + 1) * (db - 1)) as u64;
            den = m.mul(den, m.pow(b[db], e));
            prem_into(m, &a, &b, &mut scratch);
            core::mem::swap(&mut a, &mut b);
            core::mem::swap(&mut b, &mut scratch);
        } else {
            let e = ((db - da + 1) * (da - 1)) as u64;
            den = m.mul(den, m.pow(a[da], e));
            prem_into(m, &b, &a, &mut scratch);
            core::mem::swap(&mut b, &mut scratch);
        }
    }
    if negate {
        num = m.sub(0, num);
    }
    (num, den)
}

/// Inverse of the Vandermonde matrix at the points `0..=d`, row-major, in
/// Montgomery form: row `k` holds the weights of coefficient `k`.
fn inverse_vandermonde(m: &Mont, d: usize) -> Vec<u64> {
    let n = d + 1;
    let mut a = vec![0u64; n * 2 * n];
    let w = 2 * n;
    for i in 0..n {
        let x = m.to(i as u64);
        let mut pw = m.one();
        for j in 0..n {
            a[i * w + j] = pw;
            pw = m.mul(pw, x);
        }
        a[i * w + n + i] = m.one();
    }
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r * w + col] != 0).expect("Vandermonde matrix is invertible");
        if piv != col {
            for j in 0..w {
                a.swap(piv * w + j, col * w + j);
            }
        }
        let inv = m.inv(a[col * w + col]);
        for j in 0..w {
            a[col * w + j] = m.mul(a[col * w + j], inv);
        }
        for r in 0..n {
            if r != col && a[r * w + col] != 0 {
                let factor = a[r * w + col];
                for j in 0..w {
                    let t = m.mul(factor, a[col * w + j]);
                    a[r * w + j] = m.sub(a[r * w + j], t);
                }
            }
        }
    }
    // V c = values  =>  c = V^{-1} values; V[i][j] = i^j, so the inverse's
    // row k maps values to coefficient k.
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = a[i * w + n + j];
        }
    }
    out
}

/// Interpolates in place along every axis of a row-major array.
fn interpolate_axes(m: &Mont, values: &mut [u64], dims: &[usize], vinv: &[Vec<u64>]) {
    let total: usize = dims.iter().product();
    let mut line = Vec::new();
    let mut stride = total;
    // Sums stay below p * 2^64, the range where one reduction suffices.
    let limit = (m.p as u128) << 64;
    for (axis, &n) in dims.iter().enumerate() {
        stride /= n;
        if n == 1 {
            continue;
        }
        let mat = &vinv[axis];
        line.resize(n, 0);
        let block = stride * n;
        for base in (0..total).step_by(block) {
            for off in 0..stride {
                let start = base + off;
                for (k, slot) in line.iter_mut().enumerate() {
                    *slot = values[start + k * stride];
                }
                for k in 0..n {
                    let row = &mat[k * n..(k + 1) * n];
                    let mut acc: u128 = 0;
                    for (w, v) in row.iter().zip(line.iter()) {
                        acc += *w as u128 * *v as u128;
                        if acc >= limit {
                            acc -= limit;
                        }
                    }
                    values[start + k * stride] = m.redc(acc);
                }
            }
        }
    }
}

/// Sum of the absolute values of the coefficients.
fn one_norm(p: &ZPoly) -> Integer {
    let mut acc = Integer::ZERO;
    for (c, _) in p.terms() {
        acc = acc + c.abs();
    }
    acc
}

/// `max over permutations of sum w[i][sigma(i)]`, `None` entries forbidden.
fn max_assignment(w: &[Option<u32>], n: usize) -> Option<u32> {
    if n > EXACT_BOUND_DIM {
        let mut total = 0;
        for i in 0..n {
            total += w[i * n..(i + 1) * n].iter().flatten().max().copied()?;
        }
        return Some(total);
    }
    let mut dp: Vec<Option<u32>> = vec![None; 1 << n];
    dp[0] = Some(0);
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask] else { continue };
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 {
                continue;
            }
            if let Some(x) = w[row * n + col] {
                let next = &mut dp[mask | (1 << col)];
                let v = cur + x;
                if next.is_none_or(|y| v > y) {
                    *next = Some(v);
                }
            }
        }
    }
    dp[(1 << n) - 1]
}

/// Permanent of a nonnegative integer matrix, or the product of its row
/// sums when the matrix is large.
fn permanent(w: &[Integer], n: usize) -> Integer {
    if n > EXACT_BOUND_DIM {
        let mut acc = Integer::from(1i64);
        for i in 0..n {
            let mut s = Integer::ZERO;
            for x in &w[i * n..(i + 1) * n] {
                s = s + x.clone();
            }
            acc = acc * s;
        }
        return acc;
    }
    let mut dp: Vec<Integer> = vec![Integer::ZERO; 1 << n];
    dp[0] = Integer::from(1i64);
    for mask in 0usize..(1 << n) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        let cur = dp[mask].clone();
        for col in 0..n {
            if mask & (1 << col) == 0 && !w[row * n + col].is_zero() {
                let idx = mask | (1 << col);
                let mut next = core::mem::take(&mut dp[idx]);
                next.add_mul_assign(&cur, &w[row * n + col]);
                dp[idx] = next;
            }
        }
    }
    core::mem::take(&mut dp[(1 << n) - 1])
}

/// Sylvester layout: entry `(i, j)` is the coefficient of `var^k` with `k`
/// given here, or `None` for a structural zero.
fn sylvester_pattern(m: usize, n: usize) -> Vec<Option<(bool, usize)>> {
    let dim = m + n;
    let mut out = Vec::with_capacity(dim * dim);
    for (shifts, deg, is_f) in [(n, m, true), (m, n, false)] {
        for s in 0..shifts {
            for j in 0..dim {
                out.push((j >= s && j - s <= deg).then(|| (is_f, deg - (j - s))));
            }
        }
    }
    out
}

/// A sparse polynomial term restricted to a subset of variables.
#[derive(Clone, Debug)]
struct Term {
    id: u32,
    coeff: Integer,
    exps: Vec<u32>,
}

struct Plan {
    /// Variables of the result, in increasing index order, with degree
    /// bounds.
    vars: Vec<usize>,
    bounds: Vec<usize>,
    /// Positions in `vars`, outermost loop first.
    inner: Vec<usize>,
    outer: Vec<usize>,
    terms: Vec<Term>,
    /// Formal degrees of `f` and `g` in the eliminated variable.
    m: usize,
    n: usize,
}

impl Plan {
    fn inner_dims(&self) -> Vec<usize> {
        self.inner.iter().map(|&i| self.bounds[i] + 1).collect()
    }

    fn outer_dims(&self) -> Vec<usize> {
        self.outer.iter().map(|&i| self.bounds[i] + 1).collect()
    }
}

/// One evaluated coefficient entry during recursive specialization: poly
/// id, packed remaining exponents (innermost-first loop variable in the
/// low byte), value.
type Entry = (u32, u64, u64);

struct PrimeRun<'a> {
    plan: &'a Plan,
    m: Mont,
    /// `pows[level][x][e]` is `x^e` for the inner variable at `level`.
    inner_pows: Vec<Vec<Vec<u64>>>,
    bufs: Vec<Vec<Entry>>,
    fa: Vec<u64>,
    ga: Vec<u64>,
}

impl<'a> PrimeRun<'a> {
    fn new(plan: &'a Plan, p: u64) -> PrimeRun<'a> {
        let m = Mont::new(p);
        let max_exp = |v: usize| plan.terms.iter().map(|t| t.exps[v]).max().unwrap_or(0) as usize;
        let inner_pows = plan
            .inner
            .iter()
            .map(|&v| {
                (0..=plan.bounds[v])
                    .map(|x| {
                        let xm = m.to(x as u64);
                        let mut row = Vec::with_capacity(max_exp(v) + 1);
                        let mut acc = m.one();
                        for _ in 0..=max_exp(v) {
                            row.push(acc);
                            acc = m.mul(acc, xm);
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        PrimeRun {
            plan,
            m,
            inner_pows,
            bufs: vec![Vec::new(); plan.inner.len() + 1],
            fa: vec![0; plan.m + 1],
            ga: vec![0; plan.n + 1],
        }
    }

    /// Fills `nums`/`dens` over the inner box for the current top-level
    /// entries in `bufs[0]`.
    fn eval_inner(&mut self, level: usize, offset: usize, nums: &mut [u64], dens: &mut [u64]) {
        let k = self.plan.inner.len();
        if level == k {
            self.fa.iter_mut().for_each(|x| *x = 0);
            self.ga.iter_mut().for_each(|x| *x = 0);
            let mf = self.plan.m as u32 + 1;
            for &(id, _, c) in &self.bufs[k] {
                if id < mf {
                    self.fa[id as usize] = c;
                } else {
                    self.ga[(id - mf) as usize] = c;
                }
            }
            let (num, den) = formal_resultant(&self.m, &self.fa, &self.ga);
            nums[offset] = num;
            dens[offset] = den;
            return;
        }
        let dims = self.plan.inner_dims();
        let stride: usize = dims[level + 1..].iter().product();
        for x in 0..dims[level] {
            let src = core::mem::take(&mut self.bufs[level]);
            let mut dst = core::mem::take(&mut self.bufs[level + 1]);
            dst.clear();
            let pw = &self.inner_pows[level][x];
            let mut i = 0;
            while i < src.len() {
                let (id, key) = (src[i].0, src[i].1 >> 8);
                let mut acc = 0u64;
                while i < src.len() && src[i].0 == id && src[i].1 >> 8 == key {
                    let e = (src[i].1 & 0xff) as usize;
                    acc = self.m.add(acc, self.m.mul(src[i].2, pw[e]));
                    i += 1;
                }
                if acc != 0 {
                    dst.push((id, key, acc));
                }
            }
            self.bufs[level + 1] = dst;
            self.eval_inner(level + 1, offset + x * stride, nums, dens);
            self.bufs[level] = src;
        }
    }

    /// Residues of the resultant, keyed by mixed-radix monomial index over
    /// `plan.vars`, sorted by key.
    fn run(mut self) -> Vec<(u64, u64)> {
        let plan = self.plan;
        let m = self.m;
        let inner_dims = plan.inner_dims();
        let outer_dims = plan.outer_dims();
        let inner_box: usize = inner_dims.iter().product();
        let outer_box: usize = outer_dims.iter().product();
        let k = plan.inner.len();

        let coeffs: Vec<u64> = plan.terms.iter().map(|t| m.to(t.coeff.rem_euclid_u64(m.p))).collect();
        // Inner exponents packed so the first loop variable is the low byte.
        let packed: Vec<u64> = plan
            .terms
            .iter()
            .map(|t| {
                let mut key = 0u64;
                for &v in plan.inner.iter().rev() {
                    key = (key << 8) | t.exps[v] as u64;
                }
                key
            })
            .collect();
        let outer_max: Vec<usize> =
            plan.outer.iter().map(|&v| plan.terms.iter().map(|t| t.exps[v]).max().unwrap_or(0) as usize).collect();

        let mut store: Vec<Option<Vec<u64>>> = vec![None; inner_box];
        let mut nums = vec![0u64; inner_box];
        let mut dens = vec![0u64; inner_box];
        let inner_vinv: Vec<Vec<u64>> = inner_dims.iter().map(|&d| inverse_vandermonde(&m, d - 1)).collect();
        let outer_vinv: Vec<Vec<u64>> = outer_dims.iter().map(|&d| inverse_vandermonde(&m, d - 1)).collect();

        let mut opoint = vec![0usize; plan.outer.len()];
        for oidx in 0..outer_box {
            let mut rem = oidx;
            for j in (0..plan.outer.len()).rev() {
                opoint[j] = rem % outer_dims[j];
                rem /= outer_dims[j];
            }
            let opows: Vec<Vec<u64>> = opoint
                .iter()
                .zip(&outer_max)
                .map(|(&x, &e)| {
                    let xm = m.to(x as u64);
                    let mut row = Vec::with_capacity(e + 1);
                    let mut acc = m.one();
                    for _ in 0..=e {
                        row.push(acc);
                        acc = m.mul(acc, xm);
                    }
                    row
                })
                .collect();
            let mut top: Vec<Entry> = Vec::with_capacity(plan.terms.len());
            for (ti, t) in plan.terms.iter().enumerate() {
                let mut c = coeffs[ti];
                for (j, &v) in plan.outer.iter().enumerate() {
                    c = m.mul(c, opows[j][t.exps[v] as usize]);
                }
                if c != 0 {
                    top.push((t.id, packed[ti], c));
                }
            }
            top.sort_unstable_by_key(|a| (a.0, a.1));
            let mut merged: Vec<Entry> = Vec::with_capacity(top.len());
            for e in top {
                match merged.last_mut() {
                    Some(last) if last.0 == e.0 && last.1 == e.1 => last.2 = m.add(last.2, e.2),
                    _ => merged.push(e),
                }
            }
            merged.retain(|e| e.2 != 0);
            self.bufs[0] = merged;
            self.eval_inner(0, 0, &mut nums, &mut dens);
            batch_invert(&m, &mut dens);
            for (x, d) in nums.iter_mut().zip(&dens) {
                *x = m.mul(*x, *d);
            }
            if k > 0 {
                interpolate_axes(&m, &mut nums, &inner_dims, &inner_vinv);
            }
            for (i, &v) in nums.iter().enumerate() {
                if v != 0 {
                    store[i].get_or_insert_with(|| vec![0u64; outer_box])[oidx] = v;
                }
            }
        }

        let strides: Vec<u64> = {
            let mut s = vec![1u64; plan.vars.len()];
            for i in (0..plan.vars.len().saturating_sub(1)).rev() {
                s[i] = s[i + 1] * (plan.bounds[i + 1] as u64 + 1);
            }
            s
        };
        let mut out = Vec::new();
        for (iidx, slot) in store.into_iter().enumerate() {
            let Some(mut vals) = slot else { continue };
            interpolate_axes(&m, &mut vals, &outer_dims, &outer_vinv);
            let mut base = 0u64;
            let mut rem = iidx;
            for j in (0..k).rev() {
                let e = rem % inner_dims[j];
                rem /= inner_dims[j];
                base += e as u64 * strides[plan.inner[j]];
            }
            for (oidx, &v) in vals.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                let mut key = base;
                let mut rem = oidx;
                for j in (0..plan.outer.len()).rev() {
                    let e = rem % outer_dims[j];
                    rem /= outer_dims[j];
                    key += e as u64 * strides[plan.outer[j]];
                }
                out.push((key, m.from(v)));
            }
        }
        out.sort_unstable();
        out
    }
}

/// Primes below `2^62`, largest first.
fn primes_below_2_62() -> impl Iterator<Item = u64> {
    ((1u64 << 61)..(1u64 << 62)).rev().filter(|&x| x % 2 == 1 && is_prime(x))
}

/// `R(f, g, var)` over `Z` by modular evaluation and interpolation. Matches
/// [`super::resultant`] exactly. Returns `None` when the sample box does not
/// fit the packed layout (more than 8 inner variables or exponents above
/// 255).
pub fn resultant_modular(f: &ZPoly, g: &ZPoly, var: usize) -> Option<ZPoly> {
    let nv = f.nvars();
    let fc = f.to_univariate(var);
    let gc = g.to_univariate(var);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    if m == 0 || n == 0 {
        return None;
    }
    let dim = m + n;
    let pattern = sylvester_pattern(m, n);
    let entry = |e: &Option<(bool, usize)>| -> Option<&ZPoly> {
        e.map(|(is_f, k)| if is_f { &fc[k] } else { &gc[k] }).filter(|p| !p.is_zero())
    };

    let mut vars = Vec::new();
    let mut bounds = Vec::new();
    for v in 0..nv {
        if v == var {
            continue;
        }
        let w: Vec<Option<u32>> = pattern.iter().map(|e| entry(e).map(|p| p.degree_in(v).max(0) as u32)).collect();
        let Some(d) = max_assignment(&w, dim) else {
            return Some(Poly::zero(IntegerRing, nv));
        };
        if d > 0 {
            vars.push(v);
            bounds.push(d as usize);
        }
    }
    let norms: Vec<Integer> = pattern.iter().map(|e| entry(e).map(one_norm).unwrap_or(Integer::ZERO)).collect();
    let bound = permanent(&norms, dim);
    if bound.is_zero() {
        return Some(Poly::zero(IntegerRing, nv));
    }

    let mut order: Vec<usize> = (0..vars.len()).collect();
    order.sort_by_key(|&i| (bounds[i], vars[i]));
    let mut inner = Vec::new();
    let mut inner_box = 1usize;
    for &i in &order {
        if inner.len() < 8 && inner_box * (bounds[i] + 1) <= INNER_CAP {
            inner_box *= bounds[i] + 1;
            inner.push(i);
        }
    }
    let outer: Vec<usize> = order.iter().copied().filter(|i| !inner.contains(i)).collect();
    // Largest degree first in the loop nest.
    inner.reverse();
    let mut total_box: u128 = 1;
    for &b in &bounds {
        total_box *= b as u128 + 1;
    }
    if total_box >= 1u128 << 63 {
        return None;
    }

    let mut terms = Vec::new();
    for (id, c) in fc.iter().chain(gc.iter()).enumerate() {
        for (coeff, e) in c.terms() {
            let exps: Vec<u32> = vars.iter().map(|&v| e[v]).collect();
            terms.push(Term { id: id as u32, coeff: coeff.clone(), exps });
        }
    }
    if inner.iter().any(|&v| terms.iter().any(|t| t.exps[v] > 255)) {
        return None;
    }
    let plan = Plan { vars, bounds, inner, outer, terms, m, n };

    // Residues are recombined into the symmetric range, so the modulus must
    // exceed twice the bound.
    let need_bits = bound.bits() + 2;
    let mut primes = Vec::new();
    let mut bits = 0u64;
    for p in primes_below_2_62() {
        primes.push(p);
        bits += 61;
        if bits >= need_bits {
            break;
        }
    }

    let images: Vec<Vec<(u64, u64)>> = primes.iter().map(|&p| PrimeRun::new(&plan, p).run()).collect();
    Some(combine(&plan, nv, &primes, &images))
}

/// Garner recombination of the per-prime images into symmetric integers.
fn combine(plan: &Plan, nv: usize, primes: &[u64], images: &[Vec<(u64, u64)>]) -> ZPoly {
    let mut keys: Vec<u64> = images.iter().flat_map(|im| im.iter().map(|&(k, _)| k)).collect();
    keys.sort_unstable();
    keys.dedup();
    let mut cursors = vec![0usize; images.len()];
    // Products of the earlier primes and their inverses modulo each prime.
    let mut prefix = vec![Integer::from(1i64)];
    for &p in primes {
        let last = prefix.last().unwrap().clone();
        prefix.push(last * Integer::from(p));
    }
    let inverses: Vec<u64> = primes
        .iter()
        .enumerate()
        .map(|(j, &p)| {
            let mp = Mont::new(p);
            let r = prefix[j].rem_euclid_u64(p);
            mp.from(mp.inv(mp.to(r)))
        })
        .collect();
    let modulus = prefix.last().unwrap().clone();
    let half = (&modulus - &Integer::from(1i64)).div_known(&Integer::from(2i64));

    let strides: Vec<u64> = {
        let mut s = vec![1u64; plan.vars.len()];
        for i in (0..plan.vars.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * (plan.bounds[i + 1] as u64 + 1);
        }
        s
    };
    let mut out = Vec::with_capacity(keys.len());
    for key in keys {
        let mut x = Integer::ZERO;
        for (j, &p) in primes.iter().enumerate() {
            let im = &images[j];
            let r = if cursors[j] < im.len() && im[cursors[j]].0 == key {
                cursors[j] += 1;
                im[cursors[j] - 1].1
            } else {
                0
            };
            let cur = x.rem_euclid_u64(p);
            let diff = if r >= cur { r - cur } else { r + p - cur };
            let t = ((diff as u128 * inverses[j] as u128) % p as u128) as u64;
            if t != 0 {
                x.add_mul_assign(&prefix[j], &Integer::from(t));
            }
        }
        if x > half {
            x = &x - &modulus;
        }
        if x.is_zero() {
            continue;
        }
        let mut exps = vec![0u32; nv];
        let mut rem = key;
        for (i, &v) in plan.vars.iter().enumerate() {
            exps[v] = (rem / strides[i]) as u32;
            rem %= strides[i];
        }
        out.push((exps, x));
    }
    Poly::from_terms(IntegerRing, nv, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn det_mod(m: &Mont, mut a: Vec<Vec<u64>>) -> u64 {
        let n = a.len();
        let mut det = m.one();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| a[r][c] != 0) else { return 0 };
            if piv != c {
                a.swap(piv, c);
                det = m.sub(0, det);
            }
            det = m.mul(det, a[c][c]);
            let inv = m.inv(a[c][c]);
            let (top, rest) = a.split_at_mut(c + 1);
            let pivot = &top[c];
            for row in rest.iter_mut() {
                let f = m.mul(row[c], inv);
                for (x, &y) in row[c..n].iter_mut().zip(&pivot[c..n]) {
                    *x = m.sub(*x, m.mul(f, y));
                }
            }
        }
        det
    }

    fn sylvester_mod(f: &[u64], g: &[u64]) -> Vec<Vec<u64>> {
        let (dm, dn) = (f.len() - 1, g.len() - 1);
        let dim = dm + dn;
        let mut rows = Vec::new();
        for (shifts, c) in [(dn, f), (dm, g)] {
            for s in 0..shifts {
                let mut row = vec![0u64; dim];
                for (k, &x) in c.iter().rev().enumerate() {
                    row[s + k] = x;
                }
                rows.push(row);
            }
        }
        rows
    }

    #[test]
    fn formal_resultant_matches_sylvester_determinant() {
        use rand::{Rng, SeedableRng};
        let m = Mont::new(1_000_000_007);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let da = rng.gen_range(1..7);
            let db = rng.gen_range(1..7);
            let mut gen = |d: usize| -> Vec<u64> {
                (0..=d).map(|_| if rng.gen_bool(0.25) { 0 } else { m.to(rng.gen_range(0..50)) }).collect()
            };
            let f = gen(da);
            let g = gen(db);
            let (num, den) = formal_resultant(&m, &f, &g);
            let got = m.mul(num, m.inv(den));
            assert_eq!(got, det_mod(&m, sylvester_mod(&f, &g)), "f {f:?} g {g:?}");
        }
    }

    #[test]
    fn inverse_vandermonde_interpolates() {
        let m = Mont::new(1_000_000_007);
        let coeffs: Vec<u64> = vec![3, 0, 5, 7].into_iter().map(|c| m.to(c)).collect();
        let mut vals: Vec<u64> = (0..4u64)
            .map(|x| {
                let xm = m.to(x);
                coeffs.iter().rev().fold(0, |acc, &c| m.add(m.mul(acc, xm), c))
            })
            .collect();
        interpolate_axes(&m, &mut vals, &[4], &[inverse_vandermonde(&m, 3)]);
        assert_eq!(vals, coeffs);
    }

    #[test]
    fn permanent_and_assignment() {
        let w: Vec<Integer> = [1i64, 2, 3, 4].iter().map(|&x| Integer::from(x)).collect();
        assert_eq!(permanent(&w, 2), Integer::from(10i64));
        let d = [Some(1), Some(5), None, Some(2)];
        assert_eq!(max_assignment(&d, 2), Some(3));
    }
}

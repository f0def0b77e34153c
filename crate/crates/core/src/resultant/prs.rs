//! Resultants through the subresultant pseudo-remainder sequence. Every
//! intermediate is a subresultant, i.e. a structured minor of the Sylvester
//! matrix, so no division ever leaves the coefficient ring.

use alloc::vec::Vec;

use crate::arith::Ring;
use crate::poly::Poly;

/// Dense univariate polynomial over `Poly<R>`, lowest power first, no
/// trailing zeros.
type Dense<R> = Vec<Poly<R>>;

fn deg<R: Ring>(a: &Dense<R>) -> usize {
    a.len() - 1
}

fn trim<R: Ring>(a: &mut Dense<R>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem<R: Ring>(a: &Dense<R>, b: &Dense<R>) -> Dense<R> {
    let (da, db) = (deg(a), deg(b));
    let lb = &b[db];
    let mut r = a.clone();
    let mut steps = 0;
    while !r.is_empty() && r.len() > db {
        let dr = deg(&r);
        let lead = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(lb);
            }
        }
        for (j, bj) in b.iter().enumerate().take(db) {
            if !bj.is_zero() {
                r[shift + j] = r[shift + j].sub(&lead.mul(bj));
            }
        }
        r.pop();
        trim(&mut r);
        steps += 1;
    }
    let missing = (da - db + 1) - steps;
    if missing > 0 && !r.is_empty() {
        let f = lb.pow(missing as u32);
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(&f);
            }
        }
    }
    r
}

fn div_all<R: Ring>(a: &mut Dense<R>, d: &Poly<R>) {
    if d.is_one() {
        return;
    }
    for c in a.iter_mut() {
        if !c.is_zero() {
            *c = c.div_exact(d).expect("subresultant division is exact");
        }
    }
}

/// Resultant of `f` and `g` in `var` with the sign convention of the
/// Sylvester determinant (rows of `f` first). Both must have positive
/// degree in `var`.
pub(crate) fn resultant_subresultant<R: Ring>(f: &Poly<R>, g: &Poly<R>, var: usize) -> Poly<R> {
    let ring = f.ring().clone();
    let nv = f.nvars();
    let mut a: Dense<R> = f.to_univariate(var);
    let mut b: Dense<R> = g.to_univariate(var);
    let mut negate = false;
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            negate = !negate;
        }
        core::mem::swap(&mut a, &mut b);
    }
    let mut gg = Poly::one(ring.clone(), nv);
    let mut h = Poly::one(ring.clone(), nv);
    loop {
        let (da, db) = (deg(&a), deg(&b));
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let mut r = prem(&a, &b);
        if r.is_empty() {
            return Poly::zero(ring, nv);
        }
        let divisor = gg.mul(&h.pow(delta as u32));
        div_all(&mut r, &divisor);
        a = b;
        b = r;
        gg = a[deg(&a)].clone();
        if delta > 0 {
            h = gg.pow(delta as u32).div_exact(&h.pow(delta as u32 - 1)).expect("exact");
        }
        if deg(&b) == 0 {
            break;
        }
    }
    let da = deg(&a) as u32;
    let lb = &b[0];
    let res = if da == 0 { Poly::one(ring, nv) } else { lb.pow(da).div_exact(&h.pow(da - 1)).expect("exact") };
    if negate {
        res.neg()
    } else {
        res
    }
}

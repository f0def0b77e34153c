use alloc::string::String;
use core::fmt::Write;

use super::{Poly, VarTable};
use crate::arith::Ring;

/// Renders `p` in the polynomial text grammar (always re-parseable).
pub fn format_poly<R: Ring>(p: &Poly<R>, vars: &VarTable) -> String {
    let ring = p.ring();
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, (c, e)) in p.terms().enumerate() {
        let neg = ring.is_negative(c);
        let mag = if neg { ring.neg(c) } else { c.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut first = true;
        if !ring.is_one(&mag) || e.iter().all(|&x| x == 0) {
            write!(out, "{mag}").unwrap();
            first = false;
        }
        for (k, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(vars.name(k));
            if x > 1 {
                write!(out, "^{x}").unwrap();
            }
        }
    }
    out
}

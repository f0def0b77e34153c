use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::arith::{Integer, IntegerRing, PrimeField};
use crate::poly::{parse_poly, VarTable, ZPoly};

fn vt(s: &str) -> VarTable {
    VarTable::parse_list(s).unwrap()
}

fn z(text: &str, v: &VarTable) -> ZPoly {
    parse_poly(text, v, IntegerRing).unwrap()
}

fn matrix_texts(m: &PolyMatrix<IntegerRing>, v: &VarTable) -> Vec<Vec<alloc::string::String>> {
    m.rows().map(|r| r.iter().map(|p| crate::poly::format_poly(p, v)).collect()).collect()
}

/// Laplace expansion along the first row; independent of Bareiss.
fn cofactor_det(m: &[Vec<ZPoly>]) -> ZPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let ring = *m[0][0].ring();
    let nv = m[0][0].nvars();
    let mut acc = Poly::zero(ring, nv);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ZPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = m[0][j].mul(&cofactor_det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[test]
fn sylvester_examples() {
    let v = vt("x,a,b");
    let s = sylvester(&z("x - a", &v), &z("x - b", &v), 0).unwrap();
    assert_eq!(matrix_texts(&s, &v), [["1", "-a"], ["1", "-b"]]);
    let s = sylvester(&z("x^2 + 1", &v), &z("x + 1", &v), 0).unwrap();
    assert_eq!(matrix_texts(&s, &v), [["1", "0", "1"], ["1", "1", "0"], ["0", "1", "1"]]);
    assert_eq!(sylvester(&z("a", &v), &z("b + 1", &v), 0), Err(ResultantError::NoEliminationVariable));
    assert_eq!(sylvester(&z("0", &v), &z("x", &v), 0), Err(ResultantError::ZeroInput));
}

#[test]
fn sylvester_of_linear_system_has_dim_two() {
    // f3, f4 of the (1,2,1,2) path system, eliminating a_3
    let v = vt("x_2,x_3,y_1,y_3,z_3,a_1,a_2,a_3,b_1,c_1,d_1,b_2,c_2,d_2");
    let f3 = z("z_3*y_1 + a_3 - c_2", &v);
    let f4 = z("z_3^2*y_1 + a_3 - d_2", &v);
    let s = sylvester(&f3, &f4, v.index("a_3").unwrap()).unwrap();
    assert_eq!(s.dim(), 2);
}

#[test]
fn det_examples() {
    let v = vt("x,a,b");
    let s = sylvester(&z("x - a", &v), &z("x - b", &v), 0).unwrap();
    assert_eq!(det_fraction_free(&s), z("a - b", &v));
    assert_eq!(det_fraction_free(&PolyMatrix::identity(IntegerRing, 3, 5)), z("1", &v));
    let s = sylvester(&z("x^2 + 1", &v), &z("x + 1", &v), 0).unwrap();
    let rows: Vec<Vec<ZPoly>> = s.rows().map(|r| r.to_vec()).collect();
    assert_eq!(cofactor_det(&rows), z("2", &v));
    assert_eq!(det_fraction_free(&s), z("2", &v));
}

#[test]
fn resultant_examples() {
    let v = vt("x,a,b");
    assert_eq!(resultant(&z("x - a", &v), &z("x - b", &v), 0).unwrap(), z("a - b", &v));
    assert!(resultant(&z("x", &v), &z("x", &v), 0).unwrap().is_zero());
    // constant in x: res = f^deg(g)
    assert_eq!(resultant(&z("a", &v), &z("x^3 + b", &v), 0).unwrap(), z("a^3", &v));
}

fn random_poly(rng: &mut ChaCha8Rng, nv: usize, max_terms: usize, max_exp: u32) -> ZPoly {
    let n = rng.gen_range(1..=max_terms);
    let terms: Vec<(Vec<u32>, Integer)> = (0..n)
        .map(|_| ((0..nv).map(|_| rng.gen_range(0..=max_exp)).collect(), Integer::from(rng.gen_range(-4i64..=4))))
        .collect();
    Poly::from_terms(IntegerRing, nv, terms)
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=5);
        let entries: Vec<ZPoly> = (0..n * n)
            .map(|_| if rng.gen_bool(0.25) { Poly::zero(IntegerRing, 2) } else { random_poly(&mut rng, 2, 3, 2) })
            .collect();
        let m = PolyMatrix::from_rows(n, entries);
        let rows: Vec<Vec<ZPoly>> = m.rows().map(|r| r.to_vec()).collect();
        assert_eq!(det_fraction_free(&m), cofactor_det(&rows));
    }
}

/// Random polynomial in (x, y, w) with a positive degree in x.
fn random_in_x(rng: &mut ChaCha8Rng) -> ZPoly {
    loop {
        let p = random_poly(rng, 3, 4, 2);
        if p.degree_in(0) >= 1 {
            return p;
        }
    }
}

#[test]
fn elimination_property() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let f = random_in_x(&mut rng);
        let g = random_poly(&mut rng, 3, 4, 2);
        if g.is_zero() {
            continue;
        }
        let r = resultant(&f, &g, 0).unwrap();
        assert!(r.degree_in(0) <= 0, "variable survived elimination");
    }
}

#[test]
fn vanishing_on_common_factor() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let h = random_in_x(&mut rng);
        let u = random_poly(&mut rng, 3, 2, 1);
        let w = random_poly(&mut rng, 3, 2, 1);
        if u.is_zero() || w.is_zero() {
            continue;
        }
        let r = resultant(&h.mul(&u), &h.mul(&w), 0).unwrap();
        assert!(r.is_zero());
    }
}

#[test]
fn multiplicativity_mod_p() {
    let field = PrimeField::new(1009);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let dense = |rng: &mut ChaCha8Rng, d: usize| -> Vec<u64> {
        let mut v: Vec<u64> = (0..=d).map(|_| rng.gen_range(0..1009)).collect();
        if v[d] == 0 {
            v[d] = 1;
        }
        v
    };
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = alloc::vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(x, y));
            }
        }
        out
    };
    for _ in 0..1000 {
        let (d1, d2, d3) = (rng.gen_range(0..5), rng.gen_range(0..5), rng.gen_range(1..5));
        let (f, f2, g) = (dense(&mut rng, d1), dense(&mut rng, d2), dense(&mut rng, d3));
        let lhs = univariate_resultant_mod_p(&field, &mul(&f, &f2), &g);
        let rhs = field.mul(&univariate_resultant_mod_p(&field, &f, &g), &univariate_resultant_mod_p(&field, &f2, &g));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn univariate_mod_p_agrees_with_sylvester() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..1000 {
        let f = random_in_x(&mut rng);
        let g = random_in_x(&mut rng);
        let mut r = ChaCha8Rng::seed_from_u64(rng.gen());
        let check = resultant_spot_check(&f, &g, 0, 3, 1009, &mut r).unwrap();
        assert!(check.passed(), "{check:?}");
    }
}

#[test]
fn spot_check_examples() {
    let v = vt("x_2,x_3,y_1,y_3,z_3,a_1,a_2,a_3,b_1,c_1,d_1,b_2,c_2,d_2");
    let f1 = z("x_2*x_3 + a_1 - c_1", &v);
    let f2 = z("x_2^2*x_3 + a_1 - d_1", &v);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a1 = v.index("a_1").unwrap();
    let c = resultant_spot_check(&f1, &f2, a1, 50, 1009, &mut rng).unwrap();
    assert!(c.passed());
    assert_eq!(c.trials, 50);

    let w = vt("x,y");
    let f = z("x^2 + y", &w);
    let g = z("x + y", &w);
    let c = resultant_spot_check(&f, &g, 0, 50, 1009, &mut rng).unwrap();
    assert!(c.passed());

    // corrupted claim
    let r = resultant(&f, &g, 0).unwrap();
    let bad = r.add(&z("1", &w));
    let c = spot_check_claimed(&f, &g, 0, &bad, 50, 1009, &mut rng);
    assert!(!c.passed());
    assert_eq!(c.mismatches, c.trials);

    // leading coefficient y vanishes on a fifth of the draws mod 5
    let f = z("y*x + 1", &w);
    let c = resultant_spot_check(&f, &g, 0, 50, 5, &mut rng).unwrap();
    assert!(c.passed());
    assert_eq!(c.trials, 50);
    assert!(c.skipped > 0);
}

#[test]
fn prs_matches_bareiss() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..1000 {
        let f = random_in_x(&mut rng);
        let g = random_in_x(&mut rng);
        assert_eq!(resultant_prs(&f, &g, 0).unwrap(), resultant(&f, &g, 0).unwrap(), "{f:?} {g:?}");
    }
}

#[test]
fn modular_matches_bareiss() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..300 {
        let f = random_in_x(&mut rng);
        let g = random_in_x(&mut rng);
        let expected = resultant(&f, &g, 0).unwrap();
        let got = resultant_modular(&f, &g, 0).expect("fits the sample layout");
        assert_eq!(got, expected, "{f:?} {g:?}");
    }
}

#[test]
fn modular_matches_bareiss_on_lemma1_chain() {
    let v = vt("x_1,x_2,x_3,y_1,y_3,z_2,z_3,t_3");
    let f2 = z("x_2*x_3 - x_2^2*x_3 - z_2*t_3 + z_2^2*t_3", &v);
    let f3 = z("x_3*x_1 - x_3^2*x_1 - y_3*y_1 + y_3^2*y_1", &v);
    let f4 = z("z_3*y_1 - z_3^2*y_1 - t_3*x_1 + t_3^2*x_1", &v);
    let f5 = z("x_2*y_3 - x_2^2*y_3 - z_2*z_3 + z_2^2*z_3", &v);
    let g1 = resultant(&f3, &f4, 0).unwrap();
    let g2 = resultant(&f2, &f5, 1).unwrap();
    assert_eq!(resultant_modular(&f3, &f4, 0).unwrap(), g1);
    assert_eq!(resultant_modular(&f2, &f5, 1).unwrap(), g2);
    assert_eq!(resultant_modular(&g1, &g2, 2).unwrap(), resultant(&g1, &g2, 2).unwrap());
}

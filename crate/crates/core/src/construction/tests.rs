use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::arith::is_prime;

/// Roots of an integer polynomial (lowest degree first) by evaluating at
/// every element of `F_p`.
fn roots_by_scan(p: u64, c: &[i64]) -> Vec<u64> {
    (0..p)
        .filter(|&x| {
            let v = c.iter().rev().fold(0i128, |acc, &k| (acc * x as i128 + k as i128).rem_euclid(p as i128));
            v == 0
        })
        .collect()
}

/// `S_1` from the definitions alone, by brute-force scans.
fn s1_oracle(p: u64) -> (Vec<u64>, bool) {
    let minus_squares: Vec<u64> = (0..p).map(|x| (p - x * x % p) % p).collect();
    let t3: Vec<u64> = (0..p).filter(|x| !minus_squares.contains(x)).collect();
    let mut t4 = roots_by_scan(p, &[1, -4, 1]);
    t4.extend(roots_by_scan(p, &[-1, 3]));
    t4.extend(roots_by_scan(p, &[-2, 3]));
    let inv = |d: i64| {
        let d = d.rem_euclid(p as i64) as u64;
        (1..p).find(|&y| d * y % p == 1).expect("invertible")
    };
    let quintic: Vec<i64> =
        T5_QUINTIC.iter().map(|&(n, d)| (n.rem_euclid(p as i64) as u64 * inv(d) % p) as i64).collect();
    let t5 = roots_by_scan(p, &quintic);
    let t1: Vec<u64> = (2..=(p - 1) / 2).collect();
    let t2: Vec<u64> = ((p + 3) / 2..p).collect();
    let meet = |t: &[u64]| t.iter().filter(|x| t3.contains(x)).count();
    let use_t1 = meet(&t1) >= meet(&t2);
    let chosen = if use_t1 { t1 } else { t2 };
    let s1 = chosen.into_iter().filter(|x| t3.contains(x) && !t4.contains(x) && !t5.contains(x)).collect();
    (s1, use_t1)
}

#[test]
fn sets_at_47() {
    let s = build_sets(47, false).unwrap();
    assert_eq!(s.t1, (2..=23).collect::<Vec<_>>());
    assert_eq!(s.t2, (25..47).collect::<Vec<_>>());
    assert_eq!(s.t3.len(), 23);
    assert_eq!(s.s2.len(), 45);
    let (s1, use_t1) = s1_oracle(47);
    assert_eq!(s.s1, s1);
    assert_eq!(s.chosen_half == Half::T1, use_t1);
    assert!(!s.s1.is_empty());
}

#[test]
fn small_and_invalid_primes() {
    assert_eq!(build_sets(43, false), Err(ConstructionError::TooSmall { p: 43, s1: None }));
    assert_eq!(build_sets(49, false), Err(ConstructionError::InvalidField { q: 49 }));
    assert_eq!(build_sets(2, true), Err(ConstructionError::InvalidField { q: 2 }));
    let forced = build_sets(43, true);
    match forced {
        Ok(s) => assert_eq!(s.s1, s1_oracle(43).0),
        Err(e) => assert_eq!(e, ConstructionError::TooSmall { p: 43, s1: Some(0) }),
    }
}

#[test]
fn edge_formula() {
    let s = build_sets(47, false).unwrap();
    match edge_from_params(&s, 2, 2, 2, 1) {
        Ok(e) => {
            assert_eq!(e.members[0], HVertex::new(2, 5, 9, 1));
            assert_eq!(e.members.map(|v| v.part), [1, 2, 3]);
        }
        Err(r) => assert_eq!(r, Rejection::NotInS1 { index: 1, value: 2 }),
    }
    let x = s.s1[0];
    assert_eq!(edge_from_params(&s, x, x, x, 0), Err(Rejection::ZeroShift));
    // a = -x2 x3 sends the first c-coordinate to 0
    let (x2, x3) = (s.s1[0], s.s1[s.s1.len() - 1]);
    let a = 47 - x2 * x3 % 47;
    assert_eq!(edge_from_params(&s, x, x2, x3, a), Err(Rejection::OutsideS2 { part: 1, coord: 1, value: 0 }));
    let outside = (2..47).find(|&v| !s.in_s1(v)).unwrap();
    assert_eq!(edge_from_params(&s, x, outside, x, 1), Err(Rejection::NotInS1 { index: 2, value: outside as u32 }));
}

#[test]
fn hypergraph_at_47() {
    let h = build_hypergraph(47, false).unwrap();
    let s1 = h.sets.s1.len() as u64;
    assert_eq!(h.vertex_count(), 3 * s1 * 45 * 45);
    assert!(h.graph.edge_count() as u64 >= s1 * s1 * s1 * 34);
    // raw degree count against the algebraic bound
    let mut deg = std::collections::HashMap::new();
    for e in h.graph.edges() {
        for v in e.members {
            assert!(v.c > 1 && v.d > 1 && h.sets.in_s1(v.b as u64));
            *deg.entry(v).or_insert(0usize) += 1;
        }
    }
    assert!(deg.values().all(|&d| d as u64 <= s1));
    for (v, d) in &deg {
        let id = h.graph.vertex_id(v).unwrap();
        assert_eq!(h.graph.edges_at(id).len(), *d);
        for &e in h.graph.edges_at(id) {
            assert!(h.graph.members(e).contains(&id));
        }
    }
    let mut triples: Vec<[HVertex; 3]> = h.graph.edges().iter().map(|e| e.members).collect();
    triples.sort_unstable();
    triples.dedup();
    assert_eq!(triples.len(), h.graph.edge_count());
    let params: Vec<[u32; 4]> = h.graph.edges().iter().map(|e| e.params).collect();
    assert!(params.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn assemble_rejects_duplicates() {
    let h = build_hypergraph(47, false).unwrap();
    let mut edges = h.graph.edges().to_vec();
    edges.push(edges[0]);
    assert!(matches!(assemble(h.sets.clone(), edges), Err(ConstructionError::InvariantViolated(_))));
}

#[test]
fn graph_sizes_and_errors() {
    let g = build_graph(5).unwrap();
    assert_eq!(g.vertex_count(), 625);
    assert_eq!(build_graph(4), Err(ConstructionError::InvalidField { q: 4 }));
    assert_eq!(build_graph(9), Err(ConstructionError::InvalidField { q: 9 }));
    assert_eq!(build_graph(2), Err(ConstructionError::InvalidField { q: 2 }));
}

#[test]
fn graph_neighbors_match_relation_scan() {
    let g = build_graph(5).unwrap();
    for u in [0usize, 1, 17, 312, 624] {
        let scan: Vec<usize> = (0..625).filter(|&v| g.adjacent(g.vertex(u), g.vertex(v))).collect();
        assert_eq!(g.neighbors(u), scan);
    }
    let u = g.id([0, 3, 1, 4]);
    for v in g.neighbors(u) {
        assert_eq!(g.vertex(v)[1], 2);
    }
}

#[test]
fn graph_symmetry_and_edge_count() {
    for q in [3u64, 5, 7] {
        let g = build_graph(q).unwrap();
        let mut degree_sum = 0;
        let mut loops = 0;
        for u in 0..g.vertex_count() {
            let nb = g.neighbors(u);
            assert!(nb.len() as u64 <= q);
            loops += q - nb.len() as u64;
            degree_sum += nb.len() as u64;
            for v in nb {
                assert!(g.is_adjacent(v, u), "q={q} {u} {v}");
            }
        }
        assert_eq!(loops, q * q);
        assert_eq!(degree_sum / 2, g.edge_count());
        assert!(g.edge_count() >= q.pow(5) / 2 - q.pow(4));
    }
}

#[test]
fn adjacency_list_basics() {
    let k = AdjacencyList::complete(6);
    assert_eq!(k.edge_count(), 15);
    assert_eq!(k.neighbors(2), [0, 1, 3, 4, 5]);
    let g = AdjacencyList::from_edges(3, &[(0, 1), (1, 0), (2, 2)]);
    assert_eq!(g.edge_count(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn set_invariants(p in (47u64..110).prop_filter("prime", |&p| is_prime(p))) {
        let s = build_sets(p, false).unwrap();
        prop_assert_eq!(s.t3.len() as u64, (p - 1) / 2);
        prop_assert!(4 * s.s1.len() as u64 + 43 >= p);
        prop_assert!(!s.s1.contains(&0) && !s.s1.contains(&1));
        prop_assert_eq!(&s.s1, &s1_oracle(p).0);
    }

    #[test]
    fn accepted_edges_avoid_zero_and_one(
        p in prop::sample::select(vec![47u64, 53, 59]),
        i in 0usize..64, j in 0usize..64, k in 0usize..64, a in 1u64..47,
    ) {
        let s = build_sets(p, false).unwrap();
        let pick = |t: usize| s.s1[t % s.s1.len()];
        if let Ok(e) = edge_from_params(&s, pick(i), pick(j), pick(k), a) {
            for (n, v) in e.members.iter().enumerate() {
                prop_assert_eq!(v.part as usize, n + 1);
                prop_assert!(v.c > 1 && v.d > 1 && v.b > 1);
            }
        }
    }
}

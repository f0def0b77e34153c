use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::construction::{HEdge, Hypergraph};

/// A Berge 4-cycle `v_1, e_1, v_2, e_2, v_3, e_3, v_4, e_4, v_1` with
/// `v_1, v_3` in part 1 and `v_2, v_4` in part 2, written with `v_1 < v_3`
/// and `v_2 < v_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle1212 {
    pub vertices: [u32; 4],
    pub edges: [u32; 4],
}

impl Cycle1212 {
    /// Puts a cycle given in any rotation or direction (keeping the part
    /// pattern) into canonical form.
    pub fn canonical(vertices: [u32; 4], edges: [u32; 4]) -> Cycle1212 {
        let [mut v1, mut v2, mut v3, mut v4] = vertices;
        let [mut e1, mut e2, mut e3, mut e4] = edges;
        if v1 > v3 {
            core::mem::swap(&mut v1, &mut v3);
            core::mem::swap(&mut v2, &mut v4);
            core::mem::swap(&mut e1, &mut e3);
            core::mem::swap(&mut e2, &mut e4);
        }
        if v2 > v4 {
            core::mem::swap(&mut v2, &mut v4);
            core::mem::swap(&mut e1, &mut e4);
            core::mem::swap(&mut e2, &mut e3);
        }
        Cycle1212 { vertices: [v1, v2, v3, v4], edges: [e1, e2, e3, e4] }
    }
}

/// All `(1,2,1,2)`-type Berge 4-cycles, found by pairing 2-paths
/// `v_1, e, v_2, f, v_3` between part-1 vertices through part 2. Sorted.
pub fn find_1212_cycles(h: &Hypergraph) -> Vec<Cycle1212> {
    let part = |v: u32| h.vertex(v).part;
    let mut out = Vec::new();
    let mut by_end: BTreeMap<u32, Vec<(u32, u32, u32)>> = BTreeMap::new();
    for v1 in 0..h.vertices().len() as u32 {
        if part(v1) != 1 {
            continue;
        }
        by_end.clear();
        for &e in h.edges_at(v1) {
            let v2 = h.members(e)[1];
            for &f in h.edges_at(v2) {
                let v3 = h.members(f)[0];
                if f != e && v3 > v1 {
                    by_end.entry(v3).or_default().push((e, v2, f));
                }
            }
        }
        for (&v3, twos) in &by_end {
            for (i, &(e1, v2, e2)) in twos.iter().enumerate() {
                for &(e4, v4, e3) in &twos[i + 1..] {
                    let distinct = v2 != v4 && e1 != e3 && e1 != e4 && e2 != e3 && e2 != e4;
                    if distinct {
                        out.push(Cycle1212::canonical([v1, v2, v3, v4], [e1, e2, e3, e4]));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Reference search over quadruples of edges, reading only the edge list.
/// Returns the cycles with vertices given by value.
pub fn find_1212_cycles_naive(edges: &[HEdge]) -> Vec<([crate::construction::HVertex; 4], [usize; 4])> {
    let n = edges.len();
    let mut out = Vec::new();
    for e1 in 0..n {
        for e2 in 0..n {
            if e2 == e1 || edges[e2].members[1] != edges[e1].members[1] {
                continue;
            }
            for e3 in 0..n {
                if e3 == e1 || e3 == e2 || edges[e3].members[0] != edges[e2].members[0] {
                    continue;
                }
                for e4 in 0..n {
                    if e4 == e1 || e4 == e2 || e4 == e3 {
                        continue;
                    }
                    let (a, b, c, d) = (&edges[e1].members, &edges[e2].members, &edges[e3].members, &edges[e4].members);
                    let (v1, v2, v3, v4) = (a[0], a[1], b[0], c[1]);
                    if d[1] == v4 && d[0] == v1 && v1 < v3 && v2 < v4 {
                        out.push(([v1, v2, v3, v4], [e1, e2, e3, e4]));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

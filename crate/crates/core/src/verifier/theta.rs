use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::construction::{Adjacency, GraphGq};

/// Three internally disjoint paths of length 4 from `a` to `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theta43 {
    pub a: usize,
    pub b: usize,
    /// Interior vertices `u, v, w` of each path.
    pub paths: [[usize; 3]; 3],
}

fn disjoint(p: &[usize; 3], q: &[usize; 3]) -> bool {
    p.iter().all(|x| !q.contains(x))
}

/// Length-4 paths `a, u, v, w, b` with `b > a`, grouped by `b`.
pub fn paths4_from<G: Adjacency + ?Sized>(g: &G, a: usize) -> BTreeMap<usize, Vec<[usize; 3]>> {
    let mut out: BTreeMap<usize, Vec<[usize; 3]>> = BTreeMap::new();
    let (mut nu, mut nv, mut nw, mut nb) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    g.neighbors_into(a, &mut nu);
    for &u in &nu {
        nv.clear();
        g.neighbors_into(u, &mut nv);
        for &v in &nv {
            if v == a {
                continue;
            }
            nw.clear();
            g.neighbors_into(v, &mut nw);
            for &w in &nw {
                if w == a || w == u {
                    continue;
                }
                nb.clear();
                g.neighbors_into(w, &mut nb);
                for &b in &nb {
                    if b > a && b != u && b != v {
                        out.entry(b).or_default().push([u, v, w]);
                    }
                }
            }
        }
    }
    out
}

/// First triple of pairwise internally disjoint paths in `paths`, in
/// lexicographic order of indices.
pub fn disjoint_triple(paths: &[[usize; 3]]) -> Option<[[usize; 3]; 3]> {
    for (i, p) in paths.iter().enumerate() {
        for (j, q) in paths.iter().enumerate().skip(i + 1) {
            if !disjoint(p, q) {
                continue;
            }
            for r in &paths[j + 1..] {
                if disjoint(p, r) && disjoint(q, r) {
                    return Some([*p, *q, *r]);
                }
            }
        }
    }
    None
}

/// A `theta_{4,3}` whose smaller endpoint is `a`, if one exists.
pub fn theta43_from<G: Adjacency + ?Sized>(g: &G, a: usize) -> Option<Theta43> {
    paths4_from(g, a)
        .into_iter()
        .filter(|(_, ps)| ps.len() >= 3)
        .find_map(|(b, ps)| disjoint_triple(&ps).map(|paths| Theta43 { a, b, paths }))
}

/// Searches every endpoint pair for a `theta_{4,3}`; the witness with the
/// smallest `a` is returned.
pub fn theta43_search<G: Adjacency + ?Sized>(g: &G) -> Option<Theta43> {
    (0..g.vertex_count()).find_map(|a| theta43_from(g, a))
}

/// Outcome of checking the octagon identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctagonReport {
    /// Octagons examined.
    pub examined: u64,
    pub violations: u64,
    pub first_violation: Option<[usize; 8]>,
    /// Whether the search stopped at the sample limit.
    pub truncated: bool,
}

impl OctagonReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// Walks 8-cycles `c_0, ..., c_7` with `c_0` the smallest vertex and
/// `c_1 < c_7`, in lexicographic order, and checks
/// `x(c_0) + x(c_4) = x(c_2) + x(c_6)` and `x(c_1) + x(c_5) = x(c_3) + x(c_7)`
/// mod `modulus`. Stops after `limit` octagons when given.
pub fn octagon_identity_check_with<G: Adjacency + ?Sized>(
    g: &G,
    x: impl Fn(usize) -> u64,
    modulus: u64,
    limit: Option<u64>,
) -> OctagonReport {
    let mut rep = OctagonReport { examined: 0, violations: 0, first_violation: None, truncated: false };
    let n = g.vertex_count();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u)).collect();
    let mut cyc = [0usize; 8];
    'outer: for c0 in 0..n {
        cyc[0] = c0;
        let mut stack: Vec<(usize, usize)> = alloc::vec![(1, 0)];
        while let Some((depth, idx)) = stack.pop() {
            let prev = cyc[depth - 1];
            let Some(&next) = nbrs[prev].get(idx) else { continue };
            stack.push((depth, idx + 1));
            if next <= c0 || cyc[1..depth].contains(&next) {
                continue;
            }
            cyc[depth] = next;
            if depth < 7 {
                stack.push((depth + 1, 0));
                continue;
            }
            if next < cyc[1] || nbrs[next].binary_search(&c0).is_err() {
                continue;
            }
            rep.examined += 1;
            let s = |i: usize, j: usize| (x(cyc[i]) + x(cyc[j])) % modulus;
            if s(0, 4) != s(2, 6) || s(1, 5) != s(3, 7) {
                rep.violations += 1;
                rep.first_violation.get_or_insert(cyc);
            }
            if limit.is_some_and(|l| rep.examined >= l) {
                rep.truncated = true;
                break 'outer;
            }
        }
    }
    rep
}

/// The octagon identities on `G_q`, reading first coordinates.
pub fn octagon_identity_check(g: &GraphGq, limit: Option<u64>) -> OctagonReport {
    octagon_identity_check_with(g, |v| g.vertex(v)[0], g.q, limit)
}

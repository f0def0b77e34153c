use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::sets::{build_sets, SetSystem};
use super::ConstructionError;

/// A vertex `(b, c, d, i)` of `V_i = S_1 x S_2 x S_2 x {i}`. The derived
/// order compares the part first, then `b`, `c`, `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HVertex {
    pub part: u8,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl HVertex {
    pub fn new(b: u32, c: u32, d: u32, part: u8) -> HVertex {
        HVertex { part, b, c, d }
    }
}

impl fmt::Display for HVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.b, self.c, self.d, self.part)
    }
}

/// The edge `e(x_1, x_2, x_3, a)`, members listed by part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HEdge {
    pub params: [u32; 4],
    pub members: [HVertex; 3],
}

/// Why a parameter tuple does not give an edge of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// `x_i` (1-based) is not in `S_1`.
    NotInS1 { index: u8, value: u32 },
    /// `a = 0`.
    ZeroShift,
    /// Coordinate `coord` (1 = c, 2 = d) of the member in `part` is not in `S_2`.
    OutsideS2 { part: u8, coord: u8, value: u32 },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotInS1 { index, value } => write!(f, "x_{index} = {value} is not in S1"),
            Rejection::ZeroShift => f.write_str("a = 0 is not in F_p^*"),
            Rejection::OutsideS2 { part, coord, value } => {
                let name = if *coord == 1 { "c" } else { "d" };
                write!(f, "coordinate {name} = {value} of the part-{part} member is not in S2")
            }
        }
    }
}

/// Computes `e(x_1, x_2, x_3, a)` and checks that it lies in `V(H)`.
pub fn edge_from_params(sets: &SetSystem, x1: u64, x2: u64, x3: u64, a: u64) -> Result<HEdge, Rejection> {
    let p = sets.p;
    for (i, &x) in [x1, x2, x3].iter().enumerate() {
        if !sets.in_s1(x) {
            return Err(Rejection::NotInS1 { index: i as u8 + 1, value: x as u32 });
        }
    }
    if a.is_multiple_of(p) {
        return Err(Rejection::ZeroShift);
    }
    let cyc = [(x1, x2, x3), (x2, x3, x1), (x3, x1, x2)];
    let mut members = [HVertex::new(0, 0, 0, 0); 3];
    for (i, &(u, v, w)) in cyc.iter().enumerate() {
        let c = (v * w + a) % p;
        let d = (v * v % p * w + a) % p;
        let part = i as u8 + 1;
        if !sets.in_s2(c) {
            return Err(Rejection::OutsideS2 { part, coord: 1, value: c as u32 });
        }
        if !sets.in_s2(d) {
            return Err(Rejection::OutsideS2 { part, coord: 2, value: d as u32 });
        }
        members[i] = HVertex::new(u as u32, c as u32, d as u32, part);
    }
    Ok(HEdge { params: [x1 as u32, x2 as u32, x3 as u32, a as u32], members })
}

/// Accepted edges with first parameter `x1`, in lexicographic order of
/// `(x_2, x_3, a)`.
pub fn edges_with_first(sets: &SetSystem, x1: u64) -> Vec<HEdge> {
    let mut out = Vec::new();
    for &x2 in &sets.s1 {
        for &x3 in &sets.s1 {
            for a in 1..sets.p {
                if let Ok(e) = edge_from_params(sets, x1, x2, x3, a) {
                    out.push(e);
                }
            }
        }
    }
    out
}

/// A 3-partite 3-uniform hypergraph with an incidence index. Vertex ids are
/// positions in the sorted list of vertices that lie on some edge.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    edges: Vec<HEdge>,
    vertices: Vec<HVertex>,
    members: Vec<[u32; 3]>,
    offsets: Vec<u32>,
    incidence: Vec<u32>,
}

impl Hypergraph {
    pub fn from_edges(edges: Vec<HEdge>) -> Hypergraph {
        let mut vertices: Vec<HVertex> = edges.iter().flat_map(|e| e.members).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let id = |v: &HVertex| vertices.binary_search(v).expect("member is indexed") as u32;
        let members: Vec<[u32; 3]> = edges.iter().map(|e| e.members.map(|v| id(&v))).collect();
        let mut offsets = alloc::vec![0u32; vertices.len() + 1];
        for m in &members {
            for &v in m {
                offsets[v as usize + 1] += 1;
            }
        }
        for i in 0..vertices.len() {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut incidence = alloc::vec![0u32; offsets[vertices.len()] as usize];
        for (e, m) in members.iter().enumerate() {
            for &v in m {
                incidence[fill[v as usize] as usize] = e as u32;
                fill[v as usize] += 1;
            }
        }
        Hypergraph { edges, vertices, members, offsets, incidence }
    }

    pub fn edges(&self) -> &[HEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices lying on at least one edge, sorted.
    pub fn vertices(&self) -> &[HVertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: u32) -> HVertex {
        self.vertices[id as usize]
    }

    pub fn vertex_id(&self, v: &HVertex) -> Option<u32> {
        self.vertices.binary_search(v).ok().map(|i| i as u32)
    }

    /// Ids of the three members of edge `e`, by part.
    pub fn members(&self, e: u32) -> [u32; 3] {
        self.members[e as usize]
    }

    /// Edges through vertex `v`, in increasing order.
    pub fn edges_at(&self, v: u32) -> &[u32] {
        let (lo, hi) = (self.offsets[v as usize], self.offsets[v as usize + 1]);
        &self.incidence[lo as usize..hi as usize]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertices.len()).map(|v| self.edges_at(v as u32).len()).max().unwrap_or(0)
    }

    /// First pair of edges with the same vertex triple, if any.
    pub fn duplicate_edge(&self) -> Option<(HEdge, HEdge)> {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_unstable_by_key(|&i| self.members[i]);
        order
            .windows(2)
            .find(|w| self.members[w[0]] == self.members[w[1]])
            .map(|w| (self.edges[w[0]], self.edges[w[1]]))
    }
}

/// The hypergraph `H` of the construction together with its sets.
#[derive(Clone, Debug)]
pub struct HypergraphH {
    pub sets: SetSystem,
    pub graph: Hypergraph,
}

impl HypergraphH {
    /// `|S_1|^3 (p - 13)`.
    pub fn edge_lower_bound(&self) -> u64 {
        let s = self.sets.s1.len() as u64;
        s * s * s * self.sets.p.saturating_sub(13)
    }

    pub fn vertex_count(&self) -> u64 {
        self.sets.vertex_count()
    }
}

/// Checks the edge-count bound, injectivity of the parameter map and the
/// degree bound on a complete edge list, then indexes it. `edges` must be
/// sorted by parameters.
pub fn assemble(sets: SetSystem, edges: Vec<HEdge>) -> Result<HypergraphH, ConstructionError> {
    let graph = Hypergraph::from_edges(edges);
    let h = HypergraphH { sets, graph };
    let bound = h.edge_lower_bound();
    if (h.graph.edge_count() as u64) < bound {
        return Err(ConstructionError::InvariantViolated(alloc::format!(
            "{} edges, below |S1|^3 (p - 13) = {bound}",
            h.graph.edge_count()
        )));
    }
    if let Some((e, f)) = h.graph.duplicate_edge() {
        return Err(ConstructionError::InvariantViolated(alloc::format!(
            "parameters {:?} and {:?} give the same edge",
            e.params,
            f.params
        )));
    }
    let s1 = h.sets.s1.len();
    if h.graph.max_degree() > s1 {
        let msg: String = alloc::format!("a vertex lies on {} > |S1| = {s1} edges", h.graph.max_degree());
        return Err(ConstructionError::InvariantViolated(msg));
    }
    Ok(h)
}

/// Enumerates every `(x_1, x_2, x_3, a) in S_1^3 x F_p^*` and builds `H`.
pub fn build_hypergraph(p: u64, force: bool) -> Result<HypergraphH, ConstructionError> {
    let sets = build_sets(p, force)?;
    let edges: Vec<HEdge> = sets.s1.iter().flat_map(|&x1| edges_with_first(&sets, x1)).collect();
    assemble(sets, edges)
}

use alloc::vec::Vec;

use super::ConstructionError;
use crate::arith::is_prime;

/// Read access to a simple undirected graph on vertices `0..n`.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;

    /// Appends the neighbours of `u` to `out` in increasing order.
    fn neighbors_into(&self, u: usize, out: &mut Vec<usize>);

    fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out = Vec::new();
        self.neighbors_into(u, &mut out);
        out
    }

    fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }
}

/// The graph `G_q` on `F_q^4`. Vertex `(u_1, u_2, u_3, u_4)` has id
/// `u_1 + q u_2 + q^2 u_3 + q^3 u_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphGq {
    pub q: u64,
}

impl GraphGq {
    pub fn vertex(&self, id: usize) -> [u64; 4] {
        let q = self.q as usize;
        [id % q, id / q % q, id / (q * q) % q, id / (q * q * q)].map(|x| x as u64)
    }

    pub fn id(&self, u: [u64; 4]) -> usize {
        let q = self.q;
        (u[0] + q * (u[1] + q * (u[2] + q * u[3]))) as usize
    }

    /// Whether `u != v` and `u_2 + v_2 = u_1 v_1`, `u_3 + v_4 = u_1 v_1^2`,
    /// `u_4 + v_3 = u_1^2 v_1`.
    pub fn adjacent(&self, u: [u64; 4], v: [u64; 4]) -> bool {
        let q = self.q;
        let uv = u[0] * v[0] % q;
        u != v && (u[1] + v[1]) % q == uv && (u[2] + v[3]) % q == uv * v[0] % q && (u[3] + v[2]) % q == uv * u[0] % q
    }

    /// `v_2 = u_1 v_1 - u_2`, `v_3 = u_1^2 v_1 - u_4`, `v_4 = u_1 v_1^2 - u_3`
    /// for every `v_1`, without `u` itself.
    pub fn neighbor_vertices(&self, u: [u64; 4]) -> Vec<[u64; 4]> {
        let q = self.q;
        let neg = |x: u64| (q - x) % q;
        (0..q)
            .map(|v1| {
                let uv = u[0] * v1 % q;
                [v1, (uv + neg(u[1])) % q, (uv * u[0] + neg(u[3])) % q, (uv * v1 + neg(u[2])) % q]
            })
            .filter(|&v| v != u)
            .collect()
    }

    /// `(q^5 - q^2)/2`: every vertex has `q` candidate neighbours and
    /// `q^2` vertices (those with `2u_2 = u_1^2`, `u_3 + u_4 = u_1^3`) meet
    /// themselves.
    pub fn edge_count(&self) -> u64 {
        (self.q.pow(5) - self.q * self.q) / 2
    }
}

impl Adjacency for GraphGq {
    fn vertex_count(&self) -> usize {
        self.q.pow(4) as usize
    }

    fn neighbors_into(&self, u: usize, out: &mut Vec<usize>) {
        let start = out.len();
        out.extend(self.neighbor_vertices(self.vertex(u)).into_iter().map(|v| self.id(v)));
        out[start..].sort_unstable();
    }
}

/// Builds `G_q` for an odd prime `q`.
pub fn build_graph(q: u64) -> Result<GraphGq, ConstructionError> {
    if q.is_multiple_of(2) || !is_prime(q) {
        return Err(ConstructionError::InvalidField { q });
    }
    Ok(GraphGq { q })
}

/// An explicit simple graph stored as sorted neighbour lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyList {
    adj: Vec<Vec<usize>>,
}

impl AdjacencyList {
    /// Loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> AdjacencyList {
        let mut adj = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
            l.dedup();
        }
        AdjacencyList { adj }
    }

    pub fn complete(n: usize) -> AdjacencyList {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        AdjacencyList::from_edges(n, &edges)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

impl Adjacency for AdjacencyList {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors_into(&self, u: usize, out: &mut Vec<usize>) {
        out.extend_from_slice(&self.adj[u]);
    }
}

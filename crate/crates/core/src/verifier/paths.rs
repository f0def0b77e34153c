use alloc::vec::Vec;

use crate::construction::{HVertex, Hypergraph};

/// The shape of a part signature `(i_1, i_2, i_3, i_4)` up to renaming the
/// parts, which is how the construction's part symmetry groups types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathClass {
    /// `(1,2,3,1)` and its images.
    Abca,
    /// `(1,2,1,2)` and its images.
    Abab,
    /// `(1,2,3,2)`, `(1,3,1,2)` and their images.
    Abcb,
}

impl PathClass {
    pub const ALL: [PathClass; 3] = [PathClass::Abca, PathClass::Abab, PathClass::Abcb];

    pub fn of(sig: [u8; 4]) -> PathClass {
        let [a, b, c, d] = sig;
        if a == d {
            PathClass::Abca
        } else if a == c && b == d {
            PathClass::Abab
        } else {
            PathClass::Abcb
        }
    }

    /// Largest number of paths of one signature between two given vertices.
    pub fn bound(self) -> u64 {
        match self {
            PathClass::Abca => 108,
            PathClass::Abab => 4,
            PathClass::Abcb => 36,
        }
    }

    pub fn representative(self) -> &'static str {
        match self {
            PathClass::Abca => "1231",
            PathClass::Abab => "1212",
            PathClass::Abcb => "1232",
        }
    }
}

/// Paths between two vertices of the same part.
pub const SAME_PART_BOUND: u64 = 216;
/// Paths between two vertices of different parts.
pub const CROSS_PART_BOUND: u64 = 76;

/// A Berge 3-path `v_1, e_1, v_2, e_2, v_3, e_3, v_4` in vertex and edge ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BergePath3 {
    pub vertices: [u32; 4],
    pub edges: [u32; 3],
}

impl BergePath3 {
    pub fn signature(&self, h: &Hypergraph) -> [u8; 4] {
        self.vertices.map(|v| h.vertex(v).part)
    }

    pub fn is_valid(&self, h: &Hypergraph) -> bool {
        let [v1, v2, v3, v4] = self.vertices;
        let [e1, e2, e3] = self.edges;
        let distinct_v = v1 != v2 && v1 != v3 && v1 != v4 && v2 != v3 && v2 != v4 && v3 != v4;
        let distinct_e = e1 != e2 && e1 != e3 && e2 != e3;
        let inside = |e: u32, a: u32, b: u32| {
            let m = h.members(e);
            m.contains(&a) && m.contains(&b)
        };
        distinct_v && distinct_e && inside(e1, v1, v2) && inside(e2, v2, v3) && inside(e3, v3, v4)
    }
}

/// Which orientation of a path is the counted one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `v_1 < v_4`.
    Ascending,
    /// `v_1 > v_4`.
    Descending,
}

impl Direction {
    fn keeps(self, v1: u32, v4: u32) -> bool {
        match self {
            Direction::Ascending => v1 < v4,
            Direction::Descending => v1 > v4,
        }
    }
}

/// Calls `visit` on every Berge 3-path that starts at `v1`.
pub fn for_each_path_from(h: &Hypergraph, v1: u32, mut visit: impl FnMut(BergePath3)) {
    for &e1 in h.edges_at(v1) {
        for v2 in h.members(e1) {
            if v2 == v1 {
                continue;
            }
            for &e2 in h.edges_at(v2) {
                if e2 == e1 {
                    continue;
                }
                for v3 in h.members(e2) {
                    if v3 == v2 || v3 == v1 {
                        continue;
                    }
                    for &e3 in h.edges_at(v3) {
                        if e3 == e1 || e3 == e2 {
                            continue;
                        }
                        for v4 in h.members(e3) {
                            if v4 != v3 && v4 != v2 && v4 != v1 {
                                visit(BergePath3 { vertices: [v1, v2, v3, v4], edges: [e1, e2, e3] });
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Every path from `a` to `b`, sorted.
pub fn paths_between(h: &Hypergraph, a: u32, b: u32) -> Vec<BergePath3> {
    let mut out = Vec::new();
    for_each_path_from(h, a, |p| {
        if p.vertices[3] == b {
            out.push(p);
        }
    });
    out.sort_unstable();
    out
}

/// Path counts for one endpoint pair `a < b`, split by signature read
/// from `a` to `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCount {
    pub a: HVertex,
    pub b: HVertex,
    pub total: u64,
    pub by_signature: Vec<([u8; 4], u64)>,
}

/// Largest count seen in one category and the pair that attains it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extreme {
    pub count: u64,
    pub pair: Option<(HVertex, HVertex)>,
}

impl Extreme {
    const NONE: Extreme = Extreme { count: 0, pair: None };

    fn offer(&mut self, count: u64, a: HVertex, b: HVertex) {
        let better = match self.pair {
            None => count > 0,
            Some(p) => count > self.count || (count == self.count && (a, b) < p),
        };
        if better {
            *self = Extreme { count, pair: Some((a, b)) };
        }
    }

    fn merge(&mut self, o: &Extreme) {
        if let Some((a, b)) = o.pair {
            self.offer(o.count, a, b);
        }
    }
}

/// Aggregate counts of Berge 3-paths over all unordered endpoint pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCensus {
    /// Paths counted, each once.
    pub paths: u64,
    /// Endpoint pairs joined by at least one path.
    pub pairs: u64,
    pub same_part_pairs: u64,
    pub cross_part_pairs: u64,
    pub max_same_part: Extreme,
    pub max_cross_part: Extreme,
    /// Largest per-pair count for each signature that occurs, sorted.
    pub per_signature_max: Vec<([u8; 4], Extreme)>,
}

impl Default for PathCensus {
    fn default() -> Self {
        PathCensus {
            paths: 0,
            pairs: 0,
            same_part_pairs: 0,
            cross_part_pairs: 0,
            max_same_part: Extreme::NONE,
            max_cross_part: Extreme::NONE,
            per_signature_max: Vec::new(),
        }
    }
}

impl PathCensus {
    fn signature_slot(&mut self, sig: [u8; 4]) -> &mut Extreme {
        let i = match self.per_signature_max.binary_search_by_key(&sig, |e| e.0) {
            Ok(i) => i,
            Err(i) => {
                self.per_signature_max.insert(i, (sig, Extreme::NONE));
                i
            }
        };
        &mut self.per_signature_max[i].1
    }

    pub fn record(&mut self, pc: &PairCount) {
        if pc.total == 0 {
            return;
        }
        self.paths += pc.total;
        self.pairs += 1;
        if pc.a.part == pc.b.part {
            self.same_part_pairs += 1;
            self.max_same_part.offer(pc.total, pc.a, pc.b);
        } else {
            self.cross_part_pairs += 1;
            self.max_cross_part.offer(pc.total, pc.a, pc.b);
        }
        for &(sig, n) in &pc.by_signature {
            self.signature_slot(sig).offer(n, pc.a, pc.b);
        }
    }

    /// Combines two censuses of disjoint sets of pairs.
    pub fn merge(&mut self, o: &PathCensus) {
        self.paths += o.paths;
        self.pairs += o.pairs;
        self.same_part_pairs += o.same_part_pairs;
        self.cross_part_pairs += o.cross_part_pairs;
        self.max_same_part.merge(&o.max_same_part);
        self.max_cross_part.merge(&o.max_cross_part);
        for (sig, e) in &o.per_signature_max {
            self.signature_slot(*sig).merge(e);
        }
    }

    /// Largest per-pair count over all signatures of one class.
    pub fn class_max(&self, class: PathClass) -> u64 {
        self.per_signature_max
            .iter()
            .filter(|(s, _)| PathClass::of(*s) == class)
            .map(|(_, e)| e.count)
            .max()
            .unwrap_or(0)
    }

    /// Whether every observed maximum is within its bound.
    pub fn within_bounds(&self) -> bool {
        self.max_same_part.count <= SAME_PART_BOUND
            && self.max_cross_part.count <= CROSS_PART_BOUND
            && PathClass::ALL.iter().all(|&c| self.class_max(c) <= c.bound())
    }
}

/// Reusable per-start scratch space for [`census_from`].
pub struct CensusScratch {
    counts: Vec<[u32; 9]>,
    touched: Vec<u32>,
}

impl CensusScratch {
    pub fn new(h: &Hypergraph) -> CensusScratch {
        CensusScratch { counts: alloc::vec![[0; 9]; h.vertices().len()], touched: Vec::new() }
    }
}

/// Counts, for every pair `{v1, v4}` whose counted orientation starts at
/// `v1`, the paths between them, and records each pair in `census`.
pub fn census_from(h: &Hypergraph, v1: u32, dir: Direction, scratch: &mut CensusScratch, census: &mut PathCensus) {
    let part = |v: u32| h.vertex(v).part;
    let CensusScratch { counts, touched } = scratch;
    for_each_path_from(h, v1, |p| {
        let [_, v2, v3, v4] = p.vertices;
        if !dir.keeps(v1, v4) {
            return;
        }
        let slot = &mut counts[v4 as usize];
        if slot.iter().all(|&c| c == 0) {
            touched.push(v4);
        }
        slot[(part(v2) as usize - 1) * 3 + part(v3) as usize - 1] += 1;
    });
    touched.sort_unstable();
    let start = h.vertex(v1);
    for &v4 in touched.iter() {
        let slot = core::mem::take(&mut counts[v4 as usize]);
        let end = h.vertex(v4);
        let (a, b) = if start < end { (start, end) } else { (end, start) };
        let mut pc = PairCount { a, b, total: 0, by_signature: Vec::new() };
        for (k, &n) in slot.iter().enumerate() {
            if n > 0 {
                let mut sig = [start.part, k as u8 / 3 + 1, k as u8 % 3 + 1, end.part];
                if start > end {
                    sig.reverse();
                }
                pc.total += n as u64;
                pc.by_signature.push((sig, n as u64));
            }
        }
        pc.by_signature.sort_unstable();
        census.record(&pc);
    }
    touched.clear();
}

/// The census with each path counted in the given orientation.
pub fn enumerate_paths_with(h: &Hypergraph, dir: Direction) -> PathCensus {
    let mut census = PathCensus::default();
    let mut scratch = CensusScratch::new(h);
    for v1 in 0..h.vertices().len() as u32 {
        census_from(h, v1, dir, &mut scratch, &mut census);
    }
    census
}

/// Exact census of Berge 3-paths, each counted once from its smaller end.
pub fn enumerate_paths(h: &Hypergraph) -> PathCensus {
    enumerate_paths_with(h, Direction::Ascending)
}

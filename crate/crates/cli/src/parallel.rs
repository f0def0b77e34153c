//! Rayon drivers for the embarrassingly parallel parts. Every result is
//! combined in a fixed order, so reports do not depend on the thread count.

use berge_core::construction::{
    assemble, build_sets, edges_with_first, Adjacency, ConstructionError, GraphGq, Hypergraph, HypergraphH,
};
use berge_core::elimchain::{run_script, ChainReport, ChainScript, RunOptions};
use berge_core::verifier::{census_from, theta43_from, CensusScratch, Direction, PathCensus, Theta43};
use rayon::prelude::*;

use crate::StdClock;

/// Runs scripts concurrently; reports come back in script order.
pub fn run_scripts(scripts: &[ChainScript], opts: &RunOptions) -> Vec<ChainReport> {
    scripts.par_iter().map(|s| run_script(s, opts, &StdClock::new())).collect()
}

/// [`berge_core::construction::build_hypergraph`] with the parameter sweep
/// split over the first coordinate.
pub fn hypergraph(p: u64, force: bool) -> Result<HypergraphH, ConstructionError> {
    let sets = build_sets(p, force)?;
    let chunks: Vec<_> = sets.s1.par_iter().map(|&x1| edges_with_first(&sets, x1)).collect();
    assemble(sets, chunks.into_iter().flatten().collect())
}

/// [`berge_core::verifier::enumerate_paths`] split over start vertices.
pub fn census(h: &Hypergraph) -> PathCensus {
    let n = h.vertices().len() as u32;
    (0..n)
        .into_par_iter()
        .fold(
            || (CensusScratch::new(h), PathCensus::default()),
            |(mut scratch, mut c), v| {
                census_from(h, v, Direction::Ascending, &mut scratch, &mut c);
                (scratch, c)
            },
        )
        .map(|(_, c)| c)
        .reduce(PathCensus::default, |mut a, b| {
            a.merge(&b);
            a
        })
}

/// [`berge_core::verifier::theta43_search`] split over the smaller endpoint.
pub fn theta43(g: &GraphGq) -> Option<Theta43> {
    (0..g.vertex_count()).into_par_iter().find_map_first(|a| theta43_from(g, a))
}

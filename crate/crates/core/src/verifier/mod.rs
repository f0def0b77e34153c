//! Exhaustive combinatorial checks on the constructed objects: Berge
//! 3-path counts in `H`, `(1,2,1,2)`-type Berge 4-cycles, and
//! `theta_{4,3}` subgraphs and octagon identities in `G_q`.

mod cycles;
mod paths;
mod theta;

pub use cycles::{find_1212_cycles, find_1212_cycles_naive, Cycle1212};
pub use paths::{
    census_from, enumerate_paths, enumerate_paths_with, for_each_path_from, paths_between, BergePath3, CensusScratch,
    Direction, Extreme, PairCount, PathCensus, PathClass, CROSS_PART_BOUND, SAME_PART_BOUND,
};
pub use theta::{
    disjoint_triple, octagon_identity_check, octagon_identity_check_with, paths4_from, theta43_from, theta43_search,
    OctagonReport, Theta43,
};

//! Certified decisions for minors that are disjoint unions of cycles.
//!
//! For a target graph H made of `k` disjoint cycles with `h` vertices in
//! total, [`decompose`] returns either a model of H as a minor of the input
//! graph or a tree decomposition whose width is at most
//! [`g_bound`]`(h, k)`. Every answer comes with a checker.
//!
//! Exact routines work on graphs with at most [`graph::MAX_EXACT_VERTICES`]
//! vertices and run under a [`Budget`] of search nodes.

pub mod bits;
pub mod budget;
pub mod cycles;
pub mod decomposer;
pub mod error;
pub mod format;
pub mod graph;
pub mod harness;
pub mod hitting;
pub mod treewidth;

pub use budget::Budget;
pub use cycles::{
    circumference, find_cycle_in_range, find_long_cycle, girth, has_disjoint_cycles_minor,
    longest_cycle, max_long_cycle_packing, verify_minor_model, verify_packing, Cycle,
    CycleFamilySpec, CyclePacking, MinorModel,
};
pub use decomposer::{decompose, g_bound, verify_outcome, BranchRecord, Outcome};
pub use error::{Error, Result};
pub use graph::{Graph, IdMap, Vertex, VertexSet};
pub use hitting::{ep_bound, ep_bound_no_medium, min_hitting_set_long_cycles, verify_hitting_set, HittingSet};
pub use treewidth::{exact_treewidth, validate_td, ExactConfig, TreeDecomposition, TreewidthResult};

//! Exact computation of the maximum number of colors in vertex colorings of
//! a graph with no rainbow path on `k` vertices.
//!
//! For a graph `G`, `c_k(G)` is the maximum number of colors usable without
//! creating a path on `k` vertices whose vertices all receive distinct
//! colors; `cp_k(G)` is the same maximum over proper colorings (which may
//! not exist). The crate provides:
//!
//! - closed-form values and constructive optimal colorings for paths
//!   ([`paths`]),
//! - an exact branch-and-bound solver for arbitrary small graphs with
//!   optimal-partition counting and certificates ([`solver`]),
//! - the `P_k`-thwarting number of trees by dynamic programming with a
//!   brute-force oracle, and the thwarting/coloring duality ([`thwarting`]),
//! - constructors and recognizers for the extremal families: coronas,
//!   multi-coronas, double stars, octopuses ([`zoo`]),
//! - enumeration of all non-isomorphic free trees and small connected cubic
//!   graphs ([`enumerate`]),
//! - exhaustive verification campaigns over the enumerated instances
//!   ([`harness`]).
//!
//! Campaigns shard work across a thread pool when the `parallel` feature
//! (on by default) is enabled; results are merged in canonical instance
//! order, so reports are identical for any worker count.

pub mod coloring;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod paths;
mod shard;
pub mod solver;
pub mod thwarting;
pub mod zoo;

pub use coloring::{has_rainbow_path, is_proper, monochromatic_edges, Coloring};
pub use graph::{Graph, GraphError, PathPattern, Tree, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6, GraphFormat, ParseError};

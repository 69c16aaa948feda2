//! Sorting signed chromosomes with duplicated symbols by symmetric reversals.
//!
//! A chromosome is a signed sequence flanked by `+r0 ... -r0`. A symmetric
//! reversal reverses and negates a segment whose two ends are opposite
//! copies of one repeat. The crate decides whether one chromosome can be
//! turned into another, builds reversal traces, solves the minimum-count
//! problem in the 2-balanced case, and provides exhaustive oracles and the
//! hardness gadgets.

pub mod balanced;
pub mod bijection;
pub mod chromosome;
mod code;
pub mod decision;
pub mod dp2;
pub mod error;
pub mod gen;
pub mod general;
pub mod hardness;
pub mod oracle;
pub mod simplify;

pub use balanced::{
    assign_directions, decompose_segments, solve_balanced2, AdjacencyDirection, BalancedRun, Direction,
    SegmentDecomposition,
};
pub use bijection::{build_bijection, build_bijection_random, AdjacencyBijection};
pub use chromosome::{
    parse_chromosome_file, Adjacency, AdjacencyMultiset, Chromosome, End, EndNode, Orientation,
    ReversalTrace, SignedToken, Symbol, SENTINEL,
};
pub use decision::{decide, sort, Decision, NoReason};
pub use dp2::{build_ig_dp2, decide_dp2, sort_dp2, IntersectionGraphDp2};
pub use error::{Error, Result};
pub use general::{
    build_acg, build_ig_general, decide_fixed_bijection, decide_general, decide_with_bijection, sort_general,
    AcgGraph, AlignedPair, IgGeneral,
};
pub use hardness::{sat_to_steiner, steiner_to_smsr, SatB2Instance, SmsrGadgetInstance};
pub use oracle::bfs::{bfs_distance, StateSpaceResult, DEFAULT_STATE_CAP};
pub use oracle::circle::CircleGraphInstance;
pub use oracle::steiner::steiner_exact;
pub use simplify::{simplify_pair, Simplified};

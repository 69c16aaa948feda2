//! Exhaustive reference solvers used to check the fast algorithms.

pub mod bfs;
pub mod circle;
pub mod steiner;

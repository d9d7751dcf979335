//! Toolkit for spanning trees without degree-2 vertices in cubic graphs:
//! exact solvers, arithmetic filters, structural constructions, embeddings,
//! and connectivity measures.

pub mod catalog;
pub mod construct;
pub mod cyclic;
pub mod formats;
pub mod graph;
pub mod hist;
pub mod topology;

pub use graph::{classify, Graph, GraphProfile};
pub use hist::{solve, solve_with_options, SolveMode, SolveReport, Verdict};

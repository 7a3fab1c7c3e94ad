//! Network comparison toolkit.
//!
//! Quantifies structural dissimilarity between undirected simple graphs
//! through an embedding-based measure (random-walk node embeddings, binned
//! distance distributions, Jensen–Shannon divergence) alongside two
//! baselines built on shortest-path distributions and communicability
//! sequences, and a hybrid of the embedding and shortest-path views.
//! Ships the synthetic generators, degree-constrained null models and
//! experiment harness needed to study the measures end to end.
//!
//! Start with the runnable examples (`cargo run --example <name>`) or the
//! `netcomp` binary for the batch interface.

pub mod correlation;
pub mod dissimilarity;
pub mod embedding;
pub mod error;
pub mod experiments;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod null_models;
pub mod rng;

pub use error::{Error, Result};
pub use graph::Graph;

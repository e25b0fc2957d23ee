//! Measurement toolkit for structural robustness of complex networks.
//!
//! The crate builds synthetic and canonical networks, simulates node and
//! edge attack sequences against them, evaluates functionality curves
//! (connectivity and controllability based), condenses the curves into
//! scalar robustness values and rank tables, detects destruction
//! thresholds, and optimizes robustness by degree-preserving rewiring.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability; the `netrobust` binary exposes the same operations as
//! subcommands.

pub mod apriori;
pub mod attacks;
pub mod cli;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod matching;
pub mod measures;
pub mod optimize;

pub use error::{Error, Result};
pub use graph::{Graph, RemovalMask};

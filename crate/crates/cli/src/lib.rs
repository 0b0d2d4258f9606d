//! Command line and HTTP front end for the Ptolemy diagram lab.
//!
//! Both front ends go through [`analysis`] for the computations and through
//! [`wire`] for serialization, so a report printed by the CLI and the body
//! returned by the service are byte-identical for the same input.

pub mod analysis;
pub mod exit;
pub mod service;
pub mod wire;

pub use analysis::{analyze, AnalysisReport};
pub use wire::{parse_diagonal, to_json, ErrorBody};

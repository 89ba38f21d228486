//! Early detection of embryonic research topics.
//!
//! The pipeline builds per-year topic co-occurrence networks from paper
//! metadata, compresses five-year windows into evolutionary networks whose
//! weights are collaboration-pace slopes, detects overlapping communities
//! by weighted clique percolation, and evaluates the detected clusters
//! against a gold standard of debutant topics.

pub mod clustering;
pub mod corpus;
pub mod dynamics;
pub mod error;
pub mod evaluation;
pub mod evolution;
pub mod gold;
pub mod networks;
pub mod postprocess;
pub mod synthetic;

pub use error::Error;

/// Canonical topic identifier: an ontology label after normalization.
pub type TopicId = String;

pub type Result<T> = std::result::Result<T, Error>;

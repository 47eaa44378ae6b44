//! Cayley-graph balls, growth sequences, generation checks and fingerprints.

mod ball;
mod fingerprint;
mod generation;
mod growth;

use thiserror::Error;

pub use ball::{enumerate_ball, BallTable, DEFAULT_MEM_CAP};
pub use fingerprint::{marked_fingerprint, Fingerprint};
pub use generation::generates_within;
pub use growth::{closed_form_growth, growth_sequence, has_closed_form, GrowthSequence, GrowthSource};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CayleyError {
    #[error("memory cap of {cap} bytes exceeded at {bytes} bytes; last completed radius {last_completed_radius}")]
    MemCapExceeded { last_completed_radius: u32, bytes: usize, cap: usize },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("subset is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("inconclusive: search cap reached after {visited} elements")]
    CapExceeded { visited: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Word length read from an enumerated ball.
pub fn word_length(ball: &BallTable, g: &crate::group::Element) -> Result<u32, CayleyError> {
    ball.word_length(g)
}

/// Lexicographically least geodesic word of `g`.
pub fn geodesic(ball: &BallTable, g: &crate::group::Element) -> Result<Vec<usize>, CayleyError> {
    ball.geodesic(g)
}

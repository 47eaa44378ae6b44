//! Computational toolkit for marked groups: word-metric balls, growth and
//! entropy, hyperbolicity measurements, displacement of isometries, and
//! exact evaluation of finiteness constants.

// `!(x > 0.0)` rejects NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod group;
pub mod cayley;
pub mod hyperbolicity;
pub mod entropy;
pub mod constants;
pub mod displacement;
pub mod presentations;
pub mod corpus;
pub mod cli;

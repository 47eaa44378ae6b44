//! Marked groups with canonical normal forms.
//!
//! Every supported model (free groups, free abelian groups, `Z` with an
//! arbitrary finite generating set, full cyclic groups, direct and free
//! products) has a closed-form normal form, so equality, multiplication and
//! word length are exact. Downstream code only relies on identity,
//! multiplication, inversion and the ordered generating set.

mod element;
mod marked;
mod spec;

use thiserror::Error;

pub use element::{render_word, Element, Side, Syllable};
pub use marked::{build_group, Generator, Limits, MarkedGroup, Model};
pub use spec::{parse_group_spec, GroupSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("syntax error at {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("invalid group at {position}: {message}")]
    Semantic { position: usize, message: String },
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by assembly-space operations and solvers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// The target contains an irreducible part that is not a basis element.
    #[error("target is not constructible: irreducible part {part:?} is outside the basis")]
    NotConstructible { part: String },

    /// The target has size zero (e.g. an empty string or an empty grid).
    #[error("target is empty")]
    EmptyTarget,

    /// An argument violates the operation's domain (zero integer, negative
    /// bias, malformed composition, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured resource cap was hit before an exact answer was proven.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// The object exceeds the size cap for exact search in its space.
    #[error("object too large for exact search: {0}")]
    TooLarge(String),

    /// No object of the requested composition has the requested index.
    #[error("no object with the requested assembly index {0}")]
    NoSuchIndex(u64),

    /// Input text could not be parsed as an object of the space.
    #[error("parse error: {0}")]
    Parse(String),

    /// A requested space variant exists in the data model but is not implemented.
    #[error("unsupported space variant: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors surfaced by the exact-arithmetic operations.
///
/// Everything here is a precondition or scope failure; violated internal
/// lattice invariants (odd adjunction sums, overflow) abort instead, since
/// they cannot arise from well-formed inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid class: {0}")]
    InvalidClass(String),

    #[error("lattice rank mismatch: {0} vs {1}")]
    LatticeMismatch(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vanishing-not-justified: {0}")]
    VanishingNotJustified(String),

    #[error("no integral linkage: {0}")]
    NoIntegralLinkage(String),

    #[error("out of scope: {0}")]
    Scope(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidClass(_) => "invalid-class",
            Error::LatticeMismatch(_, _) => "lattice-mismatch",
            Error::Precondition(_) => "precondition",
            Error::VanishingNotJustified(_) => "vanishing-not-justified",
            Error::NoIntegralLinkage(_) => "no-integral-linkage",
            Error::Scope(_) => "out-of-scope",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

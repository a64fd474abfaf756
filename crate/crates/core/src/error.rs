use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid singularity indices: {0}")]
    InvalidIndices(String),

    /// `n` failed positivity, integrality or parity.
    #[error("not a geometric index vector: n = {n} (g = {g})")]
    NotGeometric { g: u32, n: String },

    #[error("internal formula disagreement: {0}")]
    FormulaMismatch(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("class is not 2-divisible: {0}")]
    NotTwoDivisible(String),

    #[error("class does not live on this surface: {0}")]
    SurfaceMismatch(String),

    #[error("empty range: {0}")]
    EmptyRange(String),

    #[error("unbounded search: {0}")]
    Unbounded(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidIndices(_) => "invalid_indices",
            Error::NotGeometric { .. } => "not_geometric",
            Error::FormulaMismatch(_) => "formula_mismatch",
            Error::Domain(_) => "domain",
            Error::NotTwoDivisible(_) => "not_two_divisible",
            Error::SurfaceMismatch(_) => "surface_mismatch",
            Error::EmptyRange(_) => "empty_range",
            Error::Unbounded(_) => "unbounded",
            Error::Overflow(_) => "overflow",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

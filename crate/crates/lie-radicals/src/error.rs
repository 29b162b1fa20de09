use thiserror::Error;

/// Errors produced by construction, validation and certified computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),

    #[error("invalid algebra data: {0}")]
    InvalidData(String),

    #[error("bracket table lists both [{i},{j}] and [{j},{i}] with non-antisymmetric values")]
    InconsistentEntry { i: usize, j: usize },

    #[error("Jacobi identity fails on basis triple ({i},{j},{k}); residual {residual:?}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<String>,
    },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("map for basis vector {0} is not a derivation of the acted algebra")]
    NotADerivation(usize),

    #[error("action is not a homomorphism on basis pair ({i},{j}); residual {residual:?}")]
    NotAHomomorphism {
        i: usize,
        j: usize,
        residual: Vec<String>,
    },

    #[error("subspace is not invariant under the given operators")]
    NotInvariant,

    #[error("algebra is not semisimple (Killing form degenerate)")]
    NotSemisimple,

    #[error("algebra is not Frattini-free")]
    NotFrattiniFree,

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("bad catalog parameters: {0}")]
    BadParams(String),

    #[error("internal certificate failure in {check}: {detail}")]
    CertificateFailure { check: String, detail: String },

    #[error("witness construction failed: {0}")]
    WitnessConstructionFailed(String),
}

impl Error {
    pub(crate) fn cert(check: &str, detail: impl Into<String>) -> Self {
        Error::CertificateFailure {
            check: check.to_string(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |A - A'| = {deviation:e} exceeds tolerance)")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue = {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("site {site} out of range for {n_spins} spins")]
    SiteOutOfRange { site: usize, n_spins: usize },

    #[error("geometry has {actual} pair entries, expected {expected}")]
    GeometryMismatch { expected: usize, actual: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),

    #[error("not an X-state: max off-pattern entry {max_off:e} exceeds 1e-12")]
    NotXState { max_off: f64 },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("no sign change in bracket [{lo}, {hi}]")]
    NoRootInBracket { lo: f64, hi: f64 },

    #[error("unknown figure id {0}, expected 1..=5")]
    UnknownFigure(u32),

    #[error("only {found} entangled sample points, need at least 3 for the fit")]
    InsufficientEntangledPoints { found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised anywhere in the construction / spectral / verification pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("partition does not match vertex set: {0}")]
    PartitionMismatch(String),

    #[error("graph has {0} vertices; isomorphism check is capped at {1}")]
    SizeLimit(usize, usize),

    #[error("matrix dimension {0} exceeds the cap of {1}")]
    DimensionCap(usize, usize),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("vertex set violates the shared-neighbourhood condition: {0}")]
    NeighbourhoodCondition(String),

    #[error("no closed-form entry for {requested}; covered combinations: {covered}")]
    CatalogMiss { requested: String, covered: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

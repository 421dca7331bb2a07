use thiserror::Error;

/// Errors surfaced by configuration ingestion and the election procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration must contain at least one point")]
    EmptyConfiguration,
    #[error("point {index} has a non-finite coordinate")]
    NonFinitePoint { index: usize },
    #[error("points {first} and {second} coincide within tolerance")]
    DegenerateInput { first: usize, second: usize },
    /// Reaching this means numeric drift corrupted the encoding, never a
    /// valid configuration: the case analysis proves it unreachable.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

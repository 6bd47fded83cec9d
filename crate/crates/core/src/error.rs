use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside its family's domain (e.g. a negative
    /// dispersion or a correlation outside (-1, 1)).
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// Input data failed validation against the record contract.
    #[error("invalid data: {0}")]
    Validation(String),

    /// A numerical routine failed to converge or produced a non-finite value.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Estimation could not proceed (empty data, unidentifiable component, ...).
    #[error("estimation failure: {0}")]
    Estimation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid multiset: element {element} has multiplicity {multiplicity}, at most {max} allowed")]
    InvalidMultiset {
        element: usize,
        multiplicity: usize,
        max: usize,
    },
    #[error("enumeration of {requested} elements exceeds the limit of {limit}")]
    SizeLimit { requested: u128, limit: u128 },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("quotient is infinite: variable {0} has no pure power in the ideal")]
    InfiniteQuotient(String),
    #[error("monomial is not standard: {0}")]
    NotStandard(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("output error: {message}")]
    Output {
        kind: std::io::ErrorKind,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid {param}: {reason}")]
    InvalidArgument { param: &'static str, reason: String },
    #[error("table is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("series divisor must have constant term 1")]
    NonUnitConstant,
    #[error("operation not available in the {0} basis")]
    UnsupportedBasis(String),
    #[error("expected a polynomial in t, found negative powers in {0}")]
    NegativeValuation(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(param: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            param,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

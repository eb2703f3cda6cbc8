use alloc::string::String;

/// Errors raised by the enumeration and evaluation routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An enumeration would exceed the configured bound.
    #[error("{what} has size {size}, above the enumeration bound {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A series denominator factor does not start with the constant 1.
    #[error("denominator factor {index} of term {term} has u^0 coefficient {found}, expected 1")]
    NonUnitDenominator {
        term: usize,
        index: usize,
        found: String,
    },
    /// An internal identity failed to hold. Signals a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn check_size(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::TooLarge { what, size, limit })
    } else {
        Ok(())
    }
}

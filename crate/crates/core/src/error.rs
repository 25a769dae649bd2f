use thiserror::Error;

/// Errors raised by the algebra, enumeration and evaluation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term is not a unit in the coefficient ring")]
    NonUnitConstantTerm,

    #[error("inner series has nonzero constant term {0}; composition needs g(0) = 0")]
    CompositionAtNonzeroPoint(String),

    #[error("{op} requires constant term {expected}, found {found}")]
    ConstantTermError {
        op: &'static str,
        expected: &'static str,
        found: String,
    },

    #[error("{what} = {value} exceeds the size guard {limit} ({reason})")]
    SizeGuard {
        what: &'static str,
        value: usize,
        limit: usize,
        reason: &'static str,
    },

    #[error("{what} = {value} is outside {range}")]
    RangeError {
        what: &'static str,
        value: String,
        range: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(
    what: &'static str,
    value: usize,
    min: usize,
    max: usize,
    reason: &'static str,
) -> Result<()> {
    if value < min {
        return Err(Error::RangeError {
            what,
            value: value.to_string(),
            range: format!("[{min}, {max}]"),
        });
    }
    if value > max {
        return Err(Error::SizeGuard {
            what,
            value,
            limit: max,
            reason,
        });
    }
    Ok(())
}

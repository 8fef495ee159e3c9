use thiserror::Error;

/// Errors raised by the exact, special-value, formula and oracle layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("divergent parameters: {0}")]
    Divergent(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported family specification: {0}")]
    UnsupportedSpec(String),
    #[error("constant store: {0}")]
    Store(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! ensure {
    ($cond:expr, $variant:ident, $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::Error::$variant(format!($($fmt)+)));
        }
    };
}
pub(crate) use ensure;

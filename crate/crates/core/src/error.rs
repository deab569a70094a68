use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbacusError {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("parts are not weakly decreasing: {prev} is followed by {next}")]
    NotWeaklyDecreasing { prev: usize, next: usize },

    #[error("no removable 2-hook at runner {runner}, row {row}")]
    InvalidHookPosition { runner: usize, row: usize },

    #[error("invalid quotient tree: {0}")]
    InvalidTree(String),

    #[error("n = {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("index {n} is outside the table range 0..={max}")]
    IndexOutOfRange { n: usize, max: usize },

    #[error("series with constant term {0} has no inverse over the integers")]
    NotInvertible(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("bisection failed: {0}")]
    NoConvergence(String),
}

pub type Result<T, E = AbacusError> = std::result::Result<T, E>;

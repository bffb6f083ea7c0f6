use thiserror::Error;

use crate::exactalg::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Var, right: Var },

    /// Exact division left a remainder. Both operands are kept in canonical
    /// string form so the failure can be diagnosed from the message alone.
    #[error("not divisible: ({dividend}) / ({divisor})")]
    NotDivisible { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not invertible: constant term {constant} is not a unit")]
    NotInvertible { constant: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A postcondition that holds mathematically was violated.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Usage(_) | Error::Parse(_) | Error::VariableMismatch { .. } | Error::OrderMismatch { .. }
        )
    }
}

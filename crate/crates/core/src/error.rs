use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid coefficient key: {0}")]
    InvalidKey(String),
    #[error("h = {h} is not coprime to k = {k}")]
    NonPrimitive { h: i64, k: u32 },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("enumeration of {needed} tuples exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("expected a rational value, found {0}")]
    NotRational(String),
    #[error("expected an integer, found {0}")]
    NotIntegral(String),
    #[error("Newton iteration did not converge after {0} steps")]
    NoConvergence(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

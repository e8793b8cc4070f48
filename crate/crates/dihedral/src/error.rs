use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum DihedralError {
    /// A parameter violated a precondition (bad `n`, index out of range, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Two values built over different group parameters were combined.
    #[error("mismatched group parameter: n = {0} vs n = {1}")]
    MismatchedN(usize, usize),

    /// A matrix failed the equal-line-sum predicate.
    #[error("matrix is not semi-magic: {0}")]
    NotSemiMagic(String),

    /// A character-table row was requested by a label the table does not have.
    #[error("unknown row label: {0}")]
    UnknownRow(String),

    /// An enumeration would visit more tuples than the configured budget.
    #[error("enumeration budget exceeded: {needed} tuples > budget {budget}")]
    BudgetExceeded { needed: BigInt, budget: u64 },
}

pub type Result<T> = std::result::Result<T, DihedralError>;

impl DihedralError {
    /// Process exit code for the CLI: 2 for usage/parameter problems,
    /// 3 for exhausted enumeration budgets.
    pub fn exit_code(&self) -> i32 {
        match self {
            DihedralError::BudgetExceeded { .. } => 3,
            _ => 2,
        }
    }
}

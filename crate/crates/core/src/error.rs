use std::fmt;

use thiserror::Error;

/// Why a pair of line-sum tuples cannot be realized by a (0,1)-matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Row sums and column sums do not add up to the same total.
    TotalMismatch { row_total: u64, column_total: u64 },
    /// The `k`-th prefix (1-based) of the sorted column sums exceeds the
    /// same prefix of the conjugate tuple.
    Prefix {
        k: usize,
        column_prefix: u64,
        conjugate_prefix: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::TotalMismatch {
                row_total,
                column_total,
            } => write!(
                f,
                "total mismatch: column sums add to {column_total} but row sums add to {row_total}"
            ),
            Violation::Prefix {
                k,
                column_prefix,
                conjugate_prefix,
            } => write!(
                f,
                "prefix {k}: sorted column sums reach {column_prefix} > {conjugate_prefix} allowed by the conjugate tuple"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("infeasible line sums ({0})")]
    Infeasible(Violation),

    #[error("column functions are not identical: column {column} differs from column 1")]
    NotUniform { column: usize },

    #[error("row {row} has sum {value}, exceeding the bound {bound}")]
    BoundViolation { row: usize, value: usize, bound: usize },

    #[error("state budget of {limit} states exceeded")]
    StateBudgetExceeded { limit: u64 },

    #[error("{what} too large for exhaustive search: {size} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

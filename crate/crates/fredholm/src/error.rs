//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible shapes; the message names the offending operands.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A matrix entry was NaN or infinite.
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    /// The Jacobi sweep did not converge (should not happen at desk scale).
    #[error("SVD failed to converge on a {rows}x{cols} matrix")]
    SvdConvergence { rows: usize, cols: usize },

    /// A tolerance parameter was outside (0, 1).
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    /// Precondition of a product-zero operation violated.
    #[error("operator products do not vanish: |ST| = {norm_st:.3e}, |TS| = {norm_ts:.3e}, bound {bound:.3e}")]
    ProductNotZero {
        norm_st: f64,
        norm_ts: f64,
        bound: f64,
    },

    /// A construction-time consistency check failed beyond its tolerance.
    #[error("inconsistency in {check}: residual {residual:.3e} exceeds bound {bound:.3e}")]
    Inconsistency {
        check: String,
        residual: f64,
        bound: f64,
    },

    /// An experiment plan failed validation.
    #[error("invalid plan: {0}")]
    InvalidPlan(String),

    /// JSON input did not match the expected schema; `path` locates the offence.
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Numerical thresholds separating rank decisions from residual verdicts.

use serde::Serialize;

use crate::error::{Error, Result};

/// Rank and residual thresholds used by every dimension count and
/// identity check.
///
/// `rank_rtol` is relative: a singular value counts towards the rank when
/// it exceeds `rank_rtol * max(rows, cols) * sigma_max`. `residual_atol`
/// is the absolute scale multiplier for identity-check verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    pub rank_rtol: f64,
    pub residual_atol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rank_rtol: 1e-10,
            residual_atol: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(rank_rtol: f64, residual_atol: f64) -> Result<Self> {
        for (name, v) in [("rank_rtol", rank_rtol), ("residual_atol", residual_atol)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::InvalidTolerance(format!(
                    "{name} must lie strictly between 0 and 1, got {v}"
                )));
            }
        }
        Ok(Tolerance {
            rank_rtol,
            residual_atol,
        })
    }
}

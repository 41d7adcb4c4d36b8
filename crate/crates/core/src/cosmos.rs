//! Linear expansion of the cosmic three-sphere and the reference ur count.

use crate::{Error, Result};

/// Spatial curvature index of the S³ cosmos.
pub const CURVATURE_INDEX: i32 = 1;

/// Order-of-magnitude number of urs at the present epoch. This is a quoted
/// estimate, not something computed here.
pub const UR_COUNT_REFERENCE: f64 = 1e120;

pub const UR_COUNT_NOTE: &str =
    "estimated number of urs at the present epoch; finite at every epoch (open finitism)";

pub fn ur_count_reference() -> f64 {
    UR_COUNT_REFERENCE
}

/// `R(T) = R(0) + c·T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionModel {
    r0: f64,
    c: f64,
}

impl ExpansionModel {
    /// Needs `r0 ≥ 0` and `c > 0`, both finite.
    pub fn new(r0: f64, c: f64) -> Result<Self> {
        if !(r0.is_finite() && c.is_finite() && r0 >= 0.0 && c > 0.0) {
            return Err(Error::InvalidExpansion);
        }
        Ok(ExpansionModel { r0, c })
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Curvature radius at `epoch`.
    pub fn radius_at(&self, epoch: f64) -> Result<f64> {
        if epoch.is_nan() || epoch < 0.0 {
            return Err(Error::NegativeEpoch(epoch));
        }
        Ok(self.r0 + self.c * epoch)
    }
}

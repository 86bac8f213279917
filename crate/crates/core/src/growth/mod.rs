//! Length growth of curves under iteration, the crossing count `L` and the
//! spread of arcs in the strip `ℝ × [0,1]`, and hyperbolic-plane primitives
//! for linear tracing.

mod curve;
mod hyperbolic;
mod spread;

use thiserror::Error;

use crate::dynamics::DynamicsError;

pub use curve::{egr, iterate_refine, named_curve, EgrConfig, GrowthRow, PolyCurve, CURVE_NAMES};
pub use hyperbolic::{linear_tracing_estimate, Axis, BoundaryPoint, Mobius, MobiusType};
pub use spread::{
    crossing_count, gamma_independence_check, named_arc, random_arc, spread, tlen_growth_check, words_up_to,
    Arc, GammaCheck, SpreadRow, TlenReport, TlenSample, Transversal, ARC_NAMES,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GrowthError {
    #[error("DegenerateCurve: {0}")]
    DegenerateCurve(String),
    #[error("LengthOverflow: length {length:e} exceeds the cap at n = {n}")]
    LengthOverflow { n: u64, length: f64 },
    #[error("WrongType: {found} transformation has no axis")]
    WrongType { found: MobiusType },
    #[error("CommutationViolation: map moves T-orbits by {residual:e}")]
    CommutationViolation { residual: f64 },
    #[error("UnknownCurve: no curve or arc named '{0}'")]
    UnknownCurve(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
}

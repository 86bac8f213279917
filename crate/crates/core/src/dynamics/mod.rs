//! Rotation numbers and vectors, first-return maps, displacement sums and
//! fixed-point search for explicit lifts of circle, annulus and torus maps.

mod birkhoff;
mod fixed;
mod lift;
mod registry;
mod rotation;

use thiserror::Error;

pub use birkhoff::{birkhoff_displacement_sum, birkhoff_series, first_return, recurrence_witnesses};
pub use fixed::{interior_fixed_point_search, linear_displacement_detector, FixedPointCandidate};
pub use lift::{Lift, LiftKind, Point, EQUIVARIANCE_TOL};
pub use registry::{build_lift, LIFT_NAMES};
pub use rotation::{
    circle_fixed_points, mean_rotation_vector, projectivized_circle_map, rotation_number_circle,
    rotation_vector, EmpiricalMeasure, RotationReport, DEFAULT_TOL,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error("EquivarianceViolation: lift '{lift}' has deck residual {residual:e}")]
    EquivarianceViolation { lift: String, residual: f64 },
    #[error("BoundaryViolation: lift '{lift}' moves a boundary line by {residual:e}")]
    BoundaryViolation { lift: String, residual: f64 },
    #[error("MonotonicityViolation: lift '{lift}' decreases near x = {at}")]
    MonotonicityViolation { lift: String, at: f64 },
    #[error("SingularMatrix: determinant {det} is not positive")]
    SingularMatrix { det: f64 },
    #[error("NonConvergentSample: {} sample point(s) did not converge", points.len())]
    NonConvergentSample { points: Vec<Point> },
    #[error("NoReturn: orbit step {index} found no return within {steps} iterations")]
    NoReturn { index: usize, steps: u64 },
    #[error("WrongKind: lift '{lift}' is not a {expected} lift")]
    WrongKind { lift: String, expected: LiftKind },
    #[error("UnknownLift: no lift named '{0}'")]
    UnknownLift(String),
    #[error("MissingInverse: lift '{0}' has no inverse")]
    MissingInverse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

//! Exact arithmetic in `ℤ`, `ℤ[√2]` and `ℤ[φ]`, 2×2 matrices over those
//! rings, and the integer Heisenberg group.
//!
//! Ring coefficients are arbitrary precision ([`BigInt`]), so products never
//! wrap. The Heisenberg group uses fixed-width integers with checked
//! arithmetic and reports overflow as [`AlgebraError::Overflow`].

mod golden;
mod heis;
mod mat2;
mod quad;

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use golden::GoldenInt;
pub use heis::HeisElt;
pub use mat2::{Mat2, ProjMat2};
pub use quad::QuadInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(String),
}

/// Commutative ring with an exact embedding into `ℝ`.
///
/// `real_sign` is the sign of the element under that embedding; it is what
/// fixes the projective canonical form.
pub trait Ring:
    Clone + Debug + Eq + Ord + Hash + Send + Sync + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn real_sign(&self) -> Ordering;
    fn to_f64(&self) -> f64;
}

impl Ring for BigInt {
    fn real_sign(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

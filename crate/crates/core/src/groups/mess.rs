//! The group generated by the cat map `A = (2 1; 1 1)` and a translation
//! `T(x) = x + w` along the unstable direction of `A`.
//!
//! Elements are affine maps `x ↦ Aᵏx + t·w` with `t ∈ ℤ[φ]`. Since
//! `Aw = λw` for `λ = φ²`, composition is
//! `(k₁,t₁)·(k₂,t₂) = (k₁+k₂, t₁ + λ^{k₁} t₂)`. With `w = (1, φ−1)` the model
//! is faithful on the torus: `t·w ∈ ℤ²` forces `t = 0`, and `Aᵏ` has
//! infinite order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{parse_bigints, ModelError};
use crate::algebra::{AlgebraError, GoldenInt, Mat2};
use crate::words::{Certificate, GroupOracle, Witness, Word, WordError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MessElt {
    pub k: i64,
    pub t: GoldenInt,
}

impl MessElt {
    pub fn new(k: i64, t: GoldenInt) -> Self {
        Self { k, t }
    }

    pub fn identity() -> Self {
        Self::new(0, GoldenInt::zero())
    }

    pub fn mul(&self, rhs: &MessElt) -> Result<MessElt, AlgebraError> {
        let k = self.k.checked_add(rhs.k).ok_or(AlgebraError::Overflow("Mess product"))?;
        let t = &self.t + &(&GoldenInt::lambda_pow(self.k) * &rhs.t);
        Ok(MessElt { k, t })
    }

    /// `(−k, −λ⁻ᵏ t)`
    pub fn inv(&self) -> Result<MessElt, AlgebraError> {
        let k = self.k.checked_neg().ok_or(AlgebraError::Overflow("Mess inverse"))?;
        let t = -(&GoldenInt::lambda_pow(k) * &self.t);
        Ok(MessElt { k, t })
    }

    /// Action on the torus `ℝ²/ℤ²` in floating point, for cross-checks.
    pub fn apply_to_torus(&self, p: [f64; 2]) -> [f64; 2] {
        let m = if self.k >= 0 {
            Mat2::<BigInt>::new(2.into(), 1.into(), 1.into(), 1.into()).pow(self.k as u64)
        } else {
            Mat2::<BigInt>::new(1.into(), (-1).into(), (-1).into(), 2.into()).pow(self.k.unsigned_abs())
        };
        let m = m.to_f64();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let t = self.t.a.to_f64().unwrap_or(f64::NAN) + self.t.b.to_f64().unwrap_or(f64::NAN) * phi;
        let w = [1.0, phi - 1.0];
        let x = m[0][0] * p[0] + m[0][1] * p[1] + t * w[0];
        let y = m[1][0] * p[0] + m[1][1] * p[1] + t * w[1];
        [x.rem_euclid(1.0), y.rem_euclid(1.0)]
    }
}

/// Canonical key `(k, t.a, t.b)`, printed as `k,a,b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MessKey(pub i64, pub BigInt, pub BigInt);

impl fmt::Display for MessKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0, self.1, self.2)
    }
}

/// Generators `A = (1, 0)` and `T = (0, 1)`.
#[derive(Clone, Debug)]
pub struct MessGroup {
    gens: [MessElt; 2],
}

impl Default for MessGroup {
    fn default() -> Self {
        Self::new()
    }
}

impl MessGroup {
    pub const A: usize = 0;
    pub const T: usize = 1;

    pub fn new() -> Self {
        Self {
            gens: [
                MessElt::new(1, GoldenInt::zero()),
                MessElt::new(0, GoldenInt::new(1, 0)),
            ],
        }
    }
}

impl GroupOracle for MessGroup {
    type Elem = MessElt;
    type Key = MessKey;

    fn name(&self) -> &str {
        "mess"
    }

    fn generators(&self) -> &[MessElt] {
        &self.gens
    }

    fn identity(&self) -> MessElt {
        MessElt::identity()
    }

    fn multiply(&self, a: &MessElt, b: &MessElt) -> Result<MessElt, AlgebraError> {
        a.mul(b)
    }

    fn invert(&self, a: &MessElt) -> Result<MessElt, AlgebraError> {
        a.inv()
    }

    fn key(&self, a: &MessElt) -> MessKey {
        MessKey(a.k, a.t.a.clone(), a.t.b.clone())
    }

    fn parse_key(&self, s: &str) -> Result<MessKey, WordError> {
        let [k, a, b] = parse_bigints::<3>(s)?;
        let k = k.to_i64().ok_or_else(|| WordError::InvalidKey(format!("k out of range in '{s}'")))?;
        Ok(MessKey(k, a, b))
    }
}

/// `tr Aⁿ` by the recurrence `t₀ = 2, t₁ = 3, t_{k+1} = 3t_k − t_{k−1}`.
pub fn trace_power(n: u64) -> BigInt {
    let (mut prev, mut cur) = (BigInt::from(2), BigInt::from(3));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = BigInt::from(3) * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `tr Aⁿ` from the matrix power directly.
pub fn trace_power_matrix(n: u64) -> BigInt {
    Mat2::<BigInt>::new(2.into(), 1.into(), 1.into(), 1.into()).pow(n).trace()
}

/// `(A⁻ⁿTAⁿ)(AⁿTA⁻ⁿ)`, a word of `4n + 2` tokens for `T^{tr Aⁿ}`.
pub fn mess_certificate(n: u64) -> Result<Certificate, ModelError> {
    if n == 0 {
        return Err(ModelError::InvalidArgument("n must be at least 1".into()));
    }
    let k = i64::try_from(n).map_err(|_| AlgebraError::Overflow("Mess certificate"))?;
    let (a, t) = (MessGroup::A, MessGroup::T);
    let word = Word::product(&[
        Word::power(a, -k),
        Word::power(t, 1),
        Word::power(a, k),
        Word::power(a, k),
        Word::power(t, 1),
        Word::power(a, -k),
    ]);
    let target = MessElt::new(0, GoldenInt::new(trace_power(n), 0));
    Ok(Certificate::build(&MessGroup::new(), n, &target, word))
}

pub fn mess_witness(n: u64) -> Result<Witness, ModelError> {
    Ok(Witness { power: trace_power(n), certificate: mess_certificate(n)? })
}

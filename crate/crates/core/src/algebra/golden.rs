use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::quad::sign_with_surd;
use super::Ring;

/// Element `a + bφ` of `ℤ[φ]`, where `φ = (1 + √5)/2` and `φ² = φ + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoldenInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into() }
    }

    pub fn phi() -> Self {
        Self::new(0, 1)
    }

    /// `φ² = 1 + φ`, the expanding eigenvalue of `(2 1; 1 1)`.
    pub fn lambda() -> Self {
        Self::new(1, 1)
    }

    /// `φ⁻² = 2 − φ`.
    pub fn lambda_inv() -> Self {
        Self::new(2, -1)
    }

    /// Galois conjugate, `φ ↦ 1 − φ`.
    pub fn conj(&self) -> Self {
        Self { a: &self.a + &self.b, b: -&self.b }
    }

    /// `a² + ab − b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_one() {
            Some(self.conj())
        } else if (-&n).is_one() {
            Some(-self.conj())
        } else {
            None
        }
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `λᵏ` for `λ = φ²` and any integer `k`.
    pub fn lambda_pow(k: i64) -> Self {
        if k >= 0 {
            Self::lambda().pow(k as u64)
        } else {
            Self::lambda_inv().pow(k.unsigned_abs())
        }
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}φ", self.a, -&self.b)
        } else {
            write!(f, "{}+{}φ", self.a, self.b)
        }
    }
}

impl<'a> Add<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    /// `(a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ`
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        let bd = &self.b * &rhs.b;
        GoldenInt {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: GoldenInt) -> GoldenInt {
        &self + &rhs
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: GoldenInt) -> GoldenInt {
        &self - &rhs
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: GoldenInt) -> GoldenInt {
        &self * &rhs
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { a: -self.a, b: -self.b }
    }
}

impl Zero for GoldenInt {
    fn zero() -> Self {
        Self::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenInt {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

impl Ring for GoldenInt {
    fn real_sign(&self) -> Ordering {
        // a + bφ = ((2a + b) + b√5) / 2
        let p = BigInt::from(2) * &self.a + &self.b;
        sign_with_surd(&p, &self.b, 5)
    }

    fn to_f64(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64() + self.b.to_f64() * phi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GoldenInt {
        GoldenInt::new(a, b)
    }

    #[test]
    fn defining_relation() {
        assert_eq!(GoldenInt::phi() * GoldenInt::phi(), g(1, 1));
        // φ² · φ⁻² with φ⁻¹ = φ − 1
        let phi_inv = g(-1, 1);
        assert_eq!(&phi_inv * &phi_inv, GoldenInt::lambda_inv());
        assert_eq!(g(1, 1) * g(2, -1), g(1, 0));
        assert_eq!(g(0, 0) * g(13, -8), g(0, 0));
    }

    #[test]
    fn units_by_norm() {
        for a in -9..=9i64 {
            for b in -9..=9i64 {
                let x = g(a, b);
                let unit = (a * a + a * b - b * b).abs() == 1;
                assert_eq!(x.is_unit(), unit);
                if let Some(inv) = x.inverse() {
                    assert_eq!(&x * &inv, GoldenInt::one());
                } else {
                    assert!(!unit);
                }
            }
        }
    }

    #[test]
    fn lambda_pow_negative() {
        for k in -6..=6 {
            let p = GoldenInt::lambda_pow(k);
            assert_eq!(&p * &GoldenInt::lambda_pow(-k), GoldenInt::one());
        }
        // λ + λ⁻¹ = tr A = 3
        assert_eq!(GoldenInt::lambda() + GoldenInt::lambda_inv(), g(3, 0));
    }

    #[test]
    fn real_embedding_injective_on_box() {
        let mut vals = Vec::new();
        for a in -20..=20 {
            for b in -20..=20 {
                vals.push(g(a, b).to_f64());
            }
        }
        vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let min_gap = vals.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        assert!(min_gap > 1e-6, "min gap {min_gap}");
    }

    #[test]
    fn exact_sign_matches_float() {
        for a in -15..=15 {
            for b in -15..=15 {
                let x = g(a, b);
                if x.is_zero() {
                    continue;
                }
                let expect = x.to_f64().partial_cmp(&0.0).unwrap();
                assert_eq!(x.real_sign(), expect, "{x}");
            }
        }
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Ring;

/// Element `a + b√2` of `ℤ[√2]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into() }
    }

    /// `1 + √2`, the fundamental unit.
    pub fn lambda() -> Self {
        Self::new(1, 1)
    }

    /// `√2 − 1 = (1 + √2)⁻¹`.
    pub fn lambda_inv() -> Self {
        Self::new(-1, 1)
    }

    /// Galois conjugate `a − b√2`.
    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b }
    }

    /// `a² − 2b²`, equal to `self · conj(self)`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(2) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
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
}

/// Sign of `p + q√d` for a positive non-square `d`, computed exactly.
pub(super) fn sign_with_surd(p: &BigInt, q: &BigInt, d: u32) -> Ordering {
    let sp = p.signum();
    let sq = q.signum();
    if sq.is_zero() {
        return sp.cmp(&BigInt::zero());
    }
    if sp.is_zero() || sp == sq {
        return sq.cmp(&BigInt::zero());
    }
    // opposite signs: the larger magnitude wins
    let pp = p * p;
    let qq = BigInt::from(d) * q * q;
    match pp.cmp(&qq) {
        Ordering::Greater => sp.cmp(&BigInt::zero()),
        _ => sq.cmp(&BigInt::zero()),
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}√2", self.a, -&self.b)
        } else {
            write!(f, "{}+{}√2", self.a, self.b)
        }
    }
}

impl<'a> Add<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    /// `(a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2`
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        let two_bd = BigInt::from(2) * &self.b * &rhs.b;
        QuadInt {
            a: &self.a * &rhs.a + two_bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        &self + &rhs
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        &self - &rhs
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        &self * &rhs
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { a: -self.a, b: -self.b }
    }
}

impl Zero for QuadInt {
    fn zero() -> Self {
        Self::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadInt {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

impl Ring for QuadInt {
    fn real_sign(&self) -> Ordering {
        sign_with_surd(&self.a, &self.b, 2)
    }

    fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * std::f64::consts::SQRT_2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> QuadInt {
        QuadInt::new(a, b)
    }

    #[test]
    fn products_from_hand_expansion() {
        assert_eq!(q(3, 2) * q(3, -2), q(1, 0));
        assert_eq!(q(1, 0) * q(-7, 11), q(-7, 11));
        assert_eq!(q(1, 1) * q(1, 1), q(3, 2));
        assert_eq!(QuadInt::lambda() * QuadInt::lambda_inv(), QuadInt::one());
    }

    #[test]
    fn norm_is_rational() {
        for (a, b) in [(3, 2), (-5, 7), (0, 1), (17, 12)] {
            let x = q(a, b);
            let n = &x * &x.conj();
            assert!(n.is_rational());
            assert_eq!(n.a, x.norm());
        }
    }

    #[test]
    fn exact_sign_matches_float() {
        for a in -12..=12 {
            for b in -12..=12 {
                let x = q(a, b);
                let f = a as f64 + b as f64 * std::f64::consts::SQRT_2;
                let expect = f.partial_cmp(&0.0).unwrap();
                assert_eq!(x.real_sign(), expect, "{x}");
            }
        }
    }

    #[test]
    fn lambda_powers() {
        assert_eq!(QuadInt::lambda().pow(2), q(3, 2));
        assert_eq!(QuadInt::lambda().pow(4), q(17, 12));
        assert_eq!(QuadInt::lambda().pow(6), q(99, 70));
    }
}

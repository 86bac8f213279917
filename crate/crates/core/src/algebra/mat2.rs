use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;


use super::{AlgebraError, Ring};

/// 2×2 matrix `(m11 m12; m21 m22)` over an exact ring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2<R> {
    pub m11: R,
    pub m12: R,
    pub m21: R,
    pub m22: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(m11: R, m12: R, m21: R, m22: R) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        Self::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn diag(d1: R, d2: R) -> Self {
        Self::new(d1, R::zero(), R::zero(), d2)
    }

    pub fn det(&self) -> R {
        self.m11.clone() * self.m22.clone() - self.m12.clone() * self.m21.clone()
    }

    pub fn trace(&self) -> R {
        self.m11.clone() + self.m22.clone()
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat2<S> {
        Mat2::new(f(&self.m11), f(&self.m12), f(&self.m21), f(&self.m22))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    /// Inverse through the adjugate. Only unimodular matrices are invertible
    /// over the ring; since `det = ±1`, dividing by `det` is multiplying by it.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let det = self.det();
        let unit = if det == R::one() {
            R::one()
        } else if det == -R::one() {
            -R::one()
        } else {
            return Err(AlgebraError::NotUnimodular(format!("{det:?}")));
        };
        Ok(Self::new(
            self.m22.clone() * unit.clone(),
            -self.m12.clone() * unit.clone(),
            -self.m21.clone() * unit.clone(),
            self.m11.clone() * unit,
        ))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> [[f64; 2]; 2] {
        [
            [self.m11.to_f64(), self.m12.to_f64()],
            [self.m21.to_f64(), self.m22.to_f64()],
        ]
    }
}

impl<'a, R: Ring> Mul<&'a Mat2<R>> for &'a Mat2<R> {
    type Output = Mat2<R>;
    fn mul(self, rhs: &Mat2<R>) -> Mat2<R> {
        let (a, b) = (self, rhs);
        Mat2::new(
            a.m11.clone() * b.m11.clone() + a.m12.clone() * b.m21.clone(),
            a.m11.clone() * b.m12.clone() + a.m12.clone() * b.m22.clone(),
            a.m21.clone() * b.m11.clone() + a.m22.clone() * b.m21.clone(),
            a.m21.clone() * b.m12.clone() + a.m22.clone() * b.m22.clone(),
        )
    }
}

impl<R: Ring> Mul for Mat2<R> {
    type Output = Mat2<R>;
    fn mul(self, rhs: Mat2<R>) -> Mat2<R> {
        &self * &rhs
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.m11, self.m12, self.m21, self.m22)
    }
}

/// A matrix modulo `±I`, stored in canonical sign form: the first nonzero
/// entry in row-major order is positive as a real number.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjMat2<R>(Mat2<R>);

impl<R: Ring> ProjMat2<R> {
    pub fn canonicalize(m: Mat2<R>) -> Self {
        let first = m.entries().into_iter().find(|e| !e.is_zero()).map(|e| e.real_sign());
        match first {
            Some(Ordering::Less) => Self(m.neg()),
            _ => Self(m),
        }
    }

    pub fn identity() -> Self {
        Self(Mat2::identity())
    }

    pub fn matrix(&self) -> &Mat2<R> {
        &self.0
    }

    pub fn into_matrix(self) -> Mat2<R> {
        self.0
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::canonicalize(&self.0 * &rhs.0)
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        Ok(Self::canonicalize(self.0.inverse()?))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for ProjMat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", self.0)
    }
}

//! Affine maps of the plane commuting with `(x, y) ↦ (x + α, y)`.
//!
//! `α` is carried as a formal symbol: translations live in `ℚ + ℚα`, so the
//! commutator identity and the compatibility with the quotient are checked
//! without any tolerance. Floats appear only in the rotation number estimate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `p + q·α` with rational `p`, `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalReal {
    pub p: BigRational,
    pub q: BigRational,
}

impl FormalReal {
    pub fn rational(p: BigRational) -> Self {
        Self { p, q: BigRational::zero() }
    }

    pub fn int(p: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(p)))
    }

    pub fn alpha() -> Self {
        Self { p: BigRational::zero(), q: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { p: &self.p * c, q: &self.q * c }
    }
}

impl fmt::Display for FormalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}+{}α", self.p, self.q)
        }
    }
}

impl Add for &FormalReal {
    type Output = FormalReal;
    fn add(self, r: &FormalReal) -> FormalReal {
        FormalReal { p: &self.p + &r.p, q: &self.q + &r.q }
    }
}

impl Sub for &FormalReal {
    type Output = FormalReal;
    fn sub(self, r: &FormalReal) -> FormalReal {
        FormalReal { p: &self.p - &r.p, q: &self.q - &r.q }
    }
}

impl Neg for &FormalReal {
    type Output = FormalReal;
    fn neg(self) -> FormalReal {
        FormalReal { p: -&self.p, q: -&self.q }
    }
}

impl Mul<&FormalReal> for &BigRational {
    type Output = FormalReal;
    fn mul(self, r: &FormalReal) -> FormalReal {
        r.scale(self)
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `v ↦ L v + t` with rational `L` and translation in `ℚ + ℚα`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub linear: [[BigRational; 2]; 2],
    pub shift: [FormalReal; 2],
}

impl AffineMap {
    pub fn new(linear: [[i64; 2]; 2], shift: [FormalReal; 2]) -> Self {
        let l = linear.map(|row| row.map(rat));
        Self { linear: l, shift }
    }

    pub fn identity() -> Self {
        Self::new([[1, 0], [0, 1]], [FormalReal::zero(), FormalReal::zero()])
    }

    pub fn translation(dx: FormalReal, dy: FormalReal) -> Self {
        Self::new([[1, 0], [0, 1]], [dx, dy])
    }

    pub fn apply(&self, v: &[FormalReal; 2]) -> [FormalReal; 2] {
        let l = &self.linear;
        let row = |i: usize| &(&(&l[i][0] * &v[0]) + &(&l[i][1] * &v[1])) + &self.shift[i];
        [row(0), row(1)]
    }

    pub fn apply_f64(&self, v: [f64; 2], alpha: f64) -> [f64; 2] {
        use num_traits::ToPrimitive;
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        let s = |t: &FormalReal| f(&t.p) + f(&t.q) * alpha;
        let l = &self.linear;
        [
            f(&l[0][0]) * v[0] + f(&l[0][1]) * v[1] + s(&self.shift[0]),
            f(&l[1][0]) * v[0] + f(&l[1][1]) * v[1] + s(&self.shift[1]),
        ]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let a = &self.linear;
        let b = &other.linear;
        let mut linear = [[rat(0), rat(0)], [rat(0), rat(0)]];
        for (i, row) in linear.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
            }
        }
        let moved = self.apply(&other.shift);
        AffineMap { linear, shift: moved }
    }

    pub fn inverse(&self) -> Option<AffineMap> {
        let l = &self.linear;
        let det = &l[0][0] * &l[1][1] - &l[0][1] * &l[1][0];
        if det.is_zero() {
            return None;
        }
        let inv = [
            [&l[1][1] / &det, -&l[0][1] / &det],
            [-&l[1][0] / &det, &l[0][0] / &det],
        ];
        let t = &self.shift;
        let shift = [
            -&(&(&inv[0][0] * &t[0]) + &(&inv[0][1] * &t[1])),
            -&(&(&inv[1][0] * &t[0]) + &(&inv[1][1] * &t[1])),
        ];
        Some(AffineMap { linear: inv, shift })
    }

    /// `[a, b] = a ∘ b ∘ a⁻¹ ∘ b⁻¹`, so `b⁻¹` acts first.
    pub fn commutator(&self, other: &AffineMap) -> Option<AffineMap> {
        Some(self.compose(other).compose(&self.inverse()?).compose(&other.inverse()?))
    }
}

/// The maps `G(x,y) = (x+y, y)`, `H(x,y) = (x, y+1)`, `F(x,y) = (x+1, y)` on
/// the plane, with the quotient `(x,y) ~ (x+α, y)`.
#[derive(Clone, Debug)]
pub struct PlaneAction {
    pub g: AffineMap,
    pub h: AffineMap,
    pub f: AffineMap,
    pub alpha: f64,
}

/// The action for modulus `α`. Irrationality of `α` cannot be checked from a
/// float and is left to the caller.
pub fn calegari_action(alpha: f64) -> PlaneAction {
    let z = FormalReal::zero;
    PlaneAction {
        g: AffineMap::new([[1, 1], [0, 1]], [z(), z()]),
        h: AffineMap::translation(z(), FormalReal::int(1)),
        f: AffineMap::translation(FormalReal::int(1), z()),
        alpha,
    }
}

impl PlaneAction {
    pub fn quotient_translation() -> AffineMap {
        AffineMap::translation(FormalReal::alpha(), FormalReal::zero())
    }

    /// `[G, H] = F` as affine maps.
    pub fn commutator_identity_holds(&self) -> bool {
        self.g.commutator(&self.h).as_ref() == Some(&self.f)
    }

    /// Every map commutes with `(x, y) ↦ (x + α, y)`, symbolically in `α`.
    pub fn quotient_compatible(&self) -> bool {
        let tau = Self::quotient_translation();
        [&self.g, &self.h, &self.f].iter().all(|m| m.compose(&tau) == tau.compose(m))
    }

    /// Rotation number of `F` on the fiber `y = 0`, the circle `ℝ/αℤ`
    /// rescaled to unit length, from an orbit of length `n`.
    pub fn fiber_rotation_number(&self, n: u64) -> f64 {
        let mut v = [0.0, 0.0];
        for _ in 0..n {
            v = self.f.apply_f64(v, self.alpha);
        }
        (v[0] / self.alpha / n as f64).rem_euclid(1.0)
    }
}

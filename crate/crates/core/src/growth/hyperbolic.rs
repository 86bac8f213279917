use std::fmt;

use num_complex::Complex64;

use super::GrowthError;
use crate::table::{with_running_min, RatioRow};

/// Tolerance on `| |tr| − 2 |` for the parabolic class.
pub const TRACE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MobiusType {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl fmt::Display for MobiusType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MobiusType::Elliptic => "elliptic",
            MobiusType::Parabolic => "parabolic",
            MobiusType::Hyperbolic => "hyperbolic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryPoint {
    Finite(f64),
    Infinity,
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(x) => write!(f, "{x}"),
            BoundaryPoint::Infinity => f.write_str("inf"),
        }
    }
}

/// `z ↦ (az + b)/(cz + d)` on the upper half-plane, scaled to `det = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mobius {
    m: [[f64; 2]; 2],
}

impl Mobius {
    pub fn new(m: [[f64; 2]; 2]) -> Result<Self, GrowthError> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if !(det > 0.0) {
            return Err(GrowthError::InvalidArgument(format!("determinant {det} is not positive")));
        }
        let s = det.sqrt();
        Ok(Self { m: m.map(|row| row.map(|x| x / s)) })
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        self.m
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn classify(&self) -> MobiusType {
        let t = self.trace().abs();
        if (t - 2.0).abs() <= TRACE_TOL {
            MobiusType::Parabolic
        } else if t < 2.0 {
            MobiusType::Elliptic
        } else {
            MobiusType::Hyperbolic
        }
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        let [[a, b], [c, d]] = self.m;
        (z * a + b) / (z * c + d)
    }

    pub fn compose(&self, other: &Mobius) -> Mobius {
        let (a, b) = (self.m, other.m);
        let mut m = [[0.0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mobius { m }
    }

    pub fn inverse(&self) -> Mobius {
        let [[a, b], [c, d]] = self.m;
        Mobius { m: [[d, -b], [-c, a]] }
    }

    /// `2·arccosh(|tr|/2)`, zero unless hyperbolic.
    pub fn translation_length(&self) -> f64 {
        match self.classify() {
            MobiusType::Hyperbolic => 2.0 * (self.trace().abs() / 2.0).acosh(),
            _ => 0.0,
        }
    }

    /// Boundary fixed points `(source, sink)` of a hyperbolic element.
    pub fn axis_endpoints(&self) -> Result<(BoundaryPoint, BoundaryPoint), GrowthError> {
        let kind = self.classify();
        if kind != MobiusType::Hyperbolic {
            return Err(GrowthError::WrongType { found: kind });
        }
        let [[a, b], [c, d]] = self.m;
        if c == 0.0 {
            // z ↦ (a/d) z + b/d; ∞ attracts iff |a/d| > 1
            let finite = BoundaryPoint::Finite(b / (d - a));
            return Ok(if (a / d).abs() > 1.0 {
                (finite, BoundaryPoint::Infinity)
            } else {
                (BoundaryPoint::Infinity, finite)
            });
        }
        let disc = ((a - d) * (a - d) + 4.0 * b * c).sqrt();
        let roots = [(a - d - disc) / (2.0 * c), (a - d + disc) / (2.0 * c)];
        // derivative at a fixed point is 1/(cz + d)²
        let attracting = |z: f64| (c * z + d).abs() > 1.0;
        let (src, snk) = if attracting(roots[1]) { (roots[0], roots[1]) } else { (roots[1], roots[0]) };
        Ok((BoundaryPoint::Finite(src), BoundaryPoint::Finite(snk)))
    }
}

/// Axis of a hyperbolic deck transformation `T`, parametrised so that `T`
/// acts as `s ↦ s + 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    pub deck: Mobius,
    pub source: BoundaryPoint,
    pub sink: BoundaryPoint,
    pub length: f64,
}

impl Axis {
    pub fn of(deck: Mobius) -> Result<Self, GrowthError> {
        let (source, sink) = deck.axis_endpoints()?;
        Ok(Self { deck, source, sink, length: deck.translation_length() })
    }

    /// Parameter of the orthogonal projection of `z` to the axis. After a
    /// Möbius map sending source to 0 and sink to ∞ this is `log|w|`, read
    /// off here without forming the map.
    pub fn project(&self, z: Complex64) -> f64 {
        let mut s = 0.0;
        if let BoundaryPoint::Finite(p) = self.source {
            s += (z - p).norm().ln();
        }
        if let BoundaryPoint::Finite(q) = self.sink {
            s -= (z - q).norm().ln();
        }
        s / self.length
    }
}

fn probe_points() -> Vec<Complex64> {
    let mut v = Vec::new();
    for x in [-2.0, -0.5, 0.0, 0.7, 3.0] {
        for y in [0.25, 1.0, 2.5] {
            v.push(Complex64::new(x, y));
        }
    }
    v
}

/// `|p(hⁿz) − p(z)|/n` with its running minimum, for `h` commuting with the
/// deck transformation of the axis.
pub fn linear_tracing_estimate(
    axis: &Axis,
    h: impl Fn(Complex64) -> Complex64,
    z: Complex64,
    n_max: u64,
) -> Result<Vec<RatioRow>, GrowthError> {
    let t = axis.deck;
    let residual = probe_points()
        .into_iter()
        .map(|w| {
            let (a, b) = (h(t.apply(w)), t.apply(h(w)));
            (a - b).norm() / (1.0 + a.norm())
        })
        .fold(0.0, f64::max);
    if !(residual < 1e-9) {
        return Err(GrowthError::CommutationViolation { residual });
    }
    let p0 = axis.project(z);
    let mut w = z;
    Ok(with_running_min((1..=n_max).map(|n| {
        w = h(w);
        (n, (axis.project(w) - p0).abs() / n as f64)
    })))
}

use std::fmt;
use std::sync::Arc;

use super::DynamicsError;

/// A point of the universal cover. Circle lifts use the first coordinate and
/// carry the second along unchanged.
pub type Point = [f64; 2];

type MapFn = Arc<dyn Fn(Point) -> Point + Send + Sync>;

/// Residual allowed in the deck-equivariance and boundary checks.
pub const EQUIVARIANCE_TOL: f64 = 1e-9;

const GRID: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LiftKind {
    /// `ℝ → ℝ`, deck group `ℤ`.
    Circle,
    /// `ℝ × [0,1]`, deck group `ℤ` acting on the first coordinate.
    Annulus,
    /// `ℝ²`, deck group `ℤ²`.
    Torus,
}

impl fmt::Display for LiftKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftKind::Circle => "circle",
            LiftKind::Annulus => "annulus",
            LiftKind::Torus => "torus",
        })
    }
}

/// A map of the universal cover together with its deck action.
///
/// The contract is `F(p + m) = F(p) + D·m` for deck vectors `m`. For lifts
/// of maps isotopic to the identity `D` is the identity; a lift of a toral
/// automorphism `A` has `D = A`.
#[derive(Clone)]
pub struct Lift {
    name: String,
    kind: LiftKind,
    deck: [[i64; 2]; 2],
    map: MapFn,
    inverse: Option<MapFn>,
    affine: bool,
}

impl fmt::Debug for Lift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lift")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("deck", &self.deck)
            .field("affine", &self.affine)
            .finish()
    }
}

impl Lift {
    pub fn new(name: impl Into<String>, kind: LiftKind, map: impl Fn(Point) -> Point + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            kind,
            deck: [[1, 0], [0, 1]],
            map: Arc::new(map),
            inverse: None,
            affine: false,
        }
    }

    pub fn with_deck(mut self, deck: [[i64; 2]; 2]) -> Self {
        self.deck = deck;
        self
    }

    pub fn with_inverse(mut self, inv: impl Fn(Point) -> Point + Send + Sync + 'static) -> Self {
        self.inverse = Some(Arc::new(inv));
        self
    }

    /// Marks the map as affine: images of polylines are then exact
    /// vertexwise and need no refinement.
    pub fn affine(mut self) -> Self {
        self.affine = true;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> LiftKind {
        self.kind
    }

    pub fn deck(&self) -> [[i64; 2]; 2] {
        self.deck
    }

    pub fn is_affine(&self) -> bool {
        self.affine
    }

    pub fn apply(&self, p: Point) -> Point {
        (self.map)(p)
    }

    pub fn apply_inverse(&self, p: Point) -> Option<Point> {
        self.inverse.as_ref().map(|g| g(p))
    }

    pub fn has_inverse(&self) -> bool {
        self.inverse.is_some()
    }

    /// The inverse lift, if one was supplied. Its deck action is `D⁻¹`.
    pub fn inverse(&self) -> Result<Lift, DynamicsError> {
        let inv = self.inverse.clone().ok_or_else(|| DynamicsError::MissingInverse(self.name.clone()))?;
        let [[a, b], [c, d]] = self.deck;
        let det = a * d - b * c;
        if det.abs() != 1 {
            return Err(DynamicsError::InvalidArgument(format!("deck action of '{}' is not invertible", self.name)));
        }
        Ok(Lift {
            name: format!("{}^-1", self.name),
            kind: self.kind,
            deck: [[d * det, -b * det], [-c * det, a * det]],
            map: inv,
            inverse: Some(self.map.clone()),
            affine: self.affine,
        })
    }

    pub fn iterate(&self, mut p: Point, n: u64) -> Point {
        for _ in 0..n {
            p = self.apply(p);
        }
        p
    }

    /// `p, F(p), …, Fⁿ(p)`.
    pub fn orbit(&self, p: Point, n: u64) -> Vec<Point> {
        let mut out = Vec::with_capacity(n as usize + 1);
        let mut q = p;
        out.push(q);
        for _ in 0..n {
            q = self.apply(q);
            out.push(q);
        }
        out
    }

    pub fn deck_image(&self, m: [i64; 2]) -> [i64; 2] {
        let d = self.deck;
        [d[0][0] * m[0] + d[0][1] * m[1], d[1][0] * m[0] + d[1][1] * m[1]]
    }

    pub fn deck_generators(&self) -> Vec<[i64; 2]> {
        match self.kind {
            LiftKind::Circle | LiftKind::Annulus => vec![[1, 0]],
            LiftKind::Torus => vec![[1, 0], [0, 1]],
        }
    }

    /// Reduces the periodic coordinates to `[0, 1)`.
    pub fn project(&self, p: Point) -> Point {
        match self.kind {
            LiftKind::Torus => [p[0].rem_euclid(1.0), p[1].rem_euclid(1.0)],
            _ => [p[0].rem_euclid(1.0), p[1]],
        }
    }

    fn sample_grid(&self) -> Vec<Point> {
        let ys: Vec<f64> = match self.kind {
            LiftKind::Annulus => (0..GRID).map(|j| j as f64 / (GRID - 1) as f64).collect(),
            _ => (0..GRID).map(|j| j as f64 / GRID as f64).collect(),
        };
        let mut pts = Vec::with_capacity(GRID * GRID);
        for i in 0..GRID {
            for &y in &ys {
                pts.push([i as f64 / GRID as f64, y]);
            }
        }
        pts
    }

    /// Largest `‖F(p ± m) − F(p) ∓ D·m‖∞` over the sample grid and the deck
    /// generators `m`, and `‖F(F⁻¹(p)) − p‖∞` when an inverse is present.
    pub fn equivariance_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for p in self.sample_grid() {
            let fp = self.apply(p);
            for m in self.deck_generators() {
                let dm = self.deck_image(m);
                for s in [1.0, -1.0] {
                    let q = [p[0] + s * m[0] as f64, p[1] + s * m[1] as f64];
                    let fq = self.apply(q);
                    for k in 0..2 {
                        worst = worst.max((fq[k] - fp[k] - s * dm[k] as f64).abs());
                    }
                }
            }
            if let Some(inv) = &self.inverse {
                let back = self.apply(inv(p));
                worst = worst.max((back[0] - p[0]).abs()).max((back[1] - p[1]).abs());
            }
        }
        worst
    }

    /// How far the boundary lines `y = 0` and `y = 1` are moved off
    /// themselves.
    pub fn boundary_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..GRID {
            let x = i as f64 / GRID as f64;
            worst = worst.max(self.apply([x, 0.0])[1].abs());
            worst = worst.max((self.apply([x, 1.0])[1] - 1.0).abs());
        }
        worst
    }

    /// Whether the strip `ℝ × [0,1]` is preserved with its boundary lines,
    /// so the map also descends to the annulus.
    pub fn preserves_strip(&self) -> bool {
        self.kind != LiftKind::Circle && self.boundary_residual() < EQUIVARIANCE_TOL
    }

    pub fn check_contract(&self) -> Result<(), DynamicsError> {
        let residual = self.equivariance_residual();
        if !(residual < EQUIVARIANCE_TOL) {
            return Err(DynamicsError::EquivarianceViolation { lift: self.name.clone(), residual });
        }
        if self.kind == LiftKind::Annulus {
            let residual = self.boundary_residual();
            if !(residual < EQUIVARIANCE_TOL) {
                return Err(DynamicsError::BoundaryViolation { lift: self.name.clone(), residual });
            }
        }
        Ok(())
    }
}

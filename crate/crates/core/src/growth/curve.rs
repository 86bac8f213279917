use super::GrowthError;
use crate::dynamics::{Lift, Point};

/// Polyline lift of a curve. A closed curve lists one period: its last
/// vertex is the first plus an integer vector.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCurve {
    vertices: Vec<Point>,
    closed: bool,
}

const CLOSURE_TOL: f64 = 1e-9;

pub(crate) fn seg_len(p: Point, q: Point) -> f64 {
    (q[0] - p[0]).hypot(q[1] - p[1])
}

/// Splits every segment into equal pieces of length at most `max_seg`.
pub(crate) fn subdivide(vertices: &[Point], max_seg: f64) -> Vec<Point> {
    let mut out = Vec::with_capacity(vertices.len());
    for w in vertices.windows(2) {
        let (p, q) = (w[0], w[1]);
        let k = (seg_len(p, q) / max_seg).ceil().max(1.0) as usize;
        for i in 0..k {
            let t = i as f64 / k as f64;
            out.push([p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]);
        }
    }
    if let Some(last) = vertices.last() {
        out.push(*last);
    }
    out
}

impl PolyCurve {
    pub fn new(vertices: Vec<Point>, closed: bool) -> Result<Self, GrowthError> {
        if vertices.len() < 2 {
            return Err(GrowthError::DegenerateCurve("need at least two vertices".into()));
        }
        if let Some(i) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(GrowthError::DegenerateCurve(format!("vertices {i} and {} coincide", i + 1)));
        }
        if closed {
            let (a, b) = (vertices[0], vertices[vertices.len() - 1]);
            for k in 0..2 {
                let d = b[k] - a[k];
                if (d - d.round()).abs() > CLOSURE_TOL {
                    return Err(GrowthError::DegenerateCurve(format!("closure offset {d} is not an integer")));
                }
            }
        }
        Ok(Self { vertices, closed })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Euclidean length of the listed period.
    pub fn length(&self) -> f64 {
        self.vertices.windows(2).map(|w| seg_len(w[0], w[1])).sum()
    }

    pub fn refine(&self, max_seg: f64) -> PolyCurve {
        PolyCurve { vertices: subdivide(&self.vertices, max_seg), closed: self.closed }
    }

    /// Vertexwise image. Exact for affine lifts.
    pub fn map(&self, lift: &Lift) -> PolyCurve {
        PolyCurve { vertices: self.vertices.iter().map(|&p| lift.apply(p)).collect(), closed: self.closed }
    }
}

/// Refines to `max_seg`, then maps vertexwise.
pub fn iterate_refine(lift: &Lift, c: &PolyCurve, max_seg: f64) -> Result<PolyCurve, GrowthError> {
    if !(max_seg > 0.0) {
        return Err(GrowthError::InvalidArgument(format!("max_seg must be positive, got {max_seg}")));
    }
    Ok(c.refine(max_seg).map(lift))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EgrConfig {
    pub max_seg: f64,
    pub length_cap: f64,
}

impl Default for EgrConfig {
    fn default() -> Self {
        Self { max_seg: 1e-2, length_cap: 1e12 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthRow {
    pub n: u64,
    pub length: f64,
    /// `log(lengthₙ)/n`.
    pub value: f64,
    /// Minimum of `value` over `⌈n_max/2⌉ ≤ k ≤ n`; `None` before that.
    pub envelope: Option<f64>,
}

/// `log(l(fⁿτ))/n` for `n = 1..=n_max` with the liminf envelope taken from
/// the midpoint on.
///
/// Affine lifts are applied vertexwise with no refinement, since their
/// polyline images are exact; other lifts refine to `cfg.max_seg` before
/// every step.
pub fn egr(lift: &Lift, c: &PolyCurve, n_max: u64, cfg: &EgrConfig) -> Result<Vec<GrowthRow>, GrowthError> {
    if n_max < 4 {
        return Err(GrowthError::InvalidArgument(format!("n_max = {n_max} is below the minimum of 4")));
    }
    if !c.is_closed() {
        return Err(GrowthError::DegenerateCurve("egr needs a closed curve".into()));
    }
    let from = n_max.div_ceil(2);
    let mut cur = c.clone();
    let mut env: Option<f64> = None;
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        cur = if lift.is_affine() { cur.map(lift) } else { iterate_refine(lift, &cur, cfg.max_seg)? };
        let length = cur.length();
        if !(length <= cfg.length_cap) {
            return Err(GrowthError::LengthOverflow { n, length });
        }
        let value = length.ln() / n as f64;
        if n >= from {
            env = Some(env.map_or(value, |e: f64| e.min(value)));
        }
        rows.push(GrowthRow { n, length, value, envelope: env });
    }
    Ok(rows)
}

pub const CURVE_NAMES: &[&str] = &["e1", "e2", "diag"];

/// The closed curves `(1,0)`, `(0,1)` and `(1,1)` based at the origin.
pub fn named_curve(name: &str) -> Result<PolyCurve, GrowthError> {
    let end = match name {
        "e1" => [1.0, 0.0],
        "e2" => [0.0, 1.0],
        "diag" => [1.0, 1.0],
        other => return Err(GrowthError::UnknownCurve(other.to_string())),
    };
    PolyCurve::new(vec![[0.0, 0.0], end], true)
}

use std::f64::consts::PI;

use rayon::prelude::*;

use super::{DynamicsError, Lift, LiftKind, Point};

/// Default width of the last-quarter Cauchy window.
pub const DEFAULT_TOL: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq)]
pub struct RotationReport {
    /// `(Fⁿ(x) − x) / n`.
    pub estimate: Point,
    /// Spread of the partial averages `(Fᵏ(x) − x)/k` over the last quarter
    /// `k ∈ [n − ⌊n/4⌋, n]`, maximised over coordinates.
    pub window_variation: f64,
    pub n_used: u64,
    pub converged: bool,
}

pub(crate) fn rotation_vector_unchecked(lift: &Lift, x: Point, n: u64, tol: f64) -> RotationReport {
    let start = n - n / 4;
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    let mut p = x;
    let mut avg = [0.0; 2];
    for k in 1..=n {
        p = lift.apply(p);
        avg = [(p[0] - x[0]) / k as f64, (p[1] - x[1]) / k as f64];
        if k >= start {
            for i in 0..2 {
                lo[i] = lo[i].min(avg[i]);
                hi[i] = hi[i].max(avg[i]);
            }
        }
    }
    let window_variation = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    RotationReport { estimate: avg, window_variation, n_used: n, converged: window_variation < tol }
}

/// Rotation vector estimate of `x` under `lift` after `n` iterates.
pub fn rotation_vector(lift: &Lift, x: Point, n: u64, tol: f64) -> Result<RotationReport, DynamicsError> {
    if n < 16 {
        return Err(DynamicsError::InvalidArgument(format!("n = {n} is below the minimum of 16")));
    }
    lift.check_contract()?;
    Ok(rotation_vector_unchecked(lift, x, n, tol))
}

fn check_circle(lift: &Lift) -> Result<(), DynamicsError> {
    if lift.kind() != LiftKind::Circle {
        return Err(DynamicsError::WrongKind { lift: lift.name().to_string(), expected: LiftKind::Circle });
    }
    lift.check_contract()?;
    const SAMPLES: usize = 1024;
    let mut prev = lift.apply([0.0, 0.0])[0];
    for i in 1..=SAMPLES {
        let x = i as f64 / SAMPLES as f64;
        let cur = lift.apply([x, 0.0])[0];
        if cur < prev {
            return Err(DynamicsError::MonotonicityViolation { lift: lift.name().to_string(), at: x });
        }
        prev = cur;
    }
    Ok(())
}

/// `(Fⁿ(x) − x)/n` for a monotone circle lift.
pub fn rotation_number_circle(lift: &Lift, x: f64, n: u64) -> Result<f64, DynamicsError> {
    if n == 0 {
        return Err(DynamicsError::InvalidArgument("n must be positive".into()));
    }
    check_circle(lift)?;
    Ok((lift.iterate([x, 0.0], n)[0] - x) / n as f64)
}

/// The action of `M` on lines through the origin, as a circle lift in the
/// parameter `s = θ/π`. The lift is pinned by `F(0) ∈ (−½, ½]`.
pub fn projectivized_circle_map(m: [[f64; 2]; 2]) -> Result<Lift, DynamicsError> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if !(det > 0.0) {
        return Err(DynamicsError::SingularMatrix { det });
    }
    let image = move |s: f64| {
        let (sn, cs) = (PI * s).sin_cos();
        [m[0][0] * cs + m[0][1] * sn, m[1][0] * cs + m[1][1] * sn]
    };
    let v0 = image(0.0);
    let mut anchor = v0[1].atan2(v0[0]) / PI;
    // lines: reduce to (−½, ½]
    anchor -= anchor.round();
    if anchor <= -0.5 {
        anchor += 1.0;
    }
    let map = move |p: Point| {
        let s = p[0];
        let whole = s.floor();
        let u = s - whole;
        let v = image(u);
        // M preserves orientation, so the image turns counterclockwise by at
        // most π as u runs over [0, 1].
        let mut swept = (v0[0] * v[1] - v0[1] * v[0]).atan2(v0[0] * v[0] + v0[1] * v[1]);
        if swept < 0.0 {
            swept += 2.0 * PI;
        }
        [whole + anchor + swept / PI, p[1]]
    };
    let name = format!("projective({},{},{},{})", m[0][0], m[0][1], m[1][0], m[1][1]);
    Ok(Lift::new(name, LiftKind::Circle, map))
}

/// Points `s ∈ [0, 1)` with `F(s) − s ∈ ℤ`, located by sign changes on a
/// grid of `samples` cells and bisection.
pub fn circle_fixed_points(lift: &Lift, samples: usize, tol: f64) -> Result<Vec<f64>, DynamicsError> {
    check_circle(lift)?;
    let g = |s: f64| lift.apply([s, 0.0])[0] - s;
    let vals: Vec<f64> = (0..=samples).map(|i| g(i as f64 / samples as f64)).collect();
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min).floor() as i64;
    let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max).ceil() as i64;
    let mut roots: Vec<f64> = Vec::new();
    for k in lo..=hi {
        let h = |s: f64| g(s) - k as f64;
        for i in 0..samples {
            let (a, b) = (i as f64 / samples as f64, (i + 1) as f64 / samples as f64);
            let (ha, hb) = (vals[i] - k as f64, vals[i + 1] - k as f64);
            if ha == 0.0 {
                roots.push(a);
            } else if ha * hb < 0.0 {
                let (mut l, mut r) = (a, b);
                while r - l > tol {
                    let mid = 0.5 * (l + r);
                    if h(mid) * ha > 0.0 {
                        l = mid;
                    } else {
                        r = mid;
                    }
                }
                roots.push(0.5 * (l + r));
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 2.0 * tol);
    if roots.len() > 1 && roots[0] + 1.0 - roots[roots.len() - 1] <= 2.0 * tol {
        roots.pop();
    }
    Ok(roots)
}

/// Finitely supported probability measure.
#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalMeasure {
    points: Vec<Point>,
    weights: Vec<f64>,
}

impl EmpiricalMeasure {
    pub fn new(points: Vec<Point>, weights: Vec<f64>) -> Result<Self, DynamicsError> {
        if points.len() != weights.len() || points.is_empty() {
            return Err(DynamicsError::InvalidArgument("need one weight per point and at least one point".into()));
        }
        if weights.iter().any(|w| !(*w >= 0.0)) {
            return Err(DynamicsError::InvalidArgument("weights must be non-negative".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(DynamicsError::InvalidArgument(format!("weights sum to {total}, not 1")));
        }
        Ok(Self { points, weights })
    }

    pub fn uniform(points: Vec<Point>) -> Result<Self, DynamicsError> {
        let w = 1.0 / points.len().max(1) as f64;
        let n = points.len();
        let mut weights = vec![w; n];
        // push rounding into the last weight so the total is 1 to the ulp
        if n > 0 {
            weights[n - 1] = 1.0 - w * (n - 1) as f64;
        }
        Self::new(points, weights)
    }

    pub fn dirac(p: Point) -> Self {
        Self { points: vec![p], weights: vec![1.0] }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// `∫ ρ(x) dμ` over the sample points. Orbits run in parallel; the weighted
/// sum is taken in point order, so the result does not depend on scheduling.
pub fn mean_rotation_vector(
    lift: &Lift,
    measure: &EmpiricalMeasure,
    n: u64,
    tol: f64,
) -> Result<Point, DynamicsError> {
    if n < 16 {
        return Err(DynamicsError::InvalidArgument(format!("n = {n} is below the minimum of 16")));
    }
    lift.check_contract()?;
    let reports: Vec<RotationReport> =
        measure.points.par_iter().map(|&p| rotation_vector_unchecked(lift, p, n, tol)).collect();
    let bad: Vec<Point> =
        measure.points.iter().zip(&reports).filter(|(_, r)| !r.converged).map(|(p, _)| *p).collect();
    if !bad.is_empty() {
        return Err(DynamicsError::NonConvergentSample { points: bad });
    }
    let mut acc = [0.0; 2];
    for (r, w) in reports.iter().zip(&measure.weights) {
        acc[0] += w * r.estimate[0];
        acc[1] += w * r.estimate[1];
    }
    Ok(acc)
}

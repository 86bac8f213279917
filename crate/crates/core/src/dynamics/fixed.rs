use super::{Lift, LiftKind, Point};
use crate::table::{with_running_min, RatioRow};

#[derive(Clone, Debug, PartialEq)]
pub struct FixedPointCandidate {
    /// Cell indices `(i, j)` on the `resolution × resolution` grid.
    pub cell: (usize, usize),
    pub point: Point,
    pub residual: f64,
}

/// Cells of `[0,1) × [0,1]` where `‖F(p) − p‖` drops below `tol`, tested at
/// the cell center and the four quarter-cell centers.
pub fn interior_fixed_point_search(lift: &Lift, resolution: usize, tol: f64) -> Vec<FixedPointCandidate> {
    let h = 1.0 / resolution as f64;
    let mut out = Vec::new();
    for i in 0..resolution {
        for j in 0..resolution {
            let (x0, y0) = (i as f64 * h, j as f64 * h);
            let probes = [(0.5, 0.5), (0.25, 0.25), (0.75, 0.25), (0.25, 0.75), (0.75, 0.75)];
            let best = probes
                .iter()
                .map(|(a, b)| {
                    let p = [x0 + a * h, y0 + b * h];
                    let q = lift.apply(p);
                    (p, (q[0] - p[0]).hypot(q[1] - p[1]))
                })
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("five probes");
            if best.1 < tol {
                out.push(FixedPointCandidate { cell: (i, j), point: best.0, residual: best.1 });
            }
        }
    }
    out
}

/// `d(Fⁿx₁, Fⁿx₂)/n` for `n = 1..=n_max` with its running minimum.
pub fn linear_displacement_detector(lift: &Lift, x1: Point, x2: Point, n_max: u64) -> Vec<RatioRow> {
    let (mut p, mut q) = (x1, x2);
    let dist = |p: Point, q: Point| match lift.kind() {
        LiftKind::Circle => (p[0] - q[0]).abs(),
        _ => (p[0] - q[0]).hypot(p[1] - q[1]),
    };
    with_running_min((1..=n_max).map(|n| {
        p = lift.apply(p);
        q = lift.apply(q);
        (n, dist(p, q) / n as f64)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::build_lift;

    #[test]
    fn fixed_circle_of_mean_zero_shear() {
        let z = build_lift("mean-zero-shear", &[]).unwrap();
        let r = 32;
        let c = interior_fixed_point_search(&z, r, 1.0 / r as f64);
        assert!(!c.is_empty());
        assert!(c.iter().all(|c| (c.point[1] - 0.5).abs() <= 1.0 / r as f64));
        let mut cols: Vec<usize> = c.iter().map(|c| c.cell.0).collect();
        cols.dedup();
        assert_eq!(cols.len(), r);
    }

    #[test]
    fn rotation_and_identity() {
        let rot = build_lift("translation", &[0.3, 0.0]).unwrap();
        assert!(interior_fixed_point_search(&rot, 16, 1e-3).is_empty());
        let id = build_lift("identity", &[]).unwrap();
        assert_eq!(interior_fixed_point_search(&id, 16, 1e-3).len(), 256);
    }

    #[test]
    fn displacement() {
        let twist = build_lift("twist", &[]).unwrap();
        let rows = linear_displacement_detector(&twist, [0.0, 0.0], [0.0, 0.5], 200);
        assert!((rows.last().unwrap().envelope - 1.0).abs() < 1e-4);

        let t = build_lift("translation", &[]).unwrap();
        let rows = linear_displacement_detector(&t, [0.0, 0.0], [0.3, 0.1], 1000);
        assert!(rows.last().unwrap().envelope < 1e-3);

        let s = build_lift("shear", &[]).unwrap();
        let rows = linear_displacement_detector(&s, [0.0, 0.0], [0.0, 1.0], 500);
        let e = rows.last().unwrap().envelope;
        assert!((e - 1.0).abs() < 1e-5 && e >= 1.0);
    }
}

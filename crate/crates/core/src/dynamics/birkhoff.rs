use super::{DynamicsError, Lift, Point};

/// First `k ≥ 1` with `mapᵏ(x)` in the region, and that point.
///
/// Boundary ties are whatever `in_region` says they are.
pub fn first_return<P: Clone>(
    map: impl Fn(&P) -> P,
    in_region: impl Fn(&P) -> bool,
    x: &P,
    max_steps: u64,
) -> Result<(P, u64), DynamicsError> {
    let mut p = x.clone();
    for k in 1..=max_steps {
        p = map(&p);
        if in_region(&p) {
            return Ok((p, k));
        }
    }
    Err(DynamicsError::NoReturn { index: 0, steps: max_steps })
}

/// `S(k, x)` for `k = 1..=n`: the lifted first-coordinate displacement of
/// the first-return map to `region`, summed along the orbit.
///
/// `region` sees points with the periodic coordinates reduced to `[0, 1)`;
/// the sum itself uses the unreduced lift.
pub fn birkhoff_series(
    lift: &Lift,
    region: impl Fn(Point) -> bool,
    x: Point,
    n: usize,
    max_steps: u64,
) -> Result<Vec<f64>, DynamicsError> {
    let mut out = Vec::with_capacity(n);
    let mut s = 0.0;
    let mut cur = x;
    for index in 0..n {
        let (next, _) = first_return(|p: &Point| lift.apply(*p), |p: &Point| region(lift.project(*p)), &cur, max_steps)
            .map_err(|_| DynamicsError::NoReturn { index, steps: max_steps })?;
        s += next[0] - cur[0];
        out.push(s);
        cur = next;
    }
    Ok(out)
}

/// `S(n, x)`; zero for `n = 0`.
pub fn birkhoff_displacement_sum(
    lift: &Lift,
    region: impl Fn(Point) -> bool,
    x: Point,
    n: usize,
    max_steps: u64,
) -> Result<f64, DynamicsError> {
    Ok(birkhoff_series(lift, region, x, n, max_steps)?.last().copied().unwrap_or(0.0))
}

/// All `n ≤ big_n` with `|S(n, x)| < bound`.
pub fn recurrence_witnesses(
    lift: &Lift,
    region: impl Fn(Point) -> bool,
    x: Point,
    big_n: usize,
    bound: f64,
    max_steps: u64,
) -> Result<Vec<usize>, DynamicsError> {
    if !(bound > 0.0) {
        return Err(DynamicsError::InvalidArgument(format!("bound must be positive, got {bound}")));
    }
    let series = birkhoff_series(lift, region, x, big_n, max_steps)?;
    Ok(series.iter().enumerate().filter(|(_, s)| s.abs() < bound).map(|(i, _)| i + 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::build_lift;

    fn circle_rotation(r: f64) -> impl Fn(&f64) -> f64 {
        move |x: &f64| (x + r).rem_euclid(1.0)
    }

    #[test]
    fn first_return_on_rotations() {
        let arc = |x: &f64| (0.0..0.25).contains(x);
        assert_eq!(first_return(circle_rotation(0.3), arc, &0.1, 100).unwrap().1, 3);
        let (p, t) = first_return(circle_rotation(0.5), arc, &0.1, 100).unwrap();
        assert!(t == 2 && (p - 0.1).abs() < 1e-12);
        assert_eq!(first_return(|x: &f64| *x, arc, &0.1, 100).unwrap().1, 1);
        assert!(matches!(first_return(circle_rotation(0.0), arc, &0.5, 10), Err(DynamicsError::NoReturn { .. })));
    }

    #[test]
    fn orbit_enumeration_matches_direct_iteration() {
        // independent: walk the orbit by hand and stop at the first hit
        let r = 0.3;
        for x0 in [0.05, 0.1, 0.62, 0.9] {
            let mut x: f64 = x0;
            let mut k = 0;
            loop {
                x = (x + r) % 1.0;
                k += 1;
                if x < 0.25 {
                    break;
                }
            }
            let (p, t) = first_return(circle_rotation(r), |x: &f64| *x < 0.25, &x0, 100).unwrap();
            assert_eq!((p, t), (x, k));
        }
    }

    #[test]
    fn sums() {
        let full = |_: Point| true;
        let rot = build_lift("rotation", &[0.618]).unwrap();
        assert_eq!(birkhoff_displacement_sum(&rot, full, [0.2, 0.0], 0, 10).unwrap(), 0.0);
        let s = birkhoff_displacement_sum(&rot, full, [0.2, 0.0], 10, 10).unwrap();
        assert!((s - 6.18).abs() < 1e-12);

        let z = build_lift("mean-zero-shear", &[]).unwrap();
        let series = birkhoff_series(&z, full, [0.0, 0.5], 200, 10).unwrap();
        assert!(series.iter().all(|s| s.abs() < 1.0));
    }

    #[test]
    fn witnesses_match_closed_form() {
        let z = build_lift("mean-zero-shear", &[]).unwrap();
        let w = recurrence_witnesses(&z, |_| true, [0.0, 0.3], 50, 1.0, 10).unwrap();
        assert_eq!(w, vec![1, 2, 3, 4]);
        let closed: Vec<usize> = (1..=50).filter(|n| (*n as f64 * 0.2) < 1.0 - 1e-9).collect();
        assert_eq!(w, closed);

        let id = build_lift("identity", &[]).unwrap();
        assert_eq!(recurrence_witnesses(&id, |_| true, [0.4, 0.4], 20, 1.0, 10).unwrap(), (1..=20).collect::<Vec<_>>());
        let sine = build_lift("sine", &[]).unwrap();
        assert_eq!(recurrence_witnesses(&sine, |p| p[0] < 0.5, [0.0, 0.0], 20, 1.0, 10).unwrap().len(), 20);
    }

    #[test]
    fn sub_region_returns() {
        // rotation by 0.3 on the circle, region [0, 0.25): each return
        // advances the lift by 0.3 · (return time)
        let rot = build_lift("rotation", &[0.3]).unwrap();
        let s = birkhoff_series(&rot, |p| p[0] < 0.25, [0.1, 0.0], 5, 100).unwrap();
        let mut x: f64 = 0.1;
        let mut total = 0.0;
        for (i, si) in s.iter().enumerate() {
            let mut t = 0;
            loop {
                x = (x + 0.3).rem_euclid(1.0);
                t += 1;
                if x < 0.25 {
                    break;
                }
            }
            total += 0.3 * t as f64;
            assert!((si - total).abs() < 1e-9, "step {i}");
        }
    }
}

use std::f64::consts::PI;

use super::{projectivized_circle_map, DynamicsError, Lift, LiftKind};

/// Names accepted by [`build_lift`].
pub const LIFT_NAMES: &[&str] = &[
    "identity",
    "translation",
    "rotation",
    "shear",
    "skew",
    "mean-zero-shear",
    "twist",
    "sine",
    "projective",
    "linear",
    "matA",
];

fn take<const N: usize>(name: &str, params: &[f64], default: [f64; N]) -> Result<[f64; N], DynamicsError> {
    match params.len() {
        0 => Ok(default),
        n if n == N => Ok(params.try_into().expect("length checked")),
        n => Err(DynamicsError::InvalidArgument(format!("'{name}' takes {N} parameter(s), got {n}"))),
    }
}

fn integer(name: &str, v: f64) -> Result<i64, DynamicsError> {
    if v.fract() != 0.0 || v.abs() > 1e9 {
        return Err(DynamicsError::InvalidArgument(format!("'{name}' needs integer parameters, got {v}")));
    }
    Ok(v as i64)
}

/// Builds a named lift. Parameters default when `params` is empty:
///
/// | name | map | params |
/// |---|---|---|
/// | `identity` | `(x, y)` | |
/// | `translation` | `(x+a, y+b)` | `a, b` = `0.3, 0.7` |
/// | `rotation` | circle `x + ρ` | `ρ` = `0.4` |
/// | `shear` | `(x+ky, y)` | integer `k` = `1` |
/// | `skew` | `(x+α, y+x)` | `α` = `0.1` |
/// | `mean-zero-shear` | annulus `(x+y−½, y)` | |
/// | `twist` | `(x + (1−cos 2πy)/2, y)` | |
/// | `sine` | circle `x + ε sin 2πx` | `ε` = `0.1` |
/// | `projective` | circle action of `(a b; c d)` on `ℝP¹` | `1, 1, 0, 1` |
/// | `linear` | `(ax+by, cx+dy)`, integer unimodular | `2, 1, 1, 1` |
/// | `matA` | `linear` with `(2 1; 1 1)` | |
pub fn build_lift(name: &str, params: &[f64]) -> Result<Lift, DynamicsError> {
    let lift = match name {
        "identity" => {
            take::<0>(name, params, [])?;
            Lift::new(name, LiftKind::Torus, |p| p).with_inverse(|p| p).affine()
        }
        "translation" => {
            let [a, b] = take(name, params, [0.3, 0.7])?;
            Lift::new(name, LiftKind::Torus, move |p| [p[0] + a, p[1] + b])
                .with_inverse(move |p| [p[0] - a, p[1] - b])
                .affine()
        }
        "rotation" => {
            let [rho] = take(name, params, [0.4])?;
            Lift::new(name, LiftKind::Circle, move |p| [p[0] + rho, p[1]])
                .with_inverse(move |p| [p[0] - rho, p[1]])
                .affine()
        }
        "shear" => {
            let [k] = take(name, params, [1.0])?;
            let ki = integer(name, k)?;
            Lift::new(name, LiftKind::Torus, move |p| [p[0] + k * p[1], p[1]])
                .with_inverse(move |p| [p[0] - k * p[1], p[1]])
                .with_deck([[1, ki], [0, 1]])
                .affine()
        }
        "skew" => {
            let [alpha] = take(name, params, [0.1])?;
            Lift::new(name, LiftKind::Torus, move |p| [p[0] + alpha, p[1] + p[0]])
                .with_inverse(move |p| [p[0] - alpha, p[1] - p[0] + alpha])
                .with_deck([[1, 0], [1, 1]])
                .affine()
        }
        "mean-zero-shear" => {
            take::<0>(name, params, [])?;
            Lift::new(name, LiftKind::Annulus, |p| [p[0] + p[1] - 0.5, p[1]])
                .with_inverse(|p| [p[0] - p[1] + 0.5, p[1]])
                .affine()
        }
        "twist" => {
            take::<0>(name, params, [])?;
            let bump = |y: f64| (1.0 - (2.0 * PI * y).cos()) / 2.0;
            Lift::new(name, LiftKind::Torus, move |p| [p[0] + bump(p[1]), p[1]])
                .with_inverse(move |p| [p[0] - bump(p[1]), p[1]])
        }
        "sine" => {
            let [eps] = take(name, params, [0.1])?;
            if eps.abs() >= 1.0 / (2.0 * PI) {
                return Err(DynamicsError::InvalidArgument(format!("sine amplitude {eps} breaks monotonicity")));
            }
            Lift::new(name, LiftKind::Circle, move |p| [p[0] + eps * (2.0 * PI * p[0]).sin(), p[1]])
        }
        "projective" => {
            let [a, b, c, d] = take(name, params, [1.0, 1.0, 0.0, 1.0])?;
            projectivized_circle_map([[a, b], [c, d]])?
        }
        "linear" | "matA" => {
            let [a, b, c, d] = if name == "matA" {
                take::<0>(name, params, [])?;
                [2.0, 1.0, 1.0, 1.0]
            } else {
                take(name, params, [2.0, 1.0, 1.0, 1.0])?
            };
            let m = [integer(name, a)?, integer(name, b)?, integer(name, c)?, integer(name, d)?];
            let det = m[0] * m[3] - m[1] * m[2];
            if det.abs() != 1 {
                return Err(DynamicsError::InvalidArgument(format!("matrix has determinant {det}, not ±1")));
            }
            let (ia, ib, ic, id) = ((d * det as f64), (-b * det as f64), (-c * det as f64), (a * det as f64));
            Lift::new(name, LiftKind::Torus, move |p| [a * p[0] + b * p[1], c * p[0] + d * p[1]])
                .with_inverse(move |p| [ia * p[0] + ib * p[1], ic * p[0] + id * p[1]])
                .with_deck([[m[0], m[1]], [m[2], m[3]]])
                .affine()
        }
        other => return Err(DynamicsError::UnknownLift(other.to_string())),
    };
    Ok(lift)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_shipped_lift_meets_its_contract() {
        for name in LIFT_NAMES {
            let lift = build_lift(name, &[]).unwrap();
            let r = lift.equivariance_residual();
            assert!(r < 1e-9, "{name}: {r:e}");
            lift.check_contract().unwrap();
        }
    }

    #[test]
    fn strip_preserving_lifts() {
        for name in ["identity", "shear", "mean-zero-shear", "twist"] {
            assert!(build_lift(name, &[]).unwrap().preserves_strip(), "{name}");
        }
        assert!(build_lift("translation", &[0.5, 0.0]).unwrap().preserves_strip());
        assert!(!build_lift("translation", &[]).unwrap().preserves_strip());
        assert!(!build_lift("matA", &[]).unwrap().preserves_strip());
    }

    #[test]
    fn bad_names_and_params() {
        assert_eq!(build_lift("nope", &[]).unwrap_err(), DynamicsError::UnknownLift("nope".into()));
        assert!(build_lift("shear", &[0.5]).is_err());
        assert!(build_lift("linear", &[2.0, 0.0, 0.0, 1.0]).is_err());
        assert!(build_lift("translation", &[1.0]).is_err());
    }
}

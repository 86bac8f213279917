//! Ratio series with running-minimum envelopes, and the decimal format used
//! for every numeric table the crate emits.

/// One row `(n, value, envelope)` of a ratio series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioRow {
    pub n: u64,
    pub value: f64,
    pub envelope: f64,
}

/// Attaches the running minimum (a liminf proxy) to `(n, value)` pairs.
pub fn with_running_min(values: impl IntoIterator<Item = (u64, f64)>) -> Vec<RatioRow> {
    let mut env = f64::INFINITY;
    values
        .into_iter()
        .map(|(n, value)| {
            env = env.min(value);
            RatioRow { n, value, envelope: env }
        })
        .collect()
}

/// `x` with 12 significant digits, trailing zeros dropped, in the shortest
/// of fixed or exponent notation (the C `%.12g` rule).
pub fn fmt_g(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        let cases = [
            (0.0, "0"),
            (1.0, "1"),
            (-2.5, "-2.5"),
            (26.0 / 322.0, "0.0807453416149"),
            (0.4, "0.4"),
            (1e-7, "1e-07"),
            (123456789012345.0, "1.23456789012e+14"),
            (0.0001234, "0.0001234"),
            (std::f64::consts::PI, "3.14159265359"),
            (999999999999.5, "1e+12"),
        ];
        for (x, want) in cases {
            assert_eq!(fmt_g(x), want, "{x}");
        }
    }

    #[test]
    fn envelope() {
        let rows = with_running_min([(1, 3.0), (2, 1.0), (3, 2.0)]);
        let env: Vec<f64> = rows.iter().map(|r| r.envelope).collect();
        assert_eq!(env, vec![3.0, 1.0, 1.0]);
    }
}

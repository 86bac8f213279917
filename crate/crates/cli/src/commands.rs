use serde_json::{json, Value};

use distortion_core::dynamics::{build_lift, rotation_number_circle, rotation_vector, LiftKind};
use distortion_core::groups::{
    calegari_action, heisenberg_witness, mess_witness, psl2_product_embedding, psl2_witness, GroupId, HeisGroup,
    MessGroup, Psl2Group,
};
use distortion_core::growth::{egr, named_arc, named_curve, spread, EgrConfig};
use distortion_core::words::{
    cayley_ball_with, distortion_series, eval_word, BfsOptions, GroupOracle, Token, Witness, Word, WordError,
};

use crate::error::CliError;
use crate::report::{cell, num, Report};

pub fn parse_group(s: &str) -> Result<GroupId, CliError> {
    s.parse().map_err(CliError::UnknownName)
}

/// Comma-separated decimals, parsed once here.
pub fn parse_decimals(s: &str) -> Result<Vec<f64>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| CliError::invalid(format!("'{p}' is not a decimal number"))))
        .collect()
}

pub fn parse_point(s: &str) -> Result<[f64; 2], CliError> {
    match parse_decimals(s)?.as_slice() {
        [x] => Ok([*x, 0.0]),
        [x, y] => Ok([*x, *y]),
        _ => Err(CliError::invalid(format!("'{s}' is not a point 'x' or 'x,y'"))),
    }
}

pub fn distortion(group: GroupId, n_max: u64) -> Result<Report, CliError> {
    if n_max == 0 {
        return Err(CliError::invalid("--n-max must be at least 1"));
    }
    let witnesses: Vec<Witness> = match group {
        GroupId::Mess => (1..=n_max).map(mess_witness).collect::<Result<_, _>>()?,
        GroupId::Heis => (1..=n_max).map(heisenberg_witness).collect::<Result<_, _>>()?,
        GroupId::Psl2Sqrt2 => (1..=n_max).map(psl2_witness).collect::<Result<_, _>>()?,
    };
    let rows = match group {
        GroupId::Mess => distortion_series(&MessGroup::new(), &witnesses)?,
        GroupId::Heis => distortion_series(&HeisGroup::standard(), &witnesses)?,
        GroupId::Psl2Sqrt2 => distortion_series(&Psl2Group::new(), &witnesses)?,
    };
    let certs: Vec<Value> =
        witnesses.iter().map(|w| serde_json::to_value(&w.certificate).expect("certificates serialize")).collect();
    let series: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "power": r.power.to_string(),
                "tokens": r.tokens,
                "ratio": num(r.ratio_f64()),
                "ratio_exact": r.ratio.to_string(),
                "envelope": num(r.envelope_f64()),
            })
        })
        .collect();
    let last = rows.last().expect("n_max ≥ 1");
    Ok(Report {
        json: json!({
            "group": group.as_str(),
            "certificates": certs,
            "series": series,
            "envelope": num(last.envelope_f64()),
            "envelope_exact": last.envelope.to_string(),
        }),
        header: vec!["n", "power", "tokens", "ratio", "envelope"],
        rows: rows
            .iter()
            .map(|r| vec![r.n.to_string(), r.power.to_string(), r.tokens.to_string(), cell(r.ratio_f64()), cell(r.envelope_f64())])
            .collect(),
    })
}

fn sphere_report(group: GroupId, radius: u32, spheres: &[usize], target: Option<(&str, Option<u32>)>, complete: bool) -> Report {
    let balls: Vec<usize> = spheres
        .iter()
        .scan(0, |acc, s| {
            *acc += s;
            Some(*acc)
        })
        .collect();
    let mut j = json!({
        "group": group.as_str(),
        "radius": radius,
        "complete": complete,
        "sphere_sizes": spheres,
        "ball_sizes": balls,
    });
    if let Some((key, len)) = target {
        j["target"] = json!(key);
        j["length"] = json!(len);
    }
    Report {
        json: j,
        header: vec!["r", "sphere", "ball"],
        rows: spheres.iter().zip(&balls).enumerate().map(|(r, (s, b))| vec![r.to_string(), s.to_string(), b.to_string()]).collect(),
    }
}

fn cayley_in<O: GroupOracle>(
    oracle: &O,
    group: GroupId,
    radius: u32,
    target: Option<&str>,
    opts: &BfsOptions,
) -> Result<Report, CliError> {
    let key = target.map(|t| oracle.parse_key(t)).transpose()?;
    match cayley_ball_with(oracle, radius, opts) {
        Ok(ball) => {
            let t = key.as_ref().map(|k| (target.unwrap_or_default(), ball.length(k)));
            Ok(sphere_report(group, radius, ball.sphere_sizes(), t, true))
        }
        Err(e @ WordError::BallTooLarge { .. }) => {
            let WordError::BallTooLarge { radius_reached, sphere_sizes, .. } = &e else { unreachable!() };
            let partial = sphere_report(group, *radius_reached, sphere_sizes, None, false);
            Err(CliError::BallTooLarge { message: e.to_string(), partial: Box::new(partial) })
        }
        Err(e) => Err(e.into()),
    }
}

pub fn cayley(group: GroupId, radius: u32, target: Option<&str>, opts: &BfsOptions) -> Result<Report, CliError> {
    match group {
        GroupId::Mess => cayley_in(&MessGroup::new(), group, radius, target, opts),
        GroupId::Heis => cayley_in(&HeisGroup::standard(), group, radius, target, opts),
        GroupId::Psl2Sqrt2 => cayley_in(&Psl2Group::new(), group, radius, target, opts),
    }
}

pub fn rotation(lift: &str, params: &[f64], x: [f64; 2], n: u64, tol: f64) -> Result<Report, CliError> {
    let l = build_lift(lift, params)?;
    let r = rotation_vector(&l, x, n, tol)?;
    let mut estimate = r.estimate;
    if l.kind() == LiftKind::Circle {
        estimate = [rotation_number_circle(&l, x[0], n)?, 0.0];
    }
    Ok(Report {
        json: json!({
            "lift": lift,
            "kind": l.kind().to_string(),
            "x": [num(x[0]), num(x[1])],
            "n": n,
            "estimate": [num(estimate[0]), num(estimate[1])],
            "window_variation": num(r.window_variation),
            "converged": r.converged,
        }),
        header: vec!["n", "rho_x", "rho_y", "window_variation", "converged"],
        rows: vec![vec![n.to_string(), cell(estimate[0]), cell(estimate[1]), cell(r.window_variation), r.converged.to_string()]],
    })
}

pub fn egr_cmd(map: &str, params: &[f64], curve: &str, n_max: u64, cfg: &EgrConfig) -> Result<Report, CliError> {
    let l = build_lift(map, params)?;
    let c = named_curve(curve)?;
    let rows = egr(&l, &c, n_max, cfg)?;
    let env = rows.last().and_then(|r| r.envelope);
    let opt = |e: Option<f64>| e.map_or(Value::Null, num);
    Ok(Report {
        json: json!({
            "map": map,
            "curve": curve,
            "rows": rows.iter().map(|r| json!({
                "n": r.n, "length": num(r.length), "value": num(r.value), "envelope": opt(r.envelope),
            })).collect::<Vec<_>>(),
            "envelope": opt(env),
        }),
        header: vec!["n", "length", "value", "envelope"],
        rows: rows
            .iter()
            .map(|r| vec![r.n.to_string(), cell(r.length), cell(r.value), r.envelope.map(cell).unwrap_or_default()])
            .collect(),
    })
}

pub fn spread_cmd(map: &str, params: &[f64], arc: &str, n_max: u64, max_seg: f64) -> Result<Report, CliError> {
    let l = build_lift(map, params)?;
    let a = named_arc(arc)?;
    if n_max == 0 {
        return Err(CliError::invalid("--n-max must be at least 1"));
    }
    let rows = spread(&l, &a, n_max, max_seg)?;
    Ok(Report {
        json: json!({
            "map": map,
            "arc": arc,
            "rows": rows.iter().map(|r| json!({
                "n": r.n, "L": r.l, "ratio": num(r.ratio), "envelope": num(r.envelope),
            })).collect::<Vec<_>>(),
            "envelope": num(rows.last().expect("n_max ≥ 1").envelope),
        }),
        header: vec!["n", "L", "ratio", "envelope"],
        rows: rows.iter().map(|r| vec![r.n.to_string(), r.l.to_string(), cell(r.ratio), cell(r.envelope)]).collect(),
    })
}

pub fn calegari(alpha: f64, n: u64) -> Result<Report, CliError> {
    if !(alpha > 0.0) || n == 0 {
        return Err(CliError::invalid("--alpha must be positive and --n at least 1"));
    }
    let act = calegari_action(alpha);
    let comm = act.commutator_identity_holds();
    let quot = act.quotient_compatible();
    let rho = act.fiber_rotation_number(n);
    let expected = (1.0 / alpha).rem_euclid(1.0);
    Ok(Report {
        json: json!({
            "alpha": num(alpha),
            "commutator_identity": comm,
            "quotient_compatible": quot,
            "n": n,
            "fiber_rotation_number": num(rho),
            "expected": num(expected),
        }),
        header: vec!["alpha", "commutator_identity", "quotient_compatible", "n", "fiber_rotation_number", "expected"],
        rows: vec![vec![cell(alpha), comm.to_string(), quot.to_string(), n.to_string(), cell(rho), cell(expected)]],
    })
}

/// Letters `a, b` for `A, B` and `A, B` for their inverses.
pub fn parse_psl2_word(s: &str) -> Result<Word, CliError> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'a' => Ok(Token::new(0, false)),
            'A' => Ok(Token::new(0, true)),
            'b' => Ok(Token::new(1, false)),
            'B' => Ok(Token::new(1, true)),
            other => Err(CliError::invalid(format!("letter '{other}' is not one of a, A, b, B"))),
        })
        .collect()
}

pub fn psl2_embed(word: &Word) -> Result<Report, CliError> {
    let grp = Psl2Group::new();
    let g = eval_word(&grp, word)?;
    let pair = psl2_product_embedding(&g);
    let key = |m| grp.key(m).to_string();
    let real = |m: &distortion_core::algebra::ProjMat2<distortion_core::algebra::QuadInt>| {
        let f = m.matrix().to_f64();
        json!([[num(f[0][0]), num(f[0][1])], [num(f[1][0]), num(f[1][1])]])
    };
    let (gk, bk) = (key(&pair.g), key(&pair.gbar));
    Ok(Report {
        json: json!({
            "word": word.to_string(),
            "tokens": word.token_count(),
            "g": gk,
            "gbar": bk,
            "g_real": real(&pair.g),
            "gbar_real": real(&pair.gbar),
        }),
        header: vec!["word", "g", "gbar"],
        rows: vec![vec![word.to_string(), gk, bk]],
    })
}

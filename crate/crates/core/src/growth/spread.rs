use rand::Rng;

use super::curve::subdivide;
use super::GrowthError;
use crate::dynamics::{Lift, Point};
use crate::table::{with_running_min, RatioRow};
use crate::words::{Token, Word};

const STRIP_TOL: f64 = 1e-9;

/// Polyline in the strip `ℝ × [0,1]` with both endpoints on the boundary
/// lines. The deck translation is `T(x, y) = (x+1, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Arc {
    vertices: Vec<Point>,
}

impl Arc {
    pub fn new(vertices: Vec<Point>) -> Result<Self, GrowthError> {
        if vertices.len() < 2 {
            return Err(GrowthError::DegenerateCurve("an arc needs at least two vertices".into()));
        }
        if let Some(p) = vertices.iter().find(|p| p[1] < -STRIP_TOL || p[1] > 1.0 + STRIP_TOL) {
            return Err(GrowthError::DegenerateCurve(format!("vertex {p:?} leaves the strip")));
        }
        let on_boundary = |p: &Point| p[1].abs() <= STRIP_TOL || (p[1] - 1.0).abs() <= STRIP_TOL;
        if !on_boundary(&vertices[0]) || !on_boundary(&vertices[vertices.len() - 1]) {
            return Err(GrowthError::DegenerateCurve("arc endpoints must lie on y = 0 or y = 1".into()));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// `T^k` applied to the arc.
    pub fn translate(&self, k: i64) -> Arc {
        Arc { vertices: self.vertices.iter().map(|p| [p[0] + k as f64, p[1]]).collect() }
    }

    fn image(&self, lift: &Lift, max_seg: f64) -> Arc {
        let pts = if lift.is_affine() { self.vertices.clone() } else { subdivide(&self.vertices, max_seg) };
        Arc { vertices: pts.into_iter().map(|p| lift.apply(p)).collect() }
    }
}

/// A lifted transversal `γ̃` from `y = 0` to `y = 1`; its translates are
/// `γ̃ᵢ = γ̃ + (i, 0)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Transversal {
    /// The line `x = 0`.
    Vertical,
    /// The graph `x = g(y)`, piecewise linear through knots `(y, x)` with
    /// `y` increasing from 0 to 1.
    Graph(Vec<(f64, f64)>),
}

impl Transversal {
    pub fn graph(knots: Vec<(f64, f64)>) -> Result<Self, GrowthError> {
        let ok = knots.len() >= 2
            && knots[0].0 == 0.0
            && knots[knots.len() - 1].0 == 1.0
            && knots.windows(2).all(|w| w[0].0 < w[1].0);
        if !ok {
            return Err(GrowthError::InvalidArgument("knots must run over y from 0 to 1, strictly increasing".into()));
        }
        Ok(Transversal::Graph(knots))
    }

    fn offset(&self, y: f64) -> f64 {
        match self {
            Transversal::Vertical => 0.0,
            Transversal::Graph(k) => {
                let y = y.clamp(0.0, 1.0);
                let i = k.partition_point(|&(ky, _)| ky <= y).clamp(1, k.len() - 1);
                let ((y0, x0), (y1, x1)) = (k[i - 1], k[i]);
                x0 + (x1 - x0) * (y - y0) / (y1 - y0)
            }
        }
    }

    fn knot_levels(&self) -> &[(f64, f64)] {
        match self {
            Transversal::Vertical => &[],
            Transversal::Graph(k) => k,
        }
    }

    /// `[min g, max g]`.
    pub fn x_range(&self) -> (f64, f64) {
        match self {
            Transversal::Vertical => (0.0, 0.0),
            Transversal::Graph(k) => k.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, x)| (lo.min(x), hi.max(x))),
        }
    }
}

/// `L_γ(α) = max{0, b − a − 2}` where the arc meets exactly the translates
/// `γ̃ᵢ` with `a < i < b`.
///
/// With `h = x − g(y)` the arc meets `γ̃ᵢ` iff `i` lies in the range of `h`
/// along the arc (closed intersection), so `L = ⌊max h⌋ − ⌈min h⌉`, floored
/// at 0. `h` is linear between vertices and knot levels, so those points
/// carry its extremes.
pub fn crossing_count(arc: &Arc, gamma: &Transversal) -> i64 {
    let h = |p: Point| p[0] - gamma.offset(p[1]);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut see = |v: f64| {
        lo = lo.min(v);
        hi = hi.max(v);
    };
    let knots = gamma.knot_levels();
    for w in arc.vertices.windows(2) {
        let (p, q) = (w[0], w[1]);
        see(h(p));
        for &(ky, _) in knots {
            let between = (p[1] < ky && ky < q[1]) || (q[1] < ky && ky < p[1]);
            if between {
                let t = (ky - p[1]) / (q[1] - p[1]);
                see(h([p[0] + t * (q[0] - p[0]), ky]));
            }
        }
    }
    see(h(arc.vertices[arc.vertices.len() - 1]));
    (hi.floor() as i64 - lo.ceil() as i64).max(0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpreadRow {
    pub n: u64,
    pub l: i64,
    pub ratio: f64,
    pub envelope: f64,
}

/// `L(fⁿα)/n` for `n = 1..=n_max` with its running minimum. The transversal
/// is the line `x = 0`.
pub fn spread(lift: &Lift, arc: &Arc, n_max: u64, max_seg: f64) -> Result<Vec<SpreadRow>, GrowthError> {
    if !lift.preserves_strip() {
        return Err(GrowthError::InvalidArgument(format!("lift '{}' does not preserve the strip", lift.name())));
    }
    lift.check_contract()?;
    if !(max_seg > 0.0) {
        return Err(GrowthError::InvalidArgument(format!("max_seg must be positive, got {max_seg}")));
    }
    let mut cur = arc.clone();
    let mut counts = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        cur = cur.image(lift, max_seg);
        counts.push((n, crossing_count(&cur, &Transversal::Vertical)));
    }
    let rows = with_running_min(counts.iter().map(|&(n, l)| (n, l as f64 / n as f64)));
    Ok(rows
        .into_iter()
        .zip(counts)
        .map(|(RatioRow { n, value, envelope }, (_, l))| SpreadRow { n, l, ratio: value, envelope })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaCheck {
    pub max_difference: i64,
    pub holds: bool,
}

/// Checks `|L_γ′(α) − L_γ(α)| ≤ 2J` over the family, for `γ′` lying between
/// the translates `j` and `j + J` of `γ = {x = 0}`.
pub fn gamma_independence_check(
    arcs: &[Arc],
    gamma_prime: &Transversal,
    j: i64,
    big_j: i64,
) -> Result<GammaCheck, GrowthError> {
    let (lo, hi) = gamma_prime.x_range();
    if big_j < 0 || lo < j as f64 || hi > (j + big_j) as f64 {
        return Err(GrowthError::InvalidArgument(format!("γ′ spans [{lo}, {hi}], outside [{j}, {}]", j + big_j)));
    }
    let max_difference = arcs
        .iter()
        .map(|a| (crossing_count(a, gamma_prime) - crossing_count(a, &Transversal::Vertical)).abs())
        .max()
        .unwrap_or(0);
    Ok(GammaCheck { max_difference, holds: max_difference <= 2 * big_j })
}

/// A random arc from `y = 0` to `y = 1` with `interior` vertices at sorted
/// random heights and abscissae in `[−x_span, x_span]`.
pub fn random_arc<R: Rng + ?Sized>(rng: &mut R, interior: usize, x_span: f64) -> Arc {
    let mut ys: Vec<f64> = (0..interior).map(|_| rng.gen_range(0.0..1.0)).collect();
    ys.sort_by(f64::total_cmp);
    let mut v = Vec::with_capacity(interior + 2);
    v.push([rng.gen_range(-x_span..=x_span), 0.0]);
    v.extend(ys.into_iter().map(|y| [rng.gen_range(-x_span..=x_span), y]));
    v.push([rng.gen_range(-x_span..=x_span), 1.0]);
    // consecutive duplicates have probability zero; accept as is
    Arc { vertices: v }
}

pub const ARC_NAMES: &[&str] = &["vertical", "slanted"];

/// `vertical`: `{0} × [0,1]`; `slanted`: `(¼, 0)` to `(¾, 1)`, strictly
/// inside `0 < x < 1`.
pub fn named_arc(name: &str) -> Result<Arc, GrowthError> {
    match name {
        "vertical" => Arc::new(vec![[0.0, 0.0], [0.0, 1.0]]),
        "slanted" => Arc::new(vec![[0.25, 0.0], [0.75, 1.0]]),
        other => Err(GrowthError::UnknownCurve(other.to_string())),
    }
}

/// Every word of length `≤ max_len` in `generators` letters and their
/// inverses, shortest first, without free reduction. There are
/// `Σ (2g)^k` of them.
pub fn words_up_to(generators: usize, max_len: usize) -> Vec<Word> {
    let letters: Vec<Token> =
        (0..generators).flat_map(|g| [Token::new(g, false), Token::new(g, true)]).collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &t in &letters {
                let mut v = w.tokens().to_vec();
                v.push(t);
                next.push(Word::new(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct TlenSample {
    pub word: Word,
    pub l: i64,
    pub increment: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TlenReport {
    /// `L(α)`.
    pub base: i64,
    /// Largest increment of a single letter (floored at 0).
    pub c_single: f64,
    /// `max (L(wα) − L(α))/|w|` over the non-empty sampled words.
    pub c_hat: f64,
    pub samples: Vec<TlenSample>,
    /// No sampled word exceeds `L(α) + c_single·|w|`.
    pub pass: bool,
}

/// Empirical constant in `L(wα) ≤ L(α) + C|w|` for words in the generator
/// lifts. Words act rightmost letter first; inverse letters need lifts with
/// inverses.
pub fn tlen_growth_check(gens: &[Lift], arc: &Arc, words: &[Word], max_seg: f64) -> Result<TlenReport, GrowthError> {
    let mut letters: Vec<[Option<Lift>; 2]> = Vec::with_capacity(gens.len());
    for g in gens {
        g.check_contract()?;
        if !g.preserves_strip() {
            return Err(GrowthError::InvalidArgument(format!("lift '{}' does not preserve the strip", g.name())));
        }
        letters.push([Some(g.clone()), g.inverse().ok()]);
    }
    let letter = |t: &Token| -> Result<&Lift, GrowthError> {
        let pair = letters.get(t.gen).ok_or_else(|| GrowthError::InvalidArgument(format!("no generator {}", t.gen)))?;
        pair[t.inverse as usize]
            .as_ref()
            .ok_or_else(|| GrowthError::InvalidArgument(format!("generator {} has no inverse", t.gen)))
    };
    let act = |w: &Word| -> Result<i64, GrowthError> {
        let mut cur = arc.clone();
        for t in w.tokens().iter().rev() {
            cur = cur.image(letter(t)?, max_seg);
        }
        Ok(crossing_count(&cur, &Transversal::Vertical))
    };
    let base = crossing_count(arc, &Transversal::Vertical);
    let mut c_single: f64 = 0.0;
    for (gen, pair) in letters.iter().enumerate() {
        for (inv, l) in pair.iter().enumerate() {
            if l.is_some() {
                let w = Word::new(vec![Token::new(gen, inv == 1)]);
                c_single = c_single.max((act(&w)? - base) as f64);
            }
        }
    }
    let mut samples = Vec::with_capacity(words.len());
    let mut c_hat: f64 = 0.0;
    let mut pass = true;
    for w in words {
        let l = act(w)?;
        let increment = l - base;
        if !w.is_empty() {
            c_hat = c_hat.max(increment as f64 / w.token_count() as f64);
        }
        if increment as f64 > c_single * w.token_count() as f64 {
            pass = false;
        }
        samples.push(TlenSample { word: w.clone(), l, increment });
    }
    Ok(TlenReport { base, c_single, c_hat, samples, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::build_lift;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Brute force: walk each segment finely and collect the translates it
    /// touches, with an exact check at the vertices.
    fn brute_l(arc: &Arc) -> i64 {
        let mut hit = std::collections::BTreeSet::new();
        for w in arc.vertices().windows(2) {
            let (p, q) = (w[0], w[1]);
            let (a, b) = (p[0].min(q[0]), p[0].max(q[0]));
            for i in (a.ceil() as i64)..=(b.floor() as i64) {
                hit.insert(i);
            }
        }
        match (hit.first(), hit.last()) {
            (Some(&lo), Some(&hi)) => (hi + 1 - (lo - 1) - 2).max(0),
            _ => 0,
        }
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(crossing_count(&named_arc("vertical").unwrap(), &Transversal::Vertical), 0);
        assert_eq!(crossing_count(&named_arc("slanted").unwrap(), &Transversal::Vertical), 0);
        let five = Arc::new(vec![[0.0, 0.0], [5.0, 1.0]]).unwrap();
        assert_eq!(crossing_count(&five, &Transversal::Vertical), 5);
        let just_short = Arc::new(vec![[0.0, 0.0], [4.999, 1.0]]).unwrap();
        assert_eq!(crossing_count(&just_short, &Transversal::Vertical), 4);
    }

    #[test]
    fn crossing_count_against_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let a = random_arc(&mut rng, 4, 6.0);
            assert_eq!(crossing_count(&a, &Transversal::Vertical), brute_l(&a));
        }
    }

    #[test]
    fn deck_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = Transversal::graph(vec![(0.0, 0.1), (0.4, 0.9), (1.0, 0.3)]).unwrap();
        for _ in 0..200 {
            let a = random_arc(&mut rng, 3, 4.0);
            for k in [-3, 1, 7] {
                assert_eq!(crossing_count(&a.translate(k), &g), crossing_count(&a, &g));
                assert_eq!(crossing_count(&a.translate(k), &Transversal::Vertical), crossing_count(&a, &Transversal::Vertical));
            }
        }
    }

    #[test]
    fn spread_of_shears() {
        let v = named_arc("vertical").unwrap();
        let rows = spread(&build_lift("shear", &[]).unwrap(), &v, 40, 1e-2).unwrap();
        assert!(rows.iter().all(|r| r.l == r.n as i64));
        assert!((rows.last().unwrap().envelope - 1.0).abs() < 0.05);
        let rows3 = spread(&build_lift("shear", &[3.0]).unwrap(), &v, 20, 1e-2).unwrap();
        for (a, b) in rows.iter().zip(&rows3) {
            assert_eq!(b.l, 3 * a.l);
            assert_eq!(b.envelope, 3.0 * a.envelope);
        }
        for lift in [build_lift("identity", &[]).unwrap(), build_lift("translation", &[0.37, 0.0]).unwrap()] {
            let rows = spread(&lift, &v, 40, 1e-2).unwrap();
            assert_eq!(rows.last().unwrap().envelope, 0.0);
        }
        assert!(spread(&build_lift("matA", &[]).unwrap(), &v, 4, 1e-2).is_err());
    }

    #[test]
    fn twist_spread_is_linear() {
        let v = named_arc("vertical").unwrap();
        let rows = spread(&build_lift("twist", &[]).unwrap(), &v, 20, 1e-2).unwrap();
        // x ranges over [0, n] along the image
        assert!(rows.iter().all(|r| r.l == r.n as i64));
    }

    #[test]
    fn gamma_independence() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let arcs: Vec<Arc> = (0..300).map(|_| random_arc(&mut rng, 5, 8.0)).collect();
        let same = gamma_independence_check(&arcs, &Transversal::graph(vec![(0.0, 0.0), (1.0, 0.0)]).unwrap(), 0, 0).unwrap();
        assert_eq!(same, GammaCheck { max_difference: 0, holds: true });
        let slanted = Transversal::graph(vec![(0.0, 0.0), (1.0, 1.0)]).unwrap();
        let shear = build_lift("shear", &[]).unwrap();
        let family: Vec<Arc> = (1..=20).map(|n| Arc::new(vec![[0.0, 0.0], shear.iterate([0.0, 1.0], n)]).unwrap()).collect();
        assert!(gamma_independence_check(&family, &slanted, 0, 1).unwrap().holds);
        let wiggly = Transversal::graph(vec![(0.0, 2.0), (0.2, 5.0), (0.4, 2.1), (0.6, 4.9), (0.8, 2.0), (1.0, 3.5)]).unwrap();
        assert!(gamma_independence_check(&arcs, &wiggly, 2, 3).unwrap().holds);
        assert!(gamma_independence_check(&arcs, &wiggly, 2, 2).is_err());
    }

    #[test]
    fn growth_bound() {
        let v = named_arc("vertical").unwrap();
        let words = words_up_to(1, 8);
        let r = tlen_growth_check(&[build_lift("shear", &[]).unwrap()], &v, &words, 1e-2).unwrap();
        assert_eq!((r.c_hat, r.c_single, r.pass), (1.0, 1.0, true));
        assert_eq!(r.samples[0].increment, 0);

        let ts = [build_lift("translation", &[0.3, 0.0]).unwrap(), build_lift("translation", &[-0.45, 0.0]).unwrap()];
        let r = tlen_growth_check(&ts, &v, &words_up_to(2, 4), 1e-2).unwrap();
        assert_eq!(r.c_hat, 0.0);
        assert!(r.pass);
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(words_up_to(1, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(words_up_to(2, 2).len(), 1 + 4 + 16);
    }
}

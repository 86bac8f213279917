use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{cayley_ball_with, eval_word, verify_certificate, BfsOptions, GroupOracle, Witness, Word, WordError};

/// One row of a distortion series: `tokens / power` and its running minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRow {
    pub n: u64,
    pub power: BigInt,
    pub tokens: usize,
    pub ratio: BigRational,
    pub envelope: BigRational,
}

impl SeriesRow {
    pub fn ratio_f64(&self) -> f64 {
        self.ratio.to_f64().unwrap_or(f64::NAN)
    }

    pub fn envelope_f64(&self) -> f64 {
        self.envelope.to_f64().unwrap_or(f64::NAN)
    }
}

/// Ratios `tokens/power` of verified certificates with their running
/// minimum. Every certificate is re-verified; any failure aborts the series.
pub fn distortion_series<O: GroupOracle>(
    oracle: &O,
    witnesses: &[Witness],
) -> Result<Vec<SeriesRow>, WordError> {
    let mut rows = Vec::with_capacity(witnesses.len());
    let mut envelope: Option<BigRational> = None;
    for w in witnesses {
        let cert = &w.certificate;
        if !verify_certificate(oracle, cert) || w.power <= BigInt::zero() {
            return Err(WordError::UnverifiedCertificate { n: cert.n });
        }
        let ratio = BigRational::new(BigInt::from(cert.tokens), w.power.clone());
        let env = match envelope {
            Some(e) if e < ratio => e,
            _ => ratio.clone(),
        };
        envelope = Some(env.clone());
        rows.push(SeriesRow {
            n: cert.n,
            power: w.power.clone(),
            tokens: cert.tokens,
            ratio,
            envelope: env,
        });
    }
    Ok(rows)
}

/// Upper bound `|gⁿ| / n` for one power.
#[derive(Clone, Debug, PartialEq)]
pub struct TranslationSample {
    pub n: u64,
    pub length: u32,
    /// `true` when `length` is the exact word length (found in the ball),
    /// `false` when it comes from a supplied word.
    pub exact: bool,
    pub ratio: f64,
    pub envelope: f64,
}

/// Upper bounds on the translation length `lim |gⁿ|/n`.
///
/// Exact lengths come from the Cayley ball of the given radius; for powers
/// outside the ball, words in `upper_bounds` (pairs `(n, word)`) are used
/// after checking that they evaluate to `gⁿ`. Powers resolved by neither are
/// skipped. The running minimum of the ratios bounds the limit from above.
pub fn translation_length_estimate<O: GroupOracle>(
    oracle: &O,
    g: &O::Elem,
    n_max: u64,
    radius: u32,
    opts: &BfsOptions,
    upper_bounds: &[(u64, Word)],
) -> Result<Vec<TranslationSample>, WordError> {
    if n_max == 0 {
        return Err(WordError::InvalidArgument("n_max must be at least 1".into()));
    }
    let ball = cayley_ball_with(oracle, radius, opts)?;
    let mut out: Vec<TranslationSample> = Vec::new();
    let mut power = oracle.identity();
    for n in 1..=n_max {
        power = oracle.multiply(&power, g)?;
        let key = oracle.key(&power);
        let resolved = match ball.length(&key) {
            Some(len) => Some((len, true)),
            None => {
                let mut best: Option<u32> = None;
                for (m, w) in upper_bounds.iter().filter(|(m, _)| *m == n) {
                    if oracle.key(&eval_word(oracle, w)?) != key {
                        return Err(WordError::UnverifiedCertificate { n: *m });
                    }
                    let len = w.token_count() as u32;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
                best.map(|b| (b, false))
            }
        };
        if let Some((length, exact)) = resolved {
            let ratio = f64::from(length) / n as f64;
            let envelope = out.last().map_or(ratio, |s| s.envelope.min(ratio));
            out.push(TranslationSample { n, length, exact, ratio, envelope });
        }
    }
    if out.is_empty() {
        return Err(WordError::Unknown);
    }
    Ok(out)
}

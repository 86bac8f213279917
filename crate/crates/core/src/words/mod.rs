//! Words in finitely generated groups, exact word length by breadth-first
//! search over Cayley balls, and certificates for upper bounds on `|gⁿ|`.
//!
//! Word length counts every token once, inverses included: the generating
//! set is always taken symmetric.

mod ball;
mod certificate;
mod series;

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraError;

pub use ball::{cayley_ball, cayley_ball_with, word_length_exact, BfsOptions, CayleyBall, FrontierOrder};
pub use certificate::{verify_certificate, Certificate, Witness};
pub use series::{
    distortion_series, translation_length_estimate, SeriesRow, TranslationSample,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator index {index} out of range (group has {count} generators)")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("BallTooLarge: node cap exceeded after radius {radius_reached} with {nodes} nodes stored")]
    BallTooLarge {
        radius_reached: u32,
        nodes: usize,
        /// Sphere sizes for radii `0..=radius_reached`.
        sphere_sizes: Vec<usize>,
    },
    #[error("UnverifiedCertificate: certificate for n = {n} does not evaluate to its target")]
    UnverifiedCertificate { n: u64 },
    #[error("Unknown: no power resolved within the search window")]
    Unknown,
    #[error("InvalidKey: {0}")]
    InvalidKey(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// One letter `g_i^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "(usize, i8)", try_from = "(usize, i8)")]
pub struct Token {
    pub gen: usize,
    pub inverse: bool,
}

impl Token {
    pub const fn new(gen: usize, inverse: bool) -> Self {
        Self { gen, inverse }
    }

    pub fn sign(&self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Self { gen: self.gen, inverse: !self.inverse }
    }
}

impl From<Token> for (usize, i8) {
    fn from(t: Token) -> Self {
        (t.gen, t.sign())
    }
}

impl TryFrom<(usize, i8)> for Token {
    type Error = String;
    fn try_from((gen, sign): (usize, i8)) -> Result<Self, String> {
        match sign {
            1 => Ok(Token::new(gen, false)),
            -1 => Ok(Token::new(gen, true)),
            s => Err(format!("token sign must be ±1, got {s}")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Token>);

impl Word {
    pub fn new(tokens: Vec<Token>) -> Self {
        Self(tokens)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `g_gen^exp` spelled out letter by letter.
    pub fn power(gen: usize, exp: i64) -> Self {
        let t = Token::new(gen, exp < 0);
        Self(vec![t; exp.unsigned_abs() as usize])
    }

    pub fn token_count(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn tokens_mut(&mut self) -> &mut [Token] {
        &mut self.0
    }

    pub fn concat(mut self, other: &Word) -> Self {
        self.0.extend_from_slice(&other.0);
        self
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|t| t.inv()).collect())
    }

    /// Product of words, left to right.
    pub fn product<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Self {
        Self(parts.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }
}

impl FromIterator<Token> for Word {
    fn from_iter<I: IntoIterator<Item = Token>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    /// Generators print as `a, b, c, …`, inverses in upper case.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for t in &self.0 {
            let c = (b'a' + (t.gen % 26) as u8) as char;
            if t.inverse {
                write!(f, "{}", c.to_ascii_uppercase())?;
            } else {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// A finitely generated group presented by exact multiplication and an
/// injective canonical key.
pub trait GroupOracle: Sync {
    type Elem: Clone + Send + Sync;
    type Key: Clone + Eq + Ord + Hash + Send + Sync + fmt::Display + fmt::Debug;

    /// Group id used in certificates and on the command line.
    fn name(&self) -> &str;
    fn generators(&self) -> &[Self::Elem];
    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError>;
    fn invert(&self, a: &Self::Elem) -> Result<Self::Elem, AlgebraError>;
    /// Must satisfy `key(a) == key(b)` iff `a == b` in the group.
    fn key(&self, a: &Self::Elem) -> Self::Key;
    /// Inverse of the `Display` form of [`GroupOracle::Key`].
    fn parse_key(&self, s: &str) -> Result<Self::Key, WordError>;

    fn power(&self, g: &Self::Elem, n: u64) -> Result<Self::Elem, AlgebraError> {
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.multiply(&acc, g)?;
        }
        Ok(acc)
    }
}

/// Letters `g_i` and `g_i⁻¹` for every generator, in token order.
pub(crate) fn symmetric_generators<O: GroupOracle>(
    oracle: &O,
) -> Result<Vec<(Token, O::Elem)>, WordError> {
    let mut out = Vec::with_capacity(2 * oracle.generators().len());
    for (i, g) in oracle.generators().iter().enumerate() {
        out.push((Token::new(i, false), g.clone()));
        out.push((Token::new(i, true), oracle.invert(g)?));
    }
    Ok(out)
}

/// Left-to-right product of the generator images of `w`.
pub fn eval_word<O: GroupOracle>(oracle: &O, w: &Word) -> Result<O::Elem, WordError> {
    let gens = oracle.generators();
    let mut inverses: Vec<Option<O::Elem>> = vec![None; gens.len()];
    let mut acc = oracle.identity();
    for t in w.tokens() {
        let g = gens.get(t.gen).ok_or(WordError::GeneratorOutOfRange {
            index: t.gen,
            count: gens.len(),
        })?;
        let letter = if t.inverse {
            if inverses[t.gen].is_none() {
                inverses[t.gen] = Some(oracle.invert(g)?);
            }
            inverses[t.gen].as_ref().unwrap()
        } else {
            g
        };
        acc = oracle.multiply(&acc, letter)?;
    }
    Ok(acc)
}

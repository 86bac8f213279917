use std::fmt;

use crate::algebra::AlgebraError;
use crate::words::{GroupOracle, WordError};

/// `ℤ^rank` with its standard basis; the undistorted reference group.
#[derive(Clone, Debug)]
pub struct FreeAbelian {
    gens: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VecKey(pub Vec<i64>);

impl fmt::Display for VecKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FreeAbelian {
    pub fn new(rank: usize) -> Self {
        let gens = (0..rank)
            .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
            .collect();
        Self { gens }
    }
}

impl GroupOracle for FreeAbelian {
    type Elem = Vec<i64>;
    type Key = VecKey;

    fn name(&self) -> &str {
        "zn"
    }

    fn generators(&self) -> &[Vec<i64>] {
        &self.gens
    }

    fn identity(&self) -> Vec<i64> {
        vec![0; self.gens.len()]
    }

    fn multiply(&self, a: &Vec<i64>, b: &Vec<i64>) -> Result<Vec<i64>, AlgebraError> {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.checked_add(*y).ok_or(AlgebraError::Overflow("free abelian sum")))
            .collect()
    }

    fn invert(&self, a: &Vec<i64>) -> Result<Vec<i64>, AlgebraError> {
        a.iter()
            .map(|x| x.checked_neg().ok_or(AlgebraError::Overflow("free abelian negation")))
            .collect()
    }

    fn key(&self, a: &Vec<i64>) -> VecKey {
        VecKey(a.clone())
    }

    fn parse_key(&self, s: &str) -> Result<VecKey, WordError> {
        s.split(',')
            .map(|p| p.trim().parse().map_err(|_| WordError::InvalidKey(s.to_string())))
            .collect::<Result<Vec<i64>, _>>()
            .and_then(|v| {
                if v.len() == self.gens.len() {
                    Ok(VecKey(v))
                } else {
                    Err(WordError::InvalidKey(s.to_string()))
                }
            })
    }
}

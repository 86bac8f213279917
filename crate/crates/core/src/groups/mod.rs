//! Exact models of the example group actions and their distortion
//! certificates.

mod abelian;
mod calegari;
mod heis;
mod mess;
mod psl2;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::words::WordError;

pub use abelian::FreeAbelian;
pub use calegari::{calegari_action, AffineMap, FormalReal, PlaneAction};
pub use heis::{heisenberg_certificate, heisenberg_witness, HeisGroup};
pub use mess::{mess_certificate, mess_witness, trace_power, trace_power_matrix, MessElt, MessGroup, MessKey};
pub use psl2::{
    psl2_certificate, psl2_exponent, psl2_product_embedding, psl2_witness, Psl2Group, Psl2Pair,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("NonIntegerExponent: λ^(2n) + λ^(-2n) has nonzero √2-part {0}")]
    NonIntegerExponent(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Group ids accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupId {
    Mess,
    Heis,
    Psl2Sqrt2,
}

impl GroupId {
    pub fn as_str(&self) -> &'static str {
        match self {
            GroupId::Mess => "mess",
            GroupId::Heis => "heis",
            GroupId::Psl2Sqrt2 => "psl2sqrt2",
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mess" => Ok(GroupId::Mess),
            "heis" => Ok(GroupId::Heis),
            "psl2sqrt2" => Ok(GroupId::Psl2Sqrt2),
            other => Err(format!("unknown group id '{other}'")),
        }
    }
}

pub(crate) fn parse_ints<const N: usize>(s: &str) -> Result<[i64; N], WordError> {
    let parts: Vec<&str> = s.trim().trim_start_matches('(').trim_end_matches(')').split(',').collect();
    if parts.len() != N {
        return Err(WordError::InvalidKey(format!("expected {N} comma-separated integers, got '{s}'")));
    }
    let mut out = [0i64; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.trim().parse().map_err(|_| WordError::InvalidKey(format!("bad integer '{p}' in '{s}'")))?;
    }
    Ok(out)
}

pub(crate) fn parse_bigints<const N: usize>(s: &str) -> Result<[num_bigint::BigInt; N], WordError> {
    let parts: Vec<&str> = s.trim().trim_start_matches('(').trim_end_matches(')').split(',').collect();
    if parts.len() != N {
        return Err(WordError::InvalidKey(format!("expected {N} comma-separated integers, got '{s}'")));
    }
    let mut out: Vec<num_bigint::BigInt> = Vec::with_capacity(N);
    for p in parts {
        out.push(p.trim().parse().map_err(|_| WordError::InvalidKey(format!("bad integer '{p}' in '{s}'")))?);
    }
    Ok(out.try_into().expect("length checked"))
}

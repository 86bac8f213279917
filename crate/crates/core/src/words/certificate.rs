use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{eval_word, GroupOracle, Word};

/// A word claimed to spell a target element.
///
/// Serializes as
/// `{"group", "n", "target", "word": [[gen, ±1], …], "tokens", "verified"}`
/// with `target` the canonical key string of the element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub group: String,
    pub n: u64,
    pub target: String,
    pub word: Word,
    pub tokens: usize,
    pub verified: bool,
}

impl Certificate {
    /// Packages `word` as a certificate for `target`; `verified` is computed
    /// by evaluating the word, never assumed.
    pub fn build<O: GroupOracle>(oracle: &O, n: u64, target: &O::Elem, word: Word) -> Self {
        let mut cert = Certificate {
            group: oracle.name().to_string(),
            n,
            target: oracle.key(target).to_string(),
            tokens: word.token_count(),
            word,
            verified: false,
        };
        cert.verified = verify_certificate(oracle, &cert);
        cert
    }
}

/// A certificate together with the exponent `m` such that its target is
/// `fᵐ` for the distorted element `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub power: BigInt,
    pub certificate: Certificate,
}

/// True iff the certificate's word evaluates exactly to its target.
pub fn verify_certificate<O: GroupOracle>(oracle: &O, cert: &Certificate) -> bool {
    if cert.group != oracle.name() || cert.tokens != cert.word.token_count() {
        return false;
    }
    let Ok(target) = oracle.parse_key(&cert.target) else {
        return false;
    };
    match eval_word(oracle, &cert.word) {
        Ok(e) => oracle.key(&e) == target,
        Err(_) => false,
    }
}

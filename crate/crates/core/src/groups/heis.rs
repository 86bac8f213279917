use num_bigint::BigInt;

use super::{parse_ints, ModelError};
use crate::algebra::{AlgebraError, HeisElt};
use crate::words::{Certificate, GroupOracle, Witness, Word, WordError};

/// The integer Heisenberg group with a chosen finite generating set.
#[derive(Clone, Debug)]
pub struct HeisGroup {
    gens: Vec<HeisElt>,
}

pub const G: HeisElt = HeisElt::new(1, 0, 0);
pub const H: HeisElt = HeisElt::new(0, 1, 0);
/// `[g, h]`, generator of the center.
pub const F: HeisElt = HeisElt::new(0, 0, 1);

impl HeisGroup {
    /// Generators `g = (1,0,0)`, `h = (0,1,0)`.
    pub fn standard() -> Self {
        Self { gens: vec![G, H] }
    }

    /// Generators `g`, `h` and the central `f = [g,h]`.
    pub fn with_center() -> Self {
        Self { gens: vec![G, H, F] }
    }

    /// The cyclic center `⟨f⟩` on its own.
    pub fn center_only() -> Self {
        Self { gens: vec![F] }
    }

    pub fn with_generators(gens: Vec<HeisElt>) -> Self {
        Self { gens }
    }
}

impl GroupOracle for HeisGroup {
    type Elem = HeisElt;
    type Key = HeisElt;

    fn name(&self) -> &str {
        "heis"
    }

    fn generators(&self) -> &[HeisElt] {
        &self.gens
    }

    fn identity(&self) -> HeisElt {
        HeisElt::IDENTITY
    }

    fn multiply(&self, a: &HeisElt, b: &HeisElt) -> Result<HeisElt, AlgebraError> {
        a.mul(b)
    }

    fn invert(&self, a: &HeisElt) -> Result<HeisElt, AlgebraError> {
        a.inv()
    }

    fn key(&self, a: &HeisElt) -> HeisElt {
        *a
    }

    fn parse_key(&self, s: &str) -> Result<HeisElt, WordError> {
        let [x, y, z] = parse_ints::<3>(s)?;
        Ok(HeisElt::new(x, y, z))
    }
}

/// `[gⁿ, hⁿ] = gⁿ hⁿ g⁻ⁿ h⁻ⁿ`, a word of `4n` tokens for `f^(n²)`.
///
/// Token indices refer to [`HeisGroup::standard`].
pub fn heisenberg_certificate(n: u64) -> Result<Certificate, ModelError> {
    if n == 0 {
        return Err(ModelError::InvalidArgument("n must be at least 1".into()));
    }
    let k = i64::try_from(n).map_err(|_| AlgebraError::Overflow("Heisenberg certificate"))?;
    let z = k.checked_mul(k).ok_or(AlgebraError::Overflow("Heisenberg certificate"))?;
    let word = Word::product(&[Word::power(0, k), Word::power(1, k), Word::power(0, -k), Word::power(1, -k)]);
    let group = HeisGroup::standard();
    Ok(Certificate::build(&group, n, &HeisElt::new(0, 0, z), word))
}

pub fn heisenberg_witness(n: u64) -> Result<Witness, ModelError> {
    let certificate = heisenberg_certificate(n)?;
    Ok(Witness { power: BigInt::from(n) * BigInt::from(n), certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{eval_word, verify_certificate};

    #[test]
    fn certificates() {
        let c1 = heisenberg_certificate(1).unwrap();
        assert_eq!(c1.tokens, 4);
        assert_eq!(c1.target, "(0,0,1)");
        assert!(c1.verified);
        let c7 = heisenberg_certificate(7).unwrap();
        assert_eq!(c7.tokens, 28);
        assert_eq!(c7.target, "(0,0,49)");
        assert!(verify_certificate(&HeisGroup::standard(), &c7));
        let c5 = heisenberg_certificate(5).unwrap();
        assert_eq!(c5.target, "(0,0,25)");
        assert!(verify_certificate(&HeisGroup::standard(), &c5));
    }

    #[test]
    fn tampered_certificate_rejected() {
        let mut c = heisenberg_certificate(5).unwrap();
        c.word.tokens_mut()[3] = c.word.tokens()[3].inv();
        assert!(!verify_certificate(&HeisGroup::standard(), &c));
    }

    #[test]
    fn commutator_word_evaluates_to_center() {
        let w = heisenberg_certificate(1).unwrap().word;
        assert_eq!(eval_word(&HeisGroup::standard(), &w).unwrap(), F);
    }

    #[test]
    fn center_commutes_with_samples() {
        for x in -3..=3 {
            for y in -3..=3 {
                let u = HeisElt::new(x, y, x * y - 2);
                assert_eq!(u.mul(&F).unwrap(), F.mul(&u).unwrap());
                let c = HeisElt::new(0, 0, 5);
                assert!(c.is_central());
                // non-central elements fail to commute with some generator
                if x != 0 || y != 0 {
                    let gu = G.mul(&u).unwrap() != u.mul(&G).unwrap();
                    let hu = H.mul(&u).unwrap() != u.mul(&H).unwrap();
                    assert!(gu || hu);
                }
            }
        }
    }
}

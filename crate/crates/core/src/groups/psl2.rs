//! The subgroup of `PSL(2, ℤ[√2])` generated by `A = diag(√2−1, √2+1)` and
//! the parabolic `B = (1 1; 0 1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{parse_bigints, ModelError};
use crate::algebra::{AlgebraError, Mat2, ProjMat2, QuadInt};
use crate::words::{Certificate, GroupOracle, Witness, Word, WordError};

/// Key printed as the eight integers `a11,b11,a12,b12,a21,b21,a22,b22` of the
/// canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Psl2Key(pub ProjMat2<QuadInt>);

impl fmt::Display for Psl2Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0.matrix();
        let parts: Vec<String> = m.entries().iter().flat_map(|q| [q.a.to_string(), q.b.to_string()]).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct Psl2Group {
    gens: [ProjMat2<QuadInt>; 2],
}

impl Default for Psl2Group {
    fn default() -> Self {
        Self::new()
    }
}

impl Psl2Group {
    pub const A: usize = 0;
    pub const B: usize = 1;

    pub fn new() -> Self {
        Self { gens: [ProjMat2::canonicalize(Self::a_matrix()), ProjMat2::canonicalize(Self::b_matrix())] }
    }

    pub fn a_matrix() -> Mat2<QuadInt> {
        Mat2::diag(QuadInt::lambda_inv(), QuadInt::lambda())
    }

    pub fn b_matrix() -> Mat2<QuadInt> {
        Mat2::new(QuadInt::one(), QuadInt::one(), QuadInt::zero(), QuadInt::one())
    }

    /// `Bᵐ = (1 m; 0 1)`.
    pub fn b_power(m: &BigInt) -> ProjMat2<QuadInt> {
        ProjMat2::canonicalize(Mat2::new(
            QuadInt::one(),
            QuadInt::new(m.clone(), 0),
            QuadInt::zero(),
            QuadInt::one(),
        ))
    }
}

impl GroupOracle for Psl2Group {
    type Elem = ProjMat2<QuadInt>;
    type Key = Psl2Key;

    fn name(&self) -> &str {
        "psl2sqrt2"
    }

    fn generators(&self) -> &[ProjMat2<QuadInt>] {
        &self.gens
    }

    fn identity(&self) -> ProjMat2<QuadInt> {
        ProjMat2::identity()
    }

    fn multiply(&self, a: &ProjMat2<QuadInt>, b: &ProjMat2<QuadInt>) -> Result<ProjMat2<QuadInt>, AlgebraError> {
        Ok(a.mul(b))
    }

    fn invert(&self, a: &ProjMat2<QuadInt>) -> Result<ProjMat2<QuadInt>, AlgebraError> {
        a.inverse()
    }

    fn key(&self, a: &ProjMat2<QuadInt>) -> Psl2Key {
        Psl2Key(a.clone())
    }

    fn parse_key(&self, s: &str) -> Result<Psl2Key, WordError> {
        let v = parse_bigints::<8>(s)?;
        let q = |i: usize| QuadInt::new(v[2 * i].clone(), v[2 * i + 1].clone());
        let m = Mat2::new(q(0), q(1), q(2), q(3));
        let canon = ProjMat2::canonicalize(m.clone());
        if canon.matrix() != &m {
            return Err(WordError::InvalidKey(format!("'{s}' is not in canonical sign form")));
        }
        Ok(Psl2Key(canon))
    }
}

/// `m = λ²ⁿ + λ⁻²ⁿ` for `λ = 1 + √2`, computed in `ℤ[√2]`.
pub fn psl2_exponent(n: u64) -> Result<BigInt, ModelError> {
    let e = u32::try_from(2 * n).map_err(|_| AlgebraError::Overflow("psl2 exponent"))?;
    let m = &QuadInt::lambda().pow(e) + &QuadInt::lambda_inv().pow(e);
    if !m.is_rational() {
        return Err(ModelError::NonIntegerExponent(m.b.to_string()));
    }
    Ok(m.a)
}

/// `(A⁻ⁿBAⁿ)(AⁿBA⁻ⁿ)`, a word of `4n + 2` tokens for `Bᵐ`. The middle
/// `AⁿAⁿ` is kept as written rather than merged.
pub fn psl2_certificate(n: u64) -> Result<Certificate, ModelError> {
    if n == 0 {
        return Err(ModelError::InvalidArgument("n must be at least 1".into()));
    }
    let k = i64::try_from(n).map_err(|_| AlgebraError::Overflow("psl2 certificate"))?;
    let m = psl2_exponent(n)?;
    let (a, b) = (Psl2Group::A, Psl2Group::B);
    let word = Word::product(&[
        Word::power(a, -k),
        Word::power(b, 1),
        Word::power(a, k),
        Word::power(a, k),
        Word::power(b, 1),
        Word::power(a, -k),
    ]);
    Ok(Certificate::build(&Psl2Group::new(), n, &Psl2Group::b_power(&m), word))
}

pub fn psl2_witness(n: u64) -> Result<Witness, ModelError> {
    Ok(Witness { power: psl2_exponent(n)?, certificate: psl2_certificate(n)? })
}

/// `ψ(g) = (g, ḡ)`, the diagonal embedding into `PSL(2,ℝ) × PSL(2,ℝ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Psl2Pair {
    pub g: ProjMat2<QuadInt>,
    pub gbar: ProjMat2<QuadInt>,
}

impl Psl2Pair {
    pub fn mul(&self, rhs: &Psl2Pair) -> Psl2Pair {
        Psl2Pair { g: self.g.mul(&rhs.g), gbar: self.gbar.mul(&rhs.gbar) }
    }

    pub fn is_identity(&self) -> bool {
        self.g == ProjMat2::identity() && self.gbar == ProjMat2::identity()
    }
}

/// Replaces every entry `a + b√2` by `a − b√2` in the second coordinate.
pub fn psl2_product_embedding(g: &ProjMat2<QuadInt>) -> Psl2Pair {
    let gbar = ProjMat2::canonicalize(g.matrix().map(QuadInt::conj));
    Psl2Pair { g: g.clone(), gbar }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::eval_word;

    #[test]
    fn exponents() {
        assert_eq!(psl2_exponent(1).unwrap(), BigInt::from(6));
        assert_eq!(psl2_exponent(2).unwrap(), BigInt::from(34));
        assert_eq!(psl2_exponent(3).unwrap(), BigInt::from(198));
    }

    #[test]
    fn exponent_is_trace_of_diagonal_power() {
        let d = Mat2::diag(QuadInt::lambda(), QuadInt::lambda_inv());
        for n in 1..=10u64 {
            let tr = d.pow(2 * n).trace();
            assert!(tr.is_rational());
            assert_eq!(tr.a, psl2_exponent(n).unwrap());
        }
    }

    #[test]
    fn conjugates_of_b() {
        let grp = Psl2Group::new();
        for n in 1..=4i64 {
            let w = Word::product(&[Word::power(0, -n), Word::power(1, 1), Word::power(0, n)]);
            let e = eval_word(&grp, &w).unwrap();
            let lam = QuadInt::lambda().pow(2 * n as u32);
            let expect = ProjMat2::canonicalize(Mat2::new(QuadInt::one(), lam, QuadInt::zero(), QuadInt::one()));
            assert_eq!(e, expect);
        }
    }

    #[test]
    fn certificates_verify() {
        for n in 1..=10 {
            let c = psl2_certificate(n).unwrap();
            assert!(c.verified, "n = {n}");
            assert_eq!(c.tokens as u64, 4 * n + 2);
        }
    }

    #[test]
    fn embedding() {
        let grp = Psl2Group::new();
        let a = grp.generators()[0].clone();
        let b = grp.generators()[1].clone();
        let pb = psl2_product_embedding(&b);
        assert_eq!(pb.g, pb.gbar);
        let pa = psl2_product_embedding(&a);
        let pai = psl2_product_embedding(&a.inverse().unwrap());
        assert!(pa.mul(&pai).is_identity());
        let ab = a.mul(&b);
        assert_eq!(psl2_product_embedding(&ab), pa.mul(&pb));
        // conjugation swaps the diagonal entries of A up to sign
        assert_ne!(pa.g, pa.gbar);
    }

    #[test]
    fn key_round_trip() {
        let grp = Psl2Group::new();
        let e = eval_word(&grp, &psl2_certificate(2).unwrap().word).unwrap();
        let k = grp.key(&e);
        assert_eq!(k.to_string(), "1,0,34,0,0,0,1,0");
        assert_eq!(grp.parse_key(&k.to_string()).unwrap(), k);
    }
}

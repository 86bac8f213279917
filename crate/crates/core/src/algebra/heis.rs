use std::fmt;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Element `(x, y, z)` of the integer Heisenberg group with product
/// `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x·y')`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HeisElt {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

const OVERFLOW: AlgebraError = AlgebraError::Overflow("Heisenberg product");

impl HeisElt {
    pub const IDENTITY: HeisElt = HeisElt { x: 0, y: 0, z: 0 };

    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Self { x, y, z }
    }

    pub fn mul(&self, rhs: &HeisElt) -> Result<HeisElt, AlgebraError> {
        let cross = self.x.checked_mul(rhs.y).ok_or(OVERFLOW)?;
        Ok(HeisElt {
            x: self.x.checked_add(rhs.x).ok_or(OVERFLOW)?,
            y: self.y.checked_add(rhs.y).ok_or(OVERFLOW)?,
            z: self.z.checked_add(rhs.z).and_then(|z| z.checked_add(cross)).ok_or(OVERFLOW)?,
        })
    }

    /// `(−x, −y, −z + xy)`
    pub fn inv(&self) -> Result<HeisElt, AlgebraError> {
        let xy = self.x.checked_mul(self.y).ok_or(OVERFLOW)?;
        Ok(HeisElt {
            x: self.x.checked_neg().ok_or(OVERFLOW)?,
            y: self.y.checked_neg().ok_or(OVERFLOW)?,
            z: self.z.checked_neg().and_then(|z| z.checked_add(xy)).ok_or(OVERFLOW)?,
        })
    }

    /// `[u, v] = u v u⁻¹ v⁻¹`
    pub fn commutator(&self, v: &HeisElt) -> Result<HeisElt, AlgebraError> {
        self.mul(v)?.mul(&self.inv()?)?.mul(&v.inv()?)
    }

    pub fn is_central(&self) -> bool {
        self.x == 0 && self.y == 0
    }
}

impl fmt::Display for HeisElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: HeisElt = HeisElt::new(1, 0, 0);
    const H: HeisElt = HeisElt::new(0, 1, 0);

    fn product(xs: &[HeisElt]) -> HeisElt {
        xs.iter().try_fold(HeisElt::IDENTITY, |acc, x| acc.mul(x)).unwrap()
    }

    #[test]
    fn commutator_of_generators_is_central_generator() {
        let e = product(&[G, H, HeisElt::new(-1, 0, 0), HeisElt::new(0, -1, 0)]);
        assert_eq!(e, HeisElt::new(0, 0, 1));
        assert_eq!(G.commutator(&H).unwrap(), HeisElt::new(0, 0, 1));
    }

    #[test]
    fn commutator_of_powers() {
        let n = 3;
        let e = product(&[
            HeisElt::new(n, 0, 0),
            HeisElt::new(0, n, 0),
            HeisElt::new(-n, 0, 0),
            HeisElt::new(0, -n, 0),
        ]);
        assert_eq!(e, HeisElt::new(0, 0, 9));
    }

    #[test]
    fn inverse_law() {
        let u = HeisElt::new(4, -7, 13);
        assert_eq!(u.mul(&u.inv().unwrap()).unwrap(), HeisElt::IDENTITY);
        assert_eq!(u.inv().unwrap().mul(&u).unwrap(), HeisElt::IDENTITY);
    }

    #[test]
    fn overflow_is_reported() {
        let big = HeisElt::new(i64::MAX / 2, 0, 0);
        let tall = HeisElt::new(0, 4, 0);
        assert_eq!(big.mul(&tall), Err(OVERFLOW));
        assert_eq!(HeisElt::new(i64::MIN, 0, 0).inv(), Err(OVERFLOW));
    }
}

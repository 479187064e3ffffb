use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::matrix::IntegerMatrix;
use super::smith::invariant_factors;

/// Finitely generated abelian group `ℤ^r ⊕ ℤ/t₁ ⊕ … ⊕ ℤ/t_k` with
/// `2 ≤ t₁ | t₂ | … | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigUint>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Returns `None` unless the torsion list is a divisibility chain of
    /// integers ≥ 2.
    pub fn new(free_rank: usize, torsion: Vec<BigUint>) -> Option<Self> {
        let two = BigUint::from(2u8);
        let ok = torsion.iter().all(|t| *t >= two)
            && torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        ok.then_some(Self { free_rank, torsion })
    }

    /// Builds from Smith invariant factors, dropping the units.
    pub(crate) fn from_invariant_factors(free_rank: usize, factors: &[BigInt]) -> Self {
        let torsion: Vec<BigUint> = factors
            .iter()
            .map(|f| f.magnitude().clone())
            .filter(|f| !f.is_one() && !f.is_zero())
            .collect();
        debug_assert!(torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        Self { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// `ℤ^cols / ⟨rows of A⟩`: each row of `relations` is one relation among the
/// column generators.
pub fn cokernel_presentation(relations: &IntegerMatrix) -> AbelianGroup {
    let factors = invariant_factors(relations);
    AbelianGroup::from_invariant_factors(relations.cols() - factors.len(), &factors)
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// `{"free_rank": r, "torsion": [...]}`; torsion coefficients are JSON
/// numbers when they fit in 64 bits and decimal strings otherwise.
impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|t| match t.to_u64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(t.to_string()),
            })
            .collect();
        let mut s = serializer.serialize_struct("AbelianGroup", 2)?;
        s.serialize_field("free_rank", &self.free_rank)?;
        s.serialize_field("torsion", &torsion)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_examples() {
        let z2 = cokernel_presentation(&IntegerMatrix::from_rows(&[vec![2]]));
        assert_eq!(z2, AbelianGroup::new(0, vec![BigUint::from(2u8)]).unwrap());

        let free3 = cokernel_presentation(&IntegerMatrix::zeros(0, 3));
        assert_eq!(free3, AbelianGroup::free(3));

        let z3 = cokernel_presentation(&IntegerMatrix::from_rows(&[vec![1, 0], vec![0, 3]]));
        assert_eq!(z3.free_rank(), 0);
        assert_eq!(z3.torsion(), &[BigUint::from(3u8)]);
    }

    #[test]
    fn validation_and_display() {
        assert!(AbelianGroup::new(0, vec![BigUint::from(1u8)]).is_none());
        assert!(AbelianGroup::new(0, vec![BigUint::from(2u8), BigUint::from(3u8)]).is_none());
        let g = AbelianGroup::new(2, vec![BigUint::from(2u8), BigUint::from(6u8)]).unwrap();
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/6");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert!(AbelianGroup::trivial().is_trivial());
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"free_rank":2,"torsion":[2,6]}"#
        );
    }
}

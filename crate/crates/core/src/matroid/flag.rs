use super::{Matroid, Subset};
use crate::error::{Error, Result};

/// A chain of flats `∅ = F_0 ⊊ F_1 ⊊ ... ⊊ F_k = E`; its length is `k`.
///
/// The bottom member is the closure of the empty set, which is `∅` for a
/// loopless matroid. The trivial matroid has the single flag `(∅)` of length 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    flats: Vec<Subset>,
}

impl Flag {
    pub fn new(m: &Matroid, flats: Vec<Subset>) -> Result<Self> {
        let flag = Self { flats };
        flag.validate(m)?;
        Ok(flag)
    }

    /// Skips validation; the caller guarantees a chain of flats of the right shape.
    pub(crate) fn from_chain(flats: Vec<Subset>) -> Self {
        Self { flats }
    }

    pub(crate) fn validate(&self, m: &Matroid) -> Result<()> {
        let (Some(&first), Some(&last)) = (self.flats.first(), self.flats.last()) else {
            return Err(Error::InvalidFlag("empty chain".into()));
        };
        if first != m.loops() {
            return Err(Error::InvalidFlag(format!(
                "starts at {first}, not the bottom flat"
            )));
        }
        if last != m.ground() {
            return Err(Error::InvalidFlag(format!(
                "ends at {last}, not the ground set"
            )));
        }
        for &f in &self.flats {
            if !m.is_flat(f) {
                return Err(Error::NotAFlat(f.to_string()));
            }
        }
        for w in self.flats.windows(2) {
            if !w[0].is_proper_subset_of(w[1]) {
                return Err(Error::InvalidFlag(format!(
                    "{} is not strictly contained in {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    /// Number of strict steps.
    pub fn len(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Consecutive pairs `(F_{i-1}, F_i)`.
    pub fn steps(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.flats.windows(2).map(|w| (w[0], w[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_chains() {
        let m = Matroid::uniform(2, 3).unwrap();
        let e = m.ground();
        let s = |x: &[usize]| Subset::from_elements(x.iter().copied());
        assert!(Flag::new(&m, vec![Subset::EMPTY, e]).is_ok());
        assert!(matches!(Flag::new(&m, vec![]), Err(Error::InvalidFlag(_))));
        assert!(matches!(
            Flag::new(&m, vec![s(&[0]), e]),
            Err(Error::InvalidFlag(_))
        ));
        assert!(matches!(
            Flag::new(&m, vec![Subset::EMPTY, s(&[0, 1])]),
            Err(Error::InvalidFlag(_))
        ));
        assert!(matches!(
            Flag::new(&m, vec![Subset::EMPTY, s(&[0, 1]), e]),
            Err(Error::NotAFlat(_))
        ));
        assert!(matches!(
            Flag::new(&m, vec![Subset::EMPTY, s(&[0]), s(&[0]), e]),
            Err(Error::InvalidFlag(_))
        ));
        assert_eq!(
            Flag::new(&m, vec![Subset::EMPTY, s(&[1]), e])
                .unwrap()
                .len(),
            2
        );
    }
}

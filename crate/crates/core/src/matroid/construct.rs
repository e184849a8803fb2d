use super::{k_subsets, Flag, Matroid, Subset, Validation, MAX_GROUND};
use crate::error::{Error, Result};

/// A minor together with the parent index of each of its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub matroid: Matroid,
    pub elements: Vec<usize>,
}

impl Minor {
    pub fn into_matroid(self) -> Matroid {
        self.matroid
    }
}

impl Matroid {
    /// `U_{r,n}`: every `r`-subset of `n` elements is a basis.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::UniformRank { r, n });
        }
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: n,
                max: MAX_GROUND,
            });
        }
        Self::from_bases(n, k_subsets(n, r), Validation::Trusted)
    }

    /// Elements of `other` are shifted past those of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Self> {
        let size = self.size() + other.size();
        if size > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size,
                max: MAX_GROUND,
            });
        }
        let bases = self.bases().iter().flat_map(|&b1| {
            other
                .bases()
                .iter()
                .map(move |&b2| b1 | b2.shift(self.size()))
        });
        Self::from_bases(size, bases, Validation::Trusted)
    }

    /// `(M | keep) / contract`, re-indexed densely over `keep \ contract`.
    pub fn minor(&self, keep: Subset, contract: Subset) -> Result<Minor> {
        self.rank_of(keep)?;
        if !contract.is_subset_of(keep) {
            return Err(Error::InvalidFlag(format!(
                "contracted set {contract} is not inside {keep}"
            )));
        }
        let frame = keep - contract;
        let base = self.rk(contract);
        let matroid =
            Matroid::from_rank_fn(frame.len(), |s| self.rk(s.expand(frame) | contract) - base)?;
        Ok(Minor {
            matroid,
            elements: frame.elements().collect(),
        })
    }

    pub fn restriction(&self, f: Subset) -> Result<Minor> {
        self.minor(f, Subset::EMPTY)
    }

    pub fn contraction(&self, f: Subset) -> Result<Minor> {
        self.minor(self.ground(), f)
    }

    /// `M_F`: the direct sum of `M|F_i / F_{i-1}` over the steps of the flag.
    pub fn degeneration(&self, flag: &Flag) -> Result<Matroid> {
        flag.validate(self)?;
        flag.steps().try_fold(Matroid::trivial(), |acc, (lo, hi)| {
            acc.direct_sum(&self.minor(hi, lo)?.matroid)
        })
    }

    /// Rank `r - 1` matroid with `rk(S) = min(rk_M(S), r - 1)`.
    pub fn truncation(&self) -> Result<Matroid> {
        let r = self.rank();
        if r == 0 {
            return Err(Error::RankOutOfRange {
                rank: 0,
                reason: "truncation needs rank at least 1",
            });
        }
        let bases = k_subsets(self.size(), r - 1).filter(|&s| self.is_independent(s));
        Matroid::from_bases(self.size(), bases, Validation::Trusted)
    }

    /// `M + e` with `e` the new last element: old bases plus `I + e` for every
    /// independent `I` of size `r - 1`.
    pub fn free_extension(&self) -> Result<Matroid> {
        let n = self.size();
        if n + 1 > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: n + 1,
                max: MAX_GROUND,
            });
        }
        let mut bases = self.bases().to_vec();
        if let Some(r1) = self.rank().checked_sub(1) {
            bases.extend(
                k_subsets(n, r1)
                    .filter(|&s| self.is_independent(s))
                    .map(|s| s.with(n)),
            );
        }
        Matroid::from_bases(n + 1, bases, Validation::Trusted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Graph;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(u(2, 3).bases().len(), 3);
        assert_eq!(u(0, 0), Matroid::trivial());
        assert_eq!(u(3, 3).bases().len(), 1);
        assert_eq!(
            Matroid::uniform(3, 2),
            Err(Error::UniformRank { r: 3, n: 2 })
        );
    }

    #[test]
    fn restriction_examples() {
        let m = Graph::complete(4).matroid().unwrap();
        assert_eq!(m.restriction(m.ground()).unwrap().matroid, m);
        let r = u(2, 4).restriction(set(&[0, 1, 3])).unwrap();
        assert_eq!(r.matroid, u(2, 3));
        assert_eq!(r.elements, vec![0, 1, 3]);
        assert_eq!(
            u(2, 4).restriction(Subset::EMPTY).unwrap().matroid,
            Matroid::trivial()
        );
    }

    #[test]
    fn contraction_examples() {
        let m = Graph::complete(4).matroid().unwrap();
        assert_eq!(m.contraction(Subset::EMPTY).unwrap().matroid, m);
        let c = u(2, 3).contraction(set(&[0])).unwrap();
        assert_eq!(c.matroid, u(1, 2));
        assert_eq!(c.elements, vec![1, 2]);
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(u(1, 1).direct_sum(&u(1, 1)).unwrap(), u(2, 2));
        let m = u(2, 4);
        assert_eq!(m.direct_sum(&Matroid::trivial()).unwrap(), m);
        assert_eq!(Matroid::trivial().direct_sum(&m).unwrap(), m);
        let s = u(2, 4).direct_sum(&u(1, 3)).unwrap();
        assert_eq!(s.bases().len(), 6 * 3);
        assert!(matches!(
            u(8, 9).direct_sum(&u(3, 8)),
            Err(Error::GroundTooLarge { .. })
        ));
    }

    #[test]
    fn degeneration_examples() {
        let m = u(2, 3);
        let whole = Flag::new(&m, vec![Subset::EMPTY, m.ground()]).unwrap();
        assert_eq!(m.degeneration(&whole).unwrap(), m);
        let f = Flag::new(&m, vec![Subset::EMPTY, set(&[0]), m.ground()]).unwrap();
        assert_eq!(
            m.degeneration(&f).unwrap(),
            u(1, 1).direct_sum(&u(1, 2)).unwrap()
        );
        let t = Matroid::trivial();
        let empty = Flag::new(&t, vec![Subset::EMPTY]).unwrap();
        assert_eq!(t.degeneration(&empty).unwrap(), t);
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(u(2, 3).truncation().unwrap(), u(1, 3));
        for n in 1..=6 {
            for r in 1..=n {
                assert_eq!(u(r, n).truncation().unwrap(), u(r - 1, n));
            }
        }
        assert!(matches!(
            u(0, 3).truncation(),
            Err(Error::RankOutOfRange { .. })
        ));
        // rank 1 truncates to all loops
        assert_eq!(u(1, 2).truncation().unwrap().loops(), set(&[0, 1]));
    }

    #[test]
    fn truncation_rank_function() {
        let m = Graph::complete(4).matroid().unwrap();
        let t = m.truncation().unwrap();
        for s in m.ground().subsets() {
            assert_eq!(t.rk(s), m.rk(s).min(m.rank() - 1));
        }
    }

    #[test]
    fn free_extension_examples() {
        for n in 1..=6 {
            for r in 1..=n {
                assert_eq!(u(r, n).free_extension().unwrap(), u(r, n + 1));
            }
        }
        assert_eq!(u(1, 1).free_extension().unwrap(), u(1, 2));
        let m = Graph::complete(4).matroid().unwrap();
        let via_trunc = m.direct_sum(&u(1, 1)).unwrap().truncation().unwrap();
        assert_eq!(m.free_extension().unwrap(), via_trunc);
    }

    #[test]
    fn free_extension_rank_function() {
        let m = Graph::cycle(4)
            .matroid()
            .unwrap()
            .direct_sum(&u(1, 2))
            .unwrap();
        let ext = m.free_extension().unwrap();
        let e = m.size();
        for s in m.ground().subsets() {
            assert_eq!(ext.rk(s), m.rk(s));
            let expected = if m.cl(s) == m.ground() {
                m.rk(s)
            } else {
                m.rk(s) + 1
            };
            assert_eq!(ext.rk(s.with(e)), expected);
        }
    }
}

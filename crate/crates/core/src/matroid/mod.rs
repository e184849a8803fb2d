//! Matroids given by explicit bases over a ground set of at most
//! [`MAX_GROUND`] elements, with the minors and extensions built from them.

mod construct;
mod flag;
mod graph;
pub mod io;
mod subset;

use crate::error::{Error, Result};

pub use construct::Minor;
pub use flag::Flag;
pub use graph::Graph;
pub use subset::{k_subsets, Elements, Subset, Subsets};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 16;

/// Whether [`Matroid::from_bases`] checks the basis exchange axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Validation {
    #[default]
    Full,
    /// Only structural checks (sizes, ranges, equal cardinality).
    Trusted,
}

/// A matroid stored as its sorted list of bases, plus the rank of every subset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    size: usize,
    rank: usize,
    bases: Vec<Subset>,
    ranks: Vec<u8>,
}

impl Matroid {
    pub fn from_bases(
        size: usize,
        bases: impl IntoIterator<Item = Subset>,
        validation: Validation,
    ) -> Result<Self> {
        if size > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size,
                max: MAX_GROUND,
            });
        }
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let Some(first) = bases.first() else {
            return Err(Error::InvalidBases("no bases given".into()));
        };
        let rank = first.len();
        let ground = Subset::full(size);
        for b in &bases {
            if !b.is_subset_of(ground) {
                return Err(Error::ElementOutOfRange {
                    element: b.span_len() - 1,
                    size,
                });
            }
            if b.len() != rank {
                return Err(Error::InvalidBases(format!(
                    "basis {b} has {} elements, expected {rank}",
                    b.len()
                )));
            }
        }
        if validation == Validation::Full {
            check_exchange(size, &bases)?;
        }
        let ranks = rank_table(size, &bases);
        Ok(Self {
            size,
            rank,
            bases,
            ranks,
        })
    }

    /// Builds from a rank function; bases are the full-rank sets of size `rank(E)`.
    pub(crate) fn from_rank_fn(size: usize, rank_of: impl Fn(Subset) -> usize) -> Result<Self> {
        let rank = rank_of(Subset::full(size));
        let bases = k_subsets(size, rank).filter(|s| rank_of(*s) == rank);
        Self::from_bases(size, bases, Validation::Trusted)
    }

    /// The matroid on the empty ground set.
    pub fn trivial() -> Self {
        Self::from_bases(0, [Subset::EMPTY], Validation::Trusted).unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 0
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.ground()) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: s.span_len() - 1,
                size: self.size,
            })
        }
    }

    /// Rank of `s`, checking it lies in the ground set.
    pub fn rank_of(&self, s: Subset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.rk(s))
    }

    /// Rank of `s`; panics if `s` leaves the ground set.
    pub fn rk(&self, s: Subset) -> usize {
        self.ranks[s.bits() as usize] as usize
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rk(s) == s.len()
    }

    pub fn closure_of(&self, s: Subset) -> Result<Subset> {
        self.check_subset(s)?;
        Ok(self.cl(s))
    }

    /// Closure of `s`; panics if `s` leaves the ground set.
    pub fn cl(&self, s: Subset) -> Subset {
        let r = self.rk(s);
        (self.ground() - s)
            .elements()
            .filter(|&e| self.rk(s.with(e)) == r)
            .fold(s, Subset::with)
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        s.is_subset_of(self.ground()) && self.cl(s) == s
    }

    pub fn loops(&self) -> Subset {
        self.cl(Subset::EMPTY)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// Minimal dependent sets, by increasing size then numeric order.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        for k in 1..=self.size {
            out.extend(k_subsets(self.size, k).filter(|&s| {
                !self.is_independent(s) && s.elements().all(|e| self.is_independent(s.without(e)))
            }));
        }
        out
    }

    /// Size of a smallest circuit, or `|E| + 1` when there is none.
    pub fn girth(&self) -> usize {
        (1..=self.size)
            .find(|&k| k_subsets(self.size, k).any(|s| !self.is_independent(s)))
            .unwrap_or(self.size + 1)
    }

    /// `|{S : |S| = size, rk(S) = rank}|`.
    pub fn count_sets_by_rank_size(&self, rank: usize, size: usize) -> usize {
        k_subsets(self.size, size)
            .filter(|&s| self.rk(s) == rank)
            .count()
    }

    /// Bases as element lists, the shape used by the text and JSON formats.
    pub fn bases_as_lists(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|b| b.elements().collect()).collect()
    }
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Matroid")
            .field("size", &self.size)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}

fn check_exchange(size: usize, bases: &[Subset]) -> Result<()> {
    let mut is_basis = vec![false; 1 << size];
    for b in bases {
        is_basis[b.bits() as usize] = true;
    }
    for &b1 in bases {
        for &b2 in bases {
            for x in (b1 - b2).elements() {
                let ok = (b2 - b1)
                    .elements()
                    .any(|y| is_basis[b1.without(x).with(y).bits() as usize]);
                if !ok {
                    return Err(Error::InvalidBases(format!(
                        "exchange fails for {b1}, {b2} removing {x}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Rank of every subset: independent sets are the down-closure of the bases,
/// and `rk(S)` is the largest independent subset.
fn rank_table(size: usize, bases: &[Subset]) -> Vec<u8> {
    let n = 1usize << size;
    let mut indep = vec![false; n];
    for b in bases {
        indep[b.bits() as usize] = true;
    }
    for mask in (0..n).rev() {
        if indep[mask] {
            continue;
        }
        let missing = Subset::full(size) - Subset::from_bits(mask as u32);
        indep[mask] = missing.elements().any(|e| indep[mask | 1 << e]);
    }
    let mut ranks = vec![0u8; n];
    for mask in 1..n {
        ranks[mask] = if indep[mask] {
            mask.count_ones() as u8
        } else {
            Subset::from_bits(mask as u32)
                .elements()
                .map(|e| ranks[mask & !(1 << e)])
                .max()
                .unwrap_or(0)
        };
    }
    ranks
}

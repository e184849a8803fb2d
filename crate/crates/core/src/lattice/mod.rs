//! The lattice of flats as an explicit graded poset.

mod charpoly;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matroid::{Flag, Matroid, Subset};

pub use charpoly::{
    char_poly_by_flats, char_poly_by_subsets, characteristic_polynomial, interval_char_poly,
    reduced_characteristic_polynomial, reduced_interval_char_poly, verify_flat_difference_identity,
    verify_two_flats_identity,
};

/// Default bound on enumerated flags.
pub const DEFAULT_MAX_FLAGS: u64 = 10_000_000;

/// All flats of a loopless matroid, sorted by rank and then numerically,
/// with `μ(F, E)` cached for every flat.
#[derive(Clone, Debug)]
pub struct LatticeOfFlats {
    matroid: Matroid,
    flats: Vec<Subset>,
    ranks: Vec<usize>,
    rank_start: Vec<usize>,
    index: HashMap<Subset, usize>,
    mobius_top: Vec<i64>,
}

impl LatticeOfFlats {
    /// Enumerates flats level by level: the covers of a rank-`k` flat `F` are
    /// the closures `cl(F ∪ e)`.
    pub fn new(m: &Matroid) -> Result<Self> {
        let loops = m.loops();
        if !loops.is_empty() {
            return Err(Error::HasLoops {
                loops: loops.elements().collect(),
            });
        }
        let mut levels: Vec<Vec<Subset>> = vec![vec![Subset::EMPTY]];
        for _ in 0..m.rank() {
            let mut next: Vec<Subset> = levels
                .last()
                .unwrap()
                .iter()
                .flat_map(|&f| (m.ground() - f).elements().map(move |e| m.cl(f.with(e))))
                .collect();
            next.sort_unstable();
            next.dedup();
            levels.push(next);
        }
        let mut flats = Vec::new();
        let mut ranks = Vec::new();
        let mut rank_start = Vec::new();
        for (r, level) in levels.into_iter().enumerate() {
            rank_start.push(flats.len());
            ranks.extend(std::iter::repeat_n(r, level.len()));
            flats.extend(level);
        }
        rank_start.push(flats.len());
        let index = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();

        let mut lattice = Self {
            matroid: m.clone(),
            flats,
            ranks,
            rank_start,
            index,
            mobius_top: Vec::new(),
        };
        lattice.mobius_top = lattice.compute_mobius_top();
        Ok(lattice)
    }

    fn compute_mobius_top(&self) -> Vec<i64> {
        let n = self.flats.len();
        let mut mu = vec![0i64; n];
        for i in (0..n).rev() {
            if i == n - 1 {
                mu[i] = 1;
                continue;
            }
            let f = self.flats[i];
            let start = self.rank_start[self.ranks[i] + 1];
            mu[i] = -(start..n)
                .filter(|&j| f.is_subset_of(self.flats[j]))
                .map(|j| mu[j])
                .sum::<i64>();
        }
        mu
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    pub fn top(&self) -> Subset {
        self.matroid.ground()
    }

    /// The stratum `L(M)_r`.
    pub fn flats_of_rank(&self, r: usize) -> &[Subset] {
        match (self.rank_start.get(r), self.rank_start.get(r + 1)) {
            (Some(&a), Some(&b)) => &self.flats[a..b],
            _ => &[],
        }
    }

    pub fn index_of(&self, f: Subset) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn contains(&self, f: Subset) -> bool {
        self.index.contains_key(&f)
    }

    pub fn rank_of_flat(&self, f: Subset) -> Option<usize> {
        self.index_of(f).map(|i| self.ranks[i])
    }

    /// `μ(F, E)`, or `None` if `f` is not a flat.
    pub fn mobius_to_top(&self, f: Subset) -> Option<i64> {
        self.index_of(f).map(|i| self.mobius_top[i])
    }

    /// `μ(f, g)` on an arbitrary interval, by the defining recursion from `f`.
    pub fn mobius(&self, f: Subset, g: Subset) -> Result<i64> {
        let fi = self
            .index_of(f)
            .ok_or_else(|| Error::NotAFlat(f.to_string()))?;
        let gi = self
            .index_of(g)
            .ok_or_else(|| Error::NotAFlat(g.to_string()))?;
        if !f.is_subset_of(g) {
            return Err(Error::NotComparable {
                lower: f.to_string(),
                upper: g.to_string(),
            });
        }
        if g == self.top() {
            return Ok(self.mobius_top[fi]);
        }
        let interval: Vec<usize> = (fi..=gi)
            .filter(|&j| f.is_subset_of(self.flats[j]) && self.flats[j].is_subset_of(g))
            .collect();
        let mut memo: HashMap<usize, i64> = HashMap::with_capacity(interval.len());
        for &h in &interval {
            let value = if h == fi {
                1
            } else {
                -interval
                    .iter()
                    .take_while(|&&k| k != h)
                    .filter(|&&k| self.flats[k].is_proper_subset_of(self.flats[h]))
                    .map(|k| memo[k])
                    .sum::<i64>()
            };
            memo.insert(h, value);
        }
        Ok(memo[&gi])
    }

    /// Every flat except the top.
    pub fn proper_flats(&self) -> impl Iterator<Item = Subset> + '_ {
        self.flats[..self.flats.len() - 1].iter().copied()
    }

    /// Every flat except the bottom and the top.
    pub fn reduced_flats(&self) -> impl Iterator<Item = Subset> + '_ {
        let n = self.flats.len();
        self.flats[1.min(n - 1)..n - 1].iter().copied()
    }

    /// Flats contained in `f`, in lattice order.
    pub fn flats_below(&self, f: Subset) -> impl Iterator<Item = Subset> + '_ {
        self.flats
            .iter()
            .copied()
            .filter(move |g| g.is_subset_of(f))
    }

    /// Lazily enumerates every flag, erroring once more than `cap` are produced.
    pub fn flags(&self, cap: u64) -> Flags<'_> {
        Flags {
            chains: Chains::new(self, cap),
        }
    }

    pub(crate) fn chains(&self, cap: u64) -> Chains<'_> {
        Chains::new(self, cap)
    }

    pub(crate) fn flat_rank_by_index(&self, i: usize) -> usize {
        self.ranks[i]
    }
}

/// Depth-first enumeration of chains from the bottom flat to the top, as
/// flat indices.
pub(crate) struct Chains<'a> {
    lattice: &'a LatticeOfFlats,
    stack: Vec<(usize, usize)>,
    produced: u64,
    cap: u64,
    done: bool,
}

impl<'a> Chains<'a> {
    fn new(lattice: &'a LatticeOfFlats, cap: u64) -> Self {
        Self {
            lattice,
            stack: vec![(0, lattice.rank_start[1.min(lattice.rank())])],
            produced: 0,
            cap,
            done: false,
        }
    }

    fn emit(&mut self, chain: Vec<usize>) -> Option<Result<Vec<usize>>> {
        self.produced += 1;
        if self.produced > self.cap {
            self.done = true;
            return Some(Err(Error::FlagCapExceeded { cap: self.cap }));
        }
        Some(Ok(chain))
    }
}

impl Iterator for Chains<'_> {
    type Item = Result<Vec<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let lat = self.lattice;
        let top = lat.flats.len() - 1;
        if top == 0 {
            self.done = true;
            return self.emit(vec![0]);
        }
        loop {
            let (cur, cand) = self.stack.last_mut()?;
            let f = lat.flats[*cur];
            while *cand <= top && !f.is_proper_subset_of(lat.flats[*cand]) {
                *cand += 1;
            }
            if *cand > top {
                self.stack.pop();
                continue;
            }
            let j = *cand;
            *cand += 1;
            if j == top {
                let chain: Vec<usize> = self
                    .stack
                    .iter()
                    .map(|&(i, _)| i)
                    .chain(std::iter::once(top))
                    .collect();
                return self.emit(chain);
            }
            let start = lat.rank_start[lat.ranks[j] + 1];
            self.stack.push((j, start));
        }
    }
}

/// Iterator over the flags of a lattice.
pub struct Flags<'a> {
    chains: Chains<'a>,
}

impl Iterator for Flags<'_> {
    type Item = Result<Flag>;

    fn next(&mut self) -> Option<Self::Item> {
        let lat = self.chains.lattice;
        self.chains.next().map(|r| {
            r.map(|chain| Flag::from_chain(chain.into_iter().map(|i| lat.flats[i]).collect()))
        })
    }
}

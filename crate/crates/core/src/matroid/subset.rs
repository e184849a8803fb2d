use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// A subset of a ground set `{0, .., n-1}` packed into one word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        Subset(1 << e)
    }

    pub fn from_elements(elements: impl IntoIterator<Item = usize>) -> Self {
        elements.into_iter().fold(Subset::EMPTY, |s, e| s.with(e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 32 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        Subset(self.0 | 1 << e)
    }

    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !(1 << e))
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    /// Largest element plus one, i.e. the smallest ground size containing it.
    pub fn span_len(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in increasing numeric order starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Re-indexes `self` into the dense numbering of `frame`'s elements.
    pub fn compress(self, frame: Subset) -> Subset {
        debug_assert!(self.is_subset_of(frame));
        let mut out = 0u32;
        for (i, e) in frame.elements().enumerate() {
            if self.contains(e) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, frame: Subset) -> Subset {
        let mut out = 0u32;
        for (i, e) in frame.elements().enumerate() {
            if self.contains(i) {
                out |= 1 << e;
            }
        }
        Subset(out)
    }

    pub fn shift(self, by: usize) -> Subset {
        Subset(self.0 << by)
    }
}

impl BitOr for Subset {
    type Output = Subset;

    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;

    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

/// Set difference.
impl Sub for Subset {
    type Output = Subset;

    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Carry-rippler enumeration of the subsets of a mask.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        let step = cur.wrapping_sub(self.mask) & self.mask;
        self.next = if step == 0 { None } else { Some(step) };
        Some(Subset(cur))
    }
}

/// All `k`-element subsets of `{0, .., n-1}` in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    let limit: u64 = 1 << n;
    let mut cur: Option<u64> = if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let c = cur?;
        if c >= limit {
            cur = None;
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            // Gosper's hack
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            Some((((ripple ^ c) >> 2) / low) | ripple)
        };
        Some(Subset(c as u32))
    })
}

//! Stirling numbers, factorial powers and binomials over big integers.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coefficient, Polynomial};

pub const DEFAULT_STIRLING_BOUND: usize = 64;

/// Both Stirling triangles up to a fixed `n`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    first: Vec<Vec<BigInt>>,
    second: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(bound: usize) -> Self {
        let mut first = vec![vec![BigInt::one()]];
        let mut second = vec![vec![BigInt::one()]];
        for n in 1..=bound {
            let (pf, ps) = (&first[n - 1], &second[n - 1]);
            let mut rf = vec![BigInt::zero(); n + 1];
            let mut rs = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                let f_same = pf.get(k).cloned().unwrap_or_default();
                let s_same = ps.get(k).cloned().unwrap_or_default();
                // c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1);  S(n,k) = k S(n-1,k) + S(n-1,k-1)
                rf[k] = BigInt::from(n - 1) * f_same + &pf[k - 1];
                rs[k] = BigInt::from(k) * s_same + &ps[k - 1];
            }
            first.push(rf);
            second.push(rs);
        }
        Self { first, second }
    }

    pub fn bound(&self) -> usize {
        self.first.len() - 1
    }

    /// Unsigned Stirling number of the first kind, `None` past the bound.
    pub fn first(&self, n: usize, k: usize) -> Option<BigInt> {
        let row = self.first.get(n)?;
        Some(row.get(k).cloned().unwrap_or_default())
    }

    pub fn second(&self, n: usize, k: usize) -> Option<BigInt> {
        let row = self.second.get(n)?;
        Some(row.get(k).cloned().unwrap_or_default())
    }
}

fn shared_table() -> &'static StirlingTable {
    static TABLE: OnceLock<StirlingTable> = OnceLock::new();
    TABLE.get_or_init(|| StirlingTable::new(DEFAULT_STIRLING_BOUND))
}

/// Unsigned `c(n, k)`: permutations of `n` with `k` cycles.
pub fn stirling_first(n: usize, k: usize) -> BigInt {
    shared_table()
        .first(n, k)
        .unwrap_or_else(|| StirlingTable::new(n).first(n, k).unwrap())
}

/// `S(n, k)`: partitions of an `n`-set into `k` blocks.
pub fn stirling_second(n: usize, k: usize) -> BigInt {
    shared_table()
        .second(n, k)
        .unwrap_or_else(|| StirlingTable::new(n).second(n, k).unwrap())
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n (n+1) ... (n+k-1)`.
pub fn rising_factorial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n + i))
}

/// `n (n-1) ... (n-k+1)`.
pub fn falling_factorial(n: i64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (BigInt::from(n) - i))
}

/// Ordinary binomial, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `a (a-1) ... (a-k+1) / k!`, for any integer `a`.
pub fn generalized_binomial(a: i64, k: u64) -> BigInt {
    falling_factorial(a, k) / factorial(k)
}

/// Number of size-`k` multisets from `n` kinds: `binomial(n + k - 1, k)`.
pub fn multichoose(n: u64, k: u64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if n == 0 {
        return BigInt::zero();
    }
    binomial(n + k - 1, k)
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn q_analogue<T: Coefficient>(n: usize) -> Polynomial<T> {
    Polynomial::new(vec![T::one(); n])
}

/// `j * sum_i c(k,i) S(i,j) == k * sum_i c(k-1,i-1) S(i,j)` for every `1 <= j <= k`,
/// by direct summation over `j <= i <= k`.
pub fn verify_stirling_lemma(k: usize) -> bool {
    (1..=k).all(|j| {
        let lhs: BigInt = (j..=k)
            .map(|i| stirling_first(k, i) * stirling_second(i, j))
            .sum::<BigInt>()
            * j;
        let rhs: BigInt = (j..=k)
            .map(|i| stirling_first(k - 1, i - 1) * stirling_second(i, j))
            .sum::<BigInt>()
            * k;
        lhs == rhs
    })
}

/// `n^(rising k) == sum_{i=1..k} c(k,i) n^i`; the `k = 0` case compares against 1.
pub fn verify_rising_factorial_fact(n: u64, k: usize) -> bool {
    if k == 0 {
        return rising_factorial(n, 0).is_one();
    }
    let expansion: BigInt = (1..=k)
        .map(|i| stirling_first(k, i) * BigInt::from(n).pow(i as u32))
        .sum();
    rising_factorial(n, k as u64) == expansion
}

/// `sum_{k=m..n} c(n,k) S(k,m) == binomial(n,m) (n-1)^(falling n-m)`.
pub fn verify_stirling_product_fact(n: usize, m: usize) -> bool {
    let lhs: BigInt = (m..=n)
        .map(|k| stirling_first(n, k) * stirling_second(k, m))
        .sum();
    let rhs = binomial(n as u64, m as u64) * falling_factorial(n as i64 - 1, (n - m) as u64);
    lhs == rhs
}

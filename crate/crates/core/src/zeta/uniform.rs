//! Closed forms for uniform matroids.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{
    binomial, generalized_binomial, multichoose, Polynomial, RationalFunction, TaylorPrefix,
};
use crate::error::{Error, Result};
use crate::Rational;

fn check(r: usize, n: usize) -> Result<()> {
    if r > n {
        return Err(Error::UniformRank { r, n });
    }
    if r == 0 {
        return Err(Error::RankOutOfRange {
            rank: 0,
            reason: "closed forms need 1 <= r <= n",
        });
    }
    Ok(())
}

fn big(x: BigInt) -> Rational {
    Rational::from_integer(x)
}

fn s_plus_one() -> Polynomial {
    Polynomial::linear(Rational::one(), Rational::one())
}

fn ns_plus_r(r: usize, n: usize) -> Polynomial {
    Polynomial::linear(big(n.into()), big(r.into()))
}

/// `Z_{U_{r,n}} = 1/(ns + r) Σ_{k<r} C(n,k) C(r-n, r-1-k) (s+1)^{-k}`.
pub fn zeta_uniform_closed(r: usize, n: usize) -> Result<RationalFunction> {
    check(r, n)?;
    let mut num = Polynomial::zero();
    for k in 0..r {
        let c = binomial(n as u64, k as u64)
            * generalized_binomial(r as i64 - n as i64, (r - 1 - k) as u64);
        if !c.is_zero() {
            num += &s_plus_one().pow((r - 1 - k) as u32).scale(&big(c));
        }
    }
    let den = ns_plus_r(r, n) * s_plus_one().pow((r - 1) as u32);
    RationalFunction::new(num, den)
}

/// `Y_{U_{r,n}} = -r s (-s/(s+1))^{r-1} C(n,r) / (ns + r)`.
pub fn upsilon_uniform_closed(r: usize, n: usize) -> Result<RationalFunction> {
    check(r, n)?;
    let sign = if r.is_multiple_of(2) { 1 } else { -1 };
    let coeff = big(binomial(n as u64, r as u64) * BigInt::from(r) * sign);
    let num = Polynomial::monomial(coeff, r);
    let den = ns_plus_r(r, n) * s_plus_one().pow((r - 1) as u32);
    RationalFunction::new(num, den)
}

/// `a_0..a_kmax` of `Z_{U_{r,n}}`: `(-1)^k multichoose(n, k)` up to `k = r`,
/// then `a_k = -(1/r) Σ_{i=1}^r [n C(r-1,i-1) + r C(r-1,i)] a_{k-i}`.
pub fn uniform_taylor_coefficients(r: usize, n: usize, kmax: usize) -> Result<TaylorPrefix> {
    check(r, n)?;
    let mut a: Vec<Rational> = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let value = if k <= r {
            let m = big(multichoose(n as u64, k as u64));
            if k % 2 == 0 {
                m
            } else {
                -m
            }
        } else {
            let mut acc = Rational::zero();
            for i in 1..=r {
                let d = BigInt::from(n) * binomial((r - 1) as u64, (i - 1) as u64)
                    + BigInt::from(r) * binomial((r - 1) as u64, i as u64);
                acc += big(d) * &a[k - i];
            }
            -acc / big(r.into())
        };
        a.push(value);
    }
    Ok(TaylorPrefix::new(a))
}

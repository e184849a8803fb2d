//! Exact arithmetic: univariate polynomials, reduced rational functions,
//! Taylor prefixes at the origin, and the Stirling/factorial combinatorics.
//!
//! Ring-level operations on [`Polynomial`] only need a [`Coefficient`]
//! (machine integers, big integers or rationals all qualify). Anything that
//! needs division, gcds or a canonical form needs a [`Scalar`], i.e. the field
//! of fractions of some integer type.

mod combinat;
mod intpoly;
mod poly;
mod ratfunc;
mod serial;
mod taylor;

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

pub use combinat::{
    binomial, factorial, falling_factorial, generalized_binomial, multichoose, q_analogue,
    rising_factorial, stirling_first, stirling_second, verify_rising_factorial_fact,
    verify_stirling_lemma, verify_stirling_product_fact, StirlingTable, DEFAULT_STIRLING_BOUND,
};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use taylor::TaylorPrefix;

/// Anything usable as a polynomial coefficient.
pub trait Coefficient: Clone + PartialEq + Debug + Num + Signed + Neg<Output = Self> {}

impl<T> Coefficient for T where T: Clone + PartialEq + Debug + Num + Signed + Neg<Output = T> {}

/// An exact field given as fractions over an integer type.
pub trait Scalar: Coefficient + Display + FromStr {
    type Int: Integer + Signed + Clone + Debug;

    fn numer_int(&self) -> Self::Int;
    fn denom_int(&self) -> Self::Int;
    fn from_int(value: Self::Int) -> Self;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + Display + FromStr,
{
    type Int = I;

    fn numer_int(&self) -> I {
        self.numer().clone()
    }

    fn denom_int(&self) -> I {
        self.denom().clone()
    }

    fn from_int(value: I) -> Self {
        Ratio::from_integer(value)
    }
}

/// `n` as a coefficient, by binary doubling so no conversion trait is needed.
pub(crate) fn nat<T: Coefficient>(mut n: usize) -> T {
    let mut acc = T::zero();
    let mut unit = T::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + unit.clone();
        }
        unit = unit.clone() + unit;
        n >>= 1;
    }
    acc
}

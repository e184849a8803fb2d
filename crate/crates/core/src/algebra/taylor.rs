use super::{nat, Coefficient};
use crate::Rational;

/// Leading coefficients `a_0..=a_k` of a power series at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaylorPrefix<T = Rational> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> TaylorPrefix<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [T] {
        &mut self.coeffs
    }

    /// Highest order held, i.e. `k` for `a_0..=a_k`.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    /// `i! * a_i`; panics past the stored order.
    pub fn derivative_at_zero(&self, i: usize) -> T {
        let fact = (1..=i).fold(T::one(), |acc, j| acc * nat::<T>(j));
        self.coeffs[i].clone() * fact
    }

    /// First index where the two prefixes differ, comparing the common range.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

//! Sums of rational constants times products of linear forms `a s + b`.
//!
//! Flag sums produce many terms whose denominators are products of the same
//! few linear forms. Collecting by factor multiset and combining once over a
//! common denominator avoids a polynomial gcd per flag.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{Polynomial, RationalFunction};
use crate::Rational;

/// `a s + b` with `gcd(a, b) = 1`.
type Factor = (i64, i64);

fn normalize(a: i64, b: i64) -> (Factor, i64) {
    let g = a.gcd(&b);
    debug_assert!(g != 0, "zero linear form");
    ((a / g, b / g), g)
}

fn linear(f: Factor) -> Polynomial {
    Polynomial::linear(
        Rational::from_integer(f.0.into()),
        Rational::from_integer(f.1.into()),
    )
}

#[derive(Default)]
pub(crate) struct LinearSum {
    terms: BTreeMap<(Vec<Factor>, Vec<Factor>), Rational>,
}

impl LinearSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff * Π num / Π den`, each factor given as `(a, b)`.
    pub fn add(
        &mut self,
        mut coeff: Rational,
        num: impl IntoIterator<Item = (i64, i64)>,
        den: impl IntoIterator<Item = (i64, i64)>,
    ) {
        if coeff.is_zero() {
            return;
        }
        let mut nk = Vec::new();
        for (a, b) in num {
            let (f, g) = normalize(a, b);
            coeff *= Rational::from_integer(g.into());
            nk.push(f);
        }
        let mut dk = Vec::new();
        for (a, b) in den {
            let (f, g) = normalize(a, b);
            coeff /= Rational::from_integer(g.into());
            dk.push(f);
        }
        nk.sort_unstable();
        dk.sort_unstable();
        *self.terms.entry((nk, dk)).or_insert_with(Rational::zero) += coeff;
    }

    pub fn into_rational_function(self) -> RationalFunction {
        let mut common: BTreeMap<Factor, usize> = BTreeMap::new();
        for (_, dk) in self.terms.keys() {
            for run in dk.chunk_by(|x, y| x == y) {
                let m = common.entry(run[0]).or_default();
                *m = (*m).max(run.len());
            }
        }
        let den = common.iter().fold(Polynomial::one(), |acc, (&f, &m)| {
            acc * linear(f).pow(m as u32)
        });
        let mut num = Polynomial::zero();
        for ((nk, dk), coeff) in self.terms {
            if coeff.is_zero() {
                continue;
            }
            let mut missing = common.clone();
            for f in &dk {
                *missing.get_mut(f).unwrap() -= 1;
            }
            let mut term = Polynomial::constant(coeff);
            for f in nk {
                term = term * linear(f);
            }
            for (f, m) in missing {
                if m > 0 {
                    term = term * linear(f).pow(m as u32);
                }
            }
            num += &term;
        }
        RationalFunction::new(num, den).expect("product of linear forms is nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        let p = |c: &[i64]| {
            Polynomial::new(
                c.iter()
                    .map(|&x| Rational::from_integer(x.into()))
                    .collect(),
            )
        };
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn merges_proportional_factors() {
        let mut sum = LinearSum::new();
        // 2/(2s+2) - 1/(s+1) = 0
        sum.add(Rational::from_integer(2.into()), [], [(2, 2)]);
        sum.add(Rational::from_integer((-1).into()), [], [(1, 1)]);
        assert!(sum.into_rational_function().is_zero());
    }

    #[test]
    fn u23_flag_sum() {
        // -1/(3s+2) + 3/((s+1)(3s+2))
        let mut sum = LinearSum::new();
        sum.add(Rational::from_integer((-1).into()), [], [(3, 2)]);
        sum.add(Rational::from_integer(3.into()), [], [(1, 1), (3, 2)]);
        assert_eq!(sum.into_rational_function(), rf(&[2, -1], &[2, 5, 3]));
    }

    #[test]
    fn numerators() {
        // -(3s)/(3s+2) + 3 s(3s+1)/((s+1)(3s+2)) = 6s^2/((3s+2)(s+1))
        let mut sum = LinearSum::new();
        sum.add(Rational::from_integer((-1).into()), [(3, 0)], [(3, 2)]);
        sum.add(
            Rational::from_integer(3.into()),
            [(1, 0), (3, 1)],
            [(1, 1), (3, 2)],
        );
        assert_eq!(sum.into_rational_function(), rf(&[0, 0, 6], &[2, 5, 3]));
    }

    #[test]
    fn empty_is_zero() {
        assert!(LinearSum::new().into_rational_function().is_zero());
    }
}

//! Characteristic polynomials over the integers and the q-analogue flat
//! identities.

use super::LatticeOfFlats;
use crate::algebra::{q_analogue, Polynomial};
use crate::error::Result;
use crate::matroid::{Matroid, Subset};

type IntPoly = Polynomial<i64>;

fn q_minus_one() -> IntPoly {
    IntPoly::new(vec![-1, 1])
}

fn signed_monomial(sign_negative: bool, degree: usize, coeffs: &mut Vec<i64>) {
    if coeffs.len() <= degree {
        coeffs.resize(degree + 1, 0);
    }
    coeffs[degree] += if sign_negative { -1 } else { 1 };
}

/// `Σ_{S ⊆ E} (-1)^{|S|} q^{rk(E) - rk(S)}`.
pub fn char_poly_by_subsets(m: &Matroid) -> IntPoly {
    interval_char_poly(m, Subset::EMPTY, m.ground())
}

/// `Σ_F μ(∅, F) q^{rk(E) - rk(F)}` over the flats of a loopless matroid.
pub fn char_poly_by_flats(l: &LatticeOfFlats) -> IntPoly {
    let flats = l.flats();
    let mut mu = vec![0i64; flats.len()];
    let mut coeffs = Vec::new();
    for (i, &f) in flats.iter().enumerate() {
        mu[i] = if i == 0 {
            1
        } else {
            -(0..i)
                .filter(|&j| flats[j].is_proper_subset_of(f))
                .map(|j| mu[j])
                .sum::<i64>()
        };
        let degree = l.rank() - l.flat_rank_by_index(i);
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] += mu[i];
    }
    IntPoly::new(coeffs)
}

/// `χ_M(q)`; the zero polynomial when `M` has loops.
pub fn characteristic_polynomial(m: &Matroid) -> IntPoly {
    let chi = char_poly_by_subsets(m);
    #[cfg(debug_assertions)]
    if let Ok(l) = LatticeOfFlats::new(m) {
        debug_assert_eq!(chi, char_poly_by_flats(&l));
    }
    chi
}

/// `χ̄_M(q) = χ_M(q) / (q - 1)`; errors on the trivial matroid, whose
/// characteristic polynomial is `1`.
pub fn reduced_characteristic_polynomial(m: &Matroid) -> Result<IntPoly> {
    characteristic_polynomial(m).divide_exact(&q_minus_one())
}

/// `χ` of the minor `M|upper / lower`, by subset expansion inside the parent.
pub fn interval_char_poly(m: &Matroid, lower: Subset, upper: Subset) -> IntPoly {
    let top = m.rk(upper);
    let mut coeffs = Vec::new();
    for s in (upper - lower).subsets() {
        signed_monomial(s.len() % 2 == 1, top - m.rk(s | lower), &mut coeffs);
    }
    IntPoly::new(coeffs)
}

/// `χ̄` of `M|upper / lower`; errors when the interval is a single flat.
pub fn reduced_interval_char_poly(m: &Matroid, lower: Subset, upper: Subset) -> Result<IntPoly> {
    interval_char_poly(m, lower, upper).divide_exact(&q_minus_one())
}

/// `[rk F₂ - rk F₁]_q = Σ_{F₁ ⊆ F ⊊ F₂} χ̄_{M|F₂/F}(q)` for every comparable
/// pair of flats.
pub fn verify_two_flats_identity(l: &LatticeOfFlats) -> bool {
    let m = l.matroid();
    for &f2 in l.flats() {
        let below: Vec<Subset> = l.flats_below(f2).collect();
        let reduced: Vec<(Subset, IntPoly)> = below
            .iter()
            .filter(|&&f| f != f2)
            .map(|&f| (f, reduced_interval_char_poly(m, f, f2)))
            .map(|(f, p)| p.map(|p| (f, p)))
            .collect::<Result<_>>()
            .unwrap_or_default();
        if reduced.len() + 1 != below.len() {
            return false;
        }
        for &f1 in &below {
            let lhs = q_analogue::<i64>(m.rk(f2) - m.rk(f1));
            let rhs = reduced
                .iter()
                .filter(|(f, _)| f1.is_subset_of(*f))
                .fold(IntPoly::zero(), |acc, (_, p)| acc + p);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `[rk M - rk F]_q = Σ_{F ⊆ F' ∈ L̂} χ̄_{M/F'}(q)` for every nonempty flat `F`.
///
/// The reduced lattice drops `∅`, so at `F = ∅` the right side misses the
/// `χ̄_M` term and the identity is not claimed there.
pub fn verify_flat_difference_identity(l: &LatticeOfFlats) -> bool {
    let m = l.matroid();
    let reduced: Vec<(Subset, IntPoly)> = match l
        .reduced_flats()
        .map(|f| reduced_interval_char_poly(m, f, m.ground()).map(|p| (f, p)))
        .collect::<Result<_>>()
    {
        Ok(v) => v,
        Err(_) => return false,
    };
    l.flats().iter().skip(1).all(|&f| {
        let rhs = reduced
            .iter()
            .filter(|(g, _)| f.is_subset_of(*g))
            .fold(IntPoly::zero(), |acc, (_, p)| acc + p);
        q_analogue::<i64>(m.rank() - m.rk(f)) == rhs
    })
}

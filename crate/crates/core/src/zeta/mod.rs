//! Topological zeta functions `Z(s)` and their Möbius inversions `Y(s)`.
//!
//! Every function here is exact. For a matroid with loops `Z = 0`, while `Y`
//! is left undefined and reported as [`Error::HasLoops`].

mod linear;
mod uniform;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::lattice::{
    interval_char_poly, reduced_interval_char_poly, LatticeOfFlats, DEFAULT_MAX_FLAGS,
};
use crate::matroid::Matroid;
use crate::Rational;

use linear::LinearSum;
pub use uniform::{uniform_taylor_coefficients, upsilon_uniform_closed, zeta_uniform_closed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZetaAlgorithm {
    FlagSum,
    Recurrence,
    ClosedFormUniform,
    TruncationTransfer,
    ExtensionTransfer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpsilonAlgorithm {
    MobiusDef,
    Recurrence,
    FlagProduct,
    ClosedFormUniform,
}

impl fmt::Display for ZetaAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::FlagSum => "flag-sum",
            Self::Recurrence => "recurrence",
            Self::ClosedFormUniform => "closed-form-uniform",
            Self::TruncationTransfer => "truncation-transfer",
            Self::ExtensionTransfer => "extension-transfer",
        })
    }
}

impl fmt::Display for UpsilonAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::MobiusDef => "mobius-def",
            Self::Recurrence => "recurrence",
            Self::FlagProduct => "flag-product",
            Self::ClosedFormUniform => "closed-form-uniform",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaResult {
    pub zeta: RationalFunction,
    pub algorithm: ZetaAlgorithm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpsilonResult {
    pub upsilon: RationalFunction,
    pub algorithm: UpsilonAlgorithm,
}

fn int(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

fn q_minus_one_pow(k: usize) -> Polynomial<i64> {
    Polynomial::new(vec![-1, 1]).pow(k as u32)
}

/// `1 / (a s + b)`.
fn recip_linear(a: usize, b: usize) -> RationalFunction {
    RationalFunction::linear_recip(int(a), int(b))
}

/// `a s + b` as a rational function.
fn linear_form(a: usize, b: usize) -> RationalFunction {
    RationalFunction::from_polynomial(Polynomial::linear(int(a), int(b)))
}

/// `χ̄_{M|hi / lo}(1)`.
pub(crate) fn reduced_char_at_one(l: &LatticeOfFlats, lo: usize, hi: usize) -> i64 {
    let flats = l.flats();
    reduced_interval_char_poly(l.matroid(), flats[lo], flats[hi])
        .expect("χ of a nontrivial loopless minor vanishes at 1")
        .eval(&1)
}

/// Sum over all flags of `[χ_{M_F}(q) / (q-1)^k]_{q=1} · Π 1/(|F_i| s + rk F_i)`.
pub fn zeta_by_flags(m: &Matroid) -> Result<RationalFunction> {
    zeta_by_flags_capped(m, DEFAULT_MAX_FLAGS)
}

pub fn zeta_by_flags_capped(m: &Matroid, cap: u64) -> Result<RationalFunction> {
    if !m.is_loopless() {
        return Ok(RationalFunction::zero());
    }
    let l = LatticeOfFlats::new(m)?;
    let flats = l.flats();
    let mut chi: HashMap<(usize, usize), Polynomial<i64>> = HashMap::new();
    let mut sum = LinearSum::new();
    for chain in l.chains(cap) {
        let chain = chain?;
        let steps = chain.len() - 1;
        let mut product = Polynomial::<i64>::one();
        for w in chain.windows(2) {
            let p = chi
                .entry((w[0], w[1]))
                .or_insert_with(|| interval_char_poly(m, flats[w[0]], flats[w[1]]));
            product = &product * &*p;
        }
        let value = product.divide_exact(&q_minus_one_pow(steps))?.eval(&1);
        let den = chain[1..].iter().map(|&i| {
            let f = flats[i];
            (f.len() as i64, l.flat_rank_by_index(i) as i64)
        });
        sum.add(Rational::from_integer(value.into()), [], den);
    }
    Ok(sum.into_rational_function())
}

/// `Z_{M|F}` for every flat `F`, indexed like [`LatticeOfFlats::flats`], by
/// the recurrence over proper subflats in increasing rank.
pub fn zeta_table(l: &LatticeOfFlats) -> Vec<RationalFunction> {
    let flats = l.flats();
    let mut table: Vec<RationalFunction> = Vec::with_capacity(flats.len());
    table.push(RationalFunction::one());
    for i in 1..flats.len() {
        let f = flats[i];
        let mut acc = RationalFunction::zero();
        for j in 0..i {
            if flats[j].is_proper_subset_of(f) {
                let c = reduced_char_at_one(l, j, i);
                if c != 0 {
                    acc = acc + table[j].scale(&Rational::from_integer(c.into()));
                }
            }
        }
        table.push(acc * recip_linear(f.len(), l.flat_rank_by_index(i)));
    }
    table
}

/// `Y_{M|F}` for every flat `F`, by the recurrence
/// `Y(F) = -1/(|F|s + rk F) Σ_{G ⊊ F} (|F|s + rk G) Y(G)`.
pub fn upsilon_table(l: &LatticeOfFlats) -> Vec<RationalFunction> {
    let flats = l.flats();
    let mut table: Vec<RationalFunction> = Vec::with_capacity(flats.len());
    table.push(RationalFunction::one());
    for i in 1..flats.len() {
        let f = flats[i];
        let mut acc = RationalFunction::zero();
        for j in 0..i {
            if flats[j].is_proper_subset_of(f) {
                acc = acc + &table[j] * &linear_form(f.len(), l.flat_rank_by_index(j));
            }
        }
        table.push(-(acc * recip_linear(f.len(), l.flat_rank_by_index(i))));
    }
    table
}

pub fn zeta_by_recurrence(m: &Matroid) -> RationalFunction {
    match LatticeOfFlats::new(m) {
        Ok(l) => zeta_table(&l).pop().expect("lattice has a top"),
        Err(_) => RationalFunction::zero(),
    }
}

/// `Σ_F μ(F, E) Z_{M|F}` over all flats.
pub fn upsilon_by_mobius(m: &Matroid) -> Result<RationalFunction> {
    let l = LatticeOfFlats::new(m)?;
    let z = zeta_table(&l);
    let mut acc = RationalFunction::zero();
    for (zf, &f) in z.iter().zip(l.flats()) {
        let mu = l.mobius_to_top(f).expect("flat of the lattice");
        if mu != 0 {
            acc = acc + zf.scale(&Rational::from_integer(mu.into()));
        }
    }
    Ok(acc)
}

pub fn upsilon_by_recurrence(m: &Matroid) -> Result<RationalFunction> {
    let l = LatticeOfFlats::new(m)?;
    Ok(upsilon_table(&l).pop().expect("lattice has a top"))
}

/// Sum over flags of `Π -(|F_i| s + rk F_{i-1}) / (|F_i| s + rk F_i)`.
pub fn upsilon_by_flags(m: &Matroid) -> Result<RationalFunction> {
    upsilon_by_flags_capped(m, DEFAULT_MAX_FLAGS)
}

pub fn upsilon_by_flags_capped(m: &Matroid, cap: u64) -> Result<RationalFunction> {
    let l = LatticeOfFlats::new(m)?;
    let flats = l.flats();
    let mut sum = LinearSum::new();
    for chain in l.chains(cap) {
        let chain = chain?;
        let steps = chain.len() - 1;
        let sign = if steps % 2 == 0 { 1 } else { -1 };
        let num = chain
            .windows(2)
            .map(|w| (flats[w[1]].len() as i64, l.flat_rank_by_index(w[0]) as i64));
        let den = chain[1..]
            .iter()
            .map(|&i| (flats[i].len() as i64, l.flat_rank_by_index(i) as i64));
        sum.add(Rational::from_integer(sign.into()), num, den);
    }
    Ok(sum.into_rational_function())
}

fn require_loopless(m: &Matroid) -> Result<()> {
    let loops = m.loops();
    if loops.is_empty() {
        Ok(())
    } else {
        Err(Error::HasLoops {
            loops: loops.elements().collect(),
        })
    }
}

/// `Z_{tr M} = Z_M + Y_M / (|E| s + rk M - 1)`, for loopless `M` of rank at least 2.
pub fn zeta_of_truncation_via_transfer(m: &Matroid) -> Result<RationalFunction> {
    require_loopless(m)?;
    if m.rank() < 2 {
        return Err(Error::RankOutOfRange {
            rank: m.rank(),
            reason: "truncation transfer needs rank at least 2",
        });
    }
    let l = LatticeOfFlats::new(m)?;
    let z = zeta_table(&l).pop().unwrap();
    let y = upsilon_table(&l).pop().unwrap();
    Ok(z + y * recip_linear(m.size(), m.rank() - 1))
}

/// `Z_{M+e} = (Z_M - s Y_M / ((|E|+1) s + rk M)) / (s + 1)`, for loopless `M`
/// of rank at least 1.
pub fn zeta_of_free_extension_via_transfer(m: &Matroid) -> Result<RationalFunction> {
    require_loopless(m)?;
    if m.rank() < 1 {
        return Err(Error::RankOutOfRange {
            rank: 0,
            reason: "free extension transfer needs rank at least 1",
        });
    }
    let l = LatticeOfFlats::new(m)?;
    let z = zeta_table(&l).pop().unwrap();
    let y = upsilon_table(&l).pop().unwrap();
    let s_over = linear_form(1, 0) * recip_linear(m.size() + 1, m.rank());
    Ok((z - s_over * y) * recip_linear(1, 1))
}

impl ZetaResult {
    pub fn new(zeta: RationalFunction, algorithm: ZetaAlgorithm) -> Self {
        Self { zeta, algorithm }
    }
}

impl UpsilonResult {
    pub fn new(upsilon: RationalFunction, algorithm: UpsilonAlgorithm) -> Self {
        Self { upsilon, algorithm }
    }
}

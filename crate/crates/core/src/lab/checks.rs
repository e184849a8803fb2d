//! Theorem and conjecture checks over single catalog entries.

use std::cell::OnceCell;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{binomial, factorial, q_analogue, rising_factorial, stirling_second};
use crate::algebra::{Polynomial, RationalFunction, TaylorPrefix};
use crate::error::{Error, Result};
use crate::lattice::{
    char_poly_by_flats, char_poly_by_subsets, characteristic_polynomial,
    reduced_interval_char_poly, verify_flat_difference_identity, verify_two_flats_identity,
    LatticeOfFlats, DEFAULT_MAX_FLAGS,
};
use crate::matroid::{Matroid, Subset, Validation, MAX_GROUND};
use crate::zeta::{
    reduced_char_at_one, uniform_taylor_coefficients, upsilon_by_flags_capped, upsilon_table,
    upsilon_uniform_closed, zeta_by_flags_capped, zeta_by_recurrence,
    zeta_of_free_extension_via_transfer, zeta_of_truncation_via_transfer, zeta_table,
    zeta_uniform_closed,
};
use crate::Rational;

use super::catalog::CatalogEntry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Theorems,
    Conjectures,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    GirthTheorem,
    FirstCoefficient,
    KDerivativeLemma,
    CountingIdentities,
    TwoFlats,
    TruncationCharPoly,
    TruncationFlats,
    LatticeInvariants,
    ZetaAlgorithms,
    UpsilonAlgorithms,
    UniformClosedForms,
    MobiusRoundtrip,
    Normalization,
    TruncationTransfer,
    ExtensionTransfer,
    Multiplicativity,
    ConjectureTruncation,
    ConjectureUpsilon,
}

impl CheckKind {
    pub const THEOREMS: &'static [CheckKind] = &[
        Self::GirthTheorem,
        Self::FirstCoefficient,
        Self::KDerivativeLemma,
        Self::CountingIdentities,
        Self::TwoFlats,
        Self::TruncationCharPoly,
        Self::TruncationFlats,
        Self::LatticeInvariants,
        Self::ZetaAlgorithms,
        Self::UpsilonAlgorithms,
        Self::UniformClosedForms,
        Self::MobiusRoundtrip,
        Self::Normalization,
        Self::TruncationTransfer,
        Self::ExtensionTransfer,
        Self::Multiplicativity,
    ];

    pub const CONJECTURES: &'static [CheckKind] =
        &[Self::ConjectureTruncation, Self::ConjectureUpsilon];

    pub fn is_conjecture(self) -> bool {
        Self::CONJECTURES.contains(&self)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::GirthTheorem => "girth-theorem",
            Self::FirstCoefficient => "first-coefficient",
            Self::KDerivativeLemma => "k-derivative-lemma",
            Self::CountingIdentities => "counting-identities",
            Self::TwoFlats => "two-flats",
            Self::TruncationCharPoly => "truncation-char-poly",
            Self::TruncationFlats => "truncation-flats",
            Self::LatticeInvariants => "lattice-invariants",
            Self::ZetaAlgorithms => "zeta-algorithms",
            Self::UpsilonAlgorithms => "upsilon-algorithms",
            Self::UniformClosedForms => "uniform-closed-forms",
            Self::MobiusRoundtrip => "mobius-roundtrip",
            Self::Normalization => "normalization",
            Self::TruncationTransfer => "truncation-transfer",
            Self::ExtensionTransfer => "extension-transfer",
            Self::Multiplicativity => "multiplicativity",
            Self::ConjectureTruncation => "conjecture-truncation",
            Self::ConjectureUpsilon => "conjecture-upsilon",
        }
    }

    pub fn in_suite(suite: Suite) -> Vec<CheckKind> {
        match suite {
            Suite::Theorems => Self::THEOREMS.to_vec(),
            Suite::Conjectures => Self::CONJECTURES.to_vec(),
            Suite::All => [Self::THEOREMS, Self::CONJECTURES].concat(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    Skipped,
}

/// Exact data reproducing a failure: the matroid and both sides as JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub size: usize,
    pub bases: Vec<Vec<usize>>,
    pub lhs: Value,
    pub rhs: Value,
    pub detail: String,
}

impl Witness {
    pub fn matroid(&self) -> Result<Matroid> {
        let bases = self
            .bases
            .iter()
            .map(|b| Subset::from_elements(b.iter().copied()));
        Matroid::from_bases(self.size, bases, Validation::Full)
    }

    pub fn sides_differ(&self) -> bool {
        self.lhs != self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: CheckKind,
    pub entry: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// The verdict of one check, before it is attached to an entry.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Holds,
    Skipped(String),
    Fails {
        lhs: Value,
        rhs: Value,
        detail: String,
    },
}

impl Outcome {
    fn fails(lhs: impl Serialize, rhs: impl Serialize, detail: impl Into<String>) -> Self {
        Outcome::Fails {
            lhs: serde_json::to_value(lhs).expect("serializable"),
            rhs: serde_json::to_value(rhs).expect("serializable"),
            detail: detail.into(),
        }
    }

    fn skipped(reason: impl Into<String>) -> Self {
        Outcome::Skipped(reason.into())
    }
}

impl CheckReport {
    pub fn from_outcome(check: CheckKind, entry: &str, m: &Matroid, outcome: Outcome) -> Self {
        let (status, reason, witness) = match outcome {
            Outcome::Holds => (Status::Holds, None, None),
            Outcome::Skipped(r) => (Status::Skipped, Some(r), None),
            Outcome::Fails { lhs, rhs, detail } => (
                Status::Fails,
                None,
                Some(Witness {
                    size: m.size(),
                    bases: m.bases_as_lists(),
                    lhs,
                    rhs,
                    detail,
                }),
            ),
        };
        Self {
            check,
            entry: entry.to_string(),
            status,
            reason,
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Largest `k` for the subset-counting identities.
    pub kmax: usize,
    /// Largest derivative order for the k-derivative lemma.
    pub derivative_kmax: usize,
    pub max_flags: u64,
    /// Worker threads; 0 uses every core.
    pub jobs: usize,
    pub suite: Suite,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            kmax: 4,
            derivative_kmax: 3,
            max_flags: DEFAULT_MAX_FLAGS,
            jobs: 0,
            suite: Suite::All,
        }
    }
}

/// Lazily computed data shared by the checks of one entry.
pub struct EntryContext<'a> {
    matroid: &'a Matroid,
    operands: &'a [Matroid],
    lattice: OnceCell<Option<LatticeOfFlats>>,
    zeta: OnceCell<Vec<RationalFunction>>,
    upsilon: OnceCell<Vec<RationalFunction>>,
}

impl<'a> EntryContext<'a> {
    pub fn new(matroid: &'a Matroid, operands: &'a [Matroid]) -> Self {
        Self {
            matroid,
            operands,
            lattice: OnceCell::new(),
            zeta: OnceCell::new(),
            upsilon: OnceCell::new(),
        }
    }

    fn lattice(&self) -> Option<&LatticeOfFlats> {
        self.lattice
            .get_or_init(|| LatticeOfFlats::new(self.matroid).ok())
            .as_ref()
    }

    fn zetas(&self) -> &[RationalFunction] {
        self.zeta
            .get_or_init(|| zeta_table(self.lattice().expect("loopless")))
    }

    fn upsilons(&self) -> &[RationalFunction] {
        self.upsilon
            .get_or_init(|| upsilon_table(self.lattice().expect("loopless")))
    }

    fn zeta(&self) -> &RationalFunction {
        self.zetas().last().expect("top flat")
    }

    fn upsilon(&self) -> &RationalFunction {
        self.upsilons().last().expect("top flat")
    }
}

fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn signed(k: usize, x: BigInt) -> BigInt {
    if k.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// Runs one check, turning errors and panics into reports.
pub fn run_check(kind: CheckKind, ctx: &EntryContext<'_>, config: &CheckConfig) -> Outcome {
    let result = catch_unwind(AssertUnwindSafe(|| dispatch(kind, ctx, config)));
    match result {
        Ok(Ok(outcome)) => outcome,
        Ok(Err(Error::FlagCapExceeded { cap })) => {
            Outcome::skipped(format!("more than {cap} flags"))
        }
        Ok(Err(e)) => Outcome::fails(Value::Null, Value::Null, format!("error: {e}")),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_default();
            Outcome::fails(Value::Null, Value::Null, format!("panicked: {msg}"))
        }
    }
}

fn dispatch(kind: CheckKind, ctx: &EntryContext<'_>, config: &CheckConfig) -> Result<Outcome> {
    if ctx.lattice().is_none() {
        return Ok(Outcome::skipped("matroid has loops"));
    }
    match kind {
        CheckKind::GirthTheorem => girth_theorem(ctx),
        CheckKind::FirstCoefficient => first_coefficient(ctx),
        CheckKind::KDerivativeLemma => k_derivative_lemma(ctx, config.derivative_kmax),
        CheckKind::CountingIdentities => Ok(counting_identities(ctx, config.kmax)),
        CheckKind::TwoFlats => Ok(two_flats(ctx)),
        CheckKind::TruncationCharPoly => truncation_char_poly(ctx),
        CheckKind::TruncationFlats => truncation_flats(ctx),
        CheckKind::LatticeInvariants => Ok(lattice_invariants(ctx)),
        CheckKind::ZetaAlgorithms => zeta_algorithms(ctx, config.max_flags),
        CheckKind::UpsilonAlgorithms => upsilon_algorithms(ctx, config.max_flags),
        CheckKind::UniformClosedForms => uniform_closed_forms(ctx),
        CheckKind::MobiusRoundtrip => Ok(mobius_roundtrip(ctx)),
        CheckKind::Normalization => Ok(normalization(ctx)),
        CheckKind::TruncationTransfer => truncation_transfer(ctx),
        CheckKind::ExtensionTransfer => extension_transfer(ctx),
        CheckKind::Multiplicativity => multiplicativity(ctx),
        CheckKind::ConjectureTruncation => conjecture_truncation(ctx),
        CheckKind::ConjectureUpsilon => conjecture_upsilon(ctx),
    }
}

/// `d^k Z / ds^k (0) = (-1)^k |E|^(rising k)` for `k < girth`.
fn girth_theorem(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let m = ctx.matroid;
    let g = m.girth();
    let prefix = ctx.zeta().taylor(g - 1)?;
    let got: Vec<Rational> = (0..g).map(|k| prefix.derivative_at_zero(k)).collect();
    let want: Vec<Rational> = (0..g)
        .map(|k| rat(signed(k, rising_factorial(m.size() as u64, k as u64))))
        .collect();
    Ok(match (0..g).find(|&k| got[k] != want[k]) {
        None => Outcome::Holds,
        Some(k) => Outcome::fails(strings(&got), strings(&want), format!("k = {k}, girth {g}")),
    })
}

/// The linear Taylor coefficient of `Z` is `-|E|`.
fn first_coefficient(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let a1 = ctx.zeta().taylor(1)?.coeffs()[1].clone();
    let want = rat(-(ctx.matroid.size() as i64));
    Ok(if a1 == want {
        Outcome::Holds
    } else {
        Outcome::fails(a1.to_string(), want.to_string(), "a_1")
    })
}

/// `Z^(k) = (-k|E| Z^(k-1) + Σ_{F ∈ L̂} χ̄_{M/F}(1) Z_{M|F}^(k)) / (|E|s + r)`
/// as rational functions, for `1 <= k <= kmax`.
fn k_derivative_lemma(ctx: &EntryContext<'_>, kmax: usize) -> Result<Outcome> {
    let m = ctx.matroid;
    if m.is_trivial() {
        return Ok(Outcome::skipped("trivial matroid"));
    }
    let l = ctx.lattice().unwrap();
    let z = ctx.zetas();
    let top = l.len() - 1;
    let n = m.size();
    let recip = RationalFunction::linear_recip(rat(n), rat(m.rank()));
    let mut derivs = vec![ctx.zeta().clone()];
    let mut flat_derivs: Vec<(Rational, RationalFunction)> = (1..top)
        .map(|i| (rat(reduced_char_at_one(l, i, top)), z[i].clone()))
        .collect();
    for k in 1..=kmax {
        derivs.push(derivs[k - 1].derivative());
        let mut inner = derivs[k - 1].scale(&rat(-((k * n) as i64)));
        for (c, f) in flat_derivs.iter_mut() {
            *f = f.derivative();
            if !c.is_zero() {
                inner = inner + f.scale(c);
            }
        }
        let rhs = inner * recip.clone();
        if rhs != derivs[k] {
            return Ok(Outcome::fails(&derivs[k], &rhs, format!("k = {k}")));
        }
    }
    Ok(Outcome::Holds)
}

/// `table[r][s] = |D^r_s|` for subsets of `within`.
fn rank_size_table(m: &Matroid, within: Subset) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; m.size() + 1]; m.rank() + 1];
    for s in within.subsets() {
        t[m.rk(s)][s.len()] += 1;
    }
    t
}

type BigPoly = Polynomial<BigInt>;

fn big_poly(p: &Polynomial<i64>) -> BigPoly {
    p.map(|&c| BigInt::from(c))
}

fn counting_identities(ctx: &EntryContext<'_>, kmax: usize) -> Outcome {
    let m = ctx.matroid;
    let l = ctx.lattice().unwrap();
    let n = m.size();
    let r = m.rank();
    let d = rank_size_table(m, m.ground());
    let dd = |i: usize, j: usize| -> BigInt {
        d.get(i)
            .and_then(|row| row.get(j))
            .copied()
            .unwrap_or(0)
            .into()
    };

    for s in 1..=n {
        let lhs = binomial(n as u64, s as u64);
        let rhs: BigInt = (1..=s).map(|i| dd(i, s)).sum();
        if lhs != rhs {
            return Outcome::fails(lhs.to_string(), rhs.to_string(), format!("sum-Ds, s = {s}"));
        }
    }

    for k in 1..=kmax + 1 {
        let lhs = BigInt::from(n).pow(k as u32);
        let rhs: BigInt = (1..=k)
            .map(|j| {
                factorial(j as u64)
                    * stirling_second(k, j)
                    * (1..=j).map(|i| dd(i, j)).sum::<BigInt>()
            })
            .sum();
        if lhs != rhs {
            return Outcome::fails(
                lhs.to_string(),
                rhs.to_string(),
                format!("power-E, k = {k}"),
            );
        }
    }

    let reduced: Vec<(Subset, BigPoly)> = l
        .reduced_flats()
        .map(|f| {
            let p = reduced_interval_char_poly(m, f, m.ground()).expect("proper flat");
            (f, big_poly(&p))
        })
        .collect();
    let qa = |i: usize| -> BigPoly { q_analogue::<BigInt>(r.saturating_sub(i)) };

    let tables: Vec<Vec<Vec<u64>>> = reduced
        .iter()
        .map(|(f, _)| rank_size_table(m, *f))
        .collect();
    for i in 1..=r {
        for j in 1..=n {
            let mut lhs = BigPoly::zero();
            for ((_, chi), t) in reduced.iter().zip(&tables) {
                let c = t[i][j];
                if c != 0 {
                    lhs = lhs + chi.scale(&BigInt::from(c));
                }
            }
            let rhs = qa(i).scale(&dd(i, j));
            if lhs != rhs {
                return Outcome::fails(
                    lhs.to_string(),
                    rhs.to_string(),
                    format!("flat-sum lemma, i = {i}, j = {j}"),
                );
            }
        }
    }

    for k in 1..=kmax {
        let mut lhs = BigPoly::zero();
        for (f, chi) in &reduced {
            lhs = lhs + chi.scale(&BigInt::from(f.len()).pow(k as u32));
        }
        let mut rhs = BigPoly::zero();
        for j in 1..=k {
            let w = factorial(j as u64) * stirling_second(k, j);
            for i in 1..=j.min(r) {
                rhs = rhs + qa(i).scale(&(&w * dd(i, j)));
            }
        }
        if lhs != rhs {
            return Outcome::fails(
                lhs.to_string(),
                rhs.to_string(),
                format!("flat-sum proposition, k = {k}"),
            );
        }
    }
    Outcome::Holds
}

fn two_flats(ctx: &EntryContext<'_>) -> Outcome {
    let l = ctx.lattice().unwrap();
    if !verify_two_flats_identity(l) {
        return Outcome::fails(false, true, "two-flats identity");
    }
    if !verify_flat_difference_identity(l) {
        return Outcome::fails(false, true, "flat-difference identity");
    }
    Outcome::Holds
}

fn needs_rank_two(m: &Matroid) -> Option<Outcome> {
    (m.rank() < 2).then(|| Outcome::skipped("rank below 2"))
}

/// `q χ_tr = χ + (q-1) χ(0)` and `q χ̄_tr = χ̄ + χ(0)`.
fn truncation_char_poly(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let m = ctx.matroid;
    if let Some(skip) = needs_rank_two(m) {
        return Ok(skip);
    }
    let t = m.truncation()?;
    let q = Polynomial::<i64>::monomial(1, 1);
    let q1 = Polynomial::<i64>::linear(1, -1);
    let chi = characteristic_polynomial(m);
    let chi_t = characteristic_polynomial(&t);
    let c0 = Polynomial::constant(chi.coeff(0));
    let lhs = &q * &chi_t;
    let rhs = &chi + &(&q1 * &c0);
    if lhs != rhs {
        return Ok(Outcome::fails(
            lhs.to_string(),
            rhs.to_string(),
            "characteristic polynomial",
        ));
    }
    let lhs = &q * &chi_t.divide_exact(&q1)?;
    let rhs = &chi.divide_exact(&q1)? + &c0;
    if lhs != rhs {
        return Ok(Outcome::fails(
            lhs.to_string(),
            rhs.to_string(),
            "reduced characteristic polynomial",
        ));
    }
    Ok(Outcome::Holds)
}

/// `L(tr M) = L(M) \ L(M)_{r-1}`, and for flats of rank at most `r - 2`,
/// `tr(M)/F = tr(M/F)` and `tr(M)|F = M|F`.
fn truncation_flats(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let m = ctx.matroid;
    if let Some(skip) = needs_rank_two(m) {
        return Ok(skip);
    }
    let l = ctx.lattice().unwrap();
    let r = m.rank();
    let t = m.truncation()?;
    let lt = LatticeOfFlats::new(&t)?;
    let mut expected: Vec<Subset> = l
        .flats()
        .iter()
        .copied()
        .filter(|&f| l.rank_of_flat(f) != Some(r - 1))
        .collect();
    expected.sort_unstable();
    let mut got = lt.flats().to_vec();
    got.sort_unstable();
    if got != expected {
        return Ok(Outcome::fails(
            strings(&got),
            strings(&expected),
            "lattice of flats",
        ));
    }
    for k in 0..=r - 2 {
        for &f in l.flats_of_rank(k) {
            let lhs = t.contraction(f)?.matroid;
            let rhs = m.contraction(f)?.matroid.truncation()?;
            if lhs != rhs {
                return Ok(Outcome::fails(
                    lhs.bases_as_lists(),
                    rhs.bases_as_lists(),
                    format!("contraction at {f}"),
                ));
            }
            let lhs = t.restriction(f)?.matroid;
            let rhs = m.restriction(f)?.matroid;
            if lhs != rhs {
                return Ok(Outcome::fails(
                    lhs.bases_as_lists(),
                    rhs.bases_as_lists(),
                    format!("restriction to {f}"),
                ));
            }
        }
    }
    Ok(Outcome::Holds)
}

/// Flat-form and subset-form `χ` agree, `χ(1) = 0`, `μ(·, E)` alternates in
/// sign and sums to zero above each proper flat, flats are closed and
/// intersections of flats are flats.
fn lattice_invariants(ctx: &EntryContext<'_>) -> Outcome {
    let m = ctx.matroid;
    let l = ctx.lattice().unwrap();
    let by_flats = char_poly_by_flats(l);
    let by_subsets = char_poly_by_subsets(m);
    if by_flats != by_subsets {
        return Outcome::fails(
            by_flats.to_string(),
            by_subsets.to_string(),
            "characteristic polynomial forms",
        );
    }
    if !m.is_trivial() && by_subsets.eval(&1) != 0 {
        return Outcome::fails(by_subsets.eval(&1), 0, "χ(1)");
    }
    let r = m.rank();
    for &f in l.flats() {
        if m.cl(f) != f {
            return Outcome::fails(m.cl(f).to_string(), f.to_string(), "closure of a flat");
        }
        let mu = l.mobius_to_top(f).unwrap();
        let rank = l.rank_of_flat(f).unwrap();
        let signed_mu = if (r - rank).is_multiple_of(2) {
            mu
        } else {
            -mu
        };
        if signed_mu <= 0 {
            return Outcome::fails(
                mu,
                "nonzero with sign (-1)^(r - rk F)",
                format!("μ({f}, E)"),
            );
        }
        if f != l.top() {
            let total: i64 = l
                .flats()
                .iter()
                .filter(|g| f.is_subset_of(**g))
                .map(|&g| l.mobius_to_top(g).unwrap())
                .sum();
            if total != 0 {
                return Outcome::fails(total, 0, format!("Möbius sum above {f}"));
            }
        }
        for &g in l.flats() {
            if !l.contains(f & g) {
                return Outcome::fails(
                    (f & g).to_string(),
                    "a flat",
                    format!("meet of {f} and {g}"),
                );
            }
        }
    }
    Outcome::Holds
}

fn zeta_algorithms(ctx: &EntryContext<'_>, cap: u64) -> Result<Outcome> {
    let by_flags = zeta_by_flags_capped(ctx.matroid, cap)?;
    let by_rec = ctx.zeta();
    Ok(if &by_flags == by_rec {
        Outcome::Holds
    } else {
        Outcome::fails(&by_flags, by_rec, "flag sum vs recurrence")
    })
}

fn upsilon_algorithms(ctx: &EntryContext<'_>, cap: u64) -> Result<Outcome> {
    let l = ctx.lattice().unwrap();
    let mut by_mobius = RationalFunction::zero();
    for (z, &f) in ctx.zetas().iter().zip(l.flats()) {
        by_mobius = by_mobius + z.scale(&rat(l.mobius_to_top(f).unwrap()));
    }
    let by_rec = ctx.upsilon();
    if &by_mobius != by_rec {
        return Ok(Outcome::fails(
            &by_mobius,
            by_rec,
            "Möbius definition vs recurrence",
        ));
    }
    let by_flags = upsilon_by_flags_capped(ctx.matroid, cap)?;
    Ok(if &by_flags == by_rec {
        Outcome::Holds
    } else {
        Outcome::fails(&by_flags, by_rec, "flag product vs recurrence")
    })
}

fn uniform_closed_forms(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let m = ctx.matroid;
    let (r, n) = (m.rank(), m.size());
    if r == 0 || *m != Matroid::uniform(r, n)? {
        return Ok(Outcome::skipped("not a uniform matroid of positive rank"));
    }
    let z = zeta_uniform_closed(r, n)?;
    if &z != ctx.zeta() {
        return Ok(Outcome::fails(&z, ctx.zeta(), "closed-form zeta"));
    }
    let y = upsilon_uniform_closed(r, n)?;
    if &y != ctx.upsilon() {
        return Ok(Outcome::fails(&y, ctx.upsilon(), "closed-form upsilon"));
    }
    let order = r + 3;
    let coeffs = uniform_taylor_coefficients(r, n, order)?;
    let series = ctx.zeta().taylor(order)?;
    Ok(if coeffs == series {
        Outcome::Holds
    } else {
        Outcome::fails(&coeffs, &series, "Taylor coefficients")
    })
}

/// `Σ_F Y_{M|F} = Z_M`.
fn mobius_roundtrip(ctx: &EntryContext<'_>) -> Outcome {
    let total: RationalFunction = ctx.upsilons().iter().cloned().sum();
    if &total == ctx.zeta() {
        Outcome::Holds
    } else {
        Outcome::fails(&total, ctx.zeta(), "sum of restricted upsilons")
    }
}

/// `Z(0) = 1`, and every pole is a root of some `|F| s + rk F`, `F ≠ ∅`.
fn normalization(ctx: &EntryContext<'_>) -> Outcome {
    let z = ctx.zeta();
    let at_zero = z.eval(&Rational::zero());
    if at_zero != Some(Rational::one()) {
        return Outcome::fails(at_zero.map(|v| v.to_string()), "1", "Z(0)");
    }
    let l = ctx.lattice().unwrap();
    let mut den = z.den().clone();
    let mut forms: Vec<(usize, usize)> = l.flats()[1..]
        .iter()
        .map(|&f| {
            let (a, b) = (f.len(), l.rank_of_flat(f).unwrap());
            let g = num_integer::gcd(a, b);
            (a / g, b / g)
        })
        .collect();
    forms.sort_unstable();
    forms.dedup();
    for (a, b) in forms {
        let form = Polynomial::linear(rat(a), rat(b));
        while let Ok(q) = den.divide_exact(&form) {
            den = q;
        }
    }
    if den.degree() == Some(0) {
        Outcome::Holds
    } else {
        Outcome::fails(
            den,
            Value::Null,
            "denominator factor outside the flat linear forms",
        )
    }
}

fn truncation_transfer(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let m = ctx.matroid;
    if let Some(skip) = needs_rank_two(m) {
        return Ok(skip);
    }
    let via = zeta_of_truncation_via_transfer(m)?;
    let direct = zeta_by_recurrence(&m.truncation()?);
    Ok(if via == direct {
        Outcome::Holds
    } else {
        Outcome::fails(&via, &direct, "transfer vs direct")
    })
}

fn extension_transfer(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let m = ctx.matroid;
    if m.rank() == 0 {
        return Ok(Outcome::skipped("rank 0"));
    }
    if m.size() >= MAX_GROUND {
        return Ok(Outcome::skipped("ground set at maximum size"));
    }
    let via = zeta_of_free_extension_via_transfer(m)?;
    let direct = zeta_by_recurrence(&m.free_extension()?);
    Ok(if via == direct {
        Outcome::Holds
    } else {
        Outcome::fails(&via, &direct, "transfer vs direct")
    })
}

/// `Z`, `Y` and `χ` of a direct sum factor over its summands.
fn multiplicativity(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let [a, b] = ctx.operands else {
        return Ok(Outcome::skipped("not a direct sum"));
    };
    let za = zeta_by_recurrence(a);
    let zb = zeta_by_recurrence(b);
    let product = &za * &zb;
    if &product != ctx.zeta() {
        return Ok(Outcome::fails(&product, ctx.zeta(), "zeta"));
    }
    let ya = crate::zeta::upsilon_by_recurrence(a)?;
    let yb = crate::zeta::upsilon_by_recurrence(b)?;
    let product = &ya * &yb;
    if &product != ctx.upsilon() {
        return Ok(Outcome::fails(&product, ctx.upsilon(), "upsilon"));
    }
    let chi = &characteristic_polynomial(a) * &characteristic_polynomial(b);
    let whole = characteristic_polynomial(ctx.matroid);
    Ok(if chi == whole {
        Outcome::Holds
    } else {
        Outcome::fails(
            chi.to_string(),
            whole.to_string(),
            "characteristic polynomial",
        )
    })
}

/// Taylor prefixes of `Z_M` and `Z_{tr M}` must agree; reports the first
/// index where they differ.
pub fn judge_truncation_prefixes(z_m: &TaylorPrefix, z_tr: &TaylorPrefix) -> Outcome {
    match z_m.first_difference(z_tr) {
        None => Outcome::Holds,
        Some(k) => Outcome::fails(z_m, z_tr, format!("first difference at k = {k}")),
    }
}

/// `Y = (-1)^r |B| s^r + O(s^{r+1})`: the prefix `a_0..a_r` must be zero
/// except `a_r = (-1)^r |B|`.
pub fn judge_upsilon_prefix(y: &TaylorPrefix, rank: usize, bases: usize) -> Outcome {
    let mut want = vec![Rational::zero(); rank + 1];
    want[rank] = rat(signed(rank, BigInt::from(bases)));
    let want = TaylorPrefix::new(want);
    match y.first_difference(&want) {
        None if y.order() == rank => Outcome::Holds,
        None => Outcome::fails(y, &want, "prefix length"),
        Some(k) => Outcome::fails(y, &want, format!("first difference at k = {k}")),
    }
}

fn conjecture_truncation(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let m = ctx.matroid;
    if let Some(skip) = needs_rank_two(m) {
        return Ok(skip);
    }
    let order = m.rank() - 1;
    let z_m = ctx.zeta().taylor(order)?;
    let z_tr = zeta_by_recurrence(&m.truncation()?).taylor(order)?;
    Ok(judge_truncation_prefixes(&z_m, &z_tr))
}

fn conjecture_upsilon(ctx: &EntryContext<'_>) -> Result<Outcome> {
    let m = ctx.matroid;
    let y = ctx.upsilon().taylor(m.rank())?;
    Ok(judge_upsilon_prefix(&y, m.rank(), m.bases().len()))
}

/// Every check of the configured suite on one entry, in a fixed order.
pub fn check_entry(entry: &CatalogEntry, config: &CheckConfig) -> Vec<CheckReport> {
    let ctx = EntryContext::new(&entry.matroid, &entry.operands);
    CheckKind::in_suite(config.suite)
        .into_iter()
        .map(|kind| {
            let outcome = run_check(kind, &ctx, config);
            CheckReport::from_outcome(kind, &entry.name, &entry.matroid, outcome)
        })
        .collect()
}

fn single(entry: &CatalogEntry, kind: CheckKind, config: &CheckConfig) -> CheckReport {
    let ctx = EntryContext::new(&entry.matroid, &entry.operands);
    CheckReport::from_outcome(
        kind,
        &entry.name,
        &entry.matroid,
        run_check(kind, &ctx, config),
    )
}

pub fn check_girth_theorem(entry: &CatalogEntry) -> CheckReport {
    single(entry, CheckKind::GirthTheorem, &CheckConfig::default())
}

pub fn check_conjecture_truncation(entry: &CatalogEntry) -> CheckReport {
    single(
        entry,
        CheckKind::ConjectureTruncation,
        &CheckConfig::default(),
    )
}

pub fn check_conjecture_upsilon(entry: &CatalogEntry) -> CheckReport {
    single(entry, CheckKind::ConjectureUpsilon, &CheckConfig::default())
}

pub fn check_k_derivative_lemma(entry: &CatalogEntry, kmax: usize) -> CheckReport {
    let config = CheckConfig {
        derivative_kmax: kmax,
        ..CheckConfig::default()
    };
    single(entry, CheckKind::KDerivativeLemma, &config)
}

pub fn check_counting_identities(entry: &CatalogEntry, kmax: usize) -> CheckReport {
    let config = CheckConfig {
        kmax,
        ..CheckConfig::default()
    };
    single(entry, CheckKind::CountingIdentities, &config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Graph;

    fn check(kind: CheckKind, m: &Matroid) -> Outcome {
        let ctx = EntryContext::new(m, &[]);
        run_check(kind, &ctx, &CheckConfig::default())
    }

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    #[test]
    fn theorems_hold_on_small_examples() {
        for m in [
            u(2, 3),
            u(3, 3),
            u(1, 4),
            u(3, 5),
            Graph::complete(4).matroid().unwrap(),
            Matroid::trivial(),
        ] {
            for &kind in CheckKind::THEOREMS {
                let out = check(kind, &m);
                assert!(
                    !matches!(out, Outcome::Fails { .. }),
                    "{kind:?} on {m:?}: {out:?}"
                );
            }
        }
    }

    #[test]
    fn conjectures_hold_on_small_examples() {
        for m in [
            u(2, 3),
            u(3, 5),
            Graph::complete(4).matroid().unwrap(),
            Graph::cycle(4).matroid().unwrap(),
        ] {
            for &kind in CheckKind::CONJECTURES {
                assert_eq!(check(kind, &m), Outcome::Holds, "{kind:?}");
            }
        }
    }

    #[test]
    fn skips_are_reported() {
        assert!(matches!(
            check(CheckKind::ConjectureTruncation, &u(1, 3)),
            Outcome::Skipped(_)
        ));
        assert!(matches!(
            check(
                CheckKind::UniformClosedForms,
                &Graph::complete(4).matroid().unwrap()
            ),
            Outcome::Skipped(_)
        ));
        let loopy = u(1, 1).direct_sum(&u(0, 1)).unwrap();
        assert!(matches!(
            check(CheckKind::GirthTheorem, &loopy),
            Outcome::Skipped(_)
        ));
        assert!(matches!(
            check(CheckKind::Multiplicativity, &u(2, 3)),
            Outcome::Skipped(_)
        ));
    }

    #[test]
    fn upsilon_judge_examples() {
        let prefix = |v: &[i64]| TaylorPrefix::new(v.iter().map(|&x| rat(x)).collect());
        assert_eq!(
            judge_upsilon_prefix(&prefix(&[0, 0, 3]), 2, 3),
            Outcome::Holds
        );
        assert_eq!(
            judge_upsilon_prefix(&prefix(&[0, -4]), 1, 4),
            Outcome::Holds
        );
        assert!(matches!(
            judge_upsilon_prefix(&prefix(&[0, 0, 4]), 2, 3),
            Outcome::Fails { .. }
        ));
        assert!(matches!(
            judge_upsilon_prefix(&prefix(&[0, 1, 3]), 2, 3),
            Outcome::Fails { .. }
        ));
    }

    #[test]
    fn truncation_judge_reports_first_difference() {
        let prefix = |v: &[i64]| TaylorPrefix::new(v.iter().map(|&x| rat(x)).collect());
        assert_eq!(
            judge_truncation_prefixes(&prefix(&[1, -3]), &prefix(&[1, -3])),
            Outcome::Holds
        );
        match judge_truncation_prefixes(&prefix(&[1, -3, 6]), &prefix(&[1, -3, 7])) {
            Outcome::Fails { detail, .. } => assert!(detail.contains("k = 2")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn witness_round_trip() {
        let m = u(2, 3);
        let report = CheckReport::from_outcome(
            CheckKind::ConjectureUpsilon,
            "u:2,3",
            &m,
            Outcome::fails(vec!["0"], vec!["1"], "planted"),
        );
        let w = report.witness.as_ref().unwrap();
        assert_eq!(w.matroid().unwrap(), m);
        assert!(w.sides_differ());
        let json = serde_json::to_string(&report).unwrap();
        let back: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}

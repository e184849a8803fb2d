//! The verification lab: a matroid catalog, theorem and conjecture checks,
//! and a parallel runner with deterministic output.

mod catalog;
mod checks;

use rayon::prelude::*;
use serde::Serialize;

pub use catalog::{build_catalog, CatalogEntry, Provenance, CATALOG_GRAPHS};
pub use checks::{
    check_conjecture_truncation, check_conjecture_upsilon, check_counting_identities, check_entry,
    check_girth_theorem, check_k_derivative_lemma, judge_truncation_prefixes, judge_upsilon_prefix,
    run_check, CheckConfig, CheckKind, CheckReport, EntryContext, Outcome, Status, Suite, Witness,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
}

impl Counts {
    fn add(&mut self, status: Status) {
        match status {
            Status::Holds => self.holds += 1,
            Status::Fails => self.fails += 1,
            Status::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub theorems: Counts,
    pub conjectures: Counts,
}

pub fn summarize(reports: &[CheckReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        if r.check.is_conjecture() {
            s.conjectures.add(r.status);
        } else {
            s.theorems.add(r.status);
        }
    }
    s
}

/// Runs every configured check on every entry. Entries run in parallel;
/// reports come back in catalog order, then check order.
pub fn run_all_checks(catalog: &[CatalogEntry], config: &CheckConfig) -> Vec<CheckReport> {
    let work = || -> Vec<CheckReport> {
        catalog
            .par_iter()
            .map(|e| check_entry(e, config))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    if config.jobs == 0 {
        return work();
    }
    match rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
    {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

/// One JSON object per line.
pub fn to_json_lines(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        out.push('\n');
    }
    out
}

/// One row per report, then the summary counts.
pub fn render_text(reports: &[CheckReport]) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let width = reports
        .iter()
        .map(|r| r.entry.len())
        .max()
        .unwrap_or(5)
        .max(5);
    writeln!(out, "{:<22} {:<width$} status", "check", "entry").unwrap();
    for r in reports {
        let status = match r.status {
            Status::Holds => "holds".to_string(),
            Status::Fails => format!(
                "FAILS ({})",
                r.witness.as_ref().map(|w| w.detail.as_str()).unwrap_or("")
            ),
            Status::Skipped => format!("skipped ({})", r.reason.as_deref().unwrap_or("")),
        };
        writeln!(out, "{:<22} {:<width$} {status}", r.check.name(), r.entry).unwrap();
    }
    let s = summarize(reports);
    writeln!(
        out,
        "theorems: {} holds, {} fails, {} skipped",
        s.theorems.holds, s.theorems.fails, s.theorems.skipped
    )
    .unwrap();
    writeln!(
        out,
        "conjectures: {} holds, {} fails, {} skipped",
        s.conjectures.holds, s.conjectures.fails, s.conjectures.skipped
    )
    .unwrap();
    out
}

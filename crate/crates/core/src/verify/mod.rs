//! Checks the registry of theorems over a corpus of groups.
//!
//! Each corpus group is analysed once (lattice, chief structure, class flags)
//! and then every selected theorem is evaluated on it. Groups are independent
//! work items; results are merged by theorem and then corpus position, so the
//! report does not depend on the worker count.

mod corpus;
mod registry;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

pub use corpus::{fingerprint, generate_corpus, Corpus, Fingerprint};
pub use registry::{registry, Context, Row, TheoremSpec};

use crate::builtin::{build_group, GroupSpec};
use crate::chief::{classify, NormalPoset};
use crate::error::Result;
use crate::structure::{core_subgroups, enumerate_subgroups};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub order_cap: usize,
    pub lattice_cap: usize,
    pub series_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order_cap: crate::builtin::DEFAULT_ORDER_CAP,
            lattice_cap: crate::structure::DEFAULT_LATTICE_CAP,
            series_cap: crate::chief::DEFAULT_SERIES_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem_id: String,
    pub group_name: String,
    pub params: Vec<(String, String)>,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub elapsed_ms: u64,
    pub note: Option<String>,
    /// Set when the group could not be analysed within the caps.
    pub skipped: Option<String>,
}

impl TheoremVerdict {
    pub fn is_violation(&self) -> bool {
        self.skipped.is_none() && self.hypothesis_holds && !self.conclusion_holds
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremSummary {
    pub theorem_id: String,
    pub rows: usize,
    pub hypothesis_true: usize,
    pub violations: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub verdicts: Vec<TheoremVerdict>,
}

impl VerifyReport {
    pub fn summaries(&self, theorems: &[&str]) -> Vec<TheoremSummary> {
        theorems
            .iter()
            .map(|&id| {
                let rows: Vec<&TheoremVerdict> = self.verdicts.iter().filter(|v| v.theorem_id == id).collect();
                TheoremSummary {
                    theorem_id: id.to_string(),
                    rows: rows.iter().filter(|v| v.skipped.is_none()).count(),
                    hypothesis_true: rows
                        .iter()
                        .filter(|v| v.skipped.is_none() && v.hypothesis_holds)
                        .count(),
                    violations: rows.iter().filter(|v| v.is_violation()).count(),
                    skipped: rows.iter().filter(|v| v.skipped.is_some()).count(),
                }
            })
            .collect()
    }

    pub fn violations(&self) -> usize {
        self.verdicts.iter().filter(|v| v.is_violation()).count()
    }

    /// Line-oriented text report. With `timings` off every `ms` is 0 so runs
    /// can be compared byte for byte.
    pub fn render_text(&self, theorems: &[&str], timings: bool) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            match &v.skipped {
                Some(reason) => {
                    let _ = writeln!(
                        out,
                        "SKIP theorem={} group={} reason={}",
                        v.theorem_id, v.group_name, reason
                    );
                }
                None => {
                    let _ = write!(
                        out,
                        "VERDICT theorem={} group={} params={} hyp={} concl={} ms={}",
                        v.theorem_id,
                        v.group_name,
                        v.params_text(),
                        tf(v.hypothesis_holds),
                        tf(v.conclusion_holds),
                        if timings { v.elapsed_ms } else { 0 }
                    );
                    if let Some(note) = &v.note {
                        let _ = write!(out, " note={note}");
                    }
                    out.push('\n');
                }
            }
        }
        for s in self.summaries(theorems) {
            let _ = writeln!(
                out,
                "SUMMARY theorem={} rows={} hyp_true={} violations={}",
                s.theorem_id, s.rows, s.hypothesis_true, s.violations
            );
            if s.hypothesis_true == 0 {
                let _ = writeln!(out, "VACUOUS theorem={}", s.theorem_id);
            }
        }
        out
    }
}

fn tf(b: bool) -> char {
    if b {
        't'
    } else {
        'f'
    }
}

/// Theorems matching `selector` (`all` or an id).
pub fn select(selector: &str) -> Vec<TheoremSpec> {
    registry()
        .into_iter()
        .filter(|t| selector == "all" || t.id == selector)
        .collect()
}

/// Analyses one group and evaluates the given theorems on it. Returns one
/// list of verdicts per theorem.
fn verify_group(spec: &GroupSpec, theorems: &[TheoremSpec], caps: Caps) -> Vec<Vec<TheoremVerdict>> {
    let name = spec.name();
    let skip = |reason: String| -> Vec<Vec<TheoremVerdict>> {
        theorems
            .iter()
            .map(|t| {
                vec![TheoremVerdict {
                    theorem_id: t.id.to_string(),
                    group_name: name.clone(),
                    params: Vec::new(),
                    hypothesis_holds: false,
                    conclusion_holds: false,
                    elapsed_ms: 0,
                    note: None,
                    skipped: Some(reason.clone()),
                }]
            })
            .collect()
    };
    let g = match build_group(spec, caps.order_cap) {
        Ok(g) => g,
        Err(e) => return skip(e.to_string()),
    };
    let lattice = match enumerate_subgroups(&g, caps.lattice_cap) {
        Ok(l) => l,
        Err(e) => return skip(e.to_string()),
    };
    let flags = classify(&g, &lattice);
    let core = core_subgroups(&g, &lattice);
    let poset = NormalPoset::new(&g, &lattice, lattice.whole());
    let ctx = Context::new(&g, &lattice, &flags, &core, &poset);
    theorems
        .iter()
        .map(|t| {
            let start = Instant::now();
            let rows = (t.evaluate)(&ctx);
            let ms = start.elapsed().as_millis() as u64;
            rows.into_iter()
                .map(|r| TheoremVerdict {
                    theorem_id: t.id.to_string(),
                    group_name: name.clone(),
                    params: r.params,
                    hypothesis_holds: r.hypothesis,
                    conclusion_holds: r.conclusion,
                    elapsed_ms: ms,
                    note: r.note,
                    skipped: None,
                })
                .collect()
        })
        .collect()
}

/// Evaluates `theorems` over `corpus` on `workers` threads.
pub fn verify(theorems: &[TheoremSpec], corpus: &Corpus, workers: usize, caps: Caps) -> Result<VerifyReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let per_group: Vec<Vec<Vec<TheoremVerdict>>> = pool.install(|| {
        corpus
            .entries
            .par_iter()
            .map(|spec| verify_group(spec, theorems, caps))
            .collect()
    });
    let mut verdicts = Vec::new();
    for t in 0..theorems.len() {
        for group in &per_group {
            verdicts.extend(group[t].iter().cloned());
        }
    }
    Ok(VerifyReport { verdicts })
}

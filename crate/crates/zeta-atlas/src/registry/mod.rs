//! The identity registry, the batch runner and its report.

mod adhoc;
mod records;
mod render;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use globset::{Glob, GlobMatcher};
use rayon::prelude::*;
use thiserror::Error;

use crate::error::MathResult;

pub use adhoc::{adhoc_functions, eval_adhoc, AdhocError, AdhocFunction};
pub use records::build_registry;
pub use render::{parse_json_report, render_report, ReportFormat};

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("invalid filter pattern: {0}")]
    InvalidFilter(#[from] globset::Error),
    #[error("{name} must be a positive finite number, got {value}")]
    InvalidScale { name: &'static str, value: f64 },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed report: {0}")]
    Malformed(String),
}

/// Knobs an evaluator may consult; long sums and products scale their budgets by it.
#[derive(Debug, Clone, Copy)]
pub struct EvalContext {
    pub budget_scale: f64,
}

impl EvalContext {
    /// `base` scaled by the budget factor, at least 1.
    pub fn budget(&self, base: usize) -> usize {
        ((base as f64 * self.budget_scale).round() as usize).max(1)
    }
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext { budget_scale: 1.0 }
    }
}

/// One evaluated side of an identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Side {
    pub value: f64,
    pub terms: usize,
}

/// Evaluates both sides at a sample. Several module operations produce the two
/// sides together, so a record holds one handle for the pair.
pub type Evaluator = Arc<dyn Fn(&[f64], &EvalContext) -> MathResult<(Side, Side)> + Send + Sync>;

/// Admissible range of one sample coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    pub const fn open(lo: f64, hi: f64) -> Self {
        Interval { lo, hi, lo_open: true, hi_open: true }
    }

    pub const fn closed(lo: f64, hi: f64) -> Self {
        Interval { lo, hi, lo_open: false, hi_open: false }
    }

    pub const fn open_closed(lo: f64, hi: f64) -> Self {
        Interval { lo, hi, lo_open: true, hi_open: false }
    }

    pub const fn closed_open(lo: f64, hi: f64) -> Self {
        Interval { lo, hi, lo_open: false, hi_open: true }
    }

    pub fn contains(&self, v: f64) -> bool {
        let above = if self.lo_open { v > self.lo } else { v >= self.lo };
        let below = if self.hi_open { v < self.hi } else { v <= self.hi };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_open { '(' } else { '[' };
        let r = if self.hi_open { ')' } else { ']' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Param {
    pub name: &'static str,
    pub range: Interval,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub label: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expected {
    Pass,
    MisprintSuspect,
}

impl Expected {
    pub fn as_str(self) -> &'static str {
        match self {
            Expected::Pass => "pass",
            Expected::MisprintSuspect => "misprint_suspect",
        }
    }
}

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: String,
    pub description: String,
    pub params: Vec<Param>,
    pub samples: Vec<Sample>,
    pub tolerance: f64,
    pub expected: Expected,
    pub evaluator: Evaluator,
    /// Present exactly when `expected` is `MisprintSuspect`.
    pub corrected_form: Option<Evaluator>,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("samples", &self.samples.len())
            .field("tolerance", &self.tolerance)
            .field("expected", &self.expected)
            .finish_non_exhaustive()
    }
}

impl IdentityRecord {
    /// Leading group of the id, `"2"` for `"eq-2.73"`.
    pub fn section(&self) -> &str {
        section_of(&self.id)
    }
}

pub(crate) fn section_of(id: &str) -> &str {
    let body = id.strip_prefix("eq-").unwrap_or(id);
    body.split('.').next().unwrap_or(body)
}

/// Orders ids numerically component by component: `eq-2.9 < eq-2.12 < eq-2.12.1 < eq-2.12-x`.
pub fn compare_ids(a: &str, b: &str) -> Ordering {
    id_key(a).cmp(&id_key(b))
}

fn id_key(id: &str) -> (Vec<u64>, String) {
    let body = id.strip_prefix("eq-").unwrap_or(id);
    let (numbers, variant) = match body.find('-') {
        Some(i) => (&body[..i], &body[i + 1..]),
        None => (body, ""),
    };
    let nums = numbers.split('.').map(|p| p.parse().unwrap_or(u64::MAX)).collect();
    (nums, variant.to_string())
}

/// A problem found by [`audit_registry`].
#[derive(Debug, Clone, PartialEq)]
pub struct AuditIssue {
    pub id: String,
    pub message: String,
}

/// Checks ids, tolerances, sample arity and that every sample lies in the declared ranges.
pub fn audit_registry(records: &[IdentityRecord]) -> Vec<AuditIssue> {
    let mut issues = Vec::new();
    let mut push = |id: &str, message: String| issues.push(AuditIssue { id: id.to_string(), message });
    let mut seen = std::collections::HashSet::new();
    for r in records {
        if !seen.insert(r.id.as_str()) {
            push(&r.id, "duplicate id".into());
        }
        if !(r.tolerance > 0.0) {
            push(&r.id, format!("tolerance {} is not positive", r.tolerance));
        }
        if r.samples.is_empty() {
            push(&r.id, "no samples".into());
        }
        match (r.expected, r.corrected_form.is_some()) {
            (Expected::Pass, true) => push(&r.id, "corrected form on a record expected to pass".into()),
            (Expected::MisprintSuspect, false) => push(&r.id, "misprint suspect without corrected form".into()),
            _ => {}
        }
        for s in &r.samples {
            if s.values.len() != r.params.len() {
                push(&r.id, format!("sample {} has {} values for {} parameters", s.label, s.values.len(), r.params.len()));
                continue;
            }
            for (v, p) in s.values.iter().zip(&r.params) {
                if !p.range.contains(*v) {
                    push(&r.id, format!("sample {}: {} = {v} outside {}", s.label, p.name, p.range));
                }
            }
        }
    }
    issues
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    MisprintConfirmed,
    Error,
}

impl Status {
    pub const ALL: [Status; 4] = [Status::Pass, Status::Fail, Status::MisprintConfirmed, Status::Error];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::MisprintConfirmed => "misprint_confirmed",
            Status::Error => "error",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        Status::ALL.into_iter().find(|st| st.as_str() == s)
    }
}

/// Values of the corrected form at a sample whose printed form failed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectedValues {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub id: String,
    pub sample: String,
    pub lhs_value: f64,
    pub rhs_value: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tolerance: f64,
    pub status: Status,
    pub terms_used: usize,
    pub wall_seconds: f64,
    pub corrected: Option<CorrectedValues>,
    pub message: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub misprint_confirmed: usize,
    pub error: usize,
}

impl Summary {
    pub fn from_outcomes(outcomes: &[CheckOutcome]) -> Self {
        let mut s = Summary::default();
        for o in outcomes {
            *s.slot(o.status) += 1;
        }
        s
    }

    fn slot(&mut self, status: Status) -> &mut usize {
        match status {
            Status::Pass => &mut self.pass,
            Status::Fail => &mut self.fail,
            Status::MisprintConfirmed => &mut self.misprint_confirmed,
            Status::Error => &mut self.error,
        }
    }

    pub fn count(&self, status: Status) -> usize {
        match status {
            Status::Pass => self.pass,
            Status::Fail => self.fail,
            Status::MisprintConfirmed => self.misprint_confirmed,
            Status::Error => self.error,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.misprint_confirmed + self.error
    }

    /// The exit-code contract: success iff nothing failed or errored.
    pub fn is_success(&self) -> bool {
        self.fail == 0 && self.error == 0
    }
}

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub version: u32,
    pub started_at: String,
    pub outcomes: Vec<CheckOutcome>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn new(started_at: String, outcomes: Vec<CheckOutcome>) -> Self {
        let summary = Summary::from_outcomes(&outcomes);
        CheckReport { version: REPORT_VERSION, started_at, outcomes, summary }
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Glob over ids; empty selects everything.
    pub filter: String,
    pub tol_scale: f64,
    pub budget_scale: f64,
    /// Record wall-clock seconds per outcome and the real start time.
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { filter: String::new(), tol_scale: 1.0, budget_scale: 1.0, timings: false }
    }
}

fn check_scale(name: &'static str, value: f64) -> Result<(), RegistryError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(RegistryError::InvalidScale { name, value })
    }
}

/// Glob matcher for a filter; `None` for the empty filter.
pub fn compile_filter(filter: &str) -> Result<Option<GlobMatcher>, RegistryError> {
    if filter.is_empty() {
        return Ok(None);
    }
    Ok(Some(Glob::new(filter)?.compile_matcher()))
}

/// Records whose id matches `filter`, in registry order.
pub fn select<'a>(records: &'a [IdentityRecord], filter: &str) -> Result<Vec<&'a IdentityRecord>, RegistryError> {
    let matcher = compile_filter(filter)?;
    Ok(records.iter().filter(|r| matcher.as_ref().is_none_or(|m| m.is_match(&r.id))).collect())
}

/// Start timestamp: `SOURCE_DATE_EPOCH` when set, the clock when timing, else the epoch.
fn start_timestamp(timings: bool) -> String {
    let from_env = std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|v| v.trim().parse::<i64>().ok());
    let when = match from_env {
        Some(secs) => chrono::DateTime::from_timestamp(secs, 0),
        None if timings => Some(chrono::Utc::now()),
        None => chrono::DateTime::from_timestamp(0, 0),
    };
    when.unwrap_or_default().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

pub(crate) fn diffs(lhs: f64, rhs: f64) -> (f64, f64) {
    let abs = (lhs - rhs).abs();
    let scale = lhs.abs().max(rhs.abs());
    let rel = if abs == 0.0 { 0.0 } else { abs / scale };
    (abs, rel)
}

fn within(abs: f64, rel: f64, tol: f64) -> bool {
    abs.min(rel) <= tol
}

fn evaluate(
    record: &IdentityRecord,
    sample: &Sample,
    ctx: &EvalContext,
    tol_scale: f64,
    timings: bool,
) -> CheckOutcome {
    let start = Instant::now();
    let tolerance = record.tolerance * tol_scale;
    let mut outcome = CheckOutcome {
        id: record.id.clone(),
        sample: sample.label.clone(),
        lhs_value: f64::NAN,
        rhs_value: f64::NAN,
        abs_diff: f64::NAN,
        rel_diff: f64::NAN,
        tolerance,
        status: Status::Error,
        terms_used: 0,
        wall_seconds: 0.0,
        corrected: None,
        message: None,
    };
    match (record.evaluator)(&sample.values, ctx) {
        Err(e) => outcome.message = Some(e.to_string()),
        Ok((l, r)) => {
            let (abs, rel) = diffs(l.value, r.value);
            outcome.lhs_value = l.value;
            outcome.rhs_value = r.value;
            outcome.abs_diff = abs;
            outcome.rel_diff = rel;
            outcome.terms_used = l.terms + r.terms;
            if !(l.value.is_finite() && r.value.is_finite()) {
                outcome.message = Some("non-finite value".into());
            } else if within(abs, rel, tolerance) {
                outcome.status = Status::Pass;
            } else {
                outcome.status = Status::Fail;
                if let Some(fix) = &record.corrected_form {
                    match fix(&sample.values, ctx) {
                        Ok((cl, cr)) => {
                            let (cabs, crel) = diffs(cl.value, cr.value);
                            outcome.corrected =
                                Some(CorrectedValues { lhs: cl.value, rhs: cr.value, abs_diff: cabs, rel_diff: crel });
                            outcome.terms_used += cl.terms + cr.terms;
                            if cl.value.is_finite() && cr.value.is_finite() && within(cabs, crel, tolerance) {
                                outcome.status = Status::MisprintConfirmed;
                            }
                        }
                        Err(e) => outcome.message = Some(format!("corrected form: {e}")),
                    }
                }
            }
        }
    }
    if timings {
        outcome.wall_seconds = start.elapsed().as_secs_f64();
    }
    outcome
}

/// Evaluates every selected record at every sample, in parallel, and sorts the
/// outcomes by id and then sample position.
pub fn run_checks(records: &[IdentityRecord], opts: &RunOptions) -> Result<CheckReport, RegistryError> {
    check_scale("tol_scale", opts.tol_scale)?;
    check_scale("budget_scale", opts.budget_scale)?;
    let started_at = start_timestamp(opts.timings);
    let mut selected = select(records, &opts.filter)?;
    selected.sort_by(|a, b| compare_ids(&a.id, &b.id));
    let ctx = EvalContext { budget_scale: opts.budget_scale };
    let jobs: Vec<(usize, usize)> =
        selected.iter().enumerate().flat_map(|(i, r)| (0..r.samples.len()).map(move |j| (i, j))).collect();
    let mut outcomes: Vec<((usize, usize), CheckOutcome)> = jobs
        .into_par_iter()
        .map(|(i, j)| {
            let r = selected[i];
            ((i, j), evaluate(r, &r.samples[j], &ctx, opts.tol_scale, opts.timings))
        })
        .collect();
    outcomes.sort_by_key(|(k, _)| *k);
    Ok(CheckReport::new(started_at, outcomes.into_iter().map(|(_, o)| o).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_ordering_is_numeric() {
        let mut ids = vec!["eq-2.12-x", "eq-2.12.1", "eq-2.9", "eq-1.25", "eq-2.12", "eq-3.2"];
        ids.sort_by(|a, b| compare_ids(a, b));
        assert_eq!(ids, ["eq-1.25", "eq-2.9", "eq-2.12", "eq-2.12-x", "eq-2.12.1", "eq-3.2"]);
    }

    #[test]
    fn diffs_of_zero() {
        assert_eq!(diffs(0.0, 0.0), (0.0, 0.0));
        let (a, r) = diffs(1.0, 1.5);
        assert_eq!(a, 0.5);
        assert!((r - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn intervals() {
        assert!(Interval::open(0.0, 1.0).contains(0.5));
        assert!(!Interval::open(0.0, 1.0).contains(0.0));
        assert!(Interval::closed(0.0, 1.0).contains(1.0));
        assert!(!Interval::closed_open(0.0, 1.0).contains(1.0));
        assert_eq!(Interval::open_closed(0.0, 1.0).to_string(), "(0, 1]");
    }

    #[test]
    fn sections() {
        assert_eq!(section_of("eq-2.73"), "2");
        assert_eq!(section_of("eq-3.14-bromwich"), "3");
    }

    #[test]
    fn bad_scale_is_rejected() {
        let opts = RunOptions { tol_scale: 0.0, ..RunOptions::default() };
        assert!(matches!(run_checks(&[], &opts), Err(RegistryError::InvalidScale { .. })));
    }
}

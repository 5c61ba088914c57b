//! Exhaustive verification of the classical statement catalogue for
//! LA-semigroup ideals.
//!
//! Each catalogue entry binds a stable id to a scope filter and one or
//! more executable parts. Biconditionals are split into independently
//! reported directions (`thm-2-fwd`, `thm-2-rev`) so a failed direction
//! localizes the problem. Running a statement scans enumerated models in
//! deterministic order and reports `VERIFIED` up to the maximum order,
//! `COUNTEREXAMPLE` with a minimal replayable witness, or `SKIPPED` when
//! no model fell inside the statement's scope.

mod checks;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{self, EnumerateError};
use crate::ideals::subset_product;
use crate::magma::{self, CayleyTable, PropertyProfile};

/// Errors from suite configuration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown statement id `{unknown}`; valid ids: {}", valid.join(", "))]
    UnknownStatement { unknown: String, valid: Vec<String> },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

/// A model under test with its precomputed profile.
#[derive(Debug, Clone)]
pub struct Model {
    pub table: CayleyTable,
    pub profile: PropertyProfile,
}

impl Model {
    pub fn new(table: CayleyTable) -> Self {
        let profile = PropertyProfile::of(&table);
        Model { table, profile }
    }
}

/// Scope filter deciding which models a statement applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Any,
    LeftIdentity,
    Regular,
    RightInvertible,
    /// Requires `S·S = S`.
    SquareCoversCarrier,
}

impl Scope {
    pub fn admits(&self, model: &Model) -> bool {
        match self {
            Scope::Any => true,
            Scope::LeftIdentity => model.profile.left_identity.is_some(),
            Scope::Regular => model.profile.is_regular,
            Scope::RightInvertible => model.profile.is_right_invertible,
            Scope::SquareCoversCarrier => {
                let s = model.table.carrier();
                subset_product(&model.table, &s, &s) == s
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Scope::Any => "any",
            Scope::LeftIdentity => "left identity",
            Scope::Regular => "regular",
            Scope::RightInvertible => "right invertible",
            Scope::SquareCoversCarrier => "S = S·S",
        }
    }
}

/// Whether a part asserts something of every in-scope model or hunts for
/// a single witness model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Universal,
    Existential,
}

/// A named value inside a counterexample or witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessValue {
    Element(usize),
    Set(Vec<usize>),
    Text(String),
}

/// Named elements and subsets instantiating a failed implication (or, for
/// existential parts, the found witness).
pub type Witness = BTreeMap<String, WitnessValue>;

/// One independently reported direction or clause of a statement.
pub struct Part {
    /// Row id suffix; `None` for single-part statements.
    pub suffix: Option<&'static str>,
    pub scope: Scope,
    pub kind: CheckKind,
    /// For universal parts, `Some` is a counterexample witness; for
    /// existential parts, `Some` means the model is a witness.
    pub check: fn(&Model) -> Option<Witness>,
}

/// One catalogue entry: a stable id, the claim, and its parts.
pub struct StatementCheck {
    pub id: &'static str,
    pub claim: &'static str,
    pub parts: Vec<Part>,
}

impl StatementCheck {
    /// Row id of a part: statement id plus the part suffix.
    pub fn row_id(&self, part: &Part) -> String {
        match part.suffix {
            Some(s) => format!("{}-{}", self.id, s),
            None => self.id.to_string(),
        }
    }
}

/// The fixed statement catalogue, in presentation order.
pub fn registry() -> Vec<StatementCheck> {
    checks::registry()
}

/// Verdict of one report row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "VERIFIED")]
    Verified,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

/// A reported counterexample (or existential witness): the model in table
/// file format plus the named witness values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub order: usize,
    pub table: String,
    pub witness: Witness,
}

/// Result of one statement part over one model stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementReport {
    pub id: String,
    pub statement: String,
    #[serde(rename = "ref")]
    pub reference: String,
    pub scope: String,
    pub verdict: Verdict,
    /// Largest order covered when verdict is `VERIFIED`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified_to: Option<usize>,
    pub orders: Vec<usize>,
    pub models_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleReport>,
    pub counterexamples_found: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Whether a scan stops at the first failure or tallies all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopMode {
    FirstFailure,
    CollectAll,
}

/// Suite totals by verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub verified: usize,
    pub counterexamples: usize,
    pub skipped: usize,
}

/// The full suite report; `elapsed_ms` is the only non-deterministic
/// field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub max_order: usize,
    pub statements: Vec<StatementReport>,
    pub totals: Totals,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn any_counterexample(&self) -> bool {
        self.statements.iter().any(|s| s.verdict == Verdict::Counterexample)
    }
}

/// Runs every part of one statement against a model stream, in stream
/// order. The stream must be sorted by ascending order and then
/// lexicographically, so the first failure is the minimal counterexample.
pub fn run_statement(
    check: &StatementCheck,
    models: &[Model],
    mode: StopMode,
) -> Vec<StatementReport> {
    let orders: Vec<usize> = {
        let mut o: Vec<usize> = models.iter().map(|m| m.table.order()).collect();
        o.sort();
        o.dedup();
        o
    };
    let max_order = orders.last().copied().unwrap_or(0);
    check
        .parts
        .iter()
        .map(|part| run_part(check, part, models, mode, &orders, max_order))
        .collect()
}

fn run_part(
    check: &StatementCheck,
    part: &Part,
    models: &[Model],
    mode: StopMode,
    orders: &[usize],
    max_order: usize,
) -> StatementReport {
    let mut admitted = 0u64;
    let mut first: Option<CounterexampleReport> = None;
    let mut found = 0u64;
    for model in models {
        if !part.scope.admits(model) {
            continue;
        }
        admitted += 1;
        if let Some(witness) = (part.check)(model) {
            found += 1;
            if first.is_none() {
                first = Some(CounterexampleReport {
                    order: model.table.order(),
                    table: model.table.to_file_string(),
                    witness,
                });
            }
            match part.kind {
                CheckKind::Existential => break,
                CheckKind::Universal if mode == StopMode::FirstFailure => break,
                CheckKind::Universal => {}
            }
        }
    }

    let mut report = StatementReport {
        id: check.row_id(part),
        statement: check.id.to_string(),
        reference: check.claim.to_string(),
        scope: part.scope.name().to_string(),
        verdict: Verdict::Skipped,
        verified_to: None,
        orders: orders.to_vec(),
        models_checked: admitted,
        counterexample: None,
        counterexamples_found: 0,
        note: None,
    };
    match part.kind {
        CheckKind::Universal => {
            if admitted == 0 {
                report.note = Some("no models in scope".to_string());
            } else if let Some(ce) = first {
                report.verdict = Verdict::Counterexample;
                report.counterexample = Some(ce);
                report.counterexamples_found = found;
            } else {
                report.verdict = Verdict::Verified;
                report.verified_to = Some(max_order);
            }
        }
        CheckKind::Existential => {
            if let Some(ce) = first {
                report.verdict = Verdict::Verified;
                report.verified_to = Some(max_order);
                report.counterexample = Some(ce);
                report.counterexamples_found = found;
                report.note =
                    Some("existential claim: the reported model is the witness".to_string());
            } else {
                report.note = Some(format!("no witness found at orders <= {max_order}"));
            }
        }
    }
    report
}

/// Resolves a `--only` selection to registry indices, preserving registry
/// order. Selections match statement ids (`thm-2`) or row ids
/// (`thm-2-fwd`).
fn select(
    registry: &[StatementCheck],
    only: Option<&[String]>,
) -> Result<Vec<usize>, VerifyError> {
    let Some(only) = only else {
        return Ok((0..registry.len()).collect());
    };
    let mut chosen = vec![false; registry.len()];
    for want in only {
        let mut hit = false;
        for (i, st) in registry.iter().enumerate() {
            if st.id == want || st.parts.iter().any(|p| st.row_id(p) == *want) {
                chosen[i] = true;
                hit = true;
            }
        }
        if !hit {
            return Err(VerifyError::UnknownStatement {
                unknown: want.clone(),
                valid: registry.iter().map(|s| s.id.to_string()).collect(),
            });
        }
    }
    Ok((0..registry.len()).filter(|&i| chosen[i]).collect())
}

/// Enumerates all models up to isomorphism for orders `1..=max_order`.
pub fn models_up_to(max_order: usize) -> Result<Vec<Model>, EnumerateError> {
    let mut models = Vec::new();
    for n in 1..=max_order {
        for t in enumerate::enumerate_la(n, &[], true)? {
            models.push(Model::new(t));
        }
    }
    Ok(models)
}

/// Runs the selected statements against all models of order `<= max_order`
/// (up to isomorphism). `jobs` sizes the worker pool and never affects
/// report content.
pub fn run_suite(
    max_order: usize,
    only: Option<&[String]>,
    mode: StopMode,
    jobs: usize,
) -> Result<SuiteReport, VerifyError> {
    let start = Instant::now();
    let registry = registry();
    let selected = select(&registry, only)?;
    if max_order == 0 {
        return Err(VerifyError::Enumerate(EnumerateError::InvalidOrder(0)));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let statements: Vec<StatementReport> = pool.install(|| -> Result<_, VerifyError> {
        let models: Vec<Model> = (1..=max_order)
            .into_par_iter()
            .map(|n| -> Result<Vec<Model>, EnumerateError> {
                Ok(enumerate::enumerate_la_parallel(n, &[], true)?
                    .into_iter()
                    .map(Model::new)
                    .collect())
            })
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(selected
            .par_iter()
            .map(|&i| run_statement(&registry[i], &models, mode))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect())
    })?;

    let totals = Totals {
        verified: statements.iter().filter(|s| s.verdict == Verdict::Verified).count(),
        counterexamples: statements
            .iter()
            .filter(|s| s.verdict == Verdict::Counterexample)
            .count(),
        skipped: statements.iter().filter(|s| s.verdict == Verdict::Skipped).count(),
    };
    Ok(SuiteReport {
        max_order,
        statements,
        totals,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Re-runs the checker of a reported counterexample and returns the
/// reproduced witness, if the failure replays.
pub fn replay(report: &StatementReport) -> Option<Witness> {
    let ce = report.counterexample.as_ref()?;
    let table = magma::parse_table(&ce.table).ok()?;
    let model = Model::new(table);
    let registry = registry();
    let statement = registry.iter().find(|s| s.id == report.statement)?;
    let part = statement.parts.iter().find(|p| statement.row_id(p) == report.id)?;
    if !part.scope.admits(&model) {
        return None;
    }
    (part.check)(&model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn registry_shape() {
        let reg = registry();
        assert_eq!(reg.len(), 27);
        let mut ids: Vec<&str> = reg.iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 27, "statement ids must be unique");
        let mut rows: Vec<String> = reg
            .iter()
            .flat_map(|s| s.parts.iter().map(|p| s.row_id(p)))
            .collect();
        assert_eq!(rows.len(), 40);
        rows.sort();
        rows.dedup();
        assert_eq!(rows.len(), 40, "row ids must be unique");
    }

    #[test]
    fn scopes_run_on_fixture() {
        let model = Model::new(fixtures::sub_mod(3));
        for st in registry() {
            for part in &st.parts {
                // Every scope filter must evaluate without panicking.
                let _ = part.scope.admits(&model);
            }
        }
    }

    #[test]
    fn lemma_1_skips_out_of_scope_models() {
        let reg = registry();
        let lemma1 = reg.iter().find(|s| s.id == "lemma-1").unwrap();
        let models = [Model::new(fixtures::null(2))];
        let reports = run_statement(lemma1, &models, StopMode::FirstFailure);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].verdict, Verdict::Skipped);
    }

    #[test]
    fn suite_at_order_one_has_no_counterexamples() {
        let report = run_suite(1, None, StopMode::FirstFailure, 1).unwrap();
        for s in &report.statements {
            assert_ne!(s.verdict, Verdict::Counterexample, "{} failed: {:?}", s.id, s);
        }
        assert_eq!(report.totals.counterexamples, 0);
    }

    #[test]
    fn suite_is_deterministic_across_runs_and_jobs() {
        let mut a = run_suite(3, None, StopMode::FirstFailure, 1).unwrap();
        let mut b = run_suite(3, None, StopMode::FirstFailure, 4).unwrap();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_statement_id_is_rejected() {
        let only = vec!["no-such-id".to_string()];
        let err = run_suite(1, Some(&only), StopMode::FirstFailure, 1).unwrap_err();
        assert!(matches!(err, VerifyError::UnknownStatement { .. }));
    }

    #[test]
    fn selection_by_row_id() {
        let only = vec!["thm-2-fwd".to_string()];
        let report = run_suite(2, Some(&only), StopMode::FirstFailure, 1).unwrap();
        // Selecting a row id runs its whole statement (both directions).
        assert_eq!(report.statements.len(), 2);
        assert!(report.statements.iter().all(|s| s.statement == "thm-2"));
    }
}

//! Enumeration of all LA-semigroups of a given order, optionally up to
//! isomorphism and filtered by properties.
//!
//! The search fills table cells in row-major order. After each assignment
//! it checks every instance of the left invertive law whose four lookups
//! just became determined, so a prefix is extended only while it can still
//! complete to an LA table. Emission order is lexicographic by the
//! row-major entry sequence, which makes runs reproducible and lets
//! disjoint prefix tasks be processed in parallel and concatenated without
//! changing the output.
//!
//! Isomorphism handling is by explicit canonical forms: the canonical
//! form of a table is the lexicographic minimum over all simultaneous
//! relabelings of rows, columns and values. `up_to_iso` keeps exactly the
//! tables that equal their canonical form.

use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::magma::{self, CayleyTable, Element, MAX_ORDER};

const UNSET: usize = usize::MAX;

/// Errors from enumeration and isomorphism operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {0} is out of range (must be 1..={MAX_ORDER})")]
    InvalidOrder(usize),
    #[error("tables have different orders ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("prefix cell {index} has value {value}, not an element of an order-{order} carrier")]
    BadPrefix { index: usize, value: usize, order: usize },
    #[error("prefix violates the left invertive law")]
    InfeasiblePrefix,
}

/// Post-completion property filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Filter {
    LeftIdentity,
    Regular,
    RightInvertible,
}

impl Filter {
    pub const ALL: [Filter; 3] = [Filter::LeftIdentity, Filter::Regular, Filter::RightInvertible];

    pub fn name(&self) -> &'static str {
        match self {
            Filter::LeftIdentity => "left-identity",
            Filter::Regular => "regular",
            Filter::RightInvertible => "right-invertible",
        }
    }

    pub fn parse(name: &str) -> Option<Filter> {
        Filter::ALL.iter().copied().find(|f| f.name() == name)
    }

    pub fn admits(&self, t: &CayleyTable) -> bool {
        match self {
            Filter::LeftIdentity => magma::left_identity(t).is_some(),
            Filter::Regular => magma::is_regular(t),
            Filter::RightInvertible => magma::is_right_invertible(t),
        }
    }
}

impl std::fmt::Display for Filter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One shard of the table-filling search tree: a feasible prefix of cells
/// in row-major order plus the output options.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTask {
    order: usize,
    prefix: Vec<Element>,
    filters: Vec<Filter>,
    up_to_iso: bool,
}

impl EnumerationTask {
    /// The task covering the whole order-`n` search tree.
    pub fn root(order: usize, filters: &[Filter], up_to_iso: bool) -> Result<Self, EnumerateError> {
        Self::with_prefix(order, Vec::new(), filters, up_to_iso)
    }

    /// A task rooted at an explicit prefix; validates feasibility.
    pub fn with_prefix(
        order: usize,
        prefix: Vec<Element>,
        filters: &[Filter],
        up_to_iso: bool,
    ) -> Result<Self, EnumerateError> {
        if order < 1 || order > MAX_ORDER {
            return Err(EnumerateError::InvalidOrder(order));
        }
        if prefix.len() > order * order {
            return Err(EnumerateError::BadPrefix {
                index: order * order,
                value: 0,
                order,
            });
        }
        for (index, &value) in prefix.iter().enumerate() {
            if value >= order {
                return Err(EnumerateError::BadPrefix { index, value, order });
            }
        }
        let mut grid = vec![UNSET; order * order];
        for (k, &v) in prefix.iter().enumerate() {
            grid[k] = v;
            if !new_cell_consistent(&grid, order, k) {
                return Err(EnumerateError::InfeasiblePrefix);
            }
        }
        let mut filters = filters.to_vec();
        filters.sort();
        filters.dedup();
        Ok(EnumerationTask { order, prefix, filters, up_to_iso })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn prefix(&self) -> &[Element] {
        &self.prefix
    }

    pub fn filters(&self) -> &[Filter] {
        &self.filters
    }

    pub fn up_to_iso(&self) -> bool {
        self.up_to_iso
    }

    /// Iterates over this shard's emissions in lexicographic order.
    pub fn run(&self) -> LaEnumerator {
        LaEnumerator::for_task(self)
    }
}

/// Checks every left-invertive instance whose lookups all became
/// determined when cell `k` was assigned. An instance `(x, y, z)` reads
/// cells `(x,y)`, `(z,y)`, `(x·y, z)` and `(z·y, x)`; it participates in
/// the check as soon as all four are filled.
fn new_cell_consistent(grid: &[usize], n: usize, k: usize) -> bool {
    let a = k / n;
    let b = k % n;
    let inst = |x: usize, y: usize, z: usize| -> bool {
        let p = grid[x * n + y];
        if p == UNSET {
            return true;
        }
        let q = grid[z * n + y];
        if q == UNSET {
            return true;
        }
        let lhs = grid[p * n + z];
        if lhs == UNSET {
            return true;
        }
        let rhs = grid[q * n + x];
        if rhs == UNSET {
            return true;
        }
        lhs == rhs
    };
    // (a, b) appears as a first-level lookup: (a, b, z) and (x, b, a).
    for z in 0..n {
        if !inst(a, b, z) {
            return false;
        }
    }
    for x in 0..n {
        if !inst(x, b, a) {
            return false;
        }
    }
    // (a, b) appears as a second-level lookup: x·y = a with z = b, or
    // z·y = a with x = b.
    for x in 0..n {
        for y in 0..n {
            if grid[x * n + y] == a && (!inst(x, y, b) || !inst(b, y, x)) {
                return false;
            }
        }
    }
    true
}

/// Depth-first iterator over the LA tables of one [`EnumerationTask`].
pub struct LaEnumerator {
    n: usize,
    cells: usize,
    floor: usize,
    grid: Vec<usize>,
    next_value: Vec<usize>,
    depth: usize,
    done: bool,
    filters: Vec<Filter>,
    up_to_iso: bool,
}

impl LaEnumerator {
    fn for_task(task: &EnumerationTask) -> Self {
        let n = task.order;
        let cells = n * n;
        let mut grid = vec![UNSET; cells];
        for (k, &v) in task.prefix.iter().enumerate() {
            grid[k] = v;
        }
        let floor = task.prefix.len();
        LaEnumerator {
            n,
            cells,
            floor,
            grid,
            next_value: vec![0; cells + 1],
            depth: floor,
            done: false,
            filters: task.filters.clone(),
            up_to_iso: task.up_to_iso,
        }
    }

    fn next_raw(&mut self) -> Option<CayleyTable> {
        if self.done {
            return None;
        }
        // A fully assigned prefix is itself the single leaf.
        if self.floor == self.cells && self.depth == self.cells {
            self.done = true;
            return Some(CayleyTable::new(self.n, self.grid.clone()).expect("closed table"));
        }
        loop {
            if self.next_value[self.depth] >= self.n {
                // Exhausted this cell: backtrack.
                self.grid[self.depth] = UNSET;
                if self.depth == self.floor {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            let v = self.next_value[self.depth];
            self.next_value[self.depth] += 1;
            self.grid[self.depth] = v;
            if new_cell_consistent(&self.grid, self.n, self.depth) {
                if self.depth + 1 == self.cells {
                    return Some(CayleyTable::new(self.n, self.grid.clone()).expect("closed table"));
                }
                self.depth += 1;
                self.next_value[self.depth] = 0;
            } else {
                self.grid[self.depth] = UNSET;
            }
        }
    }
}

impl Iterator for LaEnumerator {
    type Item = CayleyTable;

    fn next(&mut self) -> Option<CayleyTable> {
        while let Some(t) = self.next_raw() {
            if !self.filters.iter().all(|f| f.admits(&t)) {
                continue;
            }
            if self.up_to_iso && !is_canonical(&t) {
                continue;
            }
            return Some(t);
        }
        None
    }
}

/// Streams every order-`n` LA table satisfying the filters, each exactly
/// once, in lexicographic order; with `up_to_iso`, only canonical
/// representatives are emitted.
pub fn enumerate_la(
    order: usize,
    filters: &[Filter],
    up_to_iso: bool,
) -> Result<LaEnumerator, EnumerateError> {
    Ok(EnumerationTask::root(order, filters, up_to_iso)?.run())
}

/// Splits a task at cell `depth` (which must be the task's prefix length)
/// into one child per feasible value of that cell. A fully assigned task
/// splits into nothing.
pub fn split_task(task: &EnumerationTask, depth: usize) -> Vec<EnumerationTask> {
    let n = task.order;
    assert!(depth <= n * n, "depth exceeds cell count");
    assert_eq!(depth, task.prefix.len(), "depth must match the task's prefix length");
    if depth == n * n {
        return Vec::new();
    }
    (0..n)
        .filter_map(|v| {
            let mut prefix = task.prefix.clone();
            prefix.push(v);
            EnumerationTask::with_prefix(n, prefix, &task.filters, task.up_to_iso).ok()
        })
        .collect()
}

/// Expands the root into the frontier of feasible tasks with prefixes of
/// length `depth` (tables shorter than that are complete leaves and are
/// kept as fully assigned tasks).
fn frontier(task: EnumerationTask, depth: usize) -> Vec<EnumerationTask> {
    let target = depth.min(task.order * task.order);
    let mut tasks = vec![task];
    for level in 0..target {
        tasks = tasks
            .into_iter()
            .flat_map(|t| {
                if t.prefix.len() == level {
                    split_task(&t, level)
                } else {
                    vec![t]
                }
            })
            .collect();
    }
    tasks
}

/// Parallel evaluation of [`enumerate_la`]: splits the search tree into
/// prefix shards and concatenates the shard outputs in task order, so the
/// result equals the sequential emission for every worker count.
pub fn enumerate_la_parallel(
    order: usize,
    filters: &[Filter],
    up_to_iso: bool,
) -> Result<Vec<CayleyTable>, EnumerateError> {
    let root = EnumerationTask::root(order, filters, up_to_iso)?;
    let split_depth = if order >= 3 { 2 } else { 0 };
    let tasks = frontier(root, split_depth);
    let batches: Vec<Vec<CayleyTable>> = tasks.par_iter().map(|t| t.run().collect()).collect();
    Ok(batches.into_iter().flatten().collect())
}

/// Count summary of one enumeration run. `elapsed_ms` is the only
/// non-deterministic field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountSummary {
    pub order: usize,
    pub filters: Vec<String>,
    pub raw_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_count: Option<u64>,
    pub elapsed_ms: u128,
}

/// Counts the LA tables of order `n` under the filters; when `up_to_iso`
/// is set, also counts isomorphism classes.
pub fn count_la(
    order: usize,
    filters: &[Filter],
    up_to_iso: bool,
) -> Result<CountSummary, EnumerateError> {
    let start = Instant::now();
    let mut raw = 0u64;
    let mut iso = 0u64;
    for t in enumerate_la(order, filters, false)? {
        raw += 1;
        if up_to_iso && is_canonical(&t) {
            iso += 1;
        }
    }
    Ok(CountSummary {
        order,
        filters: filters.iter().map(|f| f.name().to_string()).collect(),
        raw_count: raw,
        iso_count: up_to_iso.then_some(iso),
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// The lexicographically least table in an isomorphism orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(CayleyTable);

impl CanonicalForm {
    pub fn as_table(&self) -> &CayleyTable {
        &self.0
    }

    pub fn into_table(self) -> CayleyTable {
        self.0
    }
}

/// Relabels a table by the permutation `perm` (`perm[i]` is the new name
/// of element `i`): `t'[π(a)][π(b)] = π(t[a][b])`.
pub fn apply_permutation(t: &CayleyTable, perm: &[Element]) -> CayleyTable {
    let n = t.order();
    assert_eq!(perm.len(), n, "permutation length mismatch");
    let mut entries = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            entries[perm[a] * n + perm[b]] = perm[t.product(a, b)];
        }
    }
    CayleyTable::new(n, entries).expect("relabeling preserves closure")
}

/// Canonicalizes by minimizing over all `n!` relabelings. Exhaustive
/// canonicalization is intended for desk-scale orders and refuses orders
/// above 8.
pub fn canonicalize(t: &CayleyTable) -> CanonicalForm {
    canonicalize_with_permutation(t).0
}

/// True iff `t` is the lexicographic minimum of its relabeling orbit,
/// i.e. equals its canonical form. Compares each relabeled candidate
/// lazily and stops at the first decisive cell, which makes the
/// per-table cost far below materializing every candidate.
pub fn is_canonical(t: &CayleyTable) -> bool {
    let n = t.order();
    assert!(n <= 8, "canonicalization is exhaustive over n! relabelings; order {n} > 8");
    let entries = t.entries();
    let mut inverse = vec![0usize; n];
    for perm in (0..n).permutations(n) {
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        // candidate[a][b] = perm[t[inv a][inv b]]; abort on first cell
        // that decides the comparison.
        'cells: for a in 0..n {
            for b in 0..n {
                let candidate = perm[entries[inverse[a] * n + inverse[b]]];
                let own = entries[a * n + b];
                if candidate > own {
                    break 'cells; // this relabeling is larger
                }
                if candidate < own {
                    return false; // a smaller orbit member exists
                }
            }
        }
    }
    true
}

/// Canonical form plus one permutation that achieves it.
pub fn canonicalize_with_permutation(t: &CayleyTable) -> (CanonicalForm, Vec<Element>) {
    let n = t.order();
    assert!(n <= 8, "canonicalization is exhaustive over n! relabelings; order {n} > 8");
    let mut best: Option<(CayleyTable, Vec<Element>)> = None;
    for perm in (0..n).permutations(n) {
        let candidate = apply_permutation(t, &perm);
        match &best {
            Some((b, _)) if *b <= candidate => {}
            _ => best = Some((candidate, perm)),
        }
    }
    let (table, perm) = best.expect("order is at least 1");
    (CanonicalForm(table), perm)
}

/// Decides isomorphism via canonical forms; on success returns a
/// permutation mapping `t1` onto `t2`.
pub fn are_isomorphic(
    t1: &CayleyTable,
    t2: &CayleyTable,
) -> Result<Option<Vec<Element>>, EnumerateError> {
    if t1.order() != t2.order() {
        return Err(EnumerateError::OrderMismatch { left: t1.order(), right: t2.order() });
    }
    let (c1, p1) = canonicalize_with_permutation(t1);
    let (c2, p2) = canonicalize_with_permutation(t2);
    if c1 != c2 {
        return Ok(None);
    }
    // p1 sends t1 to the shared canonical form, p2 sends t2 there; the
    // composite p2⁻¹ ∘ p1 sends t1 to t2.
    let n = t1.order();
    let mut p2_inv = vec![0; n];
    for (i, &v) in p2.iter().enumerate() {
        p2_inv[v] = i;
    }
    let witness: Vec<Element> = (0..n).map(|i| p2_inv[p1[i]]).collect();
    debug_assert_eq!(&apply_permutation(t1, &witness), t2);
    Ok(Some(witness))
}

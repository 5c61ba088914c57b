//! Finite magmas as Cayley tables, plus the element-level axioms and
//! properties of LA-semigroup theory.
//!
//! A magma of order `n` lives on the carrier `{0, …, n-1}`; the table is
//! row-major with `entry[a][b] = a·b`. The defining axiom of an
//! LA-semigroup (equivalently, an Abel-Grassmann groupoid) is the left
//! invertive law
//!
//! ```text
//! (a·b)·c = (c·b)·a
//! ```
//!
//! and every LA-semigroup also satisfies the medial law
//! `(a·b)·(c·d) = (a·c)·(b·d)`. Violation searches return the
//! lexicographically least offending tuple so results are reproducible.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::set::ElementSet;

/// Index of an element of the carrier `{0, …, n-1}`.
pub type Element = usize;

/// Largest supported order; keeps subsets in a single machine word.
pub const MAX_ORDER: usize = 64;

/// Errors from table construction or analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagmaError {
    #[error("order {0} is out of range (must be 1..={MAX_ORDER})")]
    InvalidOrder(usize),
    #[error("entry {value} at row {row}, column {col} is not an element of an order-{order} carrier")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("table has no left identity")]
    NoLeftIdentity,
}

/// A parse failure with its 1-based source location.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected a decimal order")]
    MissingOrder,
    #[error("malformed number")]
    BadNumber,
    #[error("order {0} is out of range (must be 1..={MAX_ORDER})")]
    InvalidOrder(usize),
    #[error("entry {value} must be less than the order {order}")]
    EntryTooLarge { value: usize, order: usize },
    #[error("row has {got} entries, expected {expected}")]
    WrongRowLength { got: usize, expected: usize },
    #[error("table has {got} rows, expected {expected}")]
    WrongRowCount { got: usize, expected: usize },
    #[error("unexpected trailing content")]
    TrailingContent,
}

/// A finite magma: order `n` and a row-major `n×n` multiplication table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<Element>,
}

impl CayleyTable {
    /// Builds a table from row-major entries, checking closure.
    pub fn new(order: usize, entries: Vec<Element>) -> Result<Self, MagmaError> {
        if order < 1 || order > MAX_ORDER {
            return Err(MagmaError::InvalidOrder(order));
        }
        if entries.len() != order * order {
            return Err(MagmaError::EntryOutOfRange {
                row: entries.len() / order,
                col: entries.len() % order,
                value: 0,
                order,
            });
        }
        for (i, &v) in entries.iter().enumerate() {
            if v >= order {
                return Err(MagmaError::EntryOutOfRange {
                    row: i / order,
                    col: i % order,
                    value: v,
                    order,
                });
            }
        }
        Ok(CayleyTable { order, entries })
    }

    /// Builds a table from explicit rows.
    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self, MagmaError> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(MagmaError::InvalidOrder(order));
            }
            entries.extend_from_slice(row);
        }
        Self::new(order, entries)
    }

    /// Builds the table of `f(a, b)` on an order-`n` carrier.
    pub fn from_fn(order: usize, f: impl Fn(Element, Element) -> Element) -> Result<Self, MagmaError> {
        if order < 1 || order > MAX_ORDER {
            return Err(MagmaError::InvalidOrder(order));
        }
        let entries = (0..order * order).map(|i| f(i / order, i % order)).collect();
        Self::new(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `a·b`. Panics if `a` or `b` is not an element.
    pub fn product(&self, a: Element, b: Element) -> Element {
        assert!(a < self.order && b < self.order, "element out of range");
        self.entries[a * self.order + b]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    /// All elements in ascending order.
    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// The whole carrier as a set.
    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// Serializes to the table file format (always with trailing newline).
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.order.to_string());
        out.push('\n');
        for a in 0..self.order {
            for b in 0..self.order {
                if b > 0 {
                    out.push(' ');
                }
                out.push_str(&self.entries[a * self.order + b].to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for CayleyTable {
    // Compact row form: `CayleyTable[[0 1 2] [2 0 1] [1 2 0]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable[")?;
        for a in 0..self.order {
            if a > 0 {
                write!(f, " ")?;
            }
            write!(f, "[")?;
            for b in 0..self.order {
                if b > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entries[a * self.order + b])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_file_string())
    }
}

impl FromStr for CayleyTable {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_table(s)
    }
}

/// Parses the table file format.
///
/// Line 1 is the decimal order `n`; the next `n` lines carry `n`
/// space-separated entries each, row `a` giving `a·0 … a·(n-1)`. Lines
/// starting with `#` are comments; blank lines are ignored. The trailing
/// newline is optional.
pub fn parse_table(text: &str) -> Result<CayleyTable, ParseError> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut order: Option<usize> = None;
    let mut last_line = 0;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match order {
            None => {
                let value = parse_number(raw, line)?;
                if value < 1 || value > MAX_ORDER {
                    let col = raw.len() - raw.trim_start().len() + 1;
                    return Err(ParseError { line, col, kind: ParseErrorKind::InvalidOrder(value) });
                }
                order = Some(value);
            }
            Some(n) => {
                if rows.len() == n {
                    let col = raw.len() - raw.trim_start().len() + 1;
                    return Err(ParseError { line, col, kind: ParseErrorKind::TrailingContent });
                }
                rows.push(parse_row(raw, line, n)?);
            }
        }
    }

    let n = order.ok_or(ParseError { line: last_line.max(1), col: 1, kind: ParseErrorKind::MissingOrder })?;
    if rows.len() != n {
        return Err(ParseError {
            line: last_line.max(1),
            col: 1,
            kind: ParseErrorKind::WrongRowCount { got: rows.len(), expected: n },
        });
    }
    let entries = rows.into_iter().flatten().collect();
    // Entry range was validated per token, so this cannot fail.
    Ok(CayleyTable::new(n, entries).expect("validated entries"))
}

fn parse_number(raw: &str, line: usize) -> Result<usize, ParseError> {
    let start = raw.len() - raw.trim_start().len();
    let token = raw.trim();
    token.parse().map_err(|_| ParseError { line, col: start + 1, kind: ParseErrorKind::BadNumber })
}

fn parse_row(raw: &str, line: usize, n: usize) -> Result<Vec<usize>, ParseError> {
    let mut entries = Vec::with_capacity(n);
    let mut chars = raw.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut end = start;
        while let Some(&(i, c)) = chars.peek() {
            if c.is_whitespace() {
                break;
            }
            end = i + c.len_utf8();
            chars.next();
        }
        let token = &raw[start..end];
        let value: usize = token
            .parse()
            .map_err(|_| ParseError { line, col: start + 1, kind: ParseErrorKind::BadNumber })?;
        if value >= n {
            return Err(ParseError {
                line,
                col: start + 1,
                kind: ParseErrorKind::EntryTooLarge { value, order: n },
            });
        }
        entries.push(value);
    }
    if entries.len() != n {
        return Err(ParseError {
            line,
            col: raw.len() + 1,
            kind: ParseErrorKind::WrongRowLength { got: entries.len(), expected: n },
        });
    }
    Ok(entries)
}

/// Serializes a table to the file format.
pub fn serialize_table(t: &CayleyTable) -> String {
    t.to_file_string()
}

/// Least triple `(a, b, c)` with `(a·b)·c ≠ (c·b)·a`, if any.
pub fn left_invertive_violation(t: &CayleyTable) -> Option<(Element, Element, Element)> {
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.product(t.product(a, b), c) != t.product(t.product(c, b), a) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// True iff the left invertive law `(a·b)·c = (c·b)·a` holds everywhere.
pub fn is_left_invertive(t: &CayleyTable) -> bool {
    left_invertive_violation(t).is_none()
}

/// Least quadruple `(a, b, c, d)` with `(a·b)·(c·d) ≠ (a·c)·(b·d)`, if any.
pub fn medial_violation(t: &CayleyTable) -> Option<(Element, Element, Element, Element)> {
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let lhs = t.product(t.product(a, b), t.product(c, d));
                    let rhs = t.product(t.product(a, c), t.product(b, d));
                    if lhs != rhs {
                        return Some((a, b, c, d));
                    }
                }
            }
        }
    }
    None
}

/// True iff the medial law `(a·b)·(c·d) = (a·c)·(b·d)` holds everywhere.
pub fn is_medial(t: &CayleyTable) -> bool {
    medial_violation(t).is_none()
}

/// Least triple violating associativity, if any.
pub fn associativity_violation(t: &CayleyTable) -> Option<(Element, Element, Element)> {
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.product(t.product(a, b), c) != t.product(a, t.product(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn is_associative(t: &CayleyTable) -> bool {
    associativity_violation(t).is_none()
}

/// Least pair violating commutativity, if any.
pub fn commutativity_violation(t: &CayleyTable) -> Option<(Element, Element)> {
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            if t.product(a, b) != t.product(b, a) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_commutative(t: &CayleyTable) -> bool {
    commutativity_violation(t).is_none()
}

/// All left identities `{e : e·x = x for all x}`.
///
/// An LA-semigroup has at most one; arbitrary magmas may have several.
pub fn left_identities(t: &CayleyTable) -> ElementSet {
    let mut out = ElementSet::empty(t.order());
    for e in t.elements() {
        if t.elements().all(|x| t.product(e, x) == x) {
            out.insert(e);
        }
    }
    out
}

/// All right identities `{e : x·e = x for all x}`.
pub fn right_identities(t: &CayleyTable) -> ElementSet {
    let mut out = ElementSet::empty(t.order());
    for e in t.elements() {
        if t.elements().all(|x| t.product(x, e) == x) {
            out.insert(e);
        }
    }
    out
}

/// The least left identity, if one exists.
pub fn left_identity(t: &CayleyTable) -> Option<Element> {
    left_identities(t).iter().next()
}

/// Regularity: every `a` needs an `x` with `(a·x)·a = a`.
///
/// Returns the least witness per element on success, or the least element
/// with no witness.
pub fn regularity_witnesses(t: &CayleyTable) -> Result<Vec<Element>, Element> {
    let mut witnesses = Vec::with_capacity(t.order());
    for a in t.elements() {
        match t.elements().find(|&x| t.product(t.product(a, x), a) == a) {
            Some(x) => witnesses.push(x),
            None => return Err(a),
        }
    }
    Ok(witnesses)
}

pub fn is_regular(t: &CayleyTable) -> bool {
    regularity_witnesses(t).is_ok()
}

/// True iff every `a` has an `x` with `(a·x)·a = a` and `(x·a)·x = x`.
pub fn is_inverse_la(t: &CayleyTable) -> bool {
    t.elements().all(|a| {
        t.elements()
            .any(|x| t.product(t.product(a, x), a) == a && t.product(t.product(x, a), x) == x)
    })
}

/// The right inverse set `H(a) = {x : a·x = e}` relative to the left
/// identity `e`. Errors when the table has no left identity.
pub fn right_inverses(t: &CayleyTable, a: Element) -> Result<ElementSet, MagmaError> {
    let e = left_identity(t).ok_or(MagmaError::NoLeftIdentity)?;
    assert!(a < t.order(), "element out of range");
    let mut out = ElementSet::empty(t.order());
    for x in t.elements() {
        if t.product(a, x) == e {
            out.insert(x);
        }
    }
    Ok(out)
}

/// True iff the table has a left identity and every element has a right
/// inverse with respect to it. Absence of a left identity falsifies the
/// property rather than raising an error.
pub fn is_right_invertible(t: &CayleyTable) -> bool {
    match left_identity(t) {
        None => false,
        Some(e) => t.elements().all(|a| t.elements().any(|x| t.product(a, x) == e)),
    }
}

/// Computed classification flags of one model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyProfile {
    pub is_la: bool,
    pub is_medial: bool,
    pub left_identity: Option<Element>,
    pub right_identity: Option<Element>,
    pub is_commutative: bool,
    pub is_associative: bool,
    pub is_regular: bool,
    pub is_inverse_la: bool,
    pub is_right_invertible: bool,
}

impl PropertyProfile {
    pub fn of(t: &CayleyTable) -> Self {
        PropertyProfile {
            is_la: is_left_invertive(t),
            is_medial: is_medial(t),
            left_identity: left_identity(t),
            right_identity: right_identities(t).iter().next(),
            is_commutative: is_commutative(t),
            is_associative: is_associative(t),
            is_regular: is_regular(t),
            is_inverse_la: is_inverse_la(t),
            is_right_invertible: is_right_invertible(t),
        }
    }
}

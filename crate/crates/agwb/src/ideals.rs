//! Subset algebra over a Cayley table: products of subsets, generated and
//! principal ideals, exhaustive ideal enumeration, and every ideal
//! classification used by the statement catalogue.
//!
//! Conventions. Ideals are nonempty: the empty set is rejected with
//! [`IdealError::EmptySet`] at the predicate boundary. The whole carrier
//! `S` is an ideal of itself and is vacuously prime; properness is a
//! separate flag. Prime, semiprime, strongly irreducible and minimal
//! quantify over two-sided ideals; the quasi- variants quantify over left
//! ideals.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::magma::{self, CayleyTable, Element, PropertyProfile};
use crate::set::ElementSet;

/// Domain errors for ideal predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("the empty set is not an ideal")]
    EmptySet,
    #[error("{0} is not an ideal")]
    NotAnIdeal(ElementSet),
    #[error("{0} is not a left ideal")]
    NotALeftIdeal(ElementSet),
    #[error("table has no left identity")]
    NoLeftIdentity,
}

/// Which closure condition a subset must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IdealKind {
    Left,
    Right,
    TwoSided,
}

/// The complex product `A·B = {a·b : a ∈ A, b ∈ B}`; empty when either
/// side is empty.
pub fn subset_product(t: &CayleyTable, a: &ElementSet, b: &ElementSet) -> ElementSet {
    assert_eq!(t.order(), a.order(), "set order mismatch");
    assert_eq!(t.order(), b.order(), "set order mismatch");
    let mut out = ElementSet::empty(t.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(t.product(x, y));
        }
    }
    out
}

fn is_left_ideal_unchecked(t: &CayleyTable, i: &ElementSet) -> bool {
    subset_product(t, &t.carrier(), i).is_subset_of(i)
}

fn is_right_ideal_unchecked(t: &CayleyTable, i: &ElementSet) -> bool {
    subset_product(t, i, &t.carrier()).is_subset_of(i)
}

/// `S·I ⊆ I`?
pub fn is_left_ideal(t: &CayleyTable, i: &ElementSet) -> Result<bool, IdealError> {
    if i.is_empty() {
        return Err(IdealError::EmptySet);
    }
    Ok(is_left_ideal_unchecked(t, i))
}

/// `I·S ⊆ I`?
pub fn is_right_ideal(t: &CayleyTable, i: &ElementSet) -> Result<bool, IdealError> {
    if i.is_empty() {
        return Err(IdealError::EmptySet);
    }
    Ok(is_right_ideal_unchecked(t, i))
}

/// Two-sided ideal?
pub fn is_ideal(t: &CayleyTable, i: &ElementSet) -> Result<bool, IdealError> {
    if i.is_empty() {
        return Err(IdealError::EmptySet);
    }
    Ok(is_left_ideal_unchecked(t, i) && is_right_ideal_unchecked(t, i))
}

fn generated_closure(t: &CayleyTable, seed: &ElementSet, kind: IdealKind) -> ElementSet {
    let s = t.carrier();
    let mut cur = *seed;
    loop {
        let mut next = cur;
        if matches!(kind, IdealKind::Left | IdealKind::TwoSided) {
            next = next.union(&subset_product(t, &s, &cur));
        }
        if matches!(kind, IdealKind::Right | IdealKind::TwoSided) {
            next = next.union(&subset_product(t, &cur, &s));
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Least left ideal containing the nonempty seed, by closure to fixpoint.
pub fn generated_left_ideal(t: &CayleyTable, seed: &ElementSet) -> Result<ElementSet, IdealError> {
    if seed.is_empty() {
        return Err(IdealError::EmptySet);
    }
    Ok(generated_closure(t, seed, IdealKind::Left))
}

/// Least right ideal containing the nonempty seed.
pub fn generated_right_ideal(t: &CayleyTable, seed: &ElementSet) -> Result<ElementSet, IdealError> {
    if seed.is_empty() {
        return Err(IdealError::EmptySet);
    }
    Ok(generated_closure(t, seed, IdealKind::Right))
}

/// Least two-sided ideal containing the nonempty seed.
pub fn generated_ideal(t: &CayleyTable, seed: &ElementSet) -> Result<ElementSet, IdealError> {
    if seed.is_empty() {
        return Err(IdealError::EmptySet);
    }
    Ok(generated_closure(t, seed, IdealKind::TwoSided))
}

/// The principal left ideal `⟨a⟩ = S·a = {s·a : s ∈ S}`.
///
/// Defined only when the table has a left identity `e`; then `a = e·a`
/// lies in `S·a` and `S·a` is a left ideal.
pub fn principal_left_ideal(t: &CayleyTable, a: Element) -> Result<ElementSet, IdealError> {
    if magma::left_identity(t).is_none() {
        return Err(IdealError::NoLeftIdentity);
    }
    Ok(subset_product(t, &t.carrier(), &ElementSet::singleton(t.order(), a)))
}

/// All nonempty subsets of the requested kind, ascending by bit pattern.
///
/// For orders up to 12 this scans all `2^n - 1` nonempty subsets. Beyond
/// that it uses the structure of ideals: every ideal is the union of the
/// generated ideals of its members, and any union of ideals is an ideal,
/// so the ideal family is exactly the set of unions of the ≤ n per-element
/// closures, enumerated to a fixpoint.
pub fn all_ideals(t: &CayleyTable, kind: IdealKind) -> Vec<ElementSet> {
    if t.order() <= 12 {
        all_ideals_by_subset_scan(t, kind)
    } else {
        all_ideals_via_closures(t, kind)
    }
}

fn all_ideals_by_subset_scan(t: &CayleyTable, kind: IdealKind) -> Vec<ElementSet> {
    let n = t.order();
    let admits = |set: &ElementSet| match kind {
        IdealKind::Left => is_left_ideal_unchecked(t, set),
        IdealKind::Right => is_right_ideal_unchecked(t, set),
        IdealKind::TwoSided => is_left_ideal_unchecked(t, set) && is_right_ideal_unchecked(t, set),
    };
    let full = ElementSet::full(n).bits();
    (1..=full)
        .map(|bits| ElementSet::from_bits(n, bits))
        .filter(admits)
        .collect()
}

/// Ideal enumeration through generated closures: every ideal is the union
/// of the generated ideals of its members, and unions of ideals are
/// ideals, so the family is the union-closure of the ≤ n per-element
/// closures. This is the scalable route for large orders and the
/// cross-check for the subset scan.
pub fn all_ideals_via_closures(t: &CayleyTable, kind: IdealKind) -> Vec<ElementSet> {
    let n = t.order();
    let closures: Vec<ElementSet> = (0..n)
        .map(|e| generated_closure(t, &ElementSet::singleton(n, e), kind))
        .collect();
    let mut found: std::collections::BTreeSet<ElementSet> = closures.iter().copied().collect();
    let mut frontier: Vec<ElementSet> = found.iter().copied().collect();
    while let Some(cur) = frontier.pop() {
        for c in &closures {
            let u = cur.union(c);
            if found.insert(u) {
                frontier.push(u);
            }
        }
    }
    found.into_iter().collect()
}

fn require_ideal(t: &CayleyTable, p: &ElementSet) -> Result<(), IdealError> {
    if !is_ideal(t, p)? {
        return Err(IdealError::NotAnIdeal(*p));
    }
    Ok(())
}

fn require_left_ideal(t: &CayleyTable, p: &ElementSet) -> Result<(), IdealError> {
    if !is_left_ideal(t, p)? {
        return Err(IdealError::NotALeftIdeal(*p));
    }
    Ok(())
}

fn prime_in(t: &CayleyTable, p: &ElementSet, ideals: &[ElementSet]) -> bool {
    ideals.iter().all(|a| {
        ideals.iter().all(|b| {
            !subset_product(t, a, b).is_subset_of(p) || a.is_subset_of(p) || b.is_subset_of(p)
        })
    })
}

fn semiprime_in(t: &CayleyTable, p: &ElementSet, ideals: &[ElementSet]) -> bool {
    ideals
        .iter()
        .all(|i| !subset_product(t, i, i).is_subset_of(p) || i.is_subset_of(p))
}

fn strongly_irreducible_in(p: &ElementSet, ideals: &[ElementSet]) -> bool {
    ideals.iter().all(|h| {
        ideals.iter().all(|k| {
            !h.intersection(k).is_subset_of(p) || h.is_subset_of(p) || k.is_subset_of(p)
        })
    })
}

/// Prime: `A·B ⊆ P` forces `A ⊆ P` or `B ⊆ P` over two-sided ideals.
pub fn is_prime(t: &CayleyTable, p: &ElementSet) -> Result<bool, IdealError> {
    require_ideal(t, p)?;
    Ok(prime_in(t, p, &all_ideals(t, IdealKind::TwoSided)))
}

/// Semiprime: `I·I ⊆ P` forces `I ⊆ P` over two-sided ideals.
pub fn is_semiprime(t: &CayleyTable, p: &ElementSet) -> Result<bool, IdealError> {
    require_ideal(t, p)?;
    Ok(semiprime_in(t, p, &all_ideals(t, IdealKind::TwoSided)))
}

/// Strongly irreducible: `H ∩ K ⊆ P` forces `H ⊆ P` or `K ⊆ P`.
pub fn is_strongly_irreducible(t: &CayleyTable, p: &ElementSet) -> Result<bool, IdealError> {
    require_ideal(t, p)?;
    Ok(strongly_irreducible_in(p, &all_ideals(t, IdealKind::TwoSided)))
}

/// Quasi-prime: the prime condition quantified over left ideals.
pub fn is_quasi_prime(t: &CayleyTable, p: &ElementSet) -> Result<bool, IdealError> {
    require_left_ideal(t, p)?;
    Ok(prime_in(t, p, &all_ideals(t, IdealKind::Left)))
}

/// Quasi-semiprime: the semiprime condition quantified over left ideals.
pub fn is_quasi_semiprime(t: &CayleyTable, p: &ElementSet) -> Result<bool, IdealError> {
    require_left_ideal(t, p)?;
    Ok(semiprime_in(t, p, &all_ideals(t, IdealKind::Left)))
}

/// Minimal: contains no two-sided ideal other than itself.
pub fn is_minimal_ideal(t: &CayleyTable, i: &ElementSet) -> Result<bool, IdealError> {
    require_ideal(t, i)?;
    Ok(all_ideals(t, IdealKind::TwoSided)
        .iter()
        .all(|j| !j.is_proper_subset_of(i)))
}

/// Every two-sided ideal is prime.
pub fn is_fully_prime(t: &CayleyTable) -> bool {
    let ideals = all_ideals(t, IdealKind::TwoSided);
    ideals.iter().all(|p| prime_in(t, p, &ideals))
}

/// Every two-sided ideal is semiprime.
pub fn is_fully_semiprime(t: &CayleyTable) -> bool {
    let ideals = all_ideals(t, IdealKind::TwoSided);
    ideals.iter().all(|p| semiprime_in(t, p, &ideals))
}

/// Is the two-sided ideal family a chain under inclusion?
pub fn ideals_totally_ordered(t: &CayleyTable) -> bool {
    let ideals = all_ideals(t, IdealKind::TwoSided);
    ideals
        .iter()
        .all(|a| ideals.iter().all(|b| a.is_subset_of(b) || b.is_subset_of(a)))
}

/// Why the ideal family fails to be a semilattice under `A Λ B = A·B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemilatticeFailure {
    /// `A·B` is not an ideal.
    NotClosed { a: ElementSet, b: ElementSet },
    /// `A·B ≠ B·A`.
    NotCommutative { a: ElementSet, b: ElementSet },
    /// `(A·B)·C ≠ A·(B·C)`.
    NotAssociative { a: ElementSet, b: ElementSet, c: ElementSet },
    /// `A·A ≠ A`.
    NotIdempotent { a: ElementSet },
}

/// First failure of the semilattice laws on the two-sided ideal family,
/// checking idempotence, then closure, commutativity and associativity in
/// canonical order.
pub fn semilattice_failure(t: &CayleyTable) -> Option<SemilatticeFailure> {
    let ideals = all_ideals(t, IdealKind::TwoSided);
    let in_family = |x: &ElementSet| ideals.binary_search(x).is_ok();
    for a in &ideals {
        if subset_product(t, a, a) != *a {
            return Some(SemilatticeFailure::NotIdempotent { a: *a });
        }
    }
    for a in &ideals {
        for b in &ideals {
            let ab = subset_product(t, a, b);
            if !in_family(&ab) {
                return Some(SemilatticeFailure::NotClosed { a: *a, b: *b });
            }
            if ab != subset_product(t, b, a) {
                return Some(SemilatticeFailure::NotCommutative { a: *a, b: *b });
            }
        }
    }
    for a in &ideals {
        for b in &ideals {
            for c in &ideals {
                let lhs = subset_product(t, &subset_product(t, a, b), c);
                let rhs = subset_product(t, a, &subset_product(t, b, c));
                if lhs != rhs {
                    return Some(SemilatticeFailure::NotAssociative { a: *a, b: *b, c: *c });
                }
            }
        }
    }
    None
}

/// Do the two-sided ideals form a semilattice under the complex product?
pub fn ideals_form_semilattice(t: &CayleyTable) -> bool {
    semilattice_failure(t).is_none()
}

/// The ⊆-minimal prime ideals containing `i`. Nonempty for every finite
/// model, because the whole carrier is vacuously prime.
pub fn minimal_primes_over(t: &CayleyTable, i: &ElementSet) -> Result<Vec<ElementSet>, IdealError> {
    require_ideal(t, i)?;
    let ideals = all_ideals(t, IdealKind::TwoSided);
    let over: Vec<ElementSet> = ideals
        .iter()
        .filter(|p| i.is_subset_of(p) && prime_in(t, p, &ideals))
        .copied()
        .collect();
    Ok(over
        .iter()
        .filter(|p| !over.iter().any(|q| q.is_proper_subset_of(p)))
        .copied()
        .collect())
}

/// One classified subset in a model analysis.
///
/// Two-sided-only classifications (prime, semiprime, strongly
/// irreducible, minimal) are reported `false` for one-sided ideals, and
/// the quasi- flags are reported `false` for sets that are not left
/// ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub members: Vec<Element>,
    pub left: bool,
    pub right: bool,
    pub two_sided: bool,
    pub proper: bool,
    pub prime: bool,
    pub semiprime: bool,
    pub strongly_irreducible: bool,
    pub quasi_prime: bool,
    pub quasi_semiprime: bool,
    pub minimal: bool,
    pub idempotent: bool,
}

/// Full ideal analysis of one model: the JSON report schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub order: usize,
    pub profile: PropertyProfile,
    pub ideals: Vec<IdealRecord>,
    pub totally_ordered: bool,
    pub semilattice: bool,
}

/// Classifies every left or right ideal of the model.
pub fn analyze(t: &CayleyTable) -> ModelReport {
    let left = all_ideals(t, IdealKind::Left);
    let right = all_ideals(t, IdealKind::Right);
    let two_sided = all_ideals(t, IdealKind::TwoSided);
    let left_family = &left;
    let mut carriers: Vec<ElementSet> = left.iter().chain(right.iter()).copied().collect();
    carriers.sort();
    carriers.dedup();

    let ideals = carriers
        .iter()
        .map(|c| {
            let is_left = left.binary_search(c).is_ok();
            let is_right = right.binary_search(c).is_ok();
            let is_two = is_left && is_right;
            IdealRecord {
                members: c.to_vec(),
                left: is_left,
                right: is_right,
                two_sided: is_two,
                proper: !c.is_full(),
                prime: is_two && prime_in(t, c, &two_sided),
                semiprime: is_two && semiprime_in(t, c, &two_sided),
                strongly_irreducible: is_two && strongly_irreducible_in(c, &two_sided),
                quasi_prime: is_left && prime_in(t, c, left_family),
                quasi_semiprime: is_left && semiprime_in(t, c, left_family),
                minimal: is_two && !two_sided.iter().any(|j| j.is_proper_subset_of(c)),
                idempotent: subset_product(t, c, c) == *c,
            }
        })
        .collect();

    ModelReport {
        order: t.order(),
        profile: PropertyProfile::of(t),
        ideals,
        totally_ordered: ideals_totally_ordered(t),
        semilattice: ideals_form_semilattice(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(order: usize, members: &[usize]) -> ElementSet {
        ElementSet::from_elements(order, members)
    }

    #[test]
    fn subset_products() {
        let z = fixtures::null(2);
        assert_eq!(subset_product(&z, &z.carrier(), &z.carrier()), set(2, &[0]));
        let t = fixtures::sub_mod(3);
        assert_eq!(subset_product(&t, &set(3, &[0]), &set(3, &[1])), set(3, &[1]));
        assert!(subset_product(&t, &ElementSet::empty(3), &t.carrier()).is_empty());
    }

    #[test]
    fn ideal_predicates() {
        let z = fixtures::null(2);
        assert_eq!(is_ideal(&z, &set(2, &[0])), Ok(true));
        let t = fixtures::sub_mod(3);
        assert_eq!(is_ideal(&t, &set(3, &[0])), Ok(false)); // 1·0 = 2 escapes
        assert_eq!(is_ideal(&t, &t.carrier()), Ok(true));
        assert_eq!(is_ideal(&t, &ElementSet::empty(3)), Err(IdealError::EmptySet));
    }

    #[test]
    fn generated_ideals() {
        let z = fixtures::null(2);
        assert_eq!(generated_ideal(&z, &set(2, &[1])).unwrap(), set(2, &[0, 1]));
        let t = fixtures::sub_mod(3);
        assert_eq!(generated_ideal(&t, &set(3, &[1])).unwrap(), t.carrier());
        assert_eq!(generated_ideal(&t, &t.carrier()).unwrap(), t.carrier());
        assert_eq!(generated_left_ideal(&t, &ElementSet::empty(3)), Err(IdealError::EmptySet));
    }

    #[test]
    fn principal_left_ideals() {
        let t = fixtures::sub_mod(3);
        assert_eq!(principal_left_ideal(&t, 1).unwrap(), t.carrier());
        assert_eq!(principal_left_ideal(&t, 0).unwrap(), t.carrier());
        assert_eq!(principal_left_ideal(&fixtures::null(2), 0), Err(IdealError::NoLeftIdentity));
    }

    #[test]
    fn ideal_enumeration() {
        let z = fixtures::null(2);
        assert_eq!(all_ideals(&z, IdealKind::TwoSided), vec![set(2, &[0]), set(2, &[0, 1])]);
        let t = fixtures::sub_mod(3);
        assert_eq!(all_ideals(&t, IdealKind::TwoSided), vec![t.carrier()]);
        let one = fixtures::trivial();
        assert_eq!(all_ideals(&one, IdealKind::Left), vec![one.carrier()]);
        assert_eq!(all_ideals(&one, IdealKind::Right), vec![one.carrier()]);
    }

    #[test]
    fn prime_and_semiprime() {
        let z = fixtures::null(2);
        assert_eq!(is_prime(&z, &set(2, &[0])), Ok(false)); // S·S = {0}
        assert_eq!(is_prime(&z, &set(2, &[0, 1])), Ok(true));
        assert_eq!(is_semiprime(&z, &set(2, &[0])), Ok(false));
        assert_eq!(is_semiprime(&z, &set(2, &[0, 1])), Ok(true));
        let t = fixtures::sub_mod(3);
        assert_eq!(is_prime(&t, &t.carrier()), Ok(true));
        assert_eq!(is_semiprime(&t, &t.carrier()), Ok(true));
        assert_eq!(is_prime(&z, &set(2, &[1])), Err(IdealError::NotAnIdeal(set(2, &[1]))));
    }

    #[test]
    fn strong_irreducibility() {
        let z = fixtures::null(2);
        assert_eq!(is_strongly_irreducible(&z, &set(2, &[0])), Ok(true));
        assert_eq!(is_strongly_irreducible(&z, &set(2, &[0, 1])), Ok(true));
        assert_eq!(is_strongly_irreducible(&fixtures::sub_mod(3), &ElementSet::full(3)), Ok(true));
    }

    #[test]
    fn quasi_classifications() {
        let z = fixtures::null(2);
        assert_eq!(is_quasi_prime(&z, &set(2, &[0])), Ok(false));
        assert_eq!(is_quasi_prime(&z, &set(2, &[0, 1])), Ok(true));
        let t = fixtures::sub_mod(3);
        assert_eq!(is_quasi_semiprime(&t, &t.carrier()), Ok(true));
        assert_eq!(
            is_quasi_prime(&z, &set(2, &[1])),
            Err(IdealError::NotALeftIdeal(set(2, &[1])))
        );
    }

    #[test]
    fn minimality() {
        let z = fixtures::null(2);
        assert_eq!(is_minimal_ideal(&z, &set(2, &[0])), Ok(true));
        assert_eq!(is_minimal_ideal(&z, &set(2, &[0, 1])), Ok(false));
        let t = fixtures::sub_mod(3);
        assert_eq!(is_minimal_ideal(&t, &t.carrier()), Ok(true));
    }

    #[test]
    fn fully_prime_and_semiprime() {
        assert!(is_fully_prime(&fixtures::sub_mod(3)));
        assert!(!is_fully_prime(&fixtures::null(2)));
        assert!(!is_fully_semiprime(&fixtures::null(2)));
    }

    #[test]
    fn total_order_of_ideals() {
        assert!(ideals_totally_ordered(&fixtures::null(2)));
        assert!(ideals_totally_ordered(&fixtures::sub_mod(3)));
        // Order-4 null table: {0,1} and {0,2} are incomparable ideals.
        assert!(!ideals_totally_ordered(&fixtures::null(4)));
    }

    #[test]
    fn semilattice_check() {
        assert!(ideals_form_semilattice(&fixtures::sub_mod(3)));
        assert_eq!(
            semilattice_failure(&fixtures::null(2)),
            Some(SemilatticeFailure::NotIdempotent { a: ElementSet::full(2) })
        );
        assert!(ideals_form_semilattice(&fixtures::trivial()));
    }

    #[test]
    fn minimal_primes() {
        let z = fixtures::null(2);
        assert_eq!(minimal_primes_over(&z, &set(2, &[0])).unwrap(), vec![set(2, &[0, 1])]);
        assert_eq!(minimal_primes_over(&z, &z.carrier()).unwrap(), vec![z.carrier()]);
        let t = fixtures::sub_mod(3);
        assert_eq!(minimal_primes_over(&t, &t.carrier()).unwrap(), vec![t.carrier()]);
    }

    #[test]
    fn analysis_of_null2() {
        let report = analyze(&fixtures::null(2));
        assert_eq!(report.ideals.len(), 2);
        let small = &report.ideals[0];
        assert_eq!(small.members, vec![0]);
        assert!(small.two_sided && small.proper && small.minimal && small.idempotent);
        assert!(!small.prime && !small.semiprime && small.strongly_irreducible);
        let whole = &report.ideals[1];
        assert_eq!(whole.members, vec![0, 1]);
        assert!(whole.prime && !whole.proper && !whole.idempotent);
        assert!(report.totally_ordered && !report.semilattice);
    }

    #[test]
    fn analysis_of_sub3() {
        let report = analyze(&fixtures::sub_mod(3));
        assert_eq!(report.ideals.len(), 1);
        assert_eq!(report.ideals[0].members, vec![0, 1, 2]);
        assert!(report.ideals[0].prime && report.ideals[0].quasi_prime);
        assert!(report.totally_ordered && report.semilattice);
    }
}

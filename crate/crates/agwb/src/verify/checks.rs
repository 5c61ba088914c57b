//! The statement catalogue: every classical fact about LA-semigroup
//! ideals tracked by the workbench, as executable exhaustive checks.
//!
//! Checkers quantify in ascending canonical order (elements ascending,
//! ideal families ascending by bit pattern), so the first reported
//! witness is the lexicographically least one.

use super::{CheckKind, Model, Part, Scope, StatementCheck, Witness, WitnessValue};
use crate::ideals::{
    all_ideals, is_ideal, is_minimal_ideal, is_prime, is_quasi_prime, is_quasi_semiprime,
    is_semiprime, is_strongly_irreducible, minimal_primes_over, semilattice_failure,
    subset_product, IdealKind, SemilatticeFailure,
};
use crate::magma::{left_identities, right_identities, right_inverses, CayleyTable, Element};
use crate::set::ElementSet;

fn el(v: Element) -> WitnessValue {
    WitnessValue::Element(v)
}

fn ws(s: &ElementSet) -> WitnessValue {
    WitnessValue::Set(s.to_vec())
}

fn txt(s: &str) -> WitnessValue {
    WitnessValue::Text(s.to_string())
}

fn wit(pairs: &[(&str, WitnessValue)]) -> Witness {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn sing(t: &CayleyTable, a: Element) -> ElementSet {
    ElementSet::singleton(t.order(), a)
}

fn square(t: &CayleyTable, a: Element) -> Element {
    t.product(a, a)
}

/// `S·S` for the whole carrier.
fn carrier_square(t: &CayleyTable) -> ElementSet {
    let s = t.carrier();
    subset_product(t, &s, &s)
}

fn left_ideals(t: &CayleyTable) -> Vec<ElementSet> {
    all_ideals(t, IdealKind::Left)
}

fn right_ideals(t: &CayleyTable) -> Vec<ElementSet> {
    all_ideals(t, IdealKind::Right)
}

fn two_sided_ideals(t: &CayleyTable) -> Vec<ElementSet> {
    all_ideals(t, IdealKind::TwoSided)
}

fn is_ideal_of(t: &CayleyTable, x: &ElementSet) -> bool {
    !x.is_empty() && is_ideal(t, x).expect("nonempty")
}

/// Members of `family` that contain no other member properly.
fn minimal_members(family: &[ElementSet]) -> Vec<ElementSet> {
    family
        .iter()
        .filter(|i| !family.iter().any(|j| j.is_proper_subset_of(i)))
        .copied()
        .collect()
}

fn check_lemma_1(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let s = t.carrier();
    let e = m.profile.left_identity.expect("scope");
    let ss = carrier_square(t);
    if ss != s {
        return Some(wit(&[("equation", txt("S·S = S")), ("product", ws(&ss))]));
    }
    let es = subset_product(t, &sing(t, e), &s);
    if es != s {
        return Some(wit(&[("equation", txt("e·S = S")), ("product", ws(&es))]));
    }
    let se = subset_product(t, &s, &sing(t, e));
    if se != s {
        return Some(wit(&[("equation", txt("S·e = S")), ("product", ws(&se))]));
    }
    None
}

fn check_remark_1(m: &Model) -> Option<Witness> {
    let t = &m.table;
    if carrier_square(t) == t.carrier() && left_identities(t).is_empty() {
        return Some(wit(&[("property", txt("S = S·S holds and no left identity exists"))]));
    }
    None
}

fn check_prop_1_squares(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for x in t.elements() {
        for y in t.elements() {
            let xy = t.product(x, y);
            let lhs = square(t, xy);
            let mid = t.product(square(t, x), square(t, y));
            let rhs = t.product(square(t, y), square(t, x));
            if lhs != mid || mid != rhs {
                return Some(wit(&[
                    ("x", el(x)),
                    ("y", el(y)),
                    ("(x·y)²", el(lhs)),
                    ("x²·y²", el(mid)),
                    ("y²·x²", el(rhs)),
                ]));
            }
        }
    }
    None
}

fn check_prop_1_square_ideal(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for a in t.elements() {
        let a2s = subset_product(t, &sing(t, square(t, a)), &t.carrier());
        if !is_ideal_of(t, &a2s) {
            return Some(wit(&[("a", el(a)), ("a²·S", ws(&a2s))]));
        }
    }
    None
}

fn check_prop_2(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let s = t.carrier();
    for i in right_ideals(t) {
        let si = subset_product(t, &s, &i);
        if !si.is_subset_of(&i) {
            return Some(wit(&[("I", ws(&i)), ("S·I", ws(&si))]));
        }
    }
    None
}

fn check_remark_2_part1(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let s = t.carrier();
    for i in right_ideals(t) {
        let si = subset_product(t, &s, &i);
        if !si.is_subset_of(&i) {
            return Some(wit(&[
                ("claim", txt("right ideal is a left ideal")),
                ("I", ws(&i)),
                ("S·I", ws(&si)),
            ]));
        }
        let is = subset_product(t, &i, &s);
        if !si.is_subset_of(&is) {
            return Some(wit(&[
                ("claim", txt("S·I ⊆ I·S")),
                ("I", ws(&i)),
                ("S·I", ws(&si)),
                ("I·S", ws(&is)),
            ]));
        }
    }
    None
}

fn check_remark_2_part2(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let s = t.carrier();
    for i in right_ideals(t) {
        let si = subset_product(t, &s, &i);
        let ssi = subset_product(t, &s, &si);
        if !ssi.is_subset_of(&si) {
            return Some(wit(&[
                ("claim", txt("S·I is a left ideal")),
                ("I", ws(&i)),
                ("S·I", ws(&si)),
                ("S·(S·I)", ws(&ssi)),
            ]));
        }
        let is = subset_product(t, &i, &s);
        let iss = subset_product(t, &is, &s);
        if !iss.is_subset_of(&is) {
            return Some(wit(&[
                ("claim", txt("I·S is a right ideal")),
                ("I", ws(&i)),
                ("I·S", ws(&is)),
                ("(I·S)·S", ws(&iss)),
            ]));
        }
    }
    None
}

fn check_lemma_2(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let s = t.carrier();
    for i in left_ideals(t) {
        for a in t.elements() {
            let ai = subset_product(t, &sing(t, a), &i);
            let sai = subset_product(t, &s, &ai);
            if !sai.is_subset_of(&ai) {
                return Some(wit(&[
                    ("a", el(a)),
                    ("I", ws(&i)),
                    ("a·I", ws(&ai)),
                    ("S·(a·I)", ws(&sai)),
                ]));
            }
        }
    }
    None
}

fn check_lemma_3_right(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for i in right_ideals(t) {
        let sq = subset_product(t, &i, &i);
        if !is_ideal_of(t, &sq) {
            return Some(wit(&[("I", ws(&i)), ("I·I", ws(&sq))]));
        }
    }
    None
}

fn check_lemma_3_left(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for i in left_ideals(t) {
        let sq = subset_product(t, &i, &i);
        if !is_ideal_of(t, &sq) {
            return Some(wit(&[("I", ws(&i)), ("I·I", ws(&sq))]));
        }
    }
    None
}

fn check_prop_3_fwd(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for mi in two_sided_ideals(t) {
        if mi.is_full() || !is_minimal_ideal(t, &mi).expect("ideal") {
            continue;
        }
        for a in t.elements() {
            let a2m = subset_product(t, &sing(t, square(t, a)), &mi);
            if a2m != mi {
                return Some(wit(&[("M", ws(&mi)), ("a", el(a)), ("a²·M", ws(&a2m))]));
            }
        }
    }
    None
}

fn check_prop_3_rev(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for mi in two_sided_ideals(t) {
        if mi.is_full() {
            continue;
        }
        let stable = t
            .elements()
            .all(|a| subset_product(t, &sing(t, square(t, a)), &mi) == mi);
        if stable && !is_minimal_ideal(t, &mi).expect("ideal") {
            return Some(wit(&[("M", ws(&mi))]));
        }
    }
    None
}

fn check_thm_1(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for i in minimal_members(&left_ideals(t)) {
        let i2 = subset_product(t, &i, &i);
        for a in t.elements() {
            let a2i2 = subset_product(t, &sing(t, square(t, a)), &i2);
            if !is_ideal_of(t, &a2i2) || !is_minimal_ideal(t, &a2i2).expect("ideal") {
                return Some(wit(&[("I", ws(&i)), ("a", el(a)), ("a²·I²", ws(&a2i2))]));
            }
        }
    }
    None
}

fn fully_prime_witness(t: &CayleyTable) -> Option<(ElementSet, ElementSet, ElementSet)> {
    let ideals = two_sided_ideals(t);
    for p in &ideals {
        for a in &ideals {
            for b in &ideals {
                if subset_product(t, a, b).is_subset_of(p)
                    && !a.is_subset_of(p)
                    && !b.is_subset_of(p)
                {
                    return Some((*p, *a, *b));
                }
            }
        }
    }
    None
}

fn chain_witness(ideals: &[ElementSet]) -> Option<(ElementSet, ElementSet)> {
    for a in ideals {
        for b in ideals {
            if !a.is_subset_of(b) && !b.is_subset_of(a) {
                return Some((*a, *b));
            }
        }
    }
    None
}

fn check_thm_2_fwd(m: &Model) -> Option<Witness> {
    let t = &m.table;
    if fully_prime_witness(t).is_some() {
        return None; // not fully prime: hypothesis fails
    }
    let ideals = two_sided_ideals(t);
    for i in &ideals {
        if subset_product(t, i, i) != *i {
            return Some(wit(&[("claim", txt("every ideal is idempotent")), ("I", ws(i))]));
        }
    }
    if let Some((a, b)) = chain_witness(&ideals) {
        return Some(wit(&[
            ("claim", txt("ideals are totally ordered")),
            ("A", ws(&a)),
            ("B", ws(&b)),
        ]));
    }
    None
}

fn check_thm_2_rev(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let ideals = two_sided_ideals(t);
    let all_idempotent = ideals.iter().all(|i| subset_product(t, i, i) == *i);
    if !all_idempotent || chain_witness(&ideals).is_some() {
        return None;
    }
    if let Some((p, a, b)) = fully_prime_witness(t) {
        return Some(wit(&[("P", ws(&p)), ("A", ws(&a)), ("B", ws(&b))]));
    }
    None
}

/// `a·(S·b) ⊆ P` for every pair it claims about.
fn element_pair_condition(t: &CayleyTable, p: &ElementSet, a: Element, b: Element) -> bool {
    let sb = subset_product(t, &t.carrier(), &sing(t, b));
    subset_product(t, &sing(t, a), &sb).is_subset_of(p)
}

fn check_thm_3_fwd(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in left_ideals(t) {
        if !is_quasi_prime(t, &p).expect("left ideal") {
            continue;
        }
        for a in t.elements() {
            for b in t.elements() {
                if element_pair_condition(t, &p, a, b) && !p.contains(a) && !p.contains(b) {
                    return Some(wit(&[("P", ws(&p)), ("a", el(a)), ("b", el(b))]));
                }
            }
        }
    }
    None
}

fn check_thm_3_rev(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in left_ideals(t) {
        let condition = t.elements().all(|a| {
            t.elements()
                .all(|b| !element_pair_condition(t, &p, a, b) || p.contains(a) || p.contains(b))
        });
        if condition && !is_quasi_prime(t, &p).expect("left ideal") {
            return Some(wit(&[("P", ws(&p))]));
        }
    }
    None
}

fn check_cor_1_fwd(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in left_ideals(t) {
        if !is_quasi_semiprime(t, &p).expect("left ideal") {
            continue;
        }
        for a in t.elements() {
            if element_pair_condition(t, &p, a, a) && !p.contains(a) {
                return Some(wit(&[("P", ws(&p)), ("a", el(a))]));
            }
        }
    }
    None
}

fn check_cor_1_rev(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in left_ideals(t) {
        let condition = t
            .elements()
            .all(|a| !element_pair_condition(t, &p, a, a) || p.contains(a));
        if condition && !is_quasi_semiprime(t, &p).expect("left ideal") {
            return Some(wit(&[("P", ws(&p))]));
        }
    }
    None
}

fn check_lemma_4_identity(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let e = m.profile.left_identity.expect("scope");
    for (kind, family) in [("left", left_ideals(t)), ("right", right_ideals(t))] {
        for i in family {
            if !i.is_full() && i.contains(e) {
                return Some(wit(&[("kind", txt(kind)), ("I", ws(&i)), ("e", el(e))]));
            }
        }
    }
    None
}

fn check_lemma_4_inverses(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for i in two_sided_ideals(t) {
        if i.is_full() {
            continue;
        }
        for a in t.elements() {
            let h = right_inverses(t, a).expect("scope");
            if !h.is_empty() && h.is_subset_of(&i) {
                return Some(wit(&[
                    ("claim", txt("nonempty H(a) is not contained in a proper ideal")),
                    ("I", ws(&i)),
                    ("a", el(a)),
                    ("H(a)", ws(&h)),
                ]));
            }
            if i.contains(a) && !h.is_empty() {
                return Some(wit(&[
                    ("claim", txt("elements of a proper ideal have no right inverse")),
                    ("I", ws(&i)),
                    ("a", el(a)),
                    ("H(a)", ws(&h)),
                ]));
            }
        }
    }
    None
}

fn check_thm_4_fwd(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for i in two_sided_ideals(t) {
        if i.is_full() {
            continue;
        }
        for a in i.iter() {
            let h = right_inverses(t, a).expect("scope");
            if !h.is_empty() {
                return Some(wit(&[("I", ws(&i)), ("a", el(a)), ("H(a)", ws(&h))]));
            }
        }
    }
    None
}

fn check_thm_4_rev(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for i in two_sided_ideals(t) {
        let none_invertible = i
            .iter()
            .all(|a| right_inverses(t, a).expect("scope").is_empty());
        if none_invertible && i.is_full() {
            return Some(wit(&[("I", ws(&i))]));
        }
    }
    None
}

fn check_prop_4_fwd(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in two_sided_ideals(t) {
        if !is_prime(t, &p).expect("ideal") {
            continue;
        }
        if !is_semiprime(t, &p).expect("ideal") {
            return Some(wit(&[("P", ws(&p)), ("missing", txt("semiprime"))]));
        }
        if !is_strongly_irreducible(t, &p).expect("ideal") {
            return Some(wit(&[("P", ws(&p)), ("missing", txt("strongly irreducible"))]));
        }
    }
    None
}

fn check_prop_4_rev(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in two_sided_ideals(t) {
        if is_semiprime(t, &p).expect("ideal")
            && is_strongly_irreducible(t, &p).expect("ideal")
            && !is_prime(t, &p).expect("ideal")
        {
            return Some(wit(&[("P", ws(&p))]));
        }
    }
    None
}

fn check_thm_5(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let ideals = two_sided_ideals(t);
    let primes: Vec<ElementSet> = ideals
        .iter()
        .filter(|p| is_prime(t, p).expect("ideal"))
        .copied()
        .collect();
    // Depth-first enumeration of every inclusion-chain in the prime poset.
    let mut stack: Vec<(Vec<ElementSet>, usize)> = (0..primes.len())
        .map(|i| (vec![primes[i]], i))
        .collect();
    while let Some((chain, last)) = stack.pop() {
        let meet = chain
            .iter()
            .skip(1)
            .fold(chain[0], |acc, p| acc.intersection(p));
        if !is_ideal_of(t, &meet) || !is_prime(t, &meet).expect("ideal") {
            let family = chain.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
            return Some(wit(&[("family", txt(&family)), ("intersection", ws(&meet))]));
        }
        for j in last + 1..primes.len() {
            let q = primes[j];
            if chain.iter().all(|c| c.is_subset_of(&q) || q.is_subset_of(c)) {
                let mut extended = chain.clone();
                extended.push(q);
                stack.push((extended, j));
            }
        }
    }
    None
}

fn check_thm_6(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for i in two_sided_ideals(t) {
        if minimal_primes_over(t, &i).expect("ideal").is_empty() {
            return Some(wit(&[("I", ws(&i))]));
        }
    }
    None
}

fn check_lemma_5(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let s = t.carrier();
    for i in right_ideals(t) {
        let si = subset_product(t, &s, &i);
        if !si.is_subset_of(&i) {
            return Some(wit(&[("I", ws(&i)), ("S·I", ws(&si))]));
        }
    }
    None
}

fn check_lemma_6_product(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in right_ideals(t) {
        for q in left_ideals(t) {
            let pq = subset_product(t, &p, &q);
            let meet = p.intersection(&q);
            if pq != meet {
                return Some(wit(&[
                    ("P", ws(&p)),
                    ("Q", ws(&q)),
                    ("P·Q", ws(&pq)),
                    ("P∩Q", ws(&meet)),
                ]));
            }
        }
    }
    None
}

fn check_lemma_6_semiprime(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in two_sided_ideals(t) {
        if !is_semiprime(t, &p).expect("ideal") {
            return Some(wit(&[("P", ws(&p))]));
        }
    }
    None
}

fn check_thm_7(m: &Model) -> Option<Witness> {
    match semilattice_failure(&m.table)? {
        SemilatticeFailure::NotIdempotent { a } => {
            Some(wit(&[("law", txt("idempotence")), ("A", ws(&a))]))
        }
        SemilatticeFailure::NotClosed { a, b } => {
            Some(wit(&[("law", txt("closure")), ("A", ws(&a)), ("B", ws(&b))]))
        }
        SemilatticeFailure::NotCommutative { a, b } => {
            Some(wit(&[("law", txt("commutativity")), ("A", ws(&a)), ("B", ws(&b))]))
        }
        SemilatticeFailure::NotAssociative { a, b, c } => Some(wit(&[
            ("law", txt("associativity")),
            ("A", ws(&a)),
            ("B", ws(&b)),
            ("C", ws(&c)),
        ])),
    }
}

fn check_thm_8_fwd(m: &Model) -> Option<Witness> {
    let t = &m.table;
    if fully_prime_witness(t).is_some() {
        return None;
    }
    let (a, b) = chain_witness(&two_sided_ideals(t))?;
    Some(wit(&[("A", ws(&a)), ("B", ws(&b))]))
}

fn check_thm_8_rev(m: &Model) -> Option<Witness> {
    let t = &m.table;
    if chain_witness(&two_sided_ideals(t)).is_some() {
        return None;
    }
    let (p, a, b) = fully_prime_witness(t)?;
    Some(wit(&[("P", ws(&p)), ("A", ws(&a)), ("B", ws(&b))]))
}

fn check_thm_9_fwd(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in two_sided_ideals(t) {
        if is_prime(t, &p).expect("ideal") && !is_strongly_irreducible(t, &p).expect("ideal") {
            return Some(wit(&[("P", ws(&p))]));
        }
    }
    None
}

fn check_thm_9_rev(m: &Model) -> Option<Witness> {
    let t = &m.table;
    for p in two_sided_ideals(t) {
        if is_strongly_irreducible(t, &p).expect("ideal") && !is_prime(t, &p).expect("ideal") {
            return Some(wit(&[("P", ws(&p))]));
        }
    }
    None
}

fn check_misc_1(m: &Model) -> Option<Witness> {
    let ids = left_identities(&m.table);
    if ids.len() > 1 {
        let pair: Vec<Element> = ids.iter().take(2).collect();
        return Some(wit(&[("e1", el(pair[0])), ("e2", el(pair[1]))]));
    }
    None
}

fn check_misc_2(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let e = right_identities(t).iter().next()?;
    if !m.profile.is_commutative {
        return Some(wit(&[("e", el(e)), ("missing", txt("commutativity"))]));
    }
    if !m.profile.is_associative {
        return Some(wit(&[("e", el(e)), ("missing", txt("associativity"))]));
    }
    if m.profile.left_identity != Some(e) {
        return Some(wit(&[("e", el(e)), ("missing", txt("two-sided identity"))]));
    }
    None
}

fn check_misc_3(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let s = t.carrier();
    for a in t.elements() {
        if square(t, a) != a {
            continue;
        }
        let a_s = subset_product(t, &sing(t, a), &s);
        let ass = subset_product(t, &a_s, &s);
        if !ass.is_subset_of(&a_s) {
            return Some(wit(&[("a", el(a)), ("a·S", ws(&a_s)), ("(a·S)·S", ws(&ass))]));
        }
    }
    None
}

fn check_misc_4(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let ideals = two_sided_ideals(t);
    for a in &ideals {
        for b in &ideals {
            let meet = a.intersection(b);
            if meet.is_empty() || !is_ideal_of(t, &meet) {
                return Some(wit(&[
                    ("operation", txt("intersection")),
                    ("A", ws(a)),
                    ("B", ws(b)),
                    ("result", ws(&meet)),
                ]));
            }
            let join = a.union(b);
            if !is_ideal_of(t, &join) {
                return Some(wit(&[
                    ("operation", txt("union")),
                    ("A", ws(a)),
                    ("B", ws(b)),
                    ("result", ws(&join)),
                ]));
            }
        }
    }
    None
}

fn check_misc_5(m: &Model) -> Option<Witness> {
    let t = &m.table;
    let ss = carrier_square(t);
    if ss != t.carrier() {
        return Some(wit(&[("S·S", ws(&ss))]));
    }
    None
}

fn universal(scope: Scope, check: fn(&Model) -> Option<Witness>) -> Part {
    Part { suffix: None, scope, kind: CheckKind::Universal, check }
}

fn part(suffix: &'static str, scope: Scope, check: fn(&Model) -> Option<Witness>) -> Part {
    Part { suffix: Some(suffix), scope, kind: CheckKind::Universal, check }
}

pub(super) fn registry() -> Vec<StatementCheck> {
    vec![
        StatementCheck {
            id: "lemma-1",
            claim: "With a left identity e: S·S = S and e·S = S·e = S.",
            parts: vec![universal(Scope::LeftIdentity, check_lemma_1)],
        },
        StatementCheck {
            id: "remark-1",
            claim: "S = S·S does not force a left identity (witness search).",
            parts: vec![Part {
                suffix: None,
                scope: Scope::Any,
                kind: CheckKind::Existential,
                check: check_remark_1,
            }],
        },
        StatementCheck {
            id: "prop-1",
            claim: "With a left identity: (x·y)² = x²·y² = y²·x²; consequently a²·S is an ideal.",
            parts: vec![
                part("squares", Scope::LeftIdentity, check_prop_1_squares),
                part("ideal", Scope::LeftIdentity, check_prop_1_square_ideal),
            ],
        },
        StatementCheck {
            id: "prop-2",
            claim: "With a left identity, every right ideal is a two-sided ideal.",
            parts: vec![universal(Scope::LeftIdentity, check_prop_2)],
        },
        StatementCheck {
            id: "remark-2",
            claim: "(1) If S = S·S, right ideals are left ideals and S·I ⊆ I·S. \
                    (2) For a right ideal I, S·I is a left and I·S a right ideal.",
            parts: vec![
                part("part1", Scope::SquareCoversCarrier, check_remark_2_part1),
                part("part2", Scope::Any, check_remark_2_part2),
            ],
        },
        StatementCheck {
            id: "lemma-2",
            claim: "With a left identity, a·I is a left ideal for every left ideal I.",
            parts: vec![universal(Scope::LeftIdentity, check_lemma_2)],
        },
        StatementCheck {
            id: "lemma-3",
            claim: "With a left identity, I·I is an ideal for every right ideal I \
                    (variant: for every left ideal I).",
            parts: vec![
                part("right", Scope::LeftIdentity, check_lemma_3_right),
                part("left", Scope::LeftIdentity, check_lemma_3_left),
            ],
        },
        StatementCheck {
            id: "prop-3",
            claim: "With a left identity, a proper ideal M is minimal iff M = a²·M for all a.",
            parts: vec![
                part("fwd", Scope::LeftIdentity, check_prop_3_fwd),
                part("rev", Scope::LeftIdentity, check_prop_3_rev),
            ],
        },
        StatementCheck {
            id: "thm-1",
            claim: "With a left identity, a²·I² is a minimal ideal for every minimal left \
                    ideal I and every a.",
            parts: vec![universal(Scope::LeftIdentity, check_thm_1)],
        },
        StatementCheck {
            id: "thm-2",
            claim: "With a left identity: fully prime iff every ideal is idempotent and the \
                    ideals form a chain.",
            parts: vec![
                part("fwd", Scope::LeftIdentity, check_thm_2_fwd),
                part("rev", Scope::LeftIdentity, check_thm_2_rev),
            ],
        },
        StatementCheck {
            id: "thm-3",
            claim: "With a left identity, a left ideal P is quasi-prime iff a·(S·b) ⊆ P \
                    implies a ∈ P or b ∈ P.",
            parts: vec![
                part("fwd", Scope::LeftIdentity, check_thm_3_fwd),
                part("rev", Scope::LeftIdentity, check_thm_3_rev),
            ],
        },
        StatementCheck {
            id: "cor-1",
            claim: "With a left identity, a left ideal P is quasi-semiprime iff a·(S·a) ⊆ P \
                    implies a ∈ P.",
            parts: vec![
                part("fwd", Scope::LeftIdentity, check_cor_1_fwd),
                part("rev", Scope::LeftIdentity, check_cor_1_rev),
            ],
        },
        StatementCheck {
            id: "lemma-4",
            claim: "With a left identity e: proper one-sided ideals omit e, and right-inverse \
                    sets H(a) stay outside proper ideals.",
            parts: vec![
                part("identity", Scope::LeftIdentity, check_lemma_4_identity),
                part("inverses", Scope::LeftIdentity, check_lemma_4_inverses),
            ],
        },
        StatementCheck {
            id: "thm-4",
            claim: "In a right invertible LA-semigroup, an ideal is proper iff none of its \
                    elements has a right inverse.",
            parts: vec![
                part("fwd", Scope::RightInvertible, check_thm_4_fwd),
                part("rev", Scope::RightInvertible, check_thm_4_rev),
            ],
        },
        StatementCheck {
            id: "prop-4",
            claim: "An ideal is prime iff it is semiprime and strongly irreducible.",
            parts: vec![
                part("fwd", Scope::Any, check_prop_4_fwd),
                part("rev", Scope::Any, check_prop_4_rev),
            ],
        },
        StatementCheck {
            id: "thm-5",
            claim: "The intersection of an inclusion-chain of prime ideals is prime.",
            parts: vec![universal(Scope::Any, check_thm_5)],
        },
        StatementCheck {
            id: "thm-6",
            claim: "Every ideal is contained in a minimal prime ideal.",
            parts: vec![universal(Scope::Any, check_thm_6)],
        },
        StatementCheck {
            id: "lemma-5",
            claim: "In a regular LA-semigroup, every right ideal is a two-sided ideal.",
            parts: vec![universal(Scope::Regular, check_lemma_5)],
        },
        StatementCheck {
            id: "lemma-6",
            claim: "In a regular LA-semigroup, P·Q = P ∩ Q for P a right and Q a left ideal; \
                    ideals are semiprime.",
            parts: vec![
                part("product", Scope::Regular, check_lemma_6_product),
                part("semiprime", Scope::Regular, check_lemma_6_semiprime),
            ],
        },
        StatementCheck {
            id: "thm-7",
            claim: "In a regular LA-semigroup, the ideals form a semilattice under A Λ B = A·B.",
            parts: vec![universal(Scope::Regular, check_thm_7)],
        },
        StatementCheck {
            id: "thm-8",
            claim: "A regular LA-semigroup is fully prime iff its ideals form a chain.",
            parts: vec![
                part("fwd", Scope::Regular, check_thm_8_fwd),
                part("rev", Scope::Regular, check_thm_8_rev),
            ],
        },
        StatementCheck {
            id: "thm-9",
            claim: "In a regular LA-semigroup, an ideal is prime iff it is strongly irreducible.",
            parts: vec![
                part("fwd", Scope::Regular, check_thm_9_fwd),
                part("rev", Scope::Regular, check_thm_9_rev),
            ],
        },
        StatementCheck {
            id: "misc-1",
            claim: "A left identity, when present, is unique.",
            parts: vec![universal(Scope::Any, check_misc_1)],
        },
        StatementCheck {
            id: "misc-2",
            claim: "An LA-semigroup with a right identity is a commutative monoid.",
            parts: vec![universal(Scope::Any, check_misc_2)],
        },
        StatementCheck {
            id: "misc-3",
            claim: "With a left identity, (a·S)·S ⊆ a·S for every idempotent a.",
            parts: vec![universal(Scope::LeftIdentity, check_misc_3)],
        },
        StatementCheck {
            id: "misc-4",
            claim: "Intersections and unions of ideals are ideals.",
            parts: vec![universal(Scope::Any, check_misc_4)],
        },
        StatementCheck {
            id: "misc-5",
            claim: "A regular LA-semigroup satisfies S = S·S.",
            parts: vec![universal(Scope::Regular, check_misc_5)],
        },
    ]
}

//! Subsets of a finite carrier as fixed-width bit sets.
//!
//! An [`ElementSet`] always remembers the order of the ambient magma so that
//! complements and "is this the whole carrier?" questions are well defined.
//! Orders are capped at 64 elements, which keeps every subset in one `u64`.

use std::fmt;

use crate::magma::{Element, MAX_ORDER};

/// A subset of the carrier `{0, 1, …, n-1}` of an order-`n` magma.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    order: usize,
    bits: u64,
}

impl ElementSet {
    /// The empty subset of an order-`n` carrier.
    pub fn empty(order: usize) -> Self {
        assert!(order >= 1 && order <= MAX_ORDER, "order out of range");
        ElementSet { order, bits: 0 }
    }

    /// The full carrier `{0, …, n-1}`.
    pub fn full(order: usize) -> Self {
        assert!(order >= 1 && order <= MAX_ORDER, "order out of range");
        let bits = if order == 64 { u64::MAX } else { (1u64 << order) - 1 };
        ElementSet { order, bits }
    }

    /// The singleton `{e}`.
    pub fn singleton(order: usize, e: Element) -> Self {
        let mut s = Self::empty(order);
        s.insert(e);
        s
    }

    /// Builds a set from element indices.
    pub fn from_elements(order: usize, elements: &[Element]) -> Self {
        let mut s = Self::empty(order);
        for &e in elements {
            s.insert(e);
        }
        s
    }

    /// Reconstructs a set from a raw bit pattern.
    pub fn from_bits(order: usize, bits: u64) -> Self {
        let full = Self::full(order);
        assert!(bits & !full.bits == 0, "bit pattern exceeds order");
        ElementSet { order, bits }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Raw bit pattern; bit `i` set iff element `i` is a member.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn insert(&mut self, e: Element) {
        assert!(e < self.order, "element {e} out of range for order {}", self.order);
        self.bits |= 1 << e;
    }

    pub fn contains(&self, e: Element) -> bool {
        e < self.order && self.bits >> e & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// True when the set is the whole carrier.
    pub fn is_full(&self) -> bool {
        *self == Self::full(self.order)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.order, other.order, "order mismatch");
        ElementSet { order: self.order, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.order, other.order, "order mismatch");
        ElementSet { order: self.order, bits: self.bits & other.bits }
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        assert_eq!(self.order, other.order, "order mismatch");
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset_of(&self, other: &ElementSet) -> bool {
        self.is_subset_of(other) && self.bits != other.bits
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).filter(move |&e| self.contains(e))
    }

    /// Members as a sorted vector, the JSON report representation.
    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

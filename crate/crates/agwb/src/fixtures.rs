//! Small reference models used across tests, examples, and documentation.

use crate::magma::CayleyTable;

/// The order-1 magma.
pub fn trivial() -> CayleyTable {
    CayleyTable::new(1, vec![0]).unwrap()
}

/// Subtraction mod `n`: `a·b = (b - a) mod n`.
///
/// For `n = 3` this is the standard small LA-semigroup with left identity
/// 0: regular, right invertible, neither commutative nor associative.
pub fn sub_mod(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |a, b| (n + b - a) % n).unwrap()
}

/// The null magma: every product is 0. An LA-semigroup without left
/// identity; not regular for `n ≥ 2`.
pub fn null(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |_, _| 0).unwrap()
}

/// Left-zero: `a·b = a`. Not left invertive for `n ≥ 2`.
pub fn left_zero(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |a, _| a).unwrap()
}

/// Right-zero: `a·b = b`. Medial but not left invertive for `n ≥ 2`.
pub fn right_zero(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |_, b| b).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_rows() {
        assert_eq!(sub_mod(3).entries(), &[0, 1, 2, 2, 0, 1, 1, 2, 0]);
        assert_eq!(null(2).entries(), &[0, 0, 0, 0]);
        assert_eq!(left_zero(2).entries(), &[0, 0, 1, 1]);
        assert_eq!(right_zero(2).entries(), &[0, 1, 0, 1]);
    }
}

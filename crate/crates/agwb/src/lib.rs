//! A finite-model workbench for LA-semigroups (Abel-Grassmann groupoids).
//!
//! An LA-semigroup is a magma satisfying the left invertive law
//! `(a·b)·c = (c·b)·a`. This crate represents finite magmas as Cayley
//! tables and provides four layers on top:
//!
//! - [`magma`] — tables, parsing/serialization, and the element-level
//!   axioms and properties (left invertive, medial, identities,
//!   regularity, right invertibility);
//! - [`ideals`] — subset algebra: complex products, generated and
//!   principal ideals, exhaustive ideal enumeration, and the full ideal
//!   classification (prime, semiprime, strongly irreducible, quasi-prime,
//!   minimal, idempotent, chains, semilattices);
//! - [`enumerate`] — constraint-propagated backtracking enumeration of
//!   all LA-semigroups of a given order, canonical forms, and isomorphism
//!   testing;
//! - [`verify`] — a catalogue of classical statements about ideals in
//!   LA-semigroups, each bound to a scope filter and an executable
//!   exhaustive check over enumerated models, reporting `VERIFIED` up to
//!   an order or a minimal replayable counterexample.
//!
//! The `examples/` directory demonstrates each capability as a runnable
//! program; the `agwb` binary exposes the same workflows as subcommands.
//!
//! ```
//! use agwb::{fixtures, magma};
//!
//! let t = fixtures::sub_mod(3); // a·b = (b - a) mod 3
//! assert!(magma::is_left_invertive(&t));
//! assert_eq!(magma::left_identity(&t), Some(0));
//! assert!(!magma::is_associative(&t));
//! ```

pub mod cli;
pub mod enumerate;
pub mod fixtures;
pub mod ideals;
pub mod magma;
pub mod set;
pub mod verify;

pub use enumerate::{
    are_isomorphic, canonicalize, count_la, enumerate_la, CanonicalForm, EnumerationTask, Filter,
};
pub use ideals::{all_ideals, analyze, subset_product, IdealKind, IdealRecord, ModelReport};
pub use magma::{parse_table, serialize_table, CayleyTable, Element, PropertyProfile};
pub use set::ElementSet;
pub use verify::{registry, run_suite, StatementCheck, SuiteReport};

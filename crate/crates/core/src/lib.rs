//! Finite-monoid computations centered on the inclusion order of left
//! cosets.
//!
//! The crate builds the monoids attached to combinatorial and geometric
//! data — regressive-function monoids on posets, Catalan and tetris
//! monoids, 0-Hecke monoids of Coxeter groups, hyperplane face monoids —
//! and decides structural properties of each: R-, J- and almost-R-
//! triviality, and whether the coset order is linear.
//!
//! Products read left to right throughout: `m.then(n)` and every Cayley
//! table entry `mul(a, b)` mean "a first, then b"; for transformations
//! `(a b)(x) = b(a(x))`.

mod error;

pub mod blocks;
pub mod coxeter;
pub mod dot;
pub mod enumerate;
pub mod faces;
pub mod functions;
pub mod json;
pub mod monoid;
pub mod poset;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use monoid::{CosetPoset, FiniteMonoid};
pub use poset::{Chain, FiniteLattice, FinitePoset};
pub use transform::Transformation;

//! Core constructions for the Yokonuma-Hecke algebra of type A and its
//! Schur algebra: the underlying combinatorics (permutations, shapes,
//! tableaux), the algebra with its normal form and cellular bases, the
//! permutation, Specht and Weyl modules, and the checks tying them
//! together.

pub mod algebra;
pub mod linalg;
pub mod modules;
pub mod perm;
pub mod shapes;
pub mod tableaux;

pub use algebra::{Algebra, Element, Flavor, Monomial};
pub use linalg::{Echelon, Matrix};
pub use perm::{Permutation, YoungSubgroup};
pub use shapes::{MultiComposition, MultiPartition, Node};
pub use tableaux::{MultiTableau, TypedEntry, TypedTableau};

//! Exact enumeration of factorizations of Coxeter elements in complex
//! reflection groups.
//!
//! The crate has two halves that check each other. `closed_forms` evaluates
//! the closed counting formulas for the symmetric group, the wreath products
//! G(d,1,n) and G(d,d,n), and (through embedded character tables) the well
//! generated exceptional groups; `oracle` recounts the same quantities by
//! exhaustive enumeration. All arithmetic is exact: big integers, big
//! rationals, and cyclotomic integers — no floating point anywhere.
//!
//! Module map:
//! - [`perm`]: permutations, partitions, compositions, transitivity.
//! - [`wreath`]: generalized permutations [π; a], group specs, invariants.
//! - [`coeffs`]: the M^n_p coefficients, polynomial bases, exact polynomial
//!   arithmetic.
//! - [`symfunc`]: finite-alphabet symmetric functions and principal
//!   specializations.
//! - [`characters`]: Murnaghan–Nakayama, the Frobenius counting formula,
//!   cyclotomic values, character-polynomial tables.
//! - [`closed_forms`]: one evaluator per counting theorem.
//! - [`oracle`]: brute-force ground truth with data-parallel enumeration.
//! - [`noncross`]: the codim-fix and reflection-length orders below a
//!   Coxeter element.

pub mod characters;
pub mod closed_forms;
pub mod coeffs;
pub mod error;
pub mod noncross;
pub mod oracle;
pub mod perm;
pub mod symfunc;
pub mod wreath;

pub use error::{Error, Result};

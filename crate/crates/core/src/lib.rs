//! Exact enumeration of genus-0 Hurwitz factorizations and the
//! characteristic-p numerology of their reduction.
//!
//! * [`perm`]: permutations, cycle types, stabilizer chains.
//! * [`hurwitz`]: ramification types, factorization enumeration, closed formulas,
//!   monodromy classification.
//! * [`braid`]: the braid operator on 4-tuples, its orbits, admissible degenerations.
//! * [`charp`]: tail invariants, lift counts, bad-reduction counts, p-Hurwitz numbers.
//! * [`fp_poly`]: dense polynomials over prime fields, the Cartier coefficient,
//!   tail-cover polynomials.
//! * [`cli`] and [`verify`]: the command-line reports and the acceptance checks.

pub mod arith;
pub mod braid;
pub mod charp;
pub mod cli;
pub mod error;
pub mod fp_poly;
pub mod hurwitz;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};

//! Immersed-curve invariants of rooted plumbing trees.
//!
//! Rooted plumbing trees ([`plumbing`]) are decomposed into twist, extend and
//! merge moves, which act on cyclic words in α±1, β±1 ([`words`],
//! [`loopcalc`]). From the resulting curves the crate computes the symmetry
//! invariant Δ_sym, pairing generators and spin-c ranks ([`geometry`]),
//! relative Wu sets and Δμ̄ ([`wu`]), and rational grading differences
//! ([`gradings`]). The [`harness`] module checks Δ_sym = −¼·Δμ̄ on random
//! trees. All arithmetic is exact.

pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod gradings;
pub mod harness;
pub mod loopcalc;
pub mod moves;
pub mod plumbing;
pub mod rational;
pub mod svg;
pub mod words;
pub mod wu;

pub use error::{Error, Result};

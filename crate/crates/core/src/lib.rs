//! Exact cohomology rings for transversal `A_n` singularities.
//!
//! The crate builds the Chen-Ruan orbifold cohomology of `[Y] = [C^2/Z_{n+1}] x S`
//! bundles, the cohomology of the crepant resolution `Z -> Y`, its quantum
//! corrected version from the exceptional-curve Gromov-Witten invariants, and
//! tools for deciding when the two sides are isomorphic after specialising the
//! quantum parameters to roots of unity.

#![allow(clippy::needless_range_loop)]

pub mod cartan;
pub mod chen_ruan;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod gromov_witten;
pub mod linalg;
pub mod mckay;
pub mod quantum;
pub mod resolution;
pub mod ring;
pub mod scalars;
pub mod verify;

pub use error::{Error, Result};

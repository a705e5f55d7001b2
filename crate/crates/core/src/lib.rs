//! Finite quantum measurements (POVMs), the Shannon/Rényi/Tsallis entropy of
//! their outcome statistics over pure states, global optimization of that
//! entropy on the (generalized) Bloch sphere, and Hermite-interpolation
//! certificates of global optimality.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI live
//! in the companion `povmlab` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bloch;
pub mod catalog;
pub mod certify;
pub mod design;
pub mod entropy;
pub mod error;
pub mod groups;
pub mod hermite;
pub mod invariants;
pub mod linalg;
pub mod optimize;
pub mod quantum;
pub mod random;
pub mod tol;

pub use error::{Error, Result};
pub use tol::Tolerances;

//! Exact enumeration workbench for 132-avoiding involutions.
//!
//! Everything in this crate is computed with exact arithmetic: permutation
//! statistics and pattern occurrence counts are integers, generating
//! functions are truncated power series over arbitrary-precision rationals,
//! and every closed form ships with a brute-force oracle that recounts it
//! from scratch.
//!
//! The crate is split along the objects it manipulates:
//!
//! - [`perm`]: permutations, involutions, their statistics, and classical /
//!   dashed pattern occurrence counting;
//! - [`words`]: Dyck word prefixes, bilateral words, and the separator-moving
//!   bijection between them;
//! - [`biject`]: growth steps shared by involutions and words, the bijection
//!   between 132-avoiding involutions and Dyck word prefixes, the reduction
//!   map for involutions containing 132 exactly once, one-stack sorting, and
//!   the right-to-left-maxima surgery maps;
//! - [`succession`]: generating-tree succession systems and the dynamic
//!   programming tables they induce;
//! - [`series`]: truncated formal power series with exact rational
//!   coefficients, Chebyshev-flavoured rational functions, the generating
//!   function catalog, and multivariate continued fractions;
//! - [`oracle`]: brute-force enumeration and joint statistic distributions;
//! - [`verify`]: named cross-checks of every closed form against the oracle.
//!
//! The library is `no_std` + `alloc`; all IO lives in the companion CLI
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod biject;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod series;
pub mod succession;
pub mod verify;
pub mod words;

pub use error::Error;
pub use perm::{Parity, PatternSpec, Permutation};
pub use words::{LatticeWord, Step};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

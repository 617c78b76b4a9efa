//! Exact q-series kernel and identity verification engine.
//!
//! Everything is computed over Q(q) with arbitrary-precision rationals; no
//! floating point is involved anywhere. The crate provides
//!
//! - [`arith`]: rationals, polynomials in `q`, canonical rational functions,
//!   truncated power series and polynomials in an auxiliary variable `x`;
//! - [`qseries`]: q-Pochhammer symbols and Gaussian binomials;
//! - [`symfunc`]: complete homogeneous symmetric functions and their
//!   partial-fraction formulas;
//! - [`identities`]: both sides of the q-identities built on top of them,
//!   exact comparison, seeded parameter sampling and an interpolation-grid
//!   proof mode;
//! - [`divisor`]: divisor sums and the divisor-count q-expansion check;
//! - [`cli`]: suite configuration and report types behind the `qident` binary.

pub mod arith;
pub mod cli;
pub mod divisor;
pub mod error;
pub mod identities;
pub mod qseries;
pub mod symfunc;

pub use error::{Error, Result};

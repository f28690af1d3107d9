//! Exact q-series and partition machinery for Ramanujan's third-order mock
//! theta functions `f`, `φ`, `ψ` and Andrews' two-variable extensions.
//!
//! - [`partition`]: partitions, statistics, class enumeration.
//! - [`qseries`]: truncated power series over `ℤ` and `ℤ[α]`, products and
//!   the direct-summation builders.
//! - [`involution`]: the sign-reversing involutions `Υ`, `Φ`, `Ψ`, audits
//!   and traces.
//! - [`verifier`]: the identity registry and exact coefficient checks.
//! - [`cli`]: the `mocktheta` command line.

pub mod error;
pub mod involution;
pub mod partition;
pub mod qseries;
pub mod verifier;
pub mod cli;

pub use error::{Error, Result};

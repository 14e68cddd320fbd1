//! Support library for the `dipolar` binary: argument parsing helpers,
//! deterministic output writers, and physical-unit conversion. Kept as a
//! library target so integration tests can drive the same code paths.

// domain checks use `!(x >= 0.0)` so NaN inputs are rejected as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod axis;
pub mod error;
pub mod output;
pub mod units;

pub use error::CliError;

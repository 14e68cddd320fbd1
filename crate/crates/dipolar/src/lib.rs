//! Thermal-equilibrium entanglement of dipolar-coupled spin-1/2 systems
//! in a low external magnetic field.
//!
//! The crate builds the reduced (dimensionless) Hamiltonian of N spins
//! coupled by the full, untruncated dipole-dipole interaction, forms
//! Gibbs states, and quantifies pair entanglement with the Wootters
//! concurrence. For a transverse field direction it also evaluates the
//! closed-form concurrence, magnetization, and entanglement boundary,
//! cross-validating them against the numerical pipeline. A sweep engine
//! produces deterministic tables for figures, boundary traces, and the
//! concurrence-vs-magnetization fit.

// domain checks use `!(x >= 0.0)` so NaN inputs are rejected as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod eig;
pub mod entanglement;
pub mod error;
pub mod matrix;
pub mod spin;
pub mod sweep;
pub mod thermal;

pub use eig::{herm_eig, psd_sqrt, spectral_fn, HermitianEigSystem};
pub use entanglement::{concurrence, concurrence_x_state, spin_flip, ConcurrenceResult};
pub use error::{Error, Result};
pub use matrix::{kron, ComplexMatrix};
pub use spin::{
    dipolar_hamiltonian, pair_hamiltonian, spin_operator, total_hamiltonian, zeeman_hamiltonian,
    ReducedParams, SpinAxisOp, SpinGeometry,
};
pub use thermal::{expectation, gibbs, magnetization, partial_trace_pair, ThermalState};

//! Three-body physics of spin-f bosons with multichannel zero-range
//! interactions.
//!
//! The crate is organised bottom-up:
//!
//! * [`spin`] builds product and coupled hyperfine spin bases, Clebsch–Gordan
//!   coefficients, permutation, projector and spin-exchange matrices.
//! * [`adiabatic`] assembles the zero-range kernel matrix, finds the channel
//!   exponents `s_ν(R)` and turns them into hyperspherical potentials.
//! * [`spectrum`] solves the hyperradial problem of a single channel for its
//!   Efimov bound states.
//! * [`observables`] evaluates the log-periodic scaling functions, the
//!   recombination / atom-dimer scaling tables and the mean-field
//!   direct/exchange decompositions.
//!
//! Units: `ħ = m = 1`, lengths in `r_vdW`, energies in `1/(m r_vdW²)`.

pub mod adiabatic;
mod error;
pub mod observables;
pub mod spectrum;
pub mod spin;

pub use error::{Error, Result};

/// Three-body reduced mass `μ = m/√3` for unit atomic mass.
pub const THREE_BODY_REDUCED_MASS: f64 = 0.577_350_269_189_625_8;

/// `|s₀|` of the single-component Efimov channel, the imaginary root of
/// `s cos(sπ/2) = (8/√3) sin(sπ/6)`.
pub const EFIMOV_S0: f64 = 1.006_237_825_102_78;

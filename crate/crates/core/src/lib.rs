//! Spectral and grid solvers for the infinitesimal model of sexual
//! reproduction under selection and competition.
//!
//! The central object is the density equation
//!
//! ```text
//! ∂t q = (T_eps[q] - q) - (m - ∫ m q) q
//! ```
//!
//! where `T_eps` draws offspring traits from a Gaussian centred at the mean
//! parental trait with segregational deviation `eps`, and `m` is a
//! trait-dependent mortality rate. The crate provides
//!
//! * an orthonormal probabilists' Hermite basis with Gauss-Hermite
//!   quadrature ([`hermite`]),
//! * the reproduction operator in grid and coefficient form together with
//!   its exact central-moment propagation law ([`operators`]),
//! * selection functions, nondimensionalization and assumption checkers
//!   ([`model`]),
//! * a fixed-point construction of the concentrated steady state plus an
//!   independent grid oracle ([`steady`]),
//! * Galerkin and grid time integrators with decay-rate extraction
//!   ([`dynamics`]),
//! * moment/coefficient dictionaries and concentration diagnostics
//!   ([`diagnostics`]).
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature and enable `libm` to build without the standard library.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("ifsm-core requires either the `std` or the `libm` feature");

pub mod diagnostics;
pub mod dynamics;
mod error;
pub mod fft;
pub mod grid;
pub mod hermite;
pub mod linalg;
mod math;
pub mod model;
pub mod operators;
pub mod steady;

pub use error::{Error, Result};
pub use grid::{Frame, GridDensity, GridGeometry};
pub use hermite::{GaussianMoments, HermiteBasis, QuadratureRule};
// re-exports filled in as modules land



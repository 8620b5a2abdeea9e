//! Numerical laboratory for Einstein-Podolsky-Rosen experiments with
//! relativistic massive spin-1 bosons.
//!
//! The crate builds the covariant machinery explicitly — standard boosts,
//! Wigner rotations, the spin-1 amplitude matrices in the spin and helicity
//! bases — then the two-boson scalar states, the helicity and
//! linear-polarization observables, and every correlation function of
//! interest, each in two independent routes: a closed form in momentum
//! invariants and a brute-force expectation value in the coefficient model.
//! On top sit CHSH-inequality evaluation, angle optimization, and the
//! momentum threshold above which the inequality is violated.
//!
//! The library is `no_std`-compatible (enable the `libm` feature and disable
//! `std`); all state is held in plain values and every function is pure, so
//! concurrent use needs no coordination.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod dd;
mod fp;
mod linalg;

pub mod bell;
pub mod correlators;
pub mod error;
pub mod gauge;
pub mod kinematics;
pub mod observables;
pub mod spin1;
pub mod states;
pub mod tol;
pub mod verify;

pub use error::{Error, Result};
pub use gauge::GaugeChoice;
pub use kinematics::FourMomentum;

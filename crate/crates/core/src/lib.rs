//! Partition logic, logical information theory, and finite-dimensional
//! quantum measurement on one shared numeric footing.
//!
//! The crate models three layers that trade in the same vocabulary of
//! distinctions and indistinctions:
//!
//! * **Set partitions** on a finite weighted universe, their distinction
//!   (dit) and indistinction (indit) pair relations, and the join
//!   lattice ([`universe`], [`partition`]).
//! * **Classical density matrices** built from incidence matrices of
//!   subsets and partitions, logical entropy `h(ρ) = 1 − tr[ρ²]`, and
//!   the Lüders mixture operation that zeroes coherences across blocks
//!   ([`density`], [`logical`]).
//! * **Quantum states** over a named orthonormal basis: observables
//!   given by eigenvalue functions, the Born rule, projective
//!   measurement, CSCO joins, tensor products, and unitary evolution
//!   ([`quantum`]), plus the subsets-as-vectors toy model over Z₂
//!   ([`sets`]).
//!
//! All values are immutable after construction and every operation is a
//! pure function of its inputs, so everything can be shared freely
//! across threads. Numeric slack is controlled by a single
//! [`NumericPolicy`] record; nothing reads global state.
//!
//! The crate is `no_std`-compatible (`alloc` required): disable the
//! default `std` feature and enable `libm` to build for targets without
//! a standard library.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("ditkit-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod density;
pub mod error;
pub mod logical;
mod math;
pub mod partition;
pub mod policy;
pub mod quantum;
pub mod rng;
pub mod sets;
pub mod universe;

pub use density::{DensityMatrix, SquareMatrix};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use partition::{NumericalAttribute, PairRelation, Partition};
pub use policy::NumericPolicy;
pub use quantum::{Hamiltonian, MeasurementOutcome, Observable, StateVector};
pub use rng::SplitMix64;
pub use sets::SetKet;
pub use universe::FiniteUniverse;

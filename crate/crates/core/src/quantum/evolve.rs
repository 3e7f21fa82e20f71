//! Unitary time evolution generated by a Hamiltonian.
//!
//! Evolution is the distinction-*preserving* kind of process: it leaves
//! every inner product — every indistinctness amplitude between states
//! — unchanged, in contrast to measurement, which makes distinctions.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::density::SquareMatrix;
use crate::error::Result;
use crate::math;

use super::observable::Observable;
use super::state::StateVector;

/// A Hamiltonian: an observable used as the generator of the unitary
/// group `U(t) = e^{iHt}`. At finite dimension the correspondence is
/// spectral: in the eigenbasis, `U(t)` multiplies the amplitude on
/// `|u_i⟩` by the phase `e^{i λ_i t}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hamiltonian {
    generator: Observable,
}

impl Hamiltonian {
    pub fn new(generator: Observable) -> Self {
        Self { generator }
    }

    pub fn from_eigenvalues<S: Into<alloc::string::String>>(
        labels: impl IntoIterator<Item = S>,
        eigenvalues: Vec<f64>,
    ) -> Result<Self> {
        Ok(Self::new(Observable::new(labels, eigenvalues)?))
    }

    pub fn observable(&self) -> &Observable {
        &self.generator
    }
}

/// Evolves `ψ` for time `t`: `α_i ↦ e^{i λ_i t} α_i` in the eigenbasis
/// of `H`. Norm and all inner products are preserved.
pub fn unitary_evolve(psi: &StateVector, hamiltonian: &Hamiltonian, t: f64) -> Result<StateVector> {
    hamiltonian
        .observable()
        .check_basis(psi.basis_labels())?;
    let amplitudes: Vec<Complex64> = psi
        .amplitudes()
        .iter()
        .zip(hamiltonian.observable().eigenvalues())
        .map(|(&a, &ev)| Complex64::from_polar(1.0, ev * t) * a)
        .collect();
    StateVector::new(psi.basis_labels().to_vec(), amplitudes)
}

/// The evolution operator `U(t) = e^{iHt}` as a matrix, `diag(e^{iλ_i t})`
/// in the eigenbasis of `H`.
pub fn evolution_matrix(hamiltonian: &Hamiltonian, t: f64) -> SquareMatrix {
    let phases: Vec<Complex64> = hamiltonian
        .observable()
        .eigenvalues()
        .iter()
        .map(|&ev| Complex64::from_polar(1.0, ev * t))
        .collect();
    SquareMatrix::diagonal(&phases)
}

/// The symmetric beam splitter
///
/// ```text
///         1  ( 1  i )
///   B = ───── (      )
///         √2  ( i  1 )
/// ```
///
/// Convention: the transmitted amplitude keeps its phase and the
/// reflected amplitude picks up `i`. Two splitters in sequence route
/// everything to the second port: `B·B |arm1⟩ = i|arm2⟩`.
pub fn beam_splitter_unitary() -> SquareMatrix {
    let s = 1.0 / math::sqrt(2.0);
    SquareMatrix::from_rows(&[
        alloc::vec![Complex64::new(s, 0.0), Complex64::new(0.0, s)],
        alloc::vec![Complex64::new(0.0, s), Complex64::new(s, 0.0)],
    ])
    .expect("2x2 literal is square")
}

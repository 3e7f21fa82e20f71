//! State vectors over a named orthonormal basis.

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::density::{DensityMatrix, SquareMatrix};
use crate::error::{Error, Result};
use crate::math;
use crate::policy::NumericPolicy;
use crate::rng::SplitMix64;

/// A normalized superposition `|ψ⟩ = Σ_i α_i |u_i⟩` over a named
/// orthonormal basis. The amplitudes `α_i = ⟨u_i|ψ⟩` are the
/// indistinctness amplitudes of `|ψ⟩` with the basis states.
///
/// Values are immutable; the constructor either checks the norm
/// ([`StateVector::new`]) or scales to it ([`StateVector::normalized`]).
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    basis_labels: Vec<String>,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Wraps amplitudes that are already normalized within
    /// `policy.trace_tol`, rejecting anything else.
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        amplitudes: Vec<Complex64>,
    ) -> Result<Self> {
        Self::with_policy(labels, amplitudes, &NumericPolicy::DEFAULT)
    }

    pub fn with_policy<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        amplitudes: Vec<Complex64>,
        policy: &NumericPolicy,
    ) -> Result<Self> {
        let state = Self::raw(labels, amplitudes, policy)?;
        let norm = state.norm();
        if math::abs(norm - 1.0) > policy.trace_tol {
            return Err(Error::NotNormalized { norm });
        }
        Ok(state)
    }

    /// Scales the amplitudes to unit norm; the zero vector has no
    /// direction and is rejected.
    pub fn normalized<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        amplitudes: Vec<Complex64>,
    ) -> Result<Self> {
        let mut state = Self::raw(labels, amplitudes, &NumericPolicy::DEFAULT)?;
        let norm = state.norm();
        if norm < 1e-300 {
            return Err(Error::ZeroVector);
        }
        for a in &mut state.amplitudes {
            *a /= norm;
        }
        Ok(state)
    }

    fn raw<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        amplitudes: Vec<Complex64>,
        policy: &NumericPolicy,
    ) -> Result<Self> {
        let basis_labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if basis_labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if basis_labels.len() > policy.max_dimension {
            return Err(Error::UniverseTooLarge {
                size: basis_labels.len(),
                max: policy.max_dimension,
            });
        }
        if amplitudes.len() != basis_labels.len() {
            return Err(Error::LengthMismatch {
                expected: basis_labels.len(),
                got: amplitudes.len(),
            });
        }
        for (i, label) in basis_labels.iter().enumerate() {
            if basis_labels[..i].contains(label) {
                return Err(Error::DuplicateLabel { index: i });
            }
        }
        Ok(Self {
            basis_labels,
            amplitudes,
        })
    }

    /// The basis state `|u_index⟩`.
    pub fn basis_state<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        index: usize,
    ) -> Result<Self> {
        let basis_labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if index >= basis_labels.len() {
            return Err(Error::IndexOutOfRange {
                index,
                size: basis_labels.len(),
            });
        }
        let mut amplitudes = alloc::vec![Complex64::ZERO; basis_labels.len()];
        amplitudes[index] = Complex64::ONE;
        Self::new(basis_labels, amplitudes)
    }

    /// A random normalized state: amplitudes drawn uniformly from the
    /// complex square `[−1, 1]²` and scaled. Not Haar-distributed, but
    /// deterministic per seed and good enough for exercising laws.
    pub fn random<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        rng: &mut SplitMix64,
    ) -> Result<Self> {
        let basis_labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        loop {
            let amplitudes: Vec<Complex64> = (0..basis_labels.len())
                .map(|_| Complex64::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
                .collect();
            match Self::normalized(basis_labels.clone(), amplitudes) {
                Err(Error::ZeroVector) => continue,
                other => return other,
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(math::compensated_sum(
            self.amplitudes.iter().map(|a| a.norm_sqr()),
        ))
    }

    pub(crate) fn same_basis(&self, other: &StateVector) -> Result<()> {
        if self.basis_labels != other.basis_labels {
            return Err(Error::BasisMismatch);
        }
        Ok(())
    }

    /// Inner product `⟨self|other⟩ = Σ_i conj(self_i)·other_i`: the
    /// amplitude of indistinctness between the two states. Zero means
    /// fully distinct — the states are distinguishable with certainty.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        self.same_basis(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// The pure density matrix `ρ(ψ) = |ψ⟩⟨ψ|` with entries
    /// `ρ_{ij} = α_i·α_j*`. Off-diagonal entries are the coherences of
    /// the superposition.
    pub fn density(&self) -> DensityMatrix {
        let n = self.dim();
        let mut entries = alloc::vec![Complex64::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        DensityMatrix::from_parts_trusted(self.basis_labels.clone(), entries)
    }

    /// Born probabilities over the basis:
    /// `p_i = ‖⟨u_i|ψ⟩‖² / ‖⟨ψ|ψ⟩‖²`.
    pub fn born_probabilities(&self) -> Vec<f64> {
        let total = math::compensated_sum(self.amplitudes.iter().map(|a| a.norm_sqr()));
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr() / total)
            .collect()
    }

    /// Indices whose amplitude magnitude exceeds the support cutoff:
    /// the basis states "in" the superposition.
    pub fn support(&self, policy: &NumericPolicy) -> Vec<usize> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > policy.support_tol)
            .map(|(i, _)| i)
            .collect()
    }

    /// Tensor product: amplitudes multiply pairwise and basis labels
    /// pair up (`a⊗b`), in row-major order of the factors.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let labels = crate::quantum::product_labels(&self.basis_labels, &other.basis_labels);
        let amplitudes: Vec<Complex64> = self
            .amplitudes
            .iter()
            .flat_map(|&a| other.amplitudes.iter().map(move |&b| a * b))
            .collect();
        StateVector::new(labels, amplitudes)
    }

    /// Equality up to a global phase: aligns on the first amplitude of
    /// significant magnitude and compares entrywise within `tol`.
    pub fn phase_equal(&self, other: &StateVector, tol: f64) -> bool {
        if self.basis_labels != other.basis_labels {
            return false;
        }
        let anchor = self
            .amplitudes
            .iter()
            .position(|a| a.norm() > NumericPolicy::DEFAULT.support_tol);
        let Some(k) = anchor else {
            return other.amplitudes.iter().all(|b| b.norm() <= tol);
        };
        if other.amplitudes[k].norm() <= tol {
            return false;
        }
        let phase = other.amplitudes[k] / self.amplitudes[k];
        let phase = phase / Complex64::new(phase.norm(), 0.0);
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .all(|(a, b)| (a * phase - b).norm() <= tol)
    }

    /// Applies a square matrix to the state. The result must still be a
    /// unit vector, so in practice `matrix` is a unitary (beam
    /// splitters, phase shifters, evolution operators).
    pub fn apply(&self, matrix: &SquareMatrix) -> Result<StateVector> {
        let amplitudes = matrix.apply(&self.amplitudes)?;
        StateVector::new(self.basis_labels.clone(), amplitudes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const S: f64 = core::f64::consts::FRAC_1_SQRT_2;

    fn plus() -> StateVector {
        StateVector::new(["u1", "u2"], vec![c(S, 0.0), c(S, 0.0)]).unwrap()
    }

    #[test]
    fn constructor_enforces_normalization() {
        let err = StateVector::new(["u1", "u2"], vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));
        let fixed =
            StateVector::normalized(["u1", "u2"], vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_abs_diff_eq!(fixed.norm(), 1.0, epsilon = 1e-15);
        assert_eq!(
            StateVector::normalized(["u1"], vec![Complex64::ZERO]).unwrap_err(),
            Error::ZeroVector
        );
    }

    #[test]
    fn inner_product_examples() {
        let psi = plus();
        assert_abs_diff_eq!(psi.inner_product(&psi).unwrap().re, 1.0, epsilon = 1e-15);

        let u1 = StateVector::basis_state(["u1", "u2"], 0).unwrap();
        let u2 = StateVector::basis_state(["u1", "u2"], 1).unwrap();
        assert_eq!(u1.inner_product(&u2).unwrap(), Complex64::ZERO);
        assert_abs_diff_eq!(u1.inner_product(&psi).unwrap().re, S, epsilon = 1e-15);

        let other_basis = StateVector::basis_state(["v1", "v2"], 0).unwrap();
        assert_eq!(
            u1.inner_product(&other_basis).unwrap_err(),
            Error::BasisMismatch
        );
    }

    #[test]
    fn density_of_state_examples() {
        let u1 = StateVector::basis_state(["u1", "u2", "u3"], 0).unwrap();
        assert_eq!(u1.density().diagonal_entries(), vec![1.0, 0.0, 0.0]);

        let rho = plus().density();
        for i in 0..2 {
            for j in 0..2 {
                assert_abs_diff_eq!(rho.entry(i, j).re, 0.5, epsilon = 1e-15);
            }
        }
        assert!(rho.is_pure(1e-10));

        // complex phase shows up in the coherences: α₂ = i/√2
        let psi = StateVector::new(["u1", "u2"], vec![c(S, 0.0), c(0.0, S)]).unwrap();
        let rho = psi.density();
        assert_abs_diff_eq!(rho.entry(0, 1).im, -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.entry(1, 0).im, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn born_probabilities_are_phase_invariant() {
        let psi = plus();
        assert_abs_diff_eq!(psi.born_probabilities()[0], 0.5, epsilon = 1e-15);

        let u1 = StateVector::basis_state(["u1", "u2"], 0).unwrap();
        assert_eq!(u1.born_probabilities(), vec![1.0, 0.0]);

        for theta in [0.0, 0.7, 2.1, -1.3] {
            let phase = Complex64::from_polar(1.0, theta);
            let psi = StateVector::new(
                ["u1", "u2", "u3"],
                vec![
                    c(0.2f64.sqrt(), 0.0),
                    phase * c(0.3f64.sqrt(), 0.0),
                    c(0.5f64.sqrt(), 0.0),
                ],
            )
            .unwrap();
            let p = psi.born_probabilities();
            assert_abs_diff_eq!(p[0], 0.2, epsilon = 1e-12);
            assert_abs_diff_eq!(p[1], 0.3, epsilon = 1e-12);
            assert_abs_diff_eq!(p[2], 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn tensor_product_examples() {
        let a1 = StateVector::basis_state(["a1", "a2"], 0).unwrap();
        let b1 = StateVector::basis_state(["b1", "b2"], 0).unwrap();
        let product = a1.tensor(&b1).unwrap();
        assert_eq!(product.dim(), 4);
        assert_eq!(product.amplitude(0), Complex64::ONE);
        assert_eq!(product.basis_labels()[0], "a1⊗b1");

        let spread = plusish(["a1", "a2"]).tensor(&b1).unwrap();
        assert_abs_diff_eq!(spread.amplitude(0).re, S, epsilon = 1e-15);
        assert_abs_diff_eq!(spread.amplitude(2).re, S, epsilon = 1e-15);
        assert_eq!(spread.amplitude(1), Complex64::ZERO);
    }

    fn plusish(labels: [&str; 2]) -> StateVector {
        StateVector::new(labels, vec![c(S, 0.0), c(S, 0.0)]).unwrap()
    }

    #[test]
    fn phase_equal_quotient() {
        let psi = plus();
        let minus_psi = StateVector::new(["u1", "u2"], vec![c(-S, 0.0), c(-S, 0.0)]).unwrap();
        assert!(psi.phase_equal(&minus_psi, 1e-12));
        let i_psi = StateVector::new(["u1", "u2"], vec![c(0.0, S), c(0.0, S)]).unwrap();
        assert!(psi.phase_equal(&i_psi, 1e-12));
        let different = StateVector::basis_state(["u1", "u2"], 0).unwrap();
        assert!(!psi.phase_equal(&different, 1e-12));
        assert!(psi != minus_psi, "plain equality stays entrywise");
    }
}

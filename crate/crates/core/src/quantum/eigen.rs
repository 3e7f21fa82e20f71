//! Hermitian eigenvalues by cyclic Jacobi, and Von Neumann entropy.
//!
//! Everything else in the crate gets its spectra for free from the
//! eigenvalue-function representation of observables; only the Von
//! Neumann entropy of an arbitrary mixed state needs a real eigensolver.
//! At desk scale (dimension ≤ 64) a cyclic Jacobi iteration is simple,
//! robust, and dependency-free.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::math;
use crate::policy::NumericPolicy;

/// Eigenvalues of a Hermitian density matrix, ascending.
///
/// Cyclic Jacobi for complex Hermitian matrices: each sweep visits all
/// off-diagonal pivots `(p, q)` and annihilates them with the unitary
/// rotation that absorbs the pivot's phase. Converged when the
/// off-diagonal Frobenius norm drops below `policy.eigen_tol`.
pub fn hermitian_eigenvalues(rho: &DensityMatrix) -> Result<Vec<f64>> {
    hermitian_eigenvalues_with(rho, &NumericPolicy::DEFAULT)
}

pub fn hermitian_eigenvalues_with(
    rho: &DensityMatrix,
    policy: &NumericPolicy,
) -> Result<Vec<f64>> {
    let n = rho.dim();
    if n > policy.max_dimension {
        return Err(Error::MatrixTooLarge {
            dim: n,
            max: policy.max_dimension,
        });
    }
    let mut a: Vec<Complex64> = rho.entries().to_vec();
    if n == 1 {
        return Ok(alloc::vec![a[0].re]);
    }

    let off_norm = |a: &[Complex64]| -> f64 {
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    sum += a[i * n + j].norm_sqr();
                }
            }
        }
        math::sqrt(sum)
    };

    for _sweep in 0..policy.eigen_max_sweeps {
        if off_norm(&a) < policy.eigen_tol {
            let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
            eigenvalues.sort_by(f64::total_cmp);
            return Ok(eigenvalues);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let pivot = a[p * n + q];
                let magnitude = pivot.norm();
                if magnitude == 0.0 {
                    continue;
                }
                let alpha = a[p * n + p].re;
                let beta = a[q * n + q].re;
                let phi = math::atan2(pivot.im, pivot.re);
                let theta = 0.5 * math::atan2(2.0 * magnitude, alpha - beta);
                let (s, c) = (math::sin(theta), math::cos(theta));
                let e_plus = Complex64::from_polar(1.0, phi);
                let e_minus = e_plus.conj();

                // columns p and q of A·R, rows by conjugate symmetry
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = akp * c + akq * s * e_minus;
                    let new_kq = akq * c - akp * s * e_plus;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp.conj();
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq.conj();
                }
                let app = c * c * alpha + s * s * beta + 2.0 * s * c * magnitude;
                let aqq = s * s * alpha + c * c * beta - 2.0 * s * c * magnitude;
                a[p * n + p] = Complex64::new(app, 0.0);
                a[q * n + q] = Complex64::new(aqq, 0.0);
                a[p * n + q] = Complex64::ZERO;
                a[q * n + p] = Complex64::ZERO;
            }
        }
    }
    Err(Error::EigensolveFailure {
        off_diagonal: off_norm(&a),
    })
}

/// Von Neumann entropy `S(ρ) = −Σ_k μ_k log₂ μ_k` over the eigenvalues
/// of ρ, in bits, with `0·log 0 := 0`. Zero on pure states, like the
/// logical entropy — but unlike it, not tied entrywise to what a
/// measurement zeroes.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    von_neumann_entropy_with(rho, &NumericPolicy::DEFAULT)
}

pub fn von_neumann_entropy_with(rho: &DensityMatrix, policy: &NumericPolicy) -> Result<f64> {
    let eigenvalues = hermitian_eigenvalues_with(rho, policy)?;
    let sum = math::compensated_sum(
        eigenvalues
            .iter()
            // eigenvalues of a PSD matrix; clamp the solver's dust
            .filter(|&&mu| mu > 0.0)
            .map(|&mu| mu * math::log2(mu)),
    );
    Ok(0.0 - sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::sync::Arc;
    use alloc::vec;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    use crate::logical::density_of_subset;
    use crate::quantum::StateVector;
    use crate::rng::SplitMix64;
    use crate::universe::FiniteUniverse;

    #[test]
    fn eigenvalues_of_a_diagonal_matrix() {
        let rho = DensityMatrix::diagonal(["a", "b", "c"], &[0.5, 0.2, 0.3]).unwrap();
        let eigenvalues = hermitian_eigenvalues(&rho).unwrap();
        assert_abs_diff_eq!(eigenvalues[0], 0.2, epsilon = 1e-12);
        assert_abs_diff_eq!(eigenvalues[1], 0.3, epsilon = 1e-12);
        assert_abs_diff_eq!(eigenvalues[2], 0.5, epsilon = 1e-12);
    }

    #[test]
    fn eigenvalues_of_pure_states_are_a_one_and_zeros() {
        let mut rng = SplitMix64::new(11);
        for dim in 2..=6usize {
            let labels: Vec<String> = (0..dim).map(|i| alloc::format!("u{i}")).collect();
            let psi = StateVector::random(labels, &mut rng).unwrap();
            let eigenvalues = hermitian_eigenvalues(&psi.density()).unwrap();
            let top = eigenvalues.last().unwrap();
            assert_abs_diff_eq!(*top, 1.0, epsilon = 1e-10);
            for mu in &eigenvalues[..dim - 1] {
                assert_abs_diff_eq!(*mu, 0.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn eigenvalue_sums_match_traces() {
        // tr ρ = Σ μ and tr ρ² = Σ μ² on a genuinely complex instance
        let u = Arc::new(
            FiniteUniverse::with_probabilities(["a", "b", "c"], vec![0.5, 0.3, 0.2]).unwrap(),
        );
        let rho = density_of_subset(&u, &[0, 1, 2]).unwrap();
        let psi = StateVector::new(
            ["a", "b", "c"],
            vec![
                Complex64::new(0.5, 0.5),
                Complex64::new(0.0, -0.5),
                Complex64::new(0.5, 0.0),
            ],
        )
        .unwrap();
        for m in [rho, psi.density()] {
            let eigenvalues = hermitian_eigenvalues(&m).unwrap();
            let sum: f64 = eigenvalues.iter().sum();
            let sq: f64 = eigenvalues.iter().map(|mu| mu * mu).sum();
            assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-10);
            assert_abs_diff_eq!(sq, m.purity(), epsilon = 1e-10);
        }
    }

    #[test]
    fn von_neumann_entropy_examples() {
        let pure = StateVector::basis_state(["a", "b"], 0).unwrap().density();
        assert_abs_diff_eq!(von_neumann_entropy(&pure).unwrap(), 0.0, epsilon = 1e-12);

        let mixed = DensityMatrix::diagonal(["a", "b"], &[0.5, 0.5]).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&mixed).unwrap(), 1.0, epsilon = 1e-12);

        let lopsided = DensityMatrix::diagonal(["a", "b"], &[2.0 / 3.0, 1.0 / 3.0]).unwrap();
        let expected = -(2.0 / 3.0) * (2.0f64 / 3.0).log2() - (1.0 / 3.0) * (1.0f64 / 3.0).log2();
        assert_abs_diff_eq!(
            von_neumann_entropy(&lopsided).unwrap(),
            expected,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(expected, 0.9183, epsilon = 1e-4);
    }
}

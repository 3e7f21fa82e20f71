//! Density matrices and the Lüders mixture operation.
//!
//! One representation serves both layers: classical densities built
//! from subsets and partitions have real non-negative entries, quantum
//! densities `ρ(ψ) = |ψ⟩⟨ψ|` carry complex coherences, and the same
//! Lüders operation `ρ ↦ Σ_j P_j ρ P_j` decoheres either kind.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math;
use crate::policy::NumericPolicy;
use crate::rng::SplitMix64;

/// A general square complex matrix; used for unitaries and projectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        for row in rows {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    rows: dim,
                    cols: row.len(),
                });
            }
        }
        Ok(Self {
            dim,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn diagonal(values: &[Complex64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * values.len() + i] = v;
        }
        m
    }

    /// Diagonal 0/1 projector onto the coordinates in `mask`.
    pub fn projector(dim: usize, mask: &[usize]) -> Self {
        let mut m = Self::zeros(dim);
        for &i in mask {
            m.entries[i * dim + i] = Complex64::ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn mul(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    #[must_use]
    pub fn dagger(&self) -> SquareMatrix {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        out
    }

    /// Matrix–vector product.
    pub fn apply(&self, amplitudes: &[Complex64]) -> Result<Vec<Complex64>> {
        if amplitudes.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: amplitudes.len(),
            });
        }
        let n = self.dim;
        Ok((0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.entries[i * n + j] * amplitudes[j])
                    .sum()
            })
            .collect())
    }

    /// `‖U†U − I‖_max ≤ tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let gram = match self.dagger().mul(self) {
            Ok(g) => g,
            Err(_) => return false,
        };
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j { Complex64::ONE } else { Complex64::ZERO };
                if (gram.entries[i * n + j] - expected).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_abs_diff(&self, other: &SquareMatrix) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// A Hermitian, trace-one, positive-semidefinite matrix over a named
/// basis: the density-matrix representation of a (pure or mixed) state.
///
/// Validation runs on every construction: Hermiticity and unit trace
/// within `policy.trace_tol`, positive semidefiniteness probed with
/// `policy.psd_probes` seeded random vectors (a guard, not a solver —
/// the constructors of this crate produce PSD matrices by theory).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    entries: Vec<Complex64>,
    basis_labels: Vec<String>,
}

impl DensityMatrix {
    /// Validates and wraps an entry matrix given in row order.
    pub fn from_rows<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        rows: &[Vec<Complex64>],
    ) -> Result<Self> {
        Self::from_rows_with(labels, rows, &NumericPolicy::DEFAULT)
    }

    pub fn from_rows_with<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        rows: &[Vec<Complex64>],
        policy: &NumericPolicy,
    ) -> Result<Self> {
        let square = SquareMatrix::from_rows(rows)?;
        Self::from_flat(
            labels.into_iter().map(Into::into).collect(),
            square.entries,
            policy,
        )
    }

    /// Diagonal density matrix from a probability vector.
    pub fn diagonal<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        probabilities: &[f64],
    ) -> Result<Self> {
        let dim = probabilities.len();
        let mut entries = vec![Complex64::ZERO; dim * dim];
        for (i, &p) in probabilities.iter().enumerate() {
            entries[i * dim + i] = Complex64::new(p, 0.0);
        }
        Self::from_flat(
            labels.into_iter().map(Into::into).collect(),
            entries,
            &NumericPolicy::DEFAULT,
        )
    }

    pub(crate) fn from_flat(
        basis_labels: Vec<String>,
        entries: Vec<Complex64>,
        policy: &NumericPolicy,
    ) -> Result<Self> {
        let dim = basis_labels.len();
        if entries.len() != dim * dim {
            return Err(Error::LengthMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        if dim == 0 {
            return Err(Error::EmptyUniverse);
        }
        if dim > policy.max_dimension {
            return Err(Error::UniverseTooLarge {
                size: dim,
                max: policy.max_dimension,
            });
        }
        for (i, label) in basis_labels.iter().enumerate() {
            if basis_labels[..i].contains(label) {
                return Err(Error::DuplicateLabel { index: i });
            }
        }
        let rho = Self {
            dim,
            entries,
            basis_labels,
        };
        rho.validate(policy)?;
        Ok(rho)
    }

    /// Constructor for transformation results that preserve validity by
    /// theory (Lüders masking, unitary conjugation, convex mixing).
    /// Input validation is a guard at the boundary; re-probing every
    /// internal product would re-judge what algebra already settled.
    pub(crate) fn from_parts_trusted(basis_labels: Vec<String>, entries: Vec<Complex64>) -> Self {
        let dim = basis_labels.len();
        debug_assert_eq!(entries.len(), dim * dim);
        Self {
            dim,
            entries,
            basis_labels,
        }
    }

    fn validate(&self, policy: &NumericPolicy) -> Result<()> {
        let n = self.dim;
        let mut asymmetry = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.entry(i, j) - self.entry(j, i).conj()).norm();
                asymmetry = asymmetry.max(d);
            }
        }
        if !(asymmetry <= policy.trace_tol) {
            return Err(Error::NotHermitian {
                max_asymmetry: asymmetry,
            });
        }
        let trace = math::compensated_sum((0..n).map(|i| self.entry(i, i).re));
        if !(math::abs(trace - 1.0) <= policy.trace_tol) {
            return Err(Error::TraceNotOne { trace });
        }
        // PSD probe: re(x†ρx) must not dip below −psd_slack for unit x.
        let mut rng = SplitMix64::new(policy.psd_probe_seed);
        for _ in 0..policy.psd_probes {
            let mut probe: Vec<Complex64> = (0..n)
                .map(|_| Complex64::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
                .collect();
            let norm = math::sqrt(probe.iter().map(|z| z.norm_sqr()).sum());
            if norm == 0.0 {
                continue;
            }
            for z in &mut probe {
                *z /= norm;
            }
            let mut quad = Complex64::ZERO;
            for i in 0..n {
                for j in 0..n {
                    quad += probe[i].conj() * self.entry(i, j) * probe[j];
                }
            }
            if quad.re < -policy.psd_slack {
                return Err(Error::NotPositiveSemidefinite { witness: quad.re });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn diagonal_entries(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.entry(i, i).re).collect()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.entry(i, i)).sum()
    }

    /// Purity `tr[ρ²]`; for Hermitian ρ this is `Σ_{ij} ‖ρ_{ij}‖²`.
    pub fn purity(&self) -> f64 {
        math::compensated_sum(self.entries.iter().map(|z| z.norm_sqr()))
    }

    /// Logical entropy `h(ρ) = 1 − tr[ρ²]`: the amount of indistinctness
    /// destroyed on the way to a fully classified state.
    pub fn logical_entropy(&self) -> f64 {
        1.0 - self.purity()
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        math::abs(self.purity() - 1.0) <= tol
    }

    /// Lüders mixture `ρ̂ = Σ_j P_{B_j} ρ P_{B_j}` for the diagonal
    /// projectors of a block structure given as one class label per
    /// basis index: the entry `(i, i′)` survives iff `class[i] ==
    /// class[i′]`, so exactly the cross-class coherences are zeroed and
    /// the diagonal is untouched.
    ///
    /// This is the mask fast path; `luders_via_projectors` materializes
    /// the projection matrices and must agree entrywise.
    pub fn luders_by_class(&self, class: &[usize]) -> Result<DensityMatrix> {
        if class.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: class.len(),
            });
        }
        let n = self.dim;
        let mut entries = self.entries.clone();
        for i in 0..n {
            for j in 0..n {
                if class[i] != class[j] {
                    entries[i * n + j] = Complex64::ZERO;
                }
            }
        }
        Ok(Self::from_parts_trusted(self.basis_labels.clone(), entries))
    }

    /// Lüders mixture computed literally: build each diagonal projector
    /// `P_{B_j}` as a matrix and sum the sandwich products.
    pub fn luders_via_projectors(&self, class: &[usize]) -> Result<DensityMatrix> {
        if class.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: class.len(),
            });
        }
        let n = self.dim;
        let as_square = SquareMatrix {
            dim: n,
            entries: self.entries.clone(),
        };
        let mut acc = SquareMatrix::zeros(n);
        let classes = class.iter().copied().max().unwrap_or(0) + 1;
        for c in 0..classes {
            let mask: Vec<usize> = (0..n).filter(|&i| class[i] == c).collect();
            if mask.is_empty() {
                continue;
            }
            let p = SquareMatrix::projector(n, &mask);
            let sandwich = p.mul(&as_square)?.mul(&p)?;
            for (slot, value) in acc.entries.iter_mut().zip(&sandwich.entries) {
                *slot += value;
            }
        }
        Ok(Self::from_parts_trusted(self.basis_labels.clone(), acc.entries))
    }

    /// Sum of squared moduli of the entries zeroed between `self` and a
    /// Lüders image `hatted`: `Σ ‖ρ_{ii′}‖²` over zeroed `(i, i′)`.
    ///
    /// Each entry of `hatted` must either match `self` or be zero
    /// within `policy.entry_tol`, otherwise the pair is rejected as not
    /// conformal.
    pub fn zeroed_sum(&self, hatted: &DensityMatrix, policy: &NumericPolicy) -> Result<f64> {
        if self.dim != hatted.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: hatted.dim,
            });
        }
        let n = self.dim;
        let mut zeroed = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let original = self.entry(i, j);
                let image = hatted.entry(i, j);
                if (image - original).norm() <= policy.entry_tol {
                    continue; // kept
                }
                if image.norm() <= policy.entry_tol {
                    zeroed.push(original.norm_sqr());
                } else {
                    return Err(Error::NotAConformalPair { row: i, col: j });
                }
            }
        }
        Ok(math::compensated_sum(zeroed))
    }

    /// Entrywise comparison within `tol`.
    pub fn entrywise_eq(&self, other: &DensityMatrix, tol: f64) -> bool {
        self.dim == other.dim
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    pub fn max_entry_diff(&self, other: &DensityMatrix) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `U ρ U†` for a unitary `U`; the image of a density matrix under
    /// a basis rotation or time evolution. Rejects non-unitary `U`
    /// (otherwise the result would not be a density matrix).
    pub fn conjugate_by(&self, u: &SquareMatrix) -> Result<DensityMatrix> {
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: u.dim(),
            });
        }
        if !u.is_unitary(NumericPolicy::DEFAULT.entry_tol) {
            return Err(Error::NotUnitary);
        }
        let as_square = SquareMatrix {
            dim: self.dim,
            entries: self.entries.clone(),
        };
        let rotated = u.mul(&as_square)?.mul(&u.dagger())?;
        Ok(Self::from_parts_trusted(
            self.basis_labels.clone(),
            rotated.entries,
        ))
    }

    pub fn as_square(&self) -> SquareMatrix {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_non_hermitian() {
        let rows = vec![
            vec![c(0.5, 0.0), c(0.1, 0.0)],
            vec![c(0.3, 0.0), c(0.5, 0.0)],
        ];
        assert!(matches!(
            DensityMatrix::from_rows(["a", "b"], &rows).unwrap_err(),
            Error::NotHermitian { .. }
        ));
    }

    #[test]
    fn rejects_bad_trace() {
        let rows = vec![
            vec![c(0.6, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.6, 0.0)],
        ];
        assert!(matches!(
            DensityMatrix::from_rows(["a", "b"], &rows).unwrap_err(),
            Error::TraceNotOne { .. }
        ));
    }

    #[test]
    fn rejects_indefinite_matrix() {
        // Hermitian and trace one, but with eigenvalues 1.5 and −0.5.
        let rows = vec![
            vec![c(0.5, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.5, 0.0)],
        ];
        assert!(matches!(
            DensityMatrix::from_rows(["a", "b"], &rows).unwrap_err(),
            Error::NotPositiveSemidefinite { .. }
        ));
    }

    #[test]
    fn purity_of_the_maximally_mixed_qubit() {
        let rho = DensityMatrix::diagonal(["a", "b"], &[0.5, 0.5]).unwrap();
        assert_abs_diff_eq!(rho.purity(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.logical_entropy(), 0.5, epsilon = 1e-15);
        assert!(!rho.is_pure(1e-10));
    }

    #[test]
    fn mask_and_projector_luders_agree() {
        let half = c(0.25, 0.0);
        let rows: Vec<Vec<Complex64>> = (0..4).map(|_| vec![half; 4]).collect();
        let rho = DensityMatrix::from_rows(["a", "b", "c", "d"], &rows).unwrap();
        let class = [0usize, 0, 1, 1];
        let fast = rho.luders_by_class(&class).unwrap();
        let slow = rho.luders_via_projectors(&class).unwrap();
        assert_eq!(fast.max_entry_diff(&slow).unwrap(), 0.0);
        assert_abs_diff_eq!(fast.logical_entropy(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn zeroed_sum_rejects_non_conformal_pairs() {
        let rho = DensityMatrix::diagonal(["a", "b"], &[0.5, 0.5]).unwrap();
        let other = DensityMatrix::diagonal(["a", "b"], &[0.75, 0.25]).unwrap();
        assert_eq!(
            rho.zeroed_sum(&other, &NumericPolicy::DEFAULT).unwrap_err(),
            Error::NotAConformalPair { row: 0, col: 0 }
        );
        // identity pair has nothing zeroed
        assert_eq!(rho.zeroed_sum(&rho, &NumericPolicy::DEFAULT).unwrap(), 0.0);
    }

    #[test]
    fn unitary_conjugation_preserves_purity() {
        let rho = DensityMatrix::diagonal(["a", "b"], &[0.7, 0.3]).unwrap();
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let u = SquareMatrix::from_rows(&[
            vec![c(s, 0.0), c(0.0, s)],
            vec![c(0.0, s), c(s, 0.0)],
        ])
        .unwrap();
        assert!(u.is_unitary(1e-12));
        let rotated = rho.conjugate_by(&u).unwrap();
        assert_abs_diff_eq!(rotated.purity(), rho.purity(), epsilon = 1e-12);
    }
}

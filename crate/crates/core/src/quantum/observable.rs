//! Observables as eigenvalue functions on a named basis, projective
//! measurement, and the quantum Lüders mixture operation.
//!
//! An observable is stored as its spectral data: an orthonormal
//! eigenbasis plus one real eigenvalue per basis vector. The inverse
//! images of the eigenvalues partition the basis into eigenspace
//! blocks, and measurement is classification by that partition — the
//! same Lüders operation as in the classical case, zeroing exactly the
//! coherences between basis states with different eigenvalues.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::density::{DensityMatrix, SquareMatrix};
use crate::error::{Error, Result};
use crate::math;
use crate::partition::{group_by_value, Partition};
use crate::policy::NumericPolicy;
use crate::rng::SplitMix64;
use crate::universe::FiniteUniverse;

use super::state::StateVector;

/// An observable `F` given by its eigenbasis and eigenvalue function
/// `f : 𝒰 → ℝ`. The matrix form `diag(f(u_1), …, f(u_n))` is derivable
/// on demand; it is never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    basis_labels: Vec<String>,
    eigenvalues: Vec<f64>,
}

impl Observable {
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        eigenvalues: Vec<f64>,
    ) -> Result<Self> {
        let basis_labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if basis_labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        for (i, label) in basis_labels.iter().enumerate() {
            if basis_labels[..i].contains(label) {
                return Err(Error::DuplicateLabel { index: i });
            }
        }
        if eigenvalues.len() != basis_labels.len() {
            return Err(Error::LengthMismatch {
                expected: basis_labels.len(),
                got: eigenvalues.len(),
            });
        }
        if let Some(index) = eigenvalues.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        Ok(Self {
            basis_labels,
            eigenvalues,
        })
    }

    /// An observable with all eigenvalues distinct (`f(u_i) = i`), so
    /// measuring it fully resolves the basis.
    pub fn nondegenerate<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let basis_labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let eigenvalues = (0..basis_labels.len()).map(|i| i as f64).collect();
        Self::new(basis_labels, eigenvalues)
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, index: usize) -> f64 {
        self.eigenvalues[index]
    }

    /// The eigen-partition: basis indices grouped by eigenvalue, blocks
    /// ordered by ascending eigenvalue. Each block spans one eigenspace.
    pub fn eigen_partition(&self) -> Partition {
        self.eigen_partition_with(&NumericPolicy::DEFAULT)
    }

    pub fn eigen_partition_with(&self, policy: &NumericPolicy) -> Partition {
        let blocks = group_by_value(&self.eigenvalues, policy.value_tol);
        Partition::from_valid_blocks(&self.basis_universe(), blocks)
    }

    /// The equiprobable universe spanned by the basis labels; the home
    /// of eigen-partitions and CSCO joins.
    pub fn basis_universe(&self) -> Arc<FiniteUniverse> {
        Arc::new(
            FiniteUniverse::equiprobable(self.basis_labels.iter().cloned())
                .expect("basis labels are non-empty and distinct"),
        )
    }

    /// Matrix form `diag(λ_i)` in the eigenbasis.
    pub fn matrix(&self) -> SquareMatrix {
        let diag: Vec<Complex64> = self
            .eigenvalues
            .iter()
            .map(|&v| Complex64::new(v, 0.0))
            .collect();
        SquareMatrix::diagonal(&diag)
    }

    pub(crate) fn check_basis(&self, labels: &[String]) -> Result<()> {
        if self.basis_labels != labels {
            return Err(Error::BasisMismatch);
        }
        Ok(())
    }
}

/// One possible result of a projective measurement: the eigenvalue, its
/// Born probability, and the renormalized post-measurement state.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementOutcome {
    pub eigenvalue: f64,
    pub probability: f64,
    pub post_state: StateVector,
}

/// Born probabilities of the eigenspaces: `q_j = ‖P_{B_j} ψ‖²`, one
/// entry `(λ_j, q_j)` per eigenvalue class in ascending order. The
/// probabilities sum to one.
pub fn eigenspace_probabilities(psi: &StateVector, observable: &Observable) -> Result<Vec<(f64, f64)>> {
    eigenspace_probabilities_with(psi, observable, &NumericPolicy::DEFAULT)
}

pub fn eigenspace_probabilities_with(
    psi: &StateVector,
    observable: &Observable,
    policy: &NumericPolicy,
) -> Result<Vec<(f64, f64)>> {
    observable.check_basis(psi.basis_labels())?;
    let partition = observable.eigen_partition_with(policy);
    Ok(partition
        .blocks()
        .iter()
        .map(|block| {
            let q = math::compensated_sum(block.iter().map(|&i| psi.amplitude(i).norm_sqr()));
            (observable.eigenvalue(block[0]), q)
        })
        .collect())
}

/// All measurement outcomes with positive probability, in ascending
/// eigenvalue order. Post-states are the renormalized projections
/// `P_{B_j}ψ / ‖P_{B_j}ψ‖`.
pub fn measurement_outcomes(
    psi: &StateVector,
    observable: &Observable,
) -> Result<Vec<MeasurementOutcome>> {
    measurement_outcomes_with(psi, observable, &NumericPolicy::DEFAULT)
}

pub fn measurement_outcomes_with(
    psi: &StateVector,
    observable: &Observable,
    policy: &NumericPolicy,
) -> Result<Vec<MeasurementOutcome>> {
    observable.check_basis(psi.basis_labels())?;
    let partition = observable.eigen_partition_with(policy);
    let mut outcomes = Vec::new();
    for block in partition.blocks() {
        let q = math::compensated_sum(block.iter().map(|&i| psi.amplitude(i).norm_sqr()));
        if q <= 0.0 {
            continue;
        }
        let mut projected = alloc::vec![Complex64::ZERO; psi.dim()];
        for &i in block {
            projected[i] = psi.amplitude(i);
        }
        let post_state = StateVector::normalized(psi.basis_labels().to_vec(), projected)?;
        outcomes.push(MeasurementOutcome {
            eigenvalue: observable.eigenvalue(block[0]),
            probability: q,
            post_state,
        });
    }
    Ok(outcomes)
}

/// Samples one projective measurement of `ψ` by `F`.
///
/// The eigenvalue `λ_j` is drawn with probability `‖P_{B_j}ψ‖²` using
/// the crate's pinned SplitMix64 generator, so a fixed `rng_seed`
/// always reproduces the same outcome.
pub fn measure_sample(
    psi: &StateVector,
    observable: &Observable,
    rng_seed: u64,
) -> Result<MeasurementOutcome> {
    let mut rng = SplitMix64::new(rng_seed);
    let outcomes = measurement_outcomes(psi, observable)?;
    Ok(draw(&outcomes, &mut rng))
}

/// Samples a sequence of independent measurements of the same prepared
/// state, all driven by one seed. Identical seeds give identical
/// sequences.
pub fn measure_samples(
    psi: &StateVector,
    observable: &Observable,
    rng_seed: u64,
    count: usize,
) -> Result<Vec<MeasurementOutcome>> {
    let mut rng = SplitMix64::new(rng_seed);
    let outcomes = measurement_outcomes(psi, observable)?;
    Ok((0..count).map(|_| draw(&outcomes, &mut rng)).collect())
}

fn draw(outcomes: &[MeasurementOutcome], rng: &mut SplitMix64) -> MeasurementOutcome {
    let u = rng.next_f64();
    let mut cumulative = 0.0;
    for outcome in outcomes {
        cumulative += outcome.probability;
        if u < cumulative {
            return outcome.clone();
        }
    }
    // rounding left the cumulative a hair short of one
    outcomes.last().expect("some outcome has positive probability").clone()
}

/// The quantum Lüders mixture operation `ρ̂ = Σ_j P_{B_j} ρ P_{B_j}`
/// for the eigenspace projectors of `F`: coherences `α_i α_{i′}*` are
/// zeroed exactly when `f(u_i) ≠ f(u_{i′})`, the rest of the matrix is
/// untouched. `ρ` must be expressed in the eigenbasis of `F`.
pub fn quantum_luders(rho: &DensityMatrix, observable: &Observable) -> Result<DensityMatrix> {
    quantum_luders_with(rho, observable, &NumericPolicy::DEFAULT)
}

pub fn quantum_luders_with(
    rho: &DensityMatrix,
    observable: &Observable,
    policy: &NumericPolicy,
) -> Result<DensityMatrix> {
    observable.check_basis(rho.basis_labels())?;
    rho.luders_by_class(observable.eigen_partition_with(policy).class_labels())
}

/// Reference route for the same operation with materialized projectors.
pub fn quantum_luders_via_projectors(
    rho: &DensityMatrix,
    observable: &Observable,
) -> Result<DensityMatrix> {
    observable.check_basis(rho.basis_labels())?;
    rho.luders_via_projectors(observable.eigen_partition().class_labels())
}

/// Quantum logical entropy `h(ρ) = 1 − tr[ρ²]`; zero exactly on pure
/// states. For a measured state it is the probability that two
/// independent measurements of the same preparation disagree.
pub fn quantum_logical_entropy(rho: &DensityMatrix) -> f64 {
    rho.logical_entropy()
}

/// Sum of the squared moduli of the coherences zeroed (decohered) in a
/// Lüders step. For pure `ρ(ψ)` this equals `h(ρ̂)` — measurement's
/// entropy production is exactly the decohered coherence mass.
pub fn decohered_coherence_sum(rho: &DensityMatrix, hatted: &DensityMatrix) -> Result<f64> {
    rho.zeroed_sum(hatted, &NumericPolicy::DEFAULT)
}

pub fn decohered_coherence_sum_with(
    rho: &DensityMatrix,
    hatted: &DensityMatrix,
    policy: &NumericPolicy,
) -> Result<f64> {
    rho.zeroed_sum(hatted, policy)
}

/// The definite eigenvalue of `ψ` under `F`, if any: `Some(λ_j)` iff
/// every basis state in the support of `ψ` has eigenvalue `λ_j`. A
/// definite state is exactly a fixed point of the `F`-Lüders operation.
pub fn is_definite(psi: &StateVector, observable: &Observable) -> Result<Option<f64>> {
    is_definite_with(psi, observable, &NumericPolicy::DEFAULT)
}

pub fn is_definite_with(
    psi: &StateVector,
    observable: &Observable,
    policy: &NumericPolicy,
) -> Result<Option<f64>> {
    observable.check_basis(psi.basis_labels())?;
    let partition = observable.eigen_partition_with(policy);
    let support = psi.support(policy);
    let Some((&first, rest)) = support.split_first() else {
        return Ok(None);
    };
    let class = partition.block_of(first);
    if rest.iter().all(|&i| partition.block_of(i) == class) {
        Ok(Some(observable.eigenvalue(partition.blocks()[class][0])))
    } else {
        Ok(None)
    }
}

/// Joins the eigen-partitions of commuting observables (they share one
/// eigenbasis by construction) and reports whether the join is the
/// discrete partition — i.e. whether the set is a CSCO whose joint
/// eigenvalues label every basis state uniquely.
pub fn csco_join(observables: &[Observable]) -> Result<(Partition, bool)> {
    let mut iter = observables.iter();
    let first = iter.next().ok_or(Error::EmptyList)?;
    for other in iter.clone() {
        other.check_basis(first.basis_labels())?;
    }
    let mut join = first.eigen_partition();
    for other in iter {
        join = join.join(&other.eigen_partition())?;
    }
    let complete = join.is_discrete();
    Ok((join, complete))
}

/// Measures every observable of a CSCO in sequence. The result is the
/// completely decohered diagonal matrix of Born probabilities,
/// independent of the measurement order.
pub fn full_csco_measurement(
    rho: &DensityMatrix,
    observables: &[Observable],
) -> Result<DensityMatrix> {
    full_csco_measurement_with(rho, observables, &NumericPolicy::DEFAULT)
}

pub fn full_csco_measurement_with(
    rho: &DensityMatrix,
    observables: &[Observable],
    policy: &NumericPolicy,
) -> Result<DensityMatrix> {
    let (_, complete) = csco_join(observables)?;
    if !complete {
        return Err(Error::NotACsco);
    }
    let mut state = rho.clone();
    for observable in observables {
        state = quantum_luders_with(&state, observable, policy)?;
    }
    Ok(state)
}

/// Basis labels of a tensor-product space, row-major in the factors.
pub fn product_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter()
        .flat_map(|la| b.iter().map(move |lb| alloc::format!("{la}⊗{lb}")))
        .collect()
}

/// `prefix1, prefix2, …` naming for a subsystem basis.
pub fn default_labels(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| alloc::format!("{prefix}{i}")).collect()
}

/// The correlation observable on a product space with default labels
/// (`a1…a_n` ⊗ `b1…b_n`): eigenvalue `1` on basis pairs with matching
/// indices, `0` otherwise. "Sameness of the indices" is a property a
/// state can have definitely even when neither factor index is
/// definite — the entangled `(|a1⊗b1⟩ + |a2⊗b2⟩)/√2` is definite with
/// value 1 under it.
pub fn correlation_observable(dim_a: usize, dim_b: usize) -> Result<Observable> {
    if dim_a != dim_b {
        return Err(Error::DimensionMismatch {
            left: dim_a,
            right: dim_b,
        });
    }
    let labels = product_labels(&default_labels("a", dim_a), &default_labels("b", dim_b));
    let eigenvalues = (0..dim_a)
        .flat_map(|i| (0..dim_b).map(move |j| if i == j { 1.0 } else { 0.0 }))
        .collect();
    Observable::new(labels, eigenvalues)
}

/// The first-factor index observable on the same product space:
/// eigenvalue `i` on `|a_{i+1} ⊗ b_{j+1}⟩`.
pub fn index_observable_a(dim_a: usize, dim_b: usize) -> Result<Observable> {
    let labels = product_labels(&default_labels("a", dim_a), &default_labels("b", dim_b));
    let eigenvalues = (0..dim_a)
        .flat_map(|i| (0..dim_b).map(move |_| i as f64))
        .collect();
    Observable::new(labels, eigenvalues)
}

/// The second-factor index observable on the same product space.
pub fn index_observable_b(dim_a: usize, dim_b: usize) -> Result<Observable> {
    let labels = product_labels(&default_labels("a", dim_a), &default_labels("b", dim_b));
    let eigenvalues = (0..dim_a)
        .flat_map(|_| (0..dim_b).map(|j| j as f64))
        .collect();
    Observable::new(labels, eigenvalues)
}

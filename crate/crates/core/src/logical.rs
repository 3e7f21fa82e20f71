//! Incidence matrices, classical density matrices, logical entropy,
//! and the classical Lüders mixture operation.
//!
//! A subset `S` has two matrix pictures: the diagonal `I(ΔS)` keeps its
//! elements distinct, while `I(S×S)` blurs them together. Normalizing
//! by the trace (or, with point probabilities, taking the outer product
//! of `|S⟩` with entries `√(p_i/Pr(S))`) turns those pictures into
//! density matrices, and classifying by a partition decoheres exactly
//! the cross-block entries. Logical entropy `h = 1 − tr[ρ²]` prices
//! that decoherence: the total squared modulus of the zeroed entries.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::math;
use crate::partition::{PairRelation, Partition};
use crate::policy::NumericPolicy;
use crate::universe::FiniteUniverse;

/// The 0/1 incidence matrix of a binary relation on the universe:
/// `I(R)_{ij} = 1` iff `(u_i, u_j) ∈ R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    dim: usize,
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn of(relation: &PairRelation) -> Self {
        let dim = relation.universe().size();
        let mut entries = vec![0u8; dim * dim];
        for (i, j) in relation.pairs() {
            entries[i * dim + j] = 1;
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.dim + col]
    }

    pub fn trace(&self) -> usize {
        (0..self.dim).map(|i| usize::from(self.entry(i, i))).sum()
    }

    /// Divides through by the trace, producing the equiprobable density
    /// matrix of the relation (e.g. `ρ(ΔS)` from `I(ΔS)`, `ρ(S)` from
    /// `I(S×S)`). Fails on a traceless matrix, which has no mass to
    /// normalize.
    pub fn normalized_by_trace(&self, universe: &FiniteUniverse) -> Result<DensityMatrix> {
        if universe.size() != self.dim {
            return Err(Error::DimensionMismatch {
                left: universe.size(),
                right: self.dim,
            });
        }
        let trace = self.trace();
        if trace == 0 {
            return Err(Error::EmptySet);
        }
        let scale = 1.0 / trace as f64;
        let entries: Vec<Complex64> = self
            .entries
            .iter()
            .map(|&bit| Complex64::new(f64::from(bit) * scale, 0.0))
            .collect();
        DensityMatrix::from_flat(
            universe.labels().to_vec(),
            entries,
            &NumericPolicy::DEFAULT,
        )
    }
}

/// Incidence matrix of a pair relation (free-function spelling).
pub fn incidence_matrix(relation: &PairRelation) -> IncidenceMatrix {
    IncidenceMatrix::of(relation)
}

/// The pure density matrix of an event: `ρ(S)_{ij} = √(p_i p_j)/Pr(S)`
/// for `u_i, u_j ∈ S` and `0` elsewhere. Diagonal entries are the
/// conditional probabilities `p_i/Pr(S)`.
///
/// Off-diagonal entries are *indistinction amplitudes*: the square of
/// `√(p_i p_j)` is the chance that the ordered pair `(u_i, u_j)` comes
/// up in two independent draws from `U`; the `1/Pr(S)` normalization
/// makes the same reading conditional on landing in `S`.
pub fn density_of_subset(universe: &Arc<FiniteUniverse>, subset: &[usize]) -> Result<DensityMatrix> {
    density_of_subset_with(universe, subset, &NumericPolicy::DEFAULT)
}

pub fn density_of_subset_with(
    universe: &Arc<FiniteUniverse>,
    subset: &[usize],
    policy: &NumericPolicy,
) -> Result<DensityMatrix> {
    let sorted = universe.checked_subset(subset)?;
    if sorted.is_empty() {
        return Err(Error::EmptySet);
    }
    let pr = math::compensated_sum(sorted.iter().map(|&i| universe.probability(i)));
    if pr <= 0.0 {
        return Err(Error::ZeroProbabilityEvent);
    }
    let n = universe.size();
    let mut member = vec![false; n];
    for &i in &sorted {
        member[i] = true;
    }
    let mut entries = vec![Complex64::ZERO; n * n];
    for i in 0..n {
        if !member[i] {
            continue;
        }
        for j in 0..n {
            if !member[j] {
                continue;
            }
            let value = if i == j {
                universe.probability(i) / pr
            } else {
                math::sqrt(universe.probability(i) * universe.probability(j)) / pr
            };
            entries[i * n + j] = Complex64::new(value, 0.0);
        }
    }
    DensityMatrix::from_flat(universe.labels().to_vec(), entries, policy)
}

/// The mixed density matrix of a partition: the probability-weighted
/// sum `ρ(π) = Σ_j Pr(B_j) ρ(B_j)`. Entry `(i, i′)` is non-zero exactly
/// when `(u_i, u_{i′})` is an indistinction of `π` (and has positive
/// mass); `ρ(1_U)` is the diagonal matrix of the point probabilities.
pub fn density_of_partition(partition: &Partition) -> DensityMatrix {
    let universe = partition.universe();
    let n = universe.size();
    let mut entries = vec![Complex64::ZERO; n * n];
    for (j, block) in partition.blocks().iter().enumerate() {
        let pr = partition.block_probability(j);
        if pr <= 0.0 {
            continue; // a massless block contributes nothing
        }
        for &i in block {
            for &k in block {
                let amplitude = if i == k {
                    universe.probability(i)
                } else {
                    math::sqrt(universe.probability(i) * universe.probability(k))
                };
                // Pr(B_j) · √(p_i p_k)/Pr(B_j): the weights cancel
                entries[i * n + k] += Complex64::new(amplitude, 0.0);
            }
        }
    }
    DensityMatrix::from_parts_trusted(universe.labels().to_vec(), entries)
}

/// Logical entropy of a partition, `h(π) = 1 − Σ_j Pr(B_j)²`: the
/// probability that two independent draws from `U` land in different
/// blocks, i.e. produce a distinction of `π`.
pub fn logical_entropy_partition(partition: &Partition) -> f64 {
    let sum = math::compensated_sum(
        (0..partition.block_count()).map(|j| {
            let p = partition.block_probability(j);
            p * p
        }),
    );
    1.0 - sum
}

/// Logical entropy of a density matrix, `h(ρ) = 1 − tr[ρ²]`.
pub fn logical_entropy_density(rho: &DensityMatrix) -> f64 {
    rho.logical_entropy()
}

/// Shannon entropy of a partition in bits: `−Σ_j Pr(B_j) log₂ Pr(B_j)`,
/// with `0·log 0 := 0`. Counts the average yes/no questions needed to
/// name a block rather than the distinctions themselves.
pub fn shannon_entropy_partition(partition: &Partition) -> f64 {
    shannon_entropy(&partition.block_probabilities())
}

/// Shannon entropy of a probability vector in bits.
pub fn shannon_entropy(probabilities: &[f64]) -> f64 {
    let sum = math::compensated_sum(
        probabilities
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| p * math::log2(p)),
    );
    // 0.0 − sum rather than −sum keeps the zero-entropy case at +0.0
    0.0 - sum
}

/// The classical Lüders mixture operation `ρ̂ = Σ_j P_{B_j} ρ P_{B_j}`:
/// classification of `ρ` by the partition `π`. Entry `(i, i′)` survives
/// iff `(u_i, u_{i′})` is an indistinction of `π`; the diagonal is
/// untouched.
pub fn classical_luders(rho: &DensityMatrix, partition: &Partition) -> Result<DensityMatrix> {
    check_universe_dim(rho, partition)?;
    rho.luders_by_class(partition.class_labels())
}

/// The same operation computed literally with materialized projection
/// matrices. Kept as the reference route; `classical_luders` must agree
/// with it entrywise.
pub fn classical_luders_via_projectors(
    rho: &DensityMatrix,
    partition: &Partition,
) -> Result<DensityMatrix> {
    check_universe_dim(rho, partition)?;
    rho.luders_via_projectors(partition.class_labels())
}

fn check_universe_dim(rho: &DensityMatrix, partition: &Partition) -> Result<()> {
    if rho.dim() != partition.universe().size() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: partition.universe().size(),
        });
    }
    Ok(())
}

/// Sum of the squares of the indistinction amplitudes zeroed between a
/// density matrix and its Lüders image: `Σ ‖ρ_{ii′}‖²` over the zeroed
/// entries. For a pure `ρ` this equals `h(ρ̂)` — the decohered mass
/// *is* the logical entropy created by the classification.
pub fn zeroed_amplitude_sum(rho: &DensityMatrix, hatted: &DensityMatrix) -> Result<f64> {
    rho.zeroed_sum(hatted, &NumericPolicy::DEFAULT)
}

pub fn zeroed_amplitude_sum_with(
    rho: &DensityMatrix,
    hatted: &DensityMatrix,
    policy: &NumericPolicy,
) -> Result<f64> {
    rho.zeroed_sum(hatted, policy)
}

//! Randomized verification suites for the two zeroed-amplitude
//! theorems. The same code backs the `verify` subcommand and the
//! acceptance tests, so a reported pass means the shipped binary agrees
//! with the test suite.

use std::sync::Arc;

use ditkit_core::logical::{
    classical_luders, density_of_subset, logical_entropy_density, zeroed_amplitude_sum,
};
use ditkit_core::quantum::{
    decohered_coherence_sum, eigenspace_probabilities, quantum_logical_entropy, quantum_luders,
    Observable,
};
use ditkit_core::{FiniteUniverse, Partition, SplitMix64, StateVector};

use crate::report::VerifyReport;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("u{}", i + 1)).collect()
}

fn random_universe(rng: &mut SplitMix64, n: usize, weighted: bool) -> Arc<FiniteUniverse> {
    if weighted {
        let raw: Vec<f64> = (0..n).map(|_| rng.uniform(0.05, 1.0)).collect();
        let total: f64 = raw.iter().sum();
        let probabilities = raw.iter().map(|x| x / total).collect();
        Arc::new(FiniteUniverse::with_probabilities(labels(n), probabilities).expect("valid"))
    } else {
        Arc::new(FiniteUniverse::equiprobable(labels(n)).expect("valid"))
    }
}

fn random_subset(rng: &mut SplitMix64, n: usize) -> Vec<usize> {
    loop {
        let subset: Vec<usize> = (0..n).filter(|_| rng.next_f64() < 0.5).collect();
        if !subset.is_empty() {
            return subset;
        }
    }
}

fn random_observable(rng: &mut SplitMix64, n: usize) -> Observable {
    let classes = 1 + rng.below(n);
    let eigenvalues = (0..n).map(|_| rng.below(classes) as f64).collect();
    Observable::new(labels(n), eigenvalues).expect("valid")
}

/// Classical suite: on random weighted universes, random events and
/// random partitions, the mass zeroed by the Lüders classification of
/// the pure event density must equal the logical entropy it creates.
pub fn run_theorem1(trials: usize, seed: u64, max_dim: usize, tolerance: f64) -> VerifyReport {
    let mut rng = SplitMix64::new(seed);
    let mut max_residual = 0.0_f64;
    let mut failures = 0usize;
    for trial in 0..trials {
        let n = 2 + rng.below(max_dim.saturating_sub(1).max(1));
        let universe = random_universe(&mut rng, n, trial % 2 == 0);
        let subset = random_subset(&mut rng, n);
        let partition = Partition::random(&universe, &mut rng);
        let rho = density_of_subset(&universe, &subset).expect("non-empty positive event");
        let hatted = classical_luders(&rho, &partition).expect("same universe");
        let zeroed = zeroed_amplitude_sum(&rho, &hatted).expect("conformal by construction");
        let residual = (zeroed - logical_entropy_density(&hatted)).abs();
        max_residual = max_residual.max(residual);
        if !(residual < tolerance) {
            failures += 1;
        }
    }
    VerifyReport {
        theorem: "theorem1".to_string(),
        trials,
        seed,
        max_dim,
        tolerance,
        max_residual,
        max_disagreement_residual: None,
        failures,
        ok: failures == 0,
    }
}

/// Quantum suite: on random complex states and random eigenvalue
/// functions, the decohered coherence mass must equal `h(ρ̂)`, and
/// `h(ρ̂)` must equal the probability that two independent measurements
/// disagree, `Σ_{j≠k} q_j q_k`.
pub fn run_theorem2(trials: usize, seed: u64, max_dim: usize, tolerance: f64) -> VerifyReport {
    let mut rng = SplitMix64::new(seed);
    let mut max_residual = 0.0_f64;
    let mut max_disagreement = 0.0_f64;
    let mut failures = 0usize;
    for _ in 0..trials {
        let dim = 2 + rng.below(max_dim.saturating_sub(1).max(1));
        let psi = StateVector::random(labels(dim), &mut rng).expect("non-zero draw");
        let observable = random_observable(&mut rng, dim);
        let rho = psi.density();
        let hatted = quantum_luders(&rho, &observable).expect("same basis");
        let entropy = quantum_logical_entropy(&hatted);

        let decohered =
            decohered_coherence_sum(&rho, &hatted).expect("conformal by construction");
        let residual = (decohered - entropy).abs();
        max_residual = max_residual.max(residual);

        let q: Vec<f64> = eigenspace_probabilities(&psi, &observable)
            .expect("same basis")
            .into_iter()
            .map(|(_, q)| q)
            .collect();
        let mut disagreement = 0.0;
        for (j, qj) in q.iter().enumerate() {
            for (k, qk) in q.iter().enumerate() {
                if j != k {
                    disagreement += qj * qk;
                }
            }
        }
        let disagreement_residual = (entropy - disagreement).abs();
        max_disagreement = max_disagreement.max(disagreement_residual);

        if !(residual < tolerance && disagreement_residual < tolerance) {
            failures += 1;
        }
    }
    VerifyReport {
        theorem: "theorem2".to_string(),
        trials,
        seed,
        max_dim,
        tolerance,
        max_residual,
        max_disagreement_residual: Some(max_disagreement),
        failures,
        ok: failures == 0,
    }
}

//! Shared random-instance generators for the law suites.

use std::sync::Arc;

use ditkit_core::quantum::Observable;
use ditkit_core::{FiniteUniverse, Partition, SplitMix64, StateVector};

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("u{}", i + 1)).collect()
}

/// A universe of size `n`; weighted draws use strictly positive masses
/// so every non-empty event has positive probability.
pub fn random_universe(rng: &mut SplitMix64, n: usize, weighted: bool) -> Arc<FiniteUniverse> {
    if weighted {
        let raw: Vec<f64> = (0..n).map(|_| rng.uniform(0.05, 1.0)).collect();
        let total: f64 = raw.iter().sum();
        let probabilities = raw.iter().map(|x| x / total).collect();
        Arc::new(FiniteUniverse::with_probabilities(labels(n), probabilities).unwrap())
    } else {
        Arc::new(FiniteUniverse::equiprobable(labels(n)).unwrap())
    }
}

pub fn random_subset(rng: &mut SplitMix64, n: usize) -> Vec<usize> {
    loop {
        let subset: Vec<usize> = (0..n).filter(|_| rng.next_f64() < 0.5).collect();
        if !subset.is_empty() {
            return subset;
        }
    }
}

pub fn random_partition(rng: &mut SplitMix64, universe: &Arc<FiniteUniverse>) -> Partition {
    Partition::random(universe, rng)
}

pub fn random_state(rng: &mut SplitMix64, n: usize) -> StateVector {
    StateVector::random(labels(n), rng).unwrap()
}

/// An observable over `labels(n)` whose eigenvalue function takes small
/// integer values, so eigenvalue classes are unambiguous.
pub fn random_observable(rng: &mut SplitMix64, n: usize) -> Observable {
    let classes = 1 + rng.below(n);
    let eigenvalues: Vec<f64> = (0..n).map(|_| rng.below(classes) as f64).collect();
    Observable::new(labels(n), eigenvalues).unwrap()
}

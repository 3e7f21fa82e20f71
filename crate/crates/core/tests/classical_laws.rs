//! Laws of the classical density layer: the zeroed-amplitude theorem,
//! entropy consistency, and the algebra of the Lüders operation.

mod common;

use approx::assert_abs_diff_eq;

use common::{random_partition, random_subset, random_universe};
use ditkit_core::logical::{
    classical_luders, classical_luders_via_projectors, density_of_partition, density_of_subset,
    logical_entropy_density, logical_entropy_partition, zeroed_amplitude_sum,
};
use ditkit_core::{Partition, SplitMix64};

/// The zeroed-amplitude theorem on random instances: classifying the
/// pure density of a random event by a random partition creates exactly
/// as much logical entropy as the squared mass of the zeroed entries.
#[test]
fn zeroed_amplitude_sum_equals_entropy_of_the_mixture() {
    let mut rng = SplitMix64::new(0xc1a5);
    for trial in 0..400 {
        let n = 2 + rng.below(7);
        let u = random_universe(&mut rng, n, trial % 2 == 0);
        let s = random_subset(&mut rng, n);
        let p = random_partition(&mut rng, &u);
        let rho = density_of_subset(&u, &s).unwrap();
        let hatted = classical_luders(&rho, &p).unwrap();
        let zeroed = zeroed_amplitude_sum(&rho, &hatted).unwrap();
        let entropy = logical_entropy_density(&hatted);
        assert!(
            (zeroed - entropy).abs() < 1e-10,
            "trial {trial}: zeroed {zeroed} vs h(ρ̂) {entropy}"
        );
    }
}

/// The two density-matrix definitions of logical entropy agree with the
/// block-probability formula.
#[test]
fn partition_entropy_consistency() {
    let mut rng = SplitMix64::new(0x10d1);
    for trial in 0..300 {
        let n = 2 + rng.below(7);
        let u = random_universe(&mut rng, n, trial % 2 == 0);
        let p = random_partition(&mut rng, &u);
        let from_blocks = logical_entropy_partition(&p);
        let from_density = logical_entropy_density(&density_of_partition(&p));
        assert_abs_diff_eq!(from_blocks, from_density, epsilon = 1e-12);
    }
}

/// Two-draw reading, exact at the integer level: for equiprobable
/// points the entropy is the fraction of ordered pairs that are dits.
#[test]
fn two_draw_semantics_exact_rational() {
    let mut rng = SplitMix64::new(0x2d4a);
    for _ in 0..300 {
        let n = 2 + rng.below(7);
        let u = random_universe(&mut rng, n, false);
        let p = random_partition(&mut rng, &u);
        // integer identity: |dit| = n² − Σ|B_j|²
        let block_square_sum: usize = p.blocks().iter().map(|b| b.len() * b.len()).sum();
        assert_eq!(p.dit_set().len(), n * n - block_square_sum);
        let fraction = p.dit_set().len() as f64 / (n * n) as f64;
        assert_abs_diff_eq!(logical_entropy_partition(&p), fraction, epsilon = 1e-12);
    }
}

#[test]
fn luders_is_idempotent_and_preserves_diagonals() {
    let mut rng = SplitMix64::new(0x1de3);
    for trial in 0..300 {
        let n = 2 + rng.below(7);
        let u = random_universe(&mut rng, n, true);
        let rho = if trial % 2 == 0 {
            density_of_subset(&u, &random_subset(&mut rng, n)).unwrap()
        } else {
            density_of_partition(&random_partition(&mut rng, &u))
        };
        let p = random_partition(&mut rng, &u);
        let once = classical_luders(&rho, &p).unwrap();
        let twice = classical_luders(&once, &p).unwrap();
        assert!(once.entrywise_eq(&twice, 1e-10));
        assert_eq!(once.diagonal_entries(), rho.diagonal_entries());
    }
}

/// Classification never increases purity, so logical entropy never
/// decreases under the Lüders operation.
#[test]
fn luders_purity_monotonicity() {
    let mut rng = SplitMix64::new(0x9013);
    for _ in 0..300 {
        let n = 2 + rng.below(7);
        let u = random_universe(&mut rng, n, true);
        let rho = density_of_subset(&u, &random_subset(&mut rng, n)).unwrap();
        let p = random_partition(&mut rng, &u);
        let hatted = classical_luders(&rho, &p).unwrap();
        assert!(hatted.purity() <= rho.purity() + 1e-12);
    }
}

/// Classifying by a join is classifying by the operands in sequence.
#[test]
fn luders_composes_along_joins() {
    let mut rng = SplitMix64::new(0x70a3);
    for _ in 0..300 {
        let n = 2 + rng.below(7);
        let u = random_universe(&mut rng, n, true);
        let rho = density_of_subset(&u, &random_subset(&mut rng, n)).unwrap();
        let p = random_partition(&mut rng, &u);
        let q = random_partition(&mut rng, &u);
        let by_join = classical_luders(&rho, &p.join(&q).unwrap()).unwrap();
        let sequential =
            classical_luders(&classical_luders(&rho, &p).unwrap(), &q).unwrap();
        assert!(by_join.entrywise_eq(&sequential, 1e-10));
    }
}

/// The mask fast path must match the materialized projector sandwich
/// entrywise — two routes to the same operation.
#[test]
fn mask_route_equals_projector_route() {
    let mut rng = SplitMix64::new(0xfa57);
    for _ in 0..200 {
        let n = 2 + rng.below(7);
        let u = random_universe(&mut rng, n, true);
        let rho = density_of_subset(&u, &random_subset(&mut rng, n)).unwrap();
        let p = random_partition(&mut rng, &u);
        let fast = classical_luders(&rho, &p).unwrap();
        let slow = classical_luders_via_projectors(&rho, &p).unwrap();
        assert_eq!(fast.max_entry_diff(&slow).unwrap(), 0.0);
    }
}

/// Classifying the blob by π lands exactly on ρ(π).
#[test]
fn classifying_the_blob_gives_the_partition_density() {
    let mut rng = SplitMix64::new(0xb10b);
    for _ in 0..200 {
        let n = 2 + rng.below(7);
        let u = random_universe(&mut rng, n, true);
        let whole: Vec<usize> = (0..n).collect();
        let blob = density_of_subset(&u, &whole).unwrap();
        let p = random_partition(&mut rng, &u);
        let classified = classical_luders(&blob, &p).unwrap();
        assert!(classified.entrywise_eq(&density_of_partition(&p), 1e-12));
        // and the blob itself is the density of the indiscrete partition
        let blob_again = density_of_partition(&Partition::indiscrete(&u));
        assert!(blob.entrywise_eq(&blob_again, 1e-15));
    }
}

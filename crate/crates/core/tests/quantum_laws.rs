//! Laws of the quantum layer: the decohered-coherence theorem, the
//! two-measurement reading of entropy, definiteness as fixed-pointness,
//! unitary invariance, and agreement with the classical layer on
//! real-amplitude states.

mod common;

use approx::assert_abs_diff_eq;
use num_complex::Complex64;

use common::{labels, random_observable, random_partition, random_state, random_subset, random_universe};
use ditkit_core::logical::{classical_luders, density_of_subset};
use ditkit_core::quantum::{
    decohered_coherence_sum, eigenspace_probabilities, evolution_matrix, is_definite,
    measure_samples, quantum_logical_entropy, quantum_luders, quantum_luders_via_projectors,
    unitary_evolve, von_neumann_entropy, Hamiltonian, Observable,
};
use ditkit_core::{SplitMix64, StateVector};

/// Decohered-coherence theorem on random complex states: the squared
/// mass zeroed by measurement equals the logical entropy it creates.
#[test]
fn decohered_coherence_sum_equals_entropy_of_the_mixture() {
    let mut rng = SplitMix64::new(0x7e02);
    for trial in 0..400 {
        let dim = 2 + rng.below(7);
        let psi = random_state(&mut rng, dim);
        let f = random_observable(&mut rng, dim);
        let rho = psi.density();
        let hatted = quantum_luders(&rho, &f).unwrap();
        let decohered = decohered_coherence_sum(&rho, &hatted).unwrap();
        let entropy = quantum_logical_entropy(&hatted);
        assert!(
            (decohered - entropy).abs() < 1e-10,
            "trial {trial}: decohered {decohered} vs h(ρ̂) {entropy}"
        );
    }
}

/// h(ρ̂) is the probability that two independent measurements of the
/// same preparation give different eigenvalues: Σ_{j≠k} q_j q_k.
#[test]
fn entropy_is_the_two_measurement_difference_probability() {
    let mut rng = SplitMix64::new(0x2b2b);
    for _ in 0..400 {
        let dim = 2 + rng.below(7);
        let psi = random_state(&mut rng, dim);
        let f = random_observable(&mut rng, dim);
        let hatted = quantum_luders(&psi.density(), &f).unwrap();
        let q: Vec<f64> = eigenspace_probabilities(&psi, &f)
            .unwrap()
            .into_iter()
            .map(|(_, q)| q)
            .collect();
        let mut different = 0.0;
        for (j, qj) in q.iter().enumerate() {
            for (k, qk) in q.iter().enumerate() {
                if j != k {
                    different += qj * qk;
                }
            }
        }
        assert!(
            (quantum_logical_entropy(&hatted) - different).abs() < 1e-10,
            "h(ρ̂) must equal the disagreement probability"
        );
    }
}

#[test]
fn quantum_luders_is_idempotent_and_routes_agree() {
    let mut rng = SplitMix64::new(0x1d3b);
    for _ in 0..300 {
        let dim = 2 + rng.below(7);
        let psi = random_state(&mut rng, dim);
        let f = random_observable(&mut rng, dim);
        let rho = psi.density();
        let once = quantum_luders(&rho, &f).unwrap();
        let twice = quantum_luders(&once, &f).unwrap();
        assert!(once.entrywise_eq(&twice, 1e-10));
        let slow = quantum_luders_via_projectors(&rho, &f).unwrap();
        assert_eq!(once.max_entry_diff(&slow).unwrap(), 0.0);
    }
}

/// Purity can only fall under measurement; both logical and Von Neumann
/// entropy are non-decreasing.
#[test]
fn measurement_monotonicity_for_both_entropies() {
    let mut rng = SplitMix64::new(0x3a3a);
    for _ in 0..100 {
        let dim = 2 + rng.below(7);
        let psi = random_state(&mut rng, dim);
        let f = random_observable(&mut rng, dim);
        let rho = psi.density();
        let hatted = quantum_luders(&rho, &f).unwrap();
        assert!(hatted.purity() <= rho.purity() + 1e-12);
        let vn_before = von_neumann_entropy(&rho).unwrap();
        let vn_after = von_neumann_entropy(&hatted).unwrap();
        assert!(
            vn_after >= vn_before - 1e-9,
            "Von Neumann entropy decreased: {vn_before} -> {vn_after}"
        );
    }
}

/// Evolution preserves every indistinctness amplitude, hence entropy.
#[test]
fn unitary_invariance_of_inner_products_and_entropy() {
    let mut rng = SplitMix64::new(0x0e11);
    for _ in 0..300 {
        let dim = 2 + rng.below(7);
        let names = labels(dim);
        let eigenvalues: Vec<f64> = (0..dim).map(|_| rng.uniform(-3.0, 3.0)).collect();
        let h = Hamiltonian::from_eigenvalues(names.clone(), eigenvalues).unwrap();
        let t = rng.uniform(-5.0, 5.0);
        let phi = random_state(&mut rng, dim);
        let psi = random_state(&mut rng, dim);

        let before = phi.inner_product(&psi).unwrap();
        let after = unitary_evolve(&phi, &h, t)
            .unwrap()
            .inner_product(&unitary_evolve(&psi, &h, t).unwrap())
            .unwrap();
        assert!((before - after).norm() < 1e-10);

        // entropy of a mixed state is untouched by conjugation
        let f = random_observable(&mut rng, dim);
        let mixed = quantum_luders(&psi.density(), &f).unwrap();
        let rotated = mixed.conjugate_by(&evolution_matrix(&h, t)).unwrap();
        assert!(
            (quantum_logical_entropy(&rotated) - quantum_logical_entropy(&mixed)).abs() < 1e-10
        );
    }
}

/// A state is definite for F exactly when the F-measurement leaves its
/// density matrix untouched.
#[test]
fn definiteness_iff_luders_fixed_point() {
    let mut rng = SplitMix64::new(0xdef1);
    for trial in 0..400 {
        let dim = 2 + rng.below(7);
        let names = labels(dim);
        let f = random_observable(&mut rng, dim);
        // alternate generic states with states built inside one eigenspace
        let psi = if trial % 2 == 0 {
            random_state(&mut rng, dim)
        } else {
            let partition = f.eigen_partition();
            let block = &partition.blocks()[rng.below(partition.block_count())];
            let mut amplitudes = vec![Complex64::ZERO; dim];
            for &i in block {
                amplitudes[i] = Complex64::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            }
            match StateVector::normalized(names.clone(), amplitudes) {
                Ok(state) => state,
                Err(_) => continue,
            }
        };
        let rho = psi.density();
        let hatted = quantum_luders(&rho, &f).unwrap();
        let definite = is_definite(&psi, &f).unwrap();
        let fixed_point = hatted.entrywise_eq(&rho, 1e-10);
        assert_eq!(
            definite.is_some(),
            fixed_point,
            "trial {trial}: definite={definite:?} fixed_point={fixed_point}"
        );
        if let Some(value) = definite {
            // the definite value is the eigenvalue of the support block
            let support = psi.support(&ditkit_core::NumericPolicy::DEFAULT);
            assert!(support.iter().all(|&i| f.eigenvalue(i) == value));
        }
    }
}

/// Empirical frequencies of sampled measurements stay inside a 3σ band
/// of the eigenspace Born probabilities.
#[test]
fn sampling_frequencies_track_eigenspace_probabilities() {
    let mut rng = SplitMix64::new(0x5a5a);
    for trial in 0..10 {
        let dim = 2 + rng.below(7);
        let psi = random_state(&mut rng, dim);
        let f = random_observable(&mut rng, dim);
        let distribution = eigenspace_probabilities(&psi, &f).unwrap();
        let n = 10_000usize;
        let samples = measure_samples(&psi, &f, 1000 + trial, n).unwrap();
        for (eigenvalue, q) in distribution {
            let count = samples
                .iter()
                .filter(|o| o.eigenvalue == eigenvalue)
                .count() as f64;
            let sigma = (n as f64 * q * (1.0 - q)).sqrt();
            assert!(
                (count - n as f64 * q).abs() <= 3.0 * sigma.max(1.0),
                "trial {trial}: eigenvalue {eigenvalue} count {count} expected {}",
                n as f64 * q
            );
        }
    }
}

/// Real non-negative amplitudes √(p_i/Pr(S)) reproduce the classical
/// event density and its Lüders images entrywise.
#[test]
fn classical_embedding_of_event_densities() {
    let mut rng = SplitMix64::new(0xc1a2);
    for _ in 0..200 {
        let n = 2 + rng.below(7);
        let u = random_universe(&mut rng, n, true);
        let s = random_subset(&mut rng, n);
        let pr = u.event_probability(&s).unwrap();
        let mut amplitudes = vec![Complex64::ZERO; n];
        for &i in &s {
            amplitudes[i] = Complex64::new((u.probability(i) / pr).sqrt(), 0.0);
        }
        let psi = StateVector::normalized(u.labels().to_vec(), amplitudes).unwrap();
        let quantum_rho = psi.density();
        let classical_rho = density_of_subset(&u, &s).unwrap();
        assert!(quantum_rho.entrywise_eq(&classical_rho, 1e-12));

        let p = random_partition(&mut rng, &u);
        let f = Observable::new(
            u.labels().to_vec(),
            p.class_labels().iter().map(|&b| b as f64).collect(),
        )
        .unwrap();
        let quantum_hat = quantum_luders(&quantum_rho, &f).unwrap();
        let classical_hat = classical_luders(&classical_rho, &p).unwrap();
        assert!(quantum_hat.entrywise_eq(&classical_hat, 1e-12));
    }
}

/// The entangled two-party state is not a tensor product of factor
/// states: its 2×2 amplitude matrix has rank 2, while every product
/// state's amplitude matrix has rank 1 (vanishing determinant).
#[test]
fn entangled_state_is_not_a_product() {
    const S: f64 = std::f64::consts::FRAC_1_SQRT_2;
    let product_basis = ["a1⊗b1", "a1⊗b2", "a2⊗b1", "a2⊗b2"];
    let entangled = StateVector::new(
        product_basis,
        vec![
            Complex64::new(S, 0.0),
            Complex64::ZERO,
            Complex64::ZERO,
            Complex64::new(S, 0.0),
        ],
    )
    .unwrap();
    let det = entangled.amplitude(0) * entangled.amplitude(3)
        - entangled.amplitude(1) * entangled.amplitude(2);
    assert_abs_diff_eq!(det.norm(), 0.5, epsilon = 1e-12);

    // every actual tensor product has a rank-1 amplitude matrix
    let mut rng = SplitMix64::new(0xab);
    for _ in 0..100 {
        let a = StateVector::random(["a1", "a2"], &mut rng).unwrap();
        let b = StateVector::random(["b1", "b2"], &mut rng).unwrap();
        let product = a.tensor(&b).unwrap();
        let det = product.amplitude(0) * product.amplitude(3)
            - product.amplitude(1) * product.amplitude(2);
        assert!(det.norm() < 1e-12);
    }
}

/// Eigenspace probabilities sum to one and match the blockwise Born sums.
#[test]
fn eigenspace_probabilities_are_a_distribution() {
    let mut rng = SplitMix64::new(0x900d);
    for _ in 0..200 {
        let dim = 2 + rng.below(7);
        let psi = random_state(&mut rng, dim);
        let f = random_observable(&mut rng, dim);
        let distribution = eigenspace_probabilities(&psi, &f).unwrap();
        let total: f64 = distribution.iter().map(|(_, q)| q).sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
        let born = psi.born_probabilities();
        for (eigenvalue, q) in distribution {
            let blockwise: f64 = (0..dim)
                .filter(|&i| f.eigenvalue(i) == eigenvalue)
                .map(|i| born[i])
                .sum();
            assert_abs_diff_eq!(q, blockwise, epsilon = 1e-12);
        }
    }
}

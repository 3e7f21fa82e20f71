//! Finite-dimensional quantum states, observables, measurement,
//! entropies, and unitary evolution.

mod eigen;
mod evolve;
mod observable;
mod state;

pub use eigen::{hermitian_eigenvalues, hermitian_eigenvalues_with, von_neumann_entropy, von_neumann_entropy_with};
pub use evolve::{beam_splitter_unitary, evolution_matrix, unitary_evolve, Hamiltonian};
pub use observable::{
    correlation_observable, csco_join, decohered_coherence_sum, decohered_coherence_sum_with,
    default_labels, eigenspace_probabilities, eigenspace_probabilities_with,
    full_csco_measurement, full_csco_measurement_with, index_observable_a, index_observable_b,
    is_definite, is_definite_with, measure_sample, measure_samples, measurement_outcomes,
    measurement_outcomes_with, product_labels, quantum_logical_entropy, quantum_luders,
    quantum_luders_via_projectors, quantum_luders_with, MeasurementOutcome, Observable,
};
pub use state::StateVector;

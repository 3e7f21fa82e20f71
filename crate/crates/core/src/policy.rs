//! The numeric-policy record: every tolerance in one place.

/// Tolerances and caps used by validation and comparison routines.
///
/// The math here is exact; floating arithmetic needs declared slack.
/// Functions whose result depends on a tolerance come in two flavours:
/// a plain one using [`NumericPolicy::default`] and a `_with` variant
/// taking an explicit policy. There is no global state: a policy is
/// always an ordinary value passed by reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericPolicy {
    /// Entrywise density-matrix comparison tolerance (conformal-pair
    /// classification, definiteness checks, fixed-point tests).
    pub entry_tol: f64,
    /// Tolerance for trace-one, Hermiticity, unit-norm, and probability
    /// sum checks.
    pub trace_tol: f64,
    /// Permitted negative dip of `re(x†ρx)` in the positive-semidefinite
    /// probe check.
    pub psd_slack: f64,
    /// Number of random probe vectors in the PSD check. The check is a
    /// guard against malformed input, not an eigensolver.
    pub psd_probes: usize,
    /// Seed of the probe-vector generator, fixed so validation is a
    /// pure function of its input.
    pub psd_probe_seed: u64,
    /// Absolute tolerance when grouping floating attribute values or
    /// eigenvalues into classes. Values given as exact numerals group
    /// exactly; values closer than this merge into one class.
    pub value_tol: f64,
    /// Amplitudes at or below this magnitude do not count as support.
    pub support_tol: f64,
    /// Cap on universe size and matrix dimension. Pair enumeration and
    /// the dense eigensolver are O(n²)–O(n³); the kit is desk-scale by
    /// design.
    pub max_dimension: usize,
    /// Off-diagonal Frobenius-norm threshold at which the cyclic Jacobi
    /// eigensolver declares convergence.
    pub eigen_tol: f64,
    /// Sweep limit for the eigensolver before reporting failure.
    pub eigen_max_sweeps: usize,
}

impl NumericPolicy {
    pub const DEFAULT: NumericPolicy = NumericPolicy {
        entry_tol: 1e-10,
        trace_tol: 1e-12,
        psd_slack: 1e-10,
        psd_probes: 32,
        psd_probe_seed: 0x9e37_79b9_7f4a_7c15,
        value_tol: 1e-9,
        support_tol: 1e-12,
        max_dimension: 64,
        eigen_tol: 1e-12,
        eigen_max_sweeps: 64,
    };

    /// Same policy with a different entrywise tolerance; the CLI's
    /// `--tolerance` flag maps to this.
    #[must_use]
    pub fn with_entry_tol(mut self, tol: f64) -> Self {
        self.entry_tol = tol;
        self
    }
}

impl Default for NumericPolicy {
    fn default() -> Self {
        Self::DEFAULT
    }
}

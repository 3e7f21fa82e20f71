//! Report structures emitted by the subcommands, plus table rendering.
//!
//! Reports serialize to JSON by default; `--table` renders the same
//! data as aligned text. Identical inputs always produce byte-identical
//! output: the report types use ordered maps and fixed field order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::io::{DensityDoc, MeasurementDoc, StateDoc};

/// Entropy report: logical always, Shannon for block/diagonal
/// distributions, Von Neumann for density inputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntropyReport {
    pub logical: f64,
    pub shannon: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub von_neumann: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistributionEntry {
    pub eigenvalue: f64,
    pub probability: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrequencyEntry {
    pub eigenvalue: f64,
    pub count: usize,
    pub frequency: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleReport {
    pub seed: u64,
    pub count: usize,
    pub frequencies: Vec<FrequencyEntry>,
    /// The first sampled outcome in full, as a measurement record.
    pub first_outcome: MeasurementDoc,
}

/// Report of the `measure` subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureReport {
    pub distribution: Vec<DistributionEntry>,
    pub post_density: DensityDoc,
    pub logical_entropy: f64,
    /// |decohered coherence mass − h(ρ̂)|; bounded by the tolerance.
    pub theorem_residual: f64,
    /// The definite eigenvalue, when the state lies in one eigenspace.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub definite: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<SampleReport>,
}

/// Report of the `luders` subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LudersReport {
    pub density: DensityDoc,
    pub logical_entropy_before: f64,
    pub logical_entropy_after: f64,
    pub zeroed_amplitude_sum: f64,
    /// |zeroed mass − (h_after − h_before)|; bounded by the tolerance.
    pub residual: f64,
}

/// Report of the `join` subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JoinReport {
    pub blocks: Vec<Vec<usize>>,
    /// Whether the join is the discrete partition.
    pub complete: bool,
}

/// Report of the `evolve` subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvolveReport {
    pub state: StateDoc,
    pub norm: f64,
}

/// One step of a scenario pipeline with its entropy reading.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioStep {
    pub name: String,
    pub logical_entropy: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Canned-scenario report: parameters in, distributions out, with the
/// entropy trace of each pipeline step and the formula behind every
/// reported quantity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub entropy_trace: Vec<ScenarioStep>,
    /// Named outcome distributions, each summing to one.
    pub distributions: BTreeMap<String, Vec<f64>>,
    /// Named scalar results (e.g. a single path probability).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, f64>,
    /// Formula path behind each reported number.
    pub provenance: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Report of the `verify` subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub trials: usize,
    pub seed: u64,
    pub max_dim: usize,
    pub tolerance: f64,
    pub max_residual: f64,
    /// Largest residual of the two-measurement probability identity
    /// (second check of the quantum suite).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_disagreement_residual: Option<f64>,
    pub failures: usize,
    pub ok: bool,
}

/// Renders a report as aligned `key  value` lines.
pub trait Table {
    fn table(&self) -> String;
}

fn row(key: &str, value: impl std::fmt::Display) -> String {
    format!("{key:<28}{value}\n")
}

impl Table for EntropyReport {
    fn table(&self) -> String {
        let mut out = String::new();
        out += &row("logical", self.logical);
        out += &row("shannon", self.shannon);
        if let Some(vn) = self.von_neumann {
            out += &row("von_neumann", vn);
        }
        out
    }
}

impl Table for MeasureReport {
    fn table(&self) -> String {
        let mut out = String::from("eigenvalue                  probability\n");
        for entry in &self.distribution {
            out += &row(&format!("{}", entry.eigenvalue), entry.probability);
        }
        out += &row("logical_entropy", self.logical_entropy);
        out += &row("theorem_residual", format!("{:e}", self.theorem_residual));
        match self.definite {
            Some(value) => out += &row("definite", value),
            None => out += &row("definite", "no (indefinite state)"),
        }
        if let Some(samples) = &self.samples {
            out += &row("samples", samples.count);
            out += &row("seed", samples.seed);
            for entry in &samples.frequencies {
                out += &row(
                    &format!("freq[{}]", entry.eigenvalue),
                    format!("{} ({})", entry.count, entry.frequency),
                );
            }
        }
        out
    }
}

impl Table for LudersReport {
    fn table(&self) -> String {
        let mut out = String::new();
        out += &row("logical_entropy_before", self.logical_entropy_before);
        out += &row("logical_entropy_after", self.logical_entropy_after);
        out += &row("zeroed_amplitude_sum", self.zeroed_amplitude_sum);
        out += &row("residual", format!("{:e}", self.residual));
        out
    }
}

impl Table for JoinReport {
    fn table(&self) -> String {
        let mut out = String::new();
        for (j, block) in self.blocks.iter().enumerate() {
            out += &row(&format!("block {j}"), format!("{block:?}"));
        }
        out += &row("complete", self.complete);
        out
    }
}

impl Table for EvolveReport {
    fn table(&self) -> String {
        let mut out = String::from("basis        re                      im\n");
        for (i, label) in self.state.basis.iter().enumerate() {
            out += &format!(
                "{label:<13}{:<24}{}\n",
                self.state.re[i], self.state.im[i]
            );
        }
        out += &row("norm", self.norm);
        out
    }
}

impl Table for ScenarioReport {
    fn table(&self) -> String {
        let mut out = String::new();
        out += &row("scenario", &self.scenario);
        for (key, value) in &self.parameters {
            out += &row(key, value);
        }
        out += "\nstep                        logical_entropy\n";
        for step in &self.entropy_trace {
            out += &row(&step.name, step.logical_entropy);
        }
        for (name, distribution) in &self.distributions {
            out += &format!("\n{name}:\n");
            for (i, p) in distribution.iter().enumerate() {
                out += &row(&format!("  [{i}]"), p);
            }
        }
        for (name, value) in &self.values {
            out += &row(name, value);
        }
        for note in &self.notes {
            out += &format!("note: {note}\n");
        }
        out
    }
}

impl Table for VerifyReport {
    fn table(&self) -> String {
        let mut out = String::new();
        out += &row("theorem", &self.theorem);
        out += &row("trials", self.trials);
        out += &row("seed", self.seed);
        out += &row("max_dim", self.max_dim);
        out += &row("tolerance", format!("{:e}", self.tolerance));
        out += &row("max_residual", format!("{:e}", self.max_residual));
        if let Some(second) = self.max_disagreement_residual {
            out += &row("max_disagreement_residual", format!("{second:e}"));
        }
        out += &row("failures", self.failures);
        out += &row("ok", self.ok);
        out
    }
}

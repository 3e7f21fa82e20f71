//! JSON document schemas and conversions to the core types.
//!
//! All indices are 0-based. Documents:
//!
//! * universe    `{ "labels": [...], "probabilities": [...]? }`
//! * partition   `{ "blocks": [[indices], ...] }`
//! * attribute   `{ "values": [...] }`
//! * density     `{ "dim": n, "re": [[...]], "im": [[...]] }`
//! * state       `{ "basis": [...], "re": [...], "im": [...] }`
//! * observable  `{ "basis": [...], "eigenvalues": [...] }`
//! * measurement `{ "eigenvalue": x, "probability": p, "post_state": {...} }`
//! * set ket     `{ "support": [indices] }`

use std::io::Read;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use ditkit_core::quantum::{MeasurementOutcome, Observable};
use ditkit_core::{
    Complex64, DensityMatrix, FiniteUniverse, NumericPolicy, Partition, StateVector,
};

use crate::error::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UniverseDoc {
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probabilities: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AttributeDoc {
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityDoc {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
    /// Optional basis names; `u1..un` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateDoc {
    pub basis: Vec<String>,
    pub re: Vec<f64>,
    #[serde(default)]
    pub im: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObservableDoc {
    pub basis: Vec<String>,
    pub eigenvalues: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasurementDoc {
    pub eigenvalue: f64,
    pub probability: f64,
    pub post_state: StateDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetKetDoc {
    pub support: Vec<usize>,
}

/// Input document of the `entropy` subcommand: either a universe with a
/// partition (or attribute), or a density matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntropyInputDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universe: Option<UniverseDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attribute: Option<AttributeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<DensityDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AmplitudesDoc {
    pub re: Vec<f64>,
    #[serde(default)]
    pub im: Vec<f64>,
}

/// Reads a file, or stdin when `path` is `-`.
pub fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| CliError::Io(e.to_string()))?;
        Ok(buffer)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
    }
}

pub fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    Ok(serde_json::from_str(text)?)
}

pub fn load<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, CliError> {
    parse(&read_input(path)?)
}

pub fn to_universe(doc: &UniverseDoc, policy: &NumericPolicy) -> Result<Arc<FiniteUniverse>, CliError> {
    Ok(Arc::new(FiniteUniverse::new(
        doc.labels.iter().cloned(),
        doc.probabilities.clone(),
        policy,
    )?))
}

pub fn to_partition(
    doc: &PartitionDoc,
    universe: &Arc<FiniteUniverse>,
) -> Result<Partition, CliError> {
    Ok(Partition::new(universe, &doc.blocks)?)
}

fn default_basis(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("u{i}")).collect()
}

pub fn to_density(doc: &DensityDoc, policy: &NumericPolicy) -> Result<DensityMatrix, CliError> {
    let n = doc.dim;
    let check_shape = |rows: &Vec<Vec<f64>>, part: &str| -> Result<(), CliError> {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(CliError::Validation(format!(
                "density `{part}` must be a {n}x{n} matrix"
            )));
        }
        Ok(())
    };
    check_shape(&doc.re, "re")?;
    check_shape(&doc.im, "im")?;
    let labels = match &doc.basis {
        Some(labels) => labels.clone(),
        None => default_basis(n),
    };
    let rows: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Complex64::new(doc.re[i][j], doc.im[i][j]))
                .collect()
        })
        .collect();
    Ok(DensityMatrix::from_rows_with(labels, &rows, policy)?)
}

pub fn from_density(rho: &DensityMatrix) -> DensityDoc {
    let n = rho.dim();
    DensityDoc {
        dim: n,
        re: (0..n)
            .map(|i| (0..n).map(|j| rho.entry(i, j).re).collect())
            .collect(),
        im: (0..n)
            .map(|i| (0..n).map(|j| rho.entry(i, j).im).collect())
            .collect(),
        basis: None,
    }
}

pub fn to_state(doc: &StateDoc, policy: &NumericPolicy) -> Result<StateVector, CliError> {
    let n = doc.basis.len();
    let im = if doc.im.is_empty() {
        vec![0.0; n]
    } else {
        doc.im.clone()
    };
    if doc.re.len() != n || im.len() != n {
        return Err(CliError::Validation(format!(
            "state amplitudes must have length {n}"
        )));
    }
    let amplitudes: Vec<Complex64> = doc
        .re
        .iter()
        .zip(&im)
        .map(|(&re, &im)| Complex64::new(re, im))
        .collect();
    Ok(StateVector::with_policy(
        doc.basis.iter().cloned(),
        amplitudes,
        policy,
    )?)
}

pub fn from_state(psi: &StateVector) -> StateDoc {
    StateDoc {
        basis: psi.basis_labels().to_vec(),
        re: psi.amplitudes().iter().map(|a| a.re).collect(),
        im: psi.amplitudes().iter().map(|a| a.im).collect(),
    }
}

pub fn to_observable(doc: &ObservableDoc) -> Result<Observable, CliError> {
    Ok(Observable::new(
        doc.basis.iter().cloned(),
        doc.eigenvalues.clone(),
    )?)
}

pub fn from_outcome(outcome: &MeasurementOutcome) -> MeasurementDoc {
    MeasurementDoc {
        eigenvalue: outcome.eigenvalue,
        probability: outcome.probability,
        post_state: from_state(&outcome.post_state),
    }
}

pub fn to_amplitudes(doc: &AmplitudesDoc) -> Result<Vec<Complex64>, CliError> {
    let n = doc.re.len();
    let im = if doc.im.is_empty() {
        vec![0.0; n]
    } else {
        doc.im.clone()
    };
    if im.len() != n {
        return Err(CliError::Validation(format!(
            "amplitude `im` must have length {n}"
        )));
    }
    Ok(doc
        .re
        .iter()
        .zip(&im)
        .map(|(&re, &im)| Complex64::new(re, im))
        .collect())
}

//! `ditkit` — partition entropies, density-matrix measurement, and
//! interference scenarios from JSON inputs.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ditkit::error::CliError;
use ditkit::io::{
    self, AmplitudesDoc, DensityDoc, EntropyInputDoc, ObservableDoc, PartitionDoc, StateDoc,
};
use ditkit::report::{
    DistributionEntry, EntropyReport, EvolveReport, FrequencyEntry, JoinReport, LudersReport,
    MeasureReport, SampleReport, Table, VerifyReport,
};
use ditkit::{scenario, verify};
use ditkit_core::logical::{
    classical_luders, logical_entropy_density, logical_entropy_partition, shannon_entropy,
    shannon_entropy_partition, zeroed_amplitude_sum_with,
};
use ditkit_core::quantum::{
    decohered_coherence_sum_with, is_definite_with, measure_samples, measurement_outcomes_with,
    quantum_logical_entropy, quantum_luders_with, unitary_evolve, von_neumann_entropy_with,
    Hamiltonian,
};
use ditkit_core::{FiniteUniverse, NumericPolicy, Partition};

/// Partition logic, logical entropy, and projective measurement on
/// JSON inputs. Reads files or `-` for stdin; writes JSON to stdout.
#[derive(Debug, Parser)]
#[command(name = "ditkit", version, about)]
struct Cli {
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    /// Override the entrywise numeric tolerance (default 1e-10).
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entropies of a partition (`{universe, partition|attribute}`) or
    /// of a density matrix (`{density}`).
    Entropy {
        /// Input document path, or `-` for stdin (the default).
        #[arg(default_value = "-")]
        input: String,
    },
    /// Projective measurement of a state by an observable: Born
    /// distribution, post-measurement density, entropy, and the
    /// decohered-mass residual.
    Measure(MeasureArgs),
    /// Classify a density matrix by a partition (Lüders mixture).
    Luders {
        #[arg(long)]
        density: String,
        #[arg(long)]
        partition: String,
    },
    /// Join partitions and report whether the join is discrete.
    Join {
        /// Two or more partition documents over the same universe.
        #[arg(required = true, num_args = 1..)]
        partitions: Vec<String>,
    },
    /// Evolve a state under a Hamiltonian for a given time.
    Evolve {
        #[arg(long)]
        state: String,
        #[arg(long)]
        hamiltonian: String,
        #[arg(long)]
        time: f64,
    },
    /// Canned interference scenarios.
    Scenario {
        #[command(subcommand)]
        which: ScenarioCommand,
    },
    /// Randomized verification of the zeroed-amplitude theorems.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
}

#[derive(Debug, Args)]
struct MeasureArgs {
    #[arg(long)]
    state: String,
    #[arg(long)]
    observable: String,
    /// Also sample this many measurement outcomes.
    #[arg(long)]
    samples: Option<usize>,
    /// Seed for sampling (pinned SplitMix64 stream).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum ScenarioCommand {
    /// Beam splitter → phase shifter → optional which-path marker →
    /// beam splitter, reporting detector probabilities.
    MachZehnder {
        /// Relative phase between the arms.
        #[arg(long, default_value_t = 0.0)]
        phase: f64,
        /// Insert a which-path Lüders marker between the splitters.
        #[arg(long)]
        which_path: bool,
    },
    /// Two-point-source screen model with optional which-slit marking.
    DoubleSlit {
        #[arg(long)]
        which_slit: bool,
        #[arg(long, default_value_t = 33)]
        bins: usize,
        #[arg(long, default_value_t = 0.0)]
        phase1: f64,
        #[arg(long, default_value_t = 0.0)]
        phase2: f64,
    },
    /// Combine path amplitudes by the distinguishable (add
    /// probabilities) or indistinguishable (add amplitudes) rule.
    Feynman {
        /// Amplitudes document `{ "re": [...], "im": [...]? }`.
        #[arg(long)]
        amplitudes: String,
        #[arg(long)]
        distinguishable: bool,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Classical suite: zeroed amplitude mass vs logical entropy.
    Theorem1(VerifyArgs),
    /// Quantum suite: decohered coherence mass vs logical entropy and
    /// the two-measurement disagreement probability.
    Theorem2(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 20250809)]
    seed: u64,
    /// Largest dimension drawn (instances use 2..=dim).
    #[arg(long, default_value_t = 8)]
    dim: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let policy = match cli.tolerance {
        Some(tol) => NumericPolicy::default().with_entry_tol(tol),
        None => NumericPolicy::default(),
    };
    match run(cli.command, &policy, cli.table) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("ditkit: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn emit<R: Serialize + Table>(report: &R, table: bool) -> Result<(), CliError> {
    if table {
        print!("{}", report.table());
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(report).map_err(|e| CliError::Parse(e.to_string()))?
        );
    }
    Ok(())
}

fn run(command: Command, policy: &NumericPolicy, table: bool) -> Result<(), CliError> {
    match command {
        Command::Entropy { input } => {
            let doc: EntropyInputDoc = io::load(&input)?;
            let report = entropy_report(&doc, policy)?;
            emit(&report, table)
        }
        Command::Measure(args) => {
            let report = measure_report(&args, policy)?;
            if report.theorem_residual > policy.entry_tol {
                return Err(CliError::Policy(format!(
                    "decohered-mass residual {:e} exceeds tolerance {:e}",
                    report.theorem_residual, policy.entry_tol
                )));
            }
            emit(&report, table)
        }
        Command::Luders { density, partition } => {
            let report = luders_report(&density, &partition, policy)?;
            if report.residual > policy.entry_tol {
                return Err(CliError::Policy(format!(
                    "zeroed-mass residual {:e} exceeds tolerance {:e}",
                    report.residual, policy.entry_tol
                )));
            }
            emit(&report, table)
        }
        Command::Join { partitions } => {
            let report = join_report(&partitions)?;
            emit(&report, table)
        }
        Command::Evolve {
            state,
            hamiltonian,
            time,
        } => {
            let state_doc: StateDoc = io::load(&state)?;
            let observable_doc: ObservableDoc = io::load(&hamiltonian)?;
            let psi = io::to_state(&state_doc, policy)?;
            let h = Hamiltonian::new(io::to_observable(&observable_doc)?);
            let evolved = unitary_evolve(&psi, &h, time)?;
            let report = EvolveReport {
                norm: evolved.norm(),
                state: io::from_state(&evolved),
            };
            emit(&report, table)
        }
        Command::Scenario { which } => {
            let report = match which {
                ScenarioCommand::MachZehnder { phase, which_path } => {
                    scenario::mach_zehnder(phase, which_path)
                }
                ScenarioCommand::DoubleSlit {
                    which_slit,
                    bins,
                    phase1,
                    phase2,
                } => scenario::double_slit(which_slit, bins, phase1, phase2)?,
                ScenarioCommand::Feynman {
                    amplitudes,
                    distinguishable,
                } => {
                    let doc: AmplitudesDoc = io::load(&amplitudes)?;
                    scenario::feynman(&io::to_amplitudes(&doc)?, distinguishable)?
                }
            };
            for (name, distribution) in &report.distributions {
                let total: f64 = distribution.iter().sum();
                if (total - 1.0).abs() > 1e-9 {
                    return Err(CliError::Policy(format!(
                        "distribution `{name}` sums to {total}"
                    )));
                }
            }
            emit(&report, table)
        }
        Command::Verify { which } => {
            let report = match which {
                VerifyCommand::Theorem1(args) => {
                    verify::run_theorem1(args.trials, args.seed, args.dim, policy.entry_tol)
                }
                VerifyCommand::Theorem2(args) => {
                    verify::run_theorem2(args.trials, args.seed, args.dim, policy.entry_tol)
                }
            };
            let ok = report.ok;
            emit(&report, table)?;
            if !ok {
                return Err(CliError::Policy(theorem_failure_message(&report)));
            }
            Ok(())
        }
    }
}

fn theorem_failure_message(report: &VerifyReport) -> String {
    format!(
        "{}: {} of {} trials exceeded tolerance {:e} (max residual {:e})",
        report.theorem, report.failures, report.trials, report.tolerance, report.max_residual
    )
}

fn entropy_report(doc: &EntropyInputDoc, policy: &NumericPolicy) -> Result<EntropyReport, CliError> {
    match (&doc.density, &doc.universe) {
        (Some(density), None) => {
            let rho = io::to_density(density, policy)?;
            Ok(EntropyReport {
                logical: logical_entropy_density(&rho),
                shannon: shannon_entropy(&rho.diagonal_entries()),
                von_neumann: Some(von_neumann_entropy_with(&rho, policy)?),
            })
        }
        (None, Some(universe_doc)) => {
            let universe = io::to_universe(universe_doc, policy)?;
            let partition = partition_from_entropy_input(doc, &universe, policy)?;
            Ok(EntropyReport {
                logical: logical_entropy_partition(&partition),
                shannon: shannon_entropy_partition(&partition),
                von_neumann: None,
            })
        }
        _ => Err(CliError::Validation(
            "provide either {universe, partition|attribute} or {density}".to_string(),
        )),
    }
}

fn partition_from_entropy_input(
    doc: &EntropyInputDoc,
    universe: &Arc<FiniteUniverse>,
    policy: &NumericPolicy,
) -> Result<Partition, CliError> {
    match (&doc.partition, &doc.attribute) {
        (Some(partition), None) => io::to_partition(partition, universe),
        (None, Some(attribute)) => {
            let attribute =
                ditkit_core::NumericalAttribute::new(universe, attribute.values.clone())?;
            Ok(Partition::from_attribute_with(&attribute, policy))
        }
        _ => Err(CliError::Validation(
            "provide exactly one of `partition` or `attribute` with the universe".to_string(),
        )),
    }
}

fn measure_report(args: &MeasureArgs, policy: &NumericPolicy) -> Result<MeasureReport, CliError> {
    let state_doc: StateDoc = io::load(&args.state)?;
    let observable_doc: ObservableDoc = io::load(&args.observable)?;
    let psi = io::to_state(&state_doc, policy)?;
    let observable = io::to_observable(&observable_doc)?;

    let outcomes = measurement_outcomes_with(&psi, &observable, policy)?;
    let distribution = outcomes
        .iter()
        .map(|o| DistributionEntry {
            eigenvalue: o.eigenvalue,
            probability: o.probability,
        })
        .collect();

    let rho = psi.density();
    let hatted = quantum_luders_with(&rho, &observable, policy)?;
    let entropy = quantum_logical_entropy(&hatted);
    let decohered = decohered_coherence_sum_with(&rho, &hatted, policy)?;
    let residual = (decohered - entropy).abs();

    let samples = match args.samples {
        Some(count) if count > 0 => {
            let sampled = measure_samples(&psi, &observable, args.seed, count)?;
            let frequencies = outcomes
                .iter()
                .map(|o| {
                    let hits = sampled
                        .iter()
                        .filter(|s| s.eigenvalue == o.eigenvalue)
                        .count();
                    FrequencyEntry {
                        eigenvalue: o.eigenvalue,
                        count: hits,
                        frequency: hits as f64 / count as f64,
                    }
                })
                .collect();
            Some(SampleReport {
                seed: args.seed,
                count,
                frequencies,
                first_outcome: io::from_outcome(&sampled[0]),
            })
        }
        _ => None,
    };

    Ok(MeasureReport {
        distribution,
        post_density: io::from_density(&hatted),
        logical_entropy: entropy,
        theorem_residual: residual,
        definite: is_definite_with(&psi, &observable, policy)?,
        samples,
    })
}

fn luders_report(
    density_path: &str,
    partition_path: &str,
    policy: &NumericPolicy,
) -> Result<LudersReport, CliError> {
    let density_doc: DensityDoc = io::load(density_path)?;
    let partition_doc: PartitionDoc = io::load(partition_path)?;
    let rho = io::to_density(&density_doc, policy)?;
    let universe = Arc::new(FiniteUniverse::equiprobable(
        rho.basis_labels().iter().cloned(),
    )?);
    let partition = io::to_partition(&partition_doc, &universe)?;

    let hatted = classical_luders(&rho, &partition)?;
    let before = logical_entropy_density(&rho);
    let after = logical_entropy_density(&hatted);
    let zeroed = zeroed_amplitude_sum_with(&rho, &hatted, policy)?;
    // the zeroed mass always accounts for the purity drop, pure or not
    let residual = (zeroed - (after - before)).abs();

    Ok(LudersReport {
        density: io::from_density(&hatted),
        logical_entropy_before: before,
        logical_entropy_after: after,
        zeroed_amplitude_sum: zeroed,
        residual,
    })
}

fn join_report(paths: &[String]) -> Result<JoinReport, CliError> {
    let docs: Vec<PartitionDoc> = paths
        .iter()
        .map(|p| io::load::<PartitionDoc>(p))
        .collect::<Result<_, _>>()?;
    let sizes: Vec<usize> = docs
        .iter()
        .map(|doc| {
            doc.blocks
                .iter()
                .flatten()
                .max()
                .map(|&m| m + 1)
                .ok_or_else(|| CliError::Validation("partition has no blocks".to_string()))
        })
        .collect::<Result<_, _>>()?;
    let n = sizes[0];
    if sizes.iter().any(|&s| s != n) {
        return Err(CliError::Validation(format!(
            "partitions cover different universes: sizes {sizes:?}"
        )));
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    let universe = Arc::new(FiniteUniverse::equiprobable(labels)?);
    let mut partitions = docs
        .iter()
        .map(|doc| io::to_partition(doc, &universe))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter();
    let mut join = partitions.next().expect("at least one partition");
    for p in partitions {
        join = join.join(&p)?;
    }
    Ok(JoinReport {
        blocks: join.blocks().to_vec(),
        complete: join.is_discrete(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}

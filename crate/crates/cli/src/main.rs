//! `qbch`: command-line front end for quantum BCH code construction,
//! distance verification, table generation and channel simulation.

mod config;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use qbch::channel_sim::{self, ChannelModel, Decoder, DecoderOptions};
use qbch::cyclotomic::{self, ZeroSet};
use qbch::finite_field::{Basis, FieldCtx};
use qbch::quantum::states::{code_states, hadamard_identity_check};
use qbch::quantum::{search_qbch, Budgets, Construction, QuantumCode, QuantumCodeRecord, VerifyLevel};

use config::{Config, Format};
use output::{ExhaustiveLine, SimulationLine};

#[derive(Parser, Debug)]
#[command(
    name = "qbch",
    version,
    about = "Quantum BCH codes: construction, verification, tables and channel simulation"
)]
struct Cli {
    /// TOML settings file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for sampled distances and simulations.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Exhaustive-enumeration budget in codewords, e.g. 67108864 or 2^26.
    #[arg(long, global = true, env = "QBCH_BUDGET", value_parser = parse_count)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructionArg {
    Binary,
    Quaternary,
    Extension,
}

impl From<ConstructionArg> for Construction {
    fn from(c: ConstructionArg) -> Self {
        match c {
            ConstructionArg::Binary => Construction::Binary,
            ConstructionArg::Quaternary => Construction::Quaternary,
            ConstructionArg::Extension => Construction::Extension,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Bound,
    Best,
    Exact,
}

impl From<LevelArg> for VerifyLevel {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Bound => VerifyLevel::Bound,
            LevelArg::Best => VerifyLevel::Best,
            LevelArg::Exact => VerifyLevel::Exact,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChannelArg {
    Depolarizing,
    Erasure,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partition of {0, …, n−1} into q-cyclotomic cosets.
    Cosets { n: usize, q: usize },
    /// Dual (and, for q = 4, Hermitian orthogonal) zero set with the self-duality predicates.
    ZerosetDual {
        n: usize,
        q: usize,
        /// Residues of the zero set, comma separated.
        #[arg(value_delimiter = ',', num_args = 0..)]
        residues: Vec<usize>,
    },
    /// Builds and verifies one quantum code from a zero set.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        /// Residues of the zero set of C, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        zero_set: Vec<usize>,
        #[arg(long, value_enum, default_value = "best")]
        level: LevelArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All codes of one length, one per (n, k), sorted by (n, k).
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verifies a stored record to the requested level.
    Verify {
        record: PathBuf,
        #[arg(long, value_enum, default_value = "best")]
        level: LevelArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Searches every length in a range and writes one row per record.
    Table {
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Logical failure rates of a stored record over a noisy channel.
    Simulate {
        record: PathBuf,
        #[arg(long, value_enum)]
        channel: ChannelArg,
        /// Channel parameters, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "0")]
        epsilon: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        /// Decode every error (or erasure pattern) up to this size instead of sampling.
        #[arg(long)]
        exhaustive: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks orthonormality of the code states and the Hadamard-transform identity.
    Statecheck {
        record: PathBuf,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
}

/// Parses a count given as an integer or as `2^k`.
fn parse_count(s: &str) -> Result<u64, String> {
    let s = s.trim();
    if let Some(exp) = s.strip_prefix("2^") {
        let k: u32 = exp.parse().map_err(|e| format!("bad exponent in {s}: {e}"))?;
        return 1u64
            .checked_shl(k)
            .filter(|_| k < 64)
            .ok_or_else(|| format!("{s} does not fit in 64 bits"));
    }
    s.parse().map_err(|e| format!("bad count {s}: {e}"))
}

struct Settings {
    budgets: Budgets,
    seed: u64,
    format: Option<Format>,
    modulus: Option<u64>,
    basis: Option<Vec<u64>>,
}

impl Settings {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    /// Field override for GF(q) and basis override, from the settings file.
    fn field_and_basis(&self, q: usize) -> Result<(Option<FieldCtx>, Option<Basis>)> {
        if !q.is_power_of_two() || q < 2 {
            bail!(qbch::Error::InvalidInput(format!("q = {q} is not a power of two")));
        }
        let ell = q.trailing_zeros();
        let field = self.modulus.map(|m| FieldCtx::with_modulus(ell, m)).transpose()?;
        let basis = match &self.basis {
            Some(exps) => {
                let ctx = match field {
                    Some(f) => f,
                    None => FieldCtx::new(ell)?,
                };
                Some(Basis::from_x_powers(ctx, exps)?)
            }
            None => None,
        };
        Ok((field, basis))
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_record(path: &Path) -> Result<QuantumCodeRecord> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading record {}", path.display()))?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let record = serde_json::from_str(first)
        .or_else(|_| serde_json::from_str(&text))
        .with_context(|| format!("parsing record {}", path.display()))?;
    Ok(record)
}

fn zero_set(n: usize, q: usize, residues: &[usize]) -> Result<ZeroSet> {
    Ok(ZeroSet::new(n, q, residues.iter().copied())?)
}

fn run(cli: Cli) -> Result<()> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(t) = cli.threads.or(config.threads) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let mut budgets = config.budgets;
    if let Some(b) = cli.budget {
        budgets.enumeration = b;
    }
    let seed = cli.seed.or(config.seed).unwrap_or(budgets.seed);
    budgets.seed = seed;
    let settings = Settings {
        budgets,
        seed,
        format: cli.format.or(config.format),
        modulus: config.modulus,
        basis: config.basis,
    };

    match cli.command {
        Command::Cosets { n, q } => {
            let cosets = cyclotomic::all_cosets(n, q)?;
            emit(None, &output::cosets(&cosets, settings.format_or(Format::Text))?)
        }
        Command::ZerosetDual { n, q, residues } => {
            let z = zero_set(n, q, &residues)?;
            emit(None, &output::duals(&z, settings.format_or(Format::Text))?)
        }
        Command::Construct {
            n,
            q,
            construction,
            zero_set: residues,
            level,
            out,
        } => {
            let z = zero_set(n, q, &residues)?;
            let (field, basis) = settings.field_and_basis(q)?;
            let record =
                QuantumCode::new(&z, construction.into(), field, basis)?.verify(&settings.budgets, level.into())?;
            emit(
                out.as_deref(),
                &output::records(&[record], settings.format_or(Format::Json))?,
            )
        }
        Command::Search {
            n,
            q,
            construction,
            out,
        } => {
            let (field, basis) = settings.field_and_basis(q)?;
            let records = search_qbch(n, q, construction.into(), field, basis, &settings.budgets)?;
            emit(
                out.as_deref(),
                &output::records(&records, settings.format_or(Format::Json))?,
            )
        }
        Command::Verify { record, level, out } => {
            let r = read_record(&record)?;
            let code = QuantumCode::from_record(&r)?;
            let verified = code.verify(&settings.budgets, level.into())?;
            emit(
                out.as_deref(),
                &output::records(&[verified], settings.format_or(Format::Json))?,
            )
        }
        Command::Table {
            q,
            construction,
            n_min,
            n_max,
            out,
        } => {
            let (field, basis) = settings.field_and_basis(q)?;
            let mut all = Vec::new();
            for n in (n_min.max(1)..=n_max).filter(|n| n % 2 == 1) {
                all.extend(search_qbch(
                    n,
                    q,
                    construction.into(),
                    field,
                    basis.clone(),
                    &settings.budgets,
                )?);
            }
            emit(out.as_deref(), &output::records(&all, settings.format_or(Format::Csv))?)
        }
        Command::Simulate {
            record,
            channel,
            epsilon,
            trials,
            exhaustive,
            out,
        } => {
            let r = read_record(&record)?;
            let code = QuantumCode::from_record(&r)?;
            let decoder = Decoder::new(&code, DecoderOptions::default())?;
            let label = r.label();
            let format = settings.format_or(Format::Json);
            let text = match exhaustive {
                Some(max) => {
                    let (name, counts) = match channel {
                        ChannelArg::Depolarizing => ("depolarizing", channel_sim::exhaustive_pauli(&decoder, max)?),
                        ChannelArg::Erasure => ("erasure", channel_sim::exhaustive_erasure(&decoder, max)?),
                    };
                    let lines: Vec<ExhaustiveLine> =
                        counts.iter().map(|c| ExhaustiveLine::new(&label, name, c)).collect();
                    output::exhaustive(&lines, format)?
                }
                None => {
                    if trials == 0 {
                        bail!(qbch::Error::InvalidInput("trials must be at least 1".into()));
                    }
                    let mut lines = Vec::new();
                    for &e in &epsilon {
                        let model = match channel {
                            ChannelArg::Depolarizing => ChannelModel::Depolarizing(e),
                            ChannelArg::Erasure => ChannelModel::Erasure(e),
                        };
                        let est = channel_sim::estimate_logical_error_rate(&decoder, model, trials, settings.seed)?;
                        lines.push(SimulationLine::new(&label, model, &est));
                    }
                    output::simulations(&lines, format)?
                }
            };
            emit(out.as_deref(), &text)
        }
        Command::Statecheck { record, tolerance } => {
            let r = read_record(&record)?;
            let code = QuantumCode::from_record(&r)?;
            if r.construction != Construction::Binary {
                bail!(qbch::Error::InvalidInput(
                    "state vectors are built for binary CSS codes only".into()
                ));
            }
            let states = code_states(code.code())?;
            let error = states.orthonormality_error();
            let identity = hadamard_identity_check(code.code(), tolerance)?;
            let report = output::StateReport {
                code: r.label(),
                states: states.states.len(),
                orthonormality_error: error,
                hadamard_identity: identity,
                tolerance,
            };
            emit(None, &output::state_report(&report, settings.format_or(Format::Json))?)?;
            if error > tolerance || !identity {
                bail!(CheckFailed);
            }
            Ok(())
        }
    }
}

#[derive(Debug)]
struct CheckFailed;

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("state check failed")
    }
}

impl std::error::Error for CheckFailed {}

/// 3 for budget refusals, 1 for failed checks, 2 for everything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    if err
        .chain()
        .any(|e| e.downcast_ref::<qbch::Error>().is_some_and(|e| e.is_budget()))
    {
        3
    } else if err.downcast_ref::<CheckFailed>().is_some() {
        1
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

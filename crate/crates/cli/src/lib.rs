//! Front end for the `qpol` binary. [`run`] executes one command and
//! returns what the binary prints to standard output.
//!
//! | exit | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | output could not be written |
//! | 2 | command line or state file does not parse |
//! | 3 | a state violates a physical invariant |
//! | 4 | parameters out of range |
//! | 5 | truncation too small for a state |

pub mod error;
pub mod grid;
pub mod report;
pub mod statefile;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpol::{fock, polarization, spectral, su2, EulerAngles};

pub use error::{CliError, CliResult};
use grid::Family;
use report::{BuresReport, ChernoffReport, DegreeReport, DiscriminateReport, Probability};

#[derive(Debug, Parser)]
#[command(
    name = "qpol",
    version,
    about = "Chernoff and Bures degrees of polarization of two-mode states"
)]
pub struct Cli {
    /// Worker threads for grid commands; 0 lets rayon decide.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degrees of polarization of a state file.
    Degree {
        state: PathBuf,
        #[arg(long, value_enum, default_value_t = Measure::Both)]
        measure: Measure,
        #[arg(long)]
        json: bool,
    },
    /// Rényi overlap surface Q(s, pi1) of a worked family, as CSV.
    Surface {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 101, allow_negative_numbers = true)]
        grid: i64,
    },
    /// Degrees of a worked family over p in [0, 1], as CSV.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 101, allow_negative_numbers = true)]
        points: i64,
    },
    /// Applies a polarization transformation and writes the new state file.
    Transform {
        state: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        phi: f64,
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, allow_negative_numbers = true)]
        psi: f64,
        output: PathBuf,
    },
    /// Single-copy error probability and Chernoff bound between two states.
    Discriminate {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        truncation: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Chernoff,
    Bures,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Superposition,
    Mixture,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    #[arg(long, allow_negative_numbers = true)]
    pub n1: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub n2: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::InvalidParams(msg.into())
}

fn photons(name: &str, v: Option<i64>) -> CliResult<usize> {
    let v = v.ok_or_else(|| invalid(format!("--{name} is required for the superposition family")))?;
    usize::try_from(v).map_err(|_| invalid(format!("--{name} must be non-negative, got {v}")))
}

fn count(name: &str, v: i64) -> CliResult<usize> {
    usize::try_from(v).map_err(|_| invalid(format!("--{name} must be at least 2, got {v}")))
}

impl FamilyArgs {
    pub fn resolve(&self) -> CliResult<Family> {
        match self.family {
            FamilyKind::Superposition => {
                if self.alpha.is_some() || self.beta.is_some() || self.gamma.is_some() {
                    return Err(invalid("--alpha/--beta/--gamma apply only to the mixture family"));
                }
                Ok(Family::Superposition {
                    n1: photons("n1", self.n1)?,
                    n2: photons("n2", self.n2)?,
                })
            }
            FamilyKind::Mixture => {
                if self.n1.is_some() || self.n2.is_some() {
                    return Err(invalid("--n1/--n2 apply only to the superposition family"));
                }
                let need = |name: &str, v: Option<f64>| {
                    v.ok_or_else(|| invalid(format!("--{name} is required for the mixture family")))
                };
                Ok(Family::Mixture {
                    alpha: need("alpha", self.alpha)?,
                    beta: need("beta", self.beta)?,
                    gamma: need("gamma", self.gamma)?,
                })
            }
        }
    }
}

pub fn degree(state: &std::path::Path, measure: Measure, json: bool) -> CliResult<String> {
    let state = statefile::load_state(state)?;
    let rho_b = fock::block_diagonalize(&state)?;
    let spec = spectral::spectra(&rho_b)?;
    let report = DegreeReport {
        manifold_probabilities: rho_b
            .blocks()
            .iter()
            .map(|b| Probability {
                photons: b.photons(),
                p: b.weight(),
            })
            .collect(),
        chernoff: (measure != Measure::Bures)
            .then(|| ChernoffReport::from(&polarization::chernoff_from_spectra(&spec))),
        bures: (measure != Measure::Chernoff).then(|| BuresReport::from(&polarization::bures_from_spectra(&spec))),
    };
    Ok(if json {
        serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
    } else {
        report.to_text()
    })
}

pub fn transform(input: &std::path::Path, angles: EulerAngles, output: &std::path::Path) -> CliResult<String> {
    for (name, v) in [("phi", angles.phi), ("theta", angles.theta), ("psi", angles.psi)] {
        if !v.is_finite() {
            return Err(invalid(format!("--{name} must be finite, got {v}")));
        }
    }
    let state = statefile::load_state(input)?;
    let moved = su2::transform_state(&state, angles)?;
    statefile::write_state(output, &moved)?;
    Ok(format!("wrote {}\n", output.display()))
}

pub fn discriminate(a: &std::path::Path, b: &std::path::Path, truncation: usize, json: bool) -> CliResult<String> {
    let sa = statefile::load_state(a)?;
    let sb = statefile::load_state(b)?;
    let rho = sa.to_dense(truncation)?;
    let sigma = sb.to_dense(truncation)?;
    let q = polarization::chernoff_overlap_general(&rho, &sigma)?;
    let report = DiscriminateReport {
        truncation,
        error_probability: polarization::single_copy_error_probability(&rho, &sigma)?,
        chernoff_overlap: q.overlap,
        exponent: q.exponent.is_finite().then_some(q.exponent),
        s_opt: q.s_opt,
    };
    Ok(if json {
        serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
    } else {
        report.to_text()
    })
}

/// Runs one parsed command.
pub fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Degree { state, measure, json } => degree(&state, measure, json),
        Command::Surface { family, p, grid } => {
            let family = family.resolve()?;
            let p = p.ok_or_else(|| invalid("--p is required for surface"))?;
            grid::surface(family, p, count("grid", grid)?, cli.threads)
        }
        Command::Sweep { family, p, points } => {
            if p.is_some() {
                return Err(invalid("sweep varies p over [0, 1]; drop --p"));
            }
            grid::sweep(family.resolve()?, count("points", points)?, cli.threads)
        }
        Command::Transform {
            state,
            phi,
            theta,
            psi,
            output,
        } => transform(&state, EulerAngles::new(phi, theta, psi), &output),
        Command::Discriminate { a, b, truncation, json } => discriminate(&a, &b, truncation, json),
    }
}

/// Parses `args` (program name first) and runs the command. Command-line
/// errors come back as [`CliError::Parse`] with clap's rendered message.
pub fn run_args<I, T>(args: I) -> CliResult<String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Parse(e.render().to_string()))?;
    run(cli)
}

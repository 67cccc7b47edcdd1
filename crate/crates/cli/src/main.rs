//! `qss`: run the revocable secret-sharing protocol, sweep parameter regions
//! and emit JSON or CSV reports.
//!
//! Exit codes: 0 success, 1 protocol or verification failure, 2 usage error.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use qss_core::branch::Flow;
use qss_core::oracle::{
    theorem1_case_grid, theorem2_case_grid, verify_theorem_sampled, Theorem, DEFAULT_GRID,
};
use qss_core::protocol::{run_protocol, sample_run};
use qss_core::report::{BranchRecord, RunReport, VerifyReport, SCHEMA_VERSION};
use qss_core::resource::{theorem1_check, theorem2_check, GParams, Region, Secret};
use qss_core::tolerance;
use serde::Serialize;

use input::UsageError;

#[derive(Parser)]
#[command(
    name = "qss",
    version,
    about = "Revocable quantum secret sharing simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlowArg {
    #[value(alias = "revocation")]
    Revoke,
    ReconstructCharlie,
    ReconstructBob,
}

impl From<FlowArg> for Flow {
    fn from(f: FlowArg) -> Self {
        match f {
            FlowArg::Revoke => Flow::Revocation,
            FlowArg::ReconstructCharlie => Flow::ReconstructionAtCharlie,
            FlowArg::ReconstructBob => Flow::ReconstructionAtBob,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::One => Theorem::One,
            TheoremArg::Two => Theorem::Two,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionArg {
    Theorem1,
    Theorem2,
    Both,
    Unconstrained,
}

impl From<RegionArg> for Region {
    fn from(r: RegionArg) -> Self {
        match r {
            RegionArg::Theorem1 => Region::Theorem1,
            RegionArg::Theorem2 => Region::Theorem2,
            RegionArg::Both => Region::Both,
            RegionArg::Unconstrained => Region::Unconstrained,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reference point with secret (√(1/3), √(2/3)) through revocation and
    /// reconstruction at Charlie.
    Demo {
        /// Restrict to one flow.
        #[arg(long, value_enum)]
        flow: Option<FlowArg>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all sixteen branches of one flow.
    Run {
        /// a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// alpha_re,alpha_im,beta_re,beta_im
        #[arg(long, allow_hyphen_values = true)]
        secret: String,
        #[arg(long, value_enum)]
        flow: FlowArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Exit 0 even when some branch has no exact correction.
        #[arg(long)]
        allow_partial: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a theorem's predicate against brute-force solvability on
    /// seeded samples.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        samples: usize,
        #[arg(long, env = "QSS_SEED", default_value_t = 0)]
        seed: u64,
        /// Sampling region; defaults to the theorem's own region.
        #[arg(long, value_enum)]
        region: Option<RegionArg>,
        /// JSON report path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// CSV of admissible points.
        #[arg(long)]
        points: Option<PathBuf>,
    },
    /// Lattice over one case's free parameters, re-checked against its predicate.
    Scan {
        #[arg(long, value_enum, default_value = "1")]
        theorem: TheoremArg,
        #[arg(long)]
        case: u8,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One branch drawn at random with Born probabilities.
    Trial {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long, allow_hyphen_values = true)]
        secret: String,
        #[arg(long, value_enum)]
        flow: FlowArg,
        #[arg(long, env = "QSS_SEED", default_value_t = 0)]
        seed: u64,
    },
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn demo_secret() -> Secret {
    Secret::new(
        Complex64::new((1.0f64 / 3.0).sqrt(), 0.0),
        Complex64::new((2.0f64 / 3.0).sqrt(), 0.0),
    )
    .expect("unit vector")
}

fn reports(params: &GParams, secret: &Secret, flows: &[Flow]) -> anyhow::Result<Vec<RunReport>> {
    flows
        .iter()
        .map(|&flow| {
            let ts = run_protocol(params, secret, flow)?;
            Ok(RunReport::new(params, secret, flow, &ts)?)
        })
        .collect()
}

fn emit_runs(
    reports: &[RunReport],
    format: Format,
    out: Option<&PathBuf>,
    single: bool,
) -> anyhow::Result<()> {
    let text = match format {
        Format::Json if single => output::json(&reports[0])?,
        Format::Json => output::json(&reports)?,
        Format::Csv => output::run_csv(reports)?,
    };
    output::write(out, &text)
}

fn execute(cmd: Command) -> anyhow::Result<bool> {
    match cmd {
        Command::Demo { flow, format, out } => {
            let flows = match flow {
                Some(f) => vec![f.into()],
                None => vec![Flow::Revocation, Flow::ReconstructionAtCharlie],
            };
            let rs = reports(&GParams::reference_point(), &demo_secret(), &flows)?;
            emit_runs(&rs, format, out.as_ref(), false)?;
            let ok = rs.iter().all(|r| {
                r.branches
                    .iter()
                    .all(|b| b.fidelity.is_some_and(|f| f >= 1.0 - tolerance::DERIVED))
            });
            Ok(ok)
        }
        Command::Run {
            params,
            secret,
            flow,
            format,
            allow_partial,
            out,
        } => {
            let params = input::parse_params(&params)?;
            let secret = input::parse_secret(&secret)?;
            let rs = reports(&params, &secret, &[flow.into()])?;
            emit_runs(&rs, format, out.as_ref(), true)?;
            let s = &rs[0].summary;
            if s.correction_not_found + s.unreachable > 0 {
                eprintln!(
                    "{} branch(es) without an exact correction, {} unreachable",
                    s.correction_not_found, s.unreachable
                );
            }
            Ok(s.success || allow_partial)
        }
        Command::Verify {
            theorem,
            samples,
            seed,
            region,
            out,
            points,
        } => {
            if samples == 0 {
                return Err(usage("--samples must be at least 1"));
            }
            let theorem: Theorem = theorem.into();
            let region = region.map(Region::from).unwrap_or(theorem.region());
            let report = verify_theorem_sampled(theorem, region, samples, seed)?;
            let v = VerifyReport::new(&report, region, seed);
            output::write(out.as_ref(), &output::json(&v)?)?;
            if let Some(path) = points {
                output::write(Some(&path), &output::points_csv(&report)?)?;
            }
            eprintln!(
                "theorem {}: consistent={} predicate_only={} solvable_only={}",
                match theorem {
                    Theorem::One => 1,
                    Theorem::Two => 2,
                },
                v.consistent,
                v.predicate_only,
                v.solvable_only
            );
            Ok(v.predicate_only == 0)
        }
        Command::Scan {
            theorem,
            case,
            grid,
            out,
        } => {
            if grid == 0 {
                return Err(usage("--grid must be at least 1"));
            }
            let theorem: Theorem = theorem.into();
            let pts = match theorem {
                Theorem::One => theorem1_case_grid(case, grid),
                Theorem::Two => theorem2_case_grid(case, grid),
            }
            .map_err(|e| usage(format!("--case: {e}")))?;
            let checked: Vec<(GParams, bool)> = pts
                .into_iter()
                .map(|p| {
                    let ok = match theorem {
                        Theorem::One => theorem1_check(&p, tolerance::CONSTRUCTION).revocable(),
                        Theorem::Two => {
                            theorem2_check(&p, tolerance::CONSTRUCTION).reconstructible()
                        }
                    };
                    (p, ok)
                })
                .collect();
            output::write(out.as_ref(), &output::scan_csv(theorem, case, &checked)?)?;
            Ok(checked.iter().all(|(_, ok)| *ok))
        }
        Command::Trial {
            params,
            secret,
            flow,
            seed,
        } => {
            #[derive(Serialize)]
            struct TrialReport {
                schema_version: &'static str,
                seed: u64,
                flow: Flow,
                branch: BranchRecord,
            }
            let params = input::parse_params(&params)?;
            let secret = input::parse_secret(&secret)?;
            let t = sample_run(&params, &secret, flow.into(), seed)?;
            let r = TrialReport {
                schema_version: SCHEMA_VERSION,
                seed,
                flow: flow.into(),
                branch: (&t).into(),
            };
            output::write(None, &output::json(&r)?)?;
            Ok(t.status == qss_core::protocol::Status::Recovered)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match execute(cli.command).context("qss") {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            if e.chain().any(|c| c.is::<UsageError>()) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

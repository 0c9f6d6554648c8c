use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use sl3coh::euler::{euler_table, symbolic_grid, symbolic_markdown};
use sl3coh::report::{build_report, render_markdown, render_text, ReportOptions};
use sl3coh::verify::{self, VerifyConfig};
use sl3coh::{Group, HighestWeight, Routes};

#[derive(Parser)]
#[command(name = "sl3coh", version, about = "Cohomology of SL3(Z) and GL3(Z) with highest-weight coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sl3,
    Gl3,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Boundary, Eisenstein and Euler data for one weight.
    Cohomology {
        #[arg(long, value_enum, default_value = "sl3")]
        group: GroupArg,
        #[arg(long, allow_negative_numbers = true)]
        m1: i64,
        #[arg(long, allow_negative_numbers = true)]
        m2: i64,
        /// Determinant twist; required for gl3, rejected for sl3.
        #[arg(long, allow_negative_numbers = true)]
        m3: Option<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        #[arg(long, default_value = "spectral_sequence")]
        boundary_route: String,
        #[arg(long, default_value = "closed_trace")]
        trace_route: String,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Euler characteristics of SL3(Z), symbolic mod-12 grid or a numeric sweep.
    EulerTable {
        #[arg(long, conflicts_with_all = ["m1_max", "m2_max"])]
        symbolic: bool,
        #[arg(long, default_value_t = 23)]
        m1_max: u32,
        #[arg(long, default_value_t = 23)]
        m2_max: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check every registered route; exit 1 on any disagreement.
    Verify {
        #[arg(long, default_value_t = 60)]
        max: u32,
        /// Enables random spot checks beyond --max.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 30)]
        brute_force_max: u32,
        /// Write the full outcome as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List registered routes.
    Routes,
}

fn emit(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn weight(group: GroupArg, m1: i64, m2: i64, m3: Option<i64>) -> Result<(HighestWeight, Group), String> {
    let lam = match (group, m3) {
        (GroupArg::Sl3, Some(_)) => return Err("--m3 only applies to --group gl3".to_owned()),
        (GroupArg::Gl3, None) => return Err("--group gl3 needs --m3".to_owned()),
        (GroupArg::Sl3, None) => HighestWeight::sl3(m1, m2).map(|l| (l, Group::Sl3)),
        (GroupArg::Gl3, Some(m3)) => HighestWeight::gl3(m1, m2, m3).map(|l| (l, Group::Gl3)),
    };
    lam.map_err(|e| e.to_string())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let routes = Routes::standard();
    match cli.command {
        Command::Cohomology {
            group,
            m1,
            m2,
            m3,
            format,
            boundary_route,
            trace_route,
            out,
        } => {
            let (lam, group) = match weight(group, m1, m2, m3) {
                Ok(w) => w,
                Err(msg) => return Ok(usage(msg)),
            };
            let options = ReportOptions {
                boundary_route,
                trace_route,
            };
            let report = match build_report(&lam, group, &routes, &options) {
                Ok(r) => r,
                Err(e @ sl3coh::Error::UnknownRoute { .. }) => return Ok(usage(e)),
                Err(e) => return Err(e.into()),
            };
            let text = match format {
                ReportFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
                ReportFormat::Text => render_text(&report),
                ReportFormat::Md => render_markdown(&report),
            };
            emit(&text, out.as_ref())?;
        }
        Command::EulerTable {
            symbolic,
            m1_max,
            m2_max,
            format,
            out,
        } => {
            let text = match (symbolic, format) {
                (true, TableFormat::Md) => symbolic_markdown(),
                (true, TableFormat::Csv) => {
                    let mut s = String::from("row,col,expression\n");
                    for cell in symbolic_grid().iter().flatten() {
                        s.push_str(&format!("{},{},\"{cell}\"\n", cell.row, cell.col));
                    }
                    s
                }
                (false, TableFormat::Csv) => {
                    let mut s = String::from("m1,m2,chi\n");
                    for e in euler_table(m1_max, m2_max) {
                        s.push_str(&format!("{},{},{}\n", e.m1, e.m2, e.chi));
                    }
                    s
                }
                (false, TableFormat::Md) => {
                    let mut s = String::from("| m1 | m2 | chi | cell |\n|---|---|---|---|\n");
                    for e in euler_table(m1_max, m2_max) {
                        s.push_str(&format!("| {} | {} | {} | {} |\n", e.m1, e.m2, e.chi, e.cell));
                    }
                    s
                }
            };
            emit(&text, out.as_ref())?;
        }
        Command::Verify {
            max,
            seed,
            samples,
            brute_force_max,
            out,
        } => {
            let cfg = VerifyConfig {
                max,
                brute_force_max,
                random_samples: samples,
                seed,
                ..VerifyConfig::default()
            };
            let outcome = verify::run(&routes, &cfg);
            for check in &outcome.checks {
                let status = if check.passed() { "PASS" } else { "FAIL" };
                println!("{status} {} ({} cases, {} failures)", check.name, check.cases, check.failures);
            }
            if let Some(path) = &out {
                let json = serde_json::to_string_pretty(&outcome)?;
                fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
            }
            if !outcome.passed() {
                for f in &outcome.failures {
                    println!("{}", serde_json::to_string(f)?);
                }
                println!("verify: {} failures", outcome.failures.len());
                return Ok(ExitCode::from(1));
            }
            println!("verify: all checks passed");
        }
        Command::Routes => {
            let groups: [(&str, Vec<&str>); 4] = [
                ("trace", routes.traces.names()),
                ("euler", routes.euler.names()),
                ("boundary", routes.boundary.names()),
                ("eisenstein", routes.eisenstein.names()),
            ];
            for (kind, names) in groups {
                println!("{kind}: {}", names.join(", "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors by itself.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

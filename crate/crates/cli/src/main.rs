use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fuzzyrr::formats::{parse_fis, parse_workload};
use fuzzyrr::lrrtq::{self, build_lrrtq, sample_surface};
use fuzzyrr::reference::audit_comparison;
use fuzzyrr::report::{self, render_comparison, render_schedule, render_surface_csv};
use fuzzyrr::{compare, rr_fixed, rr_fuzzy, FisDefinition, Ticks, Workload};

#[derive(Parser)]
#[command(name = "fuzzyrr", version, about = "Fuzzy time-quantum round-robin simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Fixed,
    Fuzzy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
}

impl From<Format> for report::Format {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => report::Format::Table,
            Format::Csv => report::Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Infer the time quantum for a ready queue.
    Infer {
        /// Number of processes in the ready queue.
        #[arg(long, allow_negative_numbers = true)]
        nop: f64,
        /// Average burst time of the ready queue.
        #[arg(long, allow_negative_numbers = true)]
        abt: f64,
        /// FIS definition file (defaults to the built-in preset).
        #[arg(long)]
        fis: Option<PathBuf>,
    },
    /// Simulate one scheduling policy on a workload CSV.
    Simulate {
        #[arg(long)]
        workload: PathBuf,
        #[arg(long, value_enum)]
        policy: Policy,
        /// Fixed quantum, required for `--policy fixed`.
        #[arg(long)]
        quantum: Option<Ticks>,
        #[arg(long)]
        fis: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run fixed and fuzzy round robin side by side.
    Compare {
        #[arg(long)]
        workload: PathBuf,
        #[arg(long)]
        quantum: Ticks,
        #[arg(long)]
        fis: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Export the inferred quantum over a grid of inputs as CSV.
    Surface {
        #[arg(long)]
        nop_steps: usize,
        #[arg(long)]
        abt_steps: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        fis: Option<PathBuf>,
    },
}

fn load_fis(path: Option<&Path>) -> Result<FisDefinition> {
    match path {
        None => Ok(build_lrrtq()),
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_fis(&text).with_context(|| format!("parsing {}", path.display()))
        }
    }
}

fn load_workload(path: &Path) -> Result<Workload> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_workload(&text).with_context(|| format!("parsing {}", path.display()))
}

// Writes next to the target and renames, so a failure leaves no partial file.
fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let name = path
        .file_name()
        .with_context(|| format!("{} is not a file path", path.display()))?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(name);
    tmp_name.push(".tmp");
    let tmp = path.with_file_name(tmp_name);
    fs::write(&tmp, contents).with_context(|| format!("writing {}", path.display()))?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        anyhow::Error::new(e).context(format!("writing {}", path.display()))
    })
}

fn run(command: Command) -> Result<String> {
    match command {
        Command::Infer { nop, abt, fis } => {
            let fis = load_fis(fis.as_deref())?;
            let q = lrrtq::quantum(&fis, nop, abt)?;
            Ok(format!("{q:.4}\n"))
        }
        Command::Simulate {
            workload,
            policy,
            quantum,
            fis,
            format,
        } => {
            let workload = load_workload(&workload)?;
            let schedule = match policy {
                Policy::Fixed => {
                    let Some(quantum) = quantum else {
                        bail!("--policy fixed requires --quantum");
                    };
                    let s = rr_fixed(&workload, quantum)?;
                    (format!("fixed round robin, quantum {quantum}"), s)
                }
                Policy::Fuzzy => {
                    let fis = load_fis(fis.as_deref())?;
                    ("fuzzy sorted round robin".to_owned(), rr_fuzzy(&workload, &fis)?)
                }
            };
            Ok(render_schedule(&schedule.0, &schedule.1, format.into()))
        }
        Command::Compare {
            workload,
            quantum,
            fis,
            format,
        } => {
            let workload = load_workload(&workload)?;
            let fis = load_fis(fis.as_deref())?;
            let comparison = compare(&workload, &fis, quantum)?;
            let notes = audit_comparison(&workload, &comparison);
            Ok(render_comparison(&comparison, &notes, format.into()))
        }
        Command::Surface {
            nop_steps,
            abt_steps,
            out,
            fis,
        } => {
            let fis = load_fis(fis.as_deref())?;
            let grid = sample_surface(&fis, nop_steps, abt_steps)?;
            write_atomically(&out, &render_surface_csv(&grid))?;
            Ok(format!(
                "wrote {nop_steps}x{abt_steps} surface to {}\n",
                out.display()
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let text = e.to_string();
            eprintln!("{}", text.lines().next().unwrap_or("invalid arguments"));
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

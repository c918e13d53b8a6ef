//! `vnum`: invariants of monomial ideals — v-numbers with witnesses,
//! Frobenius bracket powers, irreducible decompositions, graded Betti
//! tables, Hilbert series — plus built-in verification suites and a
//! counterexample scan.
//!
//! Exit codes: 0 success, 1 suite failure, 2 usage or parse error,
//! 3 resource cap exceeded.

mod report;
mod scan;
mod suites;

use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use vnum_core::{betti_table_with_cap, Error, FieldChoice, DEFAULT_POLARIZED_CAP};

#[derive(Parser)]
#[command(
    name = "vnum",
    version,
    about = "Invariants of monomial ideals: v-numbers, Frobenius bracket powers, \
             Betti tables, Hilbert series, and theorem-verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_field(s: &str) -> Result<FieldChoice, String> {
    FieldChoice::parse_label(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for an ideal or graph file
    Invariants {
        /// Ideal file (`vars:` header) or graph file (`graph:` header)
        file: PathBuf,
        /// Coefficient field: `Q` for the rationals, or a prime `p`
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: FieldChoice,
        /// Emit the JSON report instead of text
        #[arg(long)]
        json: bool,
        /// Cap on the polarized variable count for Betti computations
        #[arg(long, default_value_t = DEFAULT_POLARIZED_CAP)]
        max_polarized_vars: usize,
    },
    /// Frobenius bracket-power report: v(I^[q]), α_q, and the two bounds
    Frobenius {
        /// Ideal file (`vars:` header) or graph file (`graph:` header)
        file: PathBuf,
        /// Bracket-power exponent (q ≥ 2)
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        q: u32,
    },
    /// Graded Betti table of S/I
    Betti {
        /// Ideal file (`vars:` header) or graph file (`graph:` header)
        file: PathBuf,
        /// Coefficient field: `Q` for the rationals, or a prime `p`
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: FieldChoice,
        /// Emit the JSON table instead of text
        #[arg(long)]
        json: bool,
        /// Cap on the polarized variable count
        #[arg(long, default_value_t = DEFAULT_POLARIZED_CAP)]
        max_polarized_vars: usize,
    },
    /// Run one verification suite over curated examples plus a seeded corpus
    Verify {
        /// Suite name (see `--suite help` output on error for the list)
        #[arg(long)]
        suite: String,
        /// Seed for the random corpus
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random cases after the curated set
        #[arg(long, default_value_t = 40)]
        count: usize,
        /// Cap on variable count for random ideals
        #[arg(long, default_value_t = 6)]
        max_vars: usize,
        /// Cap on the polarized variable count
        #[arg(long, default_value_t = DEFAULT_POLARIZED_CAP)]
        max_polarized_vars: usize,
    },
    /// Scan random unmixed ideals with one-degree last Betti column for
    /// violations of v ≥ reg (a violator is a finding, not a failure)
    #[command(name = "scan-q52")]
    ScanQ52 {
        /// Seed for the random draws
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of seeded draws
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Cap on the polarized variable count
        #[arg(long, default_value_t = DEFAULT_POLARIZED_CAP)]
        max_polarized_vars: usize,
    },
}

fn read_input(path: &Path) -> Result<report::Input, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::structural(format!("cannot read {}: {e}", path.display())))?;
    report::load_input(&text)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Invariants {
            file,
            field,
            json,
            max_polarized_vars,
        } => {
            let input = read_input(&file)?;
            let name = file.display().to_string();
            if json {
                let value = report::invariants_json(&name, &input, &field, max_polarized_vars)?;
                println!("{}", serde_json::to_string_pretty(&value).expect("valid JSON"));
            } else {
                print!(
                    "{}",
                    report::invariants_text(&name, &input, &field, max_polarized_vars)?
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Frobenius { file, q } => {
            let input = read_input(&file)?;
            let value = report::frobenius_json(&file.display().to_string(), &input, q)?;
            println!("{}", serde_json::to_string_pretty(&value).expect("valid JSON"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Betti {
            file,
            field,
            json,
            max_polarized_vars,
        } => {
            let input = read_input(&file)?;
            let table = betti_table_with_cap(&input.ideal, &field, max_polarized_vars)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&table.to_json()).expect("valid JSON")
                );
            } else {
                println!("{table}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            seed,
            count,
            max_vars,
            max_polarized_vars,
        } => {
            let params = suites::SuiteParams {
                seed,
                count,
                max_vars,
                max_polarized_vars,
            };
            let report = suites::run_suite(&suite, &params)?;
            eprintln!(
                "suite {} (seed {}): {}/{} cases passed in {} ms",
                report.suite, report.seed, report.cases_passed, report.cases_run, report.wall_ms
            );
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("valid JSON")
            );
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::ScanQ52 {
            seed,
            count,
            max_polarized_vars,
        } => {
            let report = scan::run_scan(seed, count, max_polarized_vars)?;
            eprintln!(
                "scan-q52 (seed {}): {} candidates among {} draws, {} violation(s) in {} ms",
                report.seed,
                report.cases_run,
                report.attempts,
                report.violations.len(),
                report.wall_ms
            );
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("valid JSON")
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Resource { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

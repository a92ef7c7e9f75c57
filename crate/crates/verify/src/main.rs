use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use cremona_verify::{emit_report, run_checks, OutputFormat, ParameterValue, RunConfig};

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Verifies the degree-13 Cremona family and its multiplicity bounds.
#[derive(Parser)]
#[command(name = "verify", version)]
struct Args {
    /// Run only this check (repeatable); heavy checks bring their pre-check.
    #[arg(long = "check", value_name = "ID")]
    checks: Vec<String>,
    /// Family parameter: `symbolic` or a rational such as `1` or `-3/2`.
    #[arg(long = "t", default_value = "symbolic", value_parser = parse_parameter, allow_hyphen_values = true)]
    t: ParameterValue,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run only the randomized pre-checks.
    #[arg(long)]
    fast: bool,
    /// Treat disagreement with stated constants as failure.
    #[arg(long)]
    strict_paper: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Include full polynomial text instead of digests.
    #[arg(long)]
    full_polys: bool,
    /// Report every elapsed time as zero.
    #[arg(long)]
    no_timing: bool,
}

fn parse_parameter(s: &str) -> Result<ParameterValue, String> {
    s.parse().map_err(|e: cremona_verify::ConfigError| e.to_string())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        selected_checks: (!args.checks.is_empty()).then_some(args.checks),
        t_value: args.t,
        seed: args.seed,
        fast_only: args.fast,
        strict_paper: args.strict_paper,
        output_path: args.out,
        output_format: match args.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        full_polys: args.full_polys,
        no_timing: args.no_timing,
    };
    let results = match run_checks(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    ExitCode::from(emit_report(&results, &config) as u8)
}

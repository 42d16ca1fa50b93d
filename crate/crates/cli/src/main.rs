use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use graded_cli::corpus::{run_corpus, run_self_test, CaseContext};
use graded_cli::random::{agreement_suite, implication_suite};
use graded_cli::report::{to_json, to_text};
use graded_cli::script::parse_script;
use graded_cli::session::{run_script, Options};
use graded_core::{Error, Field};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Runs analysis scripts over semigroup rings and monomial quotient rings,
/// or the built-in reference corpus.
#[derive(Debug, Parser)]
#[command(name = "graded", version)]
struct Cli {
    /// Script file; standard input when omitted.
    script: Option<PathBuf>,
    /// Coefficient field: `q` or `gf:<p>`.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: Field,
    /// Initial series horizon for semigroup rings.
    #[arg(long)]
    precision: Option<u32>,
    /// Degree bound for presentations.
    #[arg(long, default_value_t = 6)]
    degree_bound: u32,
    /// Number of canonical slices for quasi-Gorenstein checks (default r+4).
    #[arg(long)]
    window: Option<u32>,
    /// Seed for the random property suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Run the built-in corpus, optionally only cases whose id or ring
    /// contains the filter.
    #[arg(long, num_args = 0..=1, default_missing_value = "")]
    corpus: Option<String>,
    /// With `--corpus`: perturb one expected value to exercise the diff.
    #[arg(long, requires = "corpus")]
    self_test: bool,
    /// Run the random property suites on this many instances each.
    #[arg(long, conflicts_with = "corpus")]
    random: Option<usize>,
}

fn parse_field(text: &str) -> Result<Field, String> {
    match text {
        "q" | "Q" => Ok(Field::Rational),
        _ => {
            let p: u64 = text
                .strip_prefix("gf:")
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| format!("expected `q` or `gf:<p>`, got `{text}`"))?;
            if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
                return Err(format!("{p} is not prime"));
            }
            Ok(Field::Prime(p))
        }
    }
}

fn emit<T: Serialize>(format: Format, value: &T) {
    match format {
        Format::Json => println!("{}", to_json(value)),
        Format::Text => print!("{}", to_text(value)),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::UnknownName(_) => 2,
        Error::PrecisionExhausted { .. } => 3,
        _ => 1,
    }
}

#[derive(Serialize)]
struct PropertySummary<A, B> {
    seed: u64,
    agreement: Vec<A>,
    implication: Vec<B>,
    problems: usize,
}

fn run(cli: &Cli) -> Result<bool, Error> {
    if let Some(filter) = &cli.corpus {
        let ctx = CaseContext { field: cli.field, precision_factor: 1 };
        let filter = (!filter.is_empty()).then_some(filter.as_str());
        let report = if cli.self_test { run_self_test(&ctx, filter)? } else { run_corpus(&ctx, filter)? };
        emit(cli.format, &report);
        report.into_result()?;
        return Ok(true);
    }
    if let Some(n) = cli.random {
        let agreement = agreement_suite(cli.seed, n, cli.field)?;
        let implication = implication_suite(cli.seed, n, cli.field)?;
        let problems = agreement.iter().filter(|o| o.problem.is_some()).count()
            + implication.iter().filter(|o| o.problem.is_some()).count();
        emit(cli.format, &PropertySummary { seed: cli.seed, agreement, implication, problems });
        return Ok(problems == 0);
    }
    let text = match &cli.script {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Unsupported(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Unsupported(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    let script = parse_script(&text)?;
    let opts = Options {
        field: cli.field,
        precision: cli.precision,
        degree_bound: cli.degree_bound,
        window: cli.window,
    };
    emit(cli.format, &run_script(&script, &opts)?);
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

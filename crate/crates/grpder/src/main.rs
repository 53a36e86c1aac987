use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use grpder_core::derivation::{derivation_space_oracle, inner_basis, inner_witness};
use grpder_core::json::{parse_generator_images, AlgebraElementJson, DerivationPairJson};
use grpder_core::verify::{dims_row, verify_cases, CaseSpec};
use grpder_core::{AlgebraElement, AntiCentralizerTarget, Classification, DerivationPair};

const DEFAULT_MAX_N: usize = 12;

#[derive(Parser)]
#[command(
    name = "grpder",
    version,
    about = "Derivations of the group algebras F[V_8n]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print dimensions of Der, Inn and the outer complement.
    Dims {
        #[arg(long, value_delimiter = ',', default_values_t = [1usize, 2, 3, 4, 5, 6])]
        n_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [0u64, 3, 5, 7])]
        char_list: Vec<u64>,
        /// Emit JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Run every check over the grid n = 1..=n_max, char in chars.
    Verify {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [0u64, 3, 5, 7])]
        chars: Vec<u64>,
        /// Report path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a basis as JSON.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long = "char")]
        characteristic: u64,
        /// full | inner | anti_centralizer:b | anti_centralizer:a_inv_b
        #[arg(long)]
        which: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a derivation pair read from a JSON file.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long = "char")]
        characteristic: u64,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn max_n() -> Result<usize> {
    match std::env::var("GRPDER_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("GRPDER_MAX_N must be a positive integer, got {v:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_N),
        Err(e) => bail!("GRPDER_MAX_N: {e}"),
    }
}

fn case(n: usize, characteristic: u64, max_n: usize) -> Result<CaseSpec> {
    CaseSpec::new(n, characteristic, max_n)
        .with_context(|| format!("invalid case n={n} char={characteristic}"))
}

fn grid(ns: &[usize], chars: &[u64]) -> Result<Vec<CaseSpec>> {
    let max_n = max_n()?;
    if ns.is_empty() || chars.is_empty() {
        bail!("empty grid");
    }
    ns.iter()
        .flat_map(|&n| chars.iter().map(move |&c| (n, c)))
        .map(|(n, c)| case(n, c, max_n))
        .collect()
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing stdout"),
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Dims {
            n_list,
            char_list,
            json,
        } => {
            let rows: Vec<_> = grid(&n_list, &char_list)?
                .into_iter()
                .map(dims_row)
                .collect();
            if json {
                emit(&to_json(&rows), None)?;
            } else {
                let mut text = format!(
                    "{:>3} {:>4} {:>7} {:>7} {:>7} {:>9} {:>6}\n",
                    "n", "char", "dim_der", "dim_inn", "outer", "expected", "match"
                );
                for r in &rows {
                    text.push_str(&format!(
                        "{:>3} {:>4} {:>7} {:>7} {:>7} {:>9} {:>6}\n",
                        r.n,
                        r.characteristic,
                        r.dim_der_oracle,
                        r.dim_inner,
                        r.dim_outer_complement,
                        r.closed_form_expected,
                        if r.matches { "yes" } else { "NO" }
                    ));
                }
                emit(&text, None)?;
            }
            Ok(exit_for(rows.iter().all(|r| r.matches)))
        }
        Command::Verify { n_max, chars, out } => {
            let ns: Vec<usize> = (1..=n_max).collect();
            let report = verify_cases(&grid(&ns, &chars)?);
            emit(&to_json(&report), out.as_deref())?;
            for c in &report.cases {
                eprintln!(
                    "n={} char={}: {}",
                    c.n,
                    c.characteristic,
                    if c.pass { "pass" } else { "FAIL" }
                );
                for finding in c.findings() {
                    eprintln!("  finding: {finding}");
                }
            }
            Ok(exit_for(report.pass))
        }
        Command::Basis {
            n,
            characteristic,
            which,
            out,
        } => {
            let CaseSpec { params, field } = case(n, characteristic, max_n()?)?;
            let text = match which.as_str() {
                "full" => pairs_json(&derivation_space_oracle(params, field).basis()),
                "inner" => pairs_json(&inner_basis(params, field)),
                other => {
                    let Some(target) = other.strip_prefix("anti_centralizer:") else {
                        bail!("unknown basis {other:?}; expected full, inner or anti_centralizer:<b|a_inv_b>");
                    };
                    let target: AntiCentralizerTarget = target.parse()?;
                    let kernel = AlgebraElement::basis(params, field, target.element(params))
                        .anti_centralizer();
                    let elements: Vec<AlgebraElementJson> = kernel
                        .basis()
                        .iter()
                        .map(|v| {
                            AlgebraElement::from_vector(params, field, v)
                                .map(|x| AlgebraElementJson::from(&x))
                        })
                        .collect::<grpder_core::Result<_>>()?;
                    to_json(&elements)
                }
            };
            emit(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            n,
            characteristic,
            input,
        } => {
            let CaseSpec { params, field } = case(n, characteristic, max_n()?)?;
            let text = fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let images = parse_generator_images(&text)
                .with_context(|| format!("parsing {}", input.display()))?;
            if images.params() != params || images.field() != field {
                bail!(
                    "{} holds a pair over n={} char={}, not n={n} char={characteristic}",
                    input.display(),
                    images.params().n(),
                    images.field().characteristic()
                );
            }
            if let Some(relator) = images.first_failing_relator() {
                println!("NotADerivation");
                eprintln!("relator {relator} is not respected");
                return Ok(ExitCode::SUCCESS);
            }
            let d = DerivationPair::new(images)?;
            match inner_witness(&d)? {
                Some(beta) => {
                    println!("{}", Classification::Inner);
                    println!(
                        "witness: {}",
                        serde_json::to_string(&AlgebraElementJson::from(&beta))?
                    );
                }
                None => println!("{}", Classification::Outer),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn pairs_json(pairs: &[DerivationPair]) -> String {
    let json: Vec<DerivationPairJson> = pairs.iter().map(DerivationPairJson::from).collect();
    to_json(&json)
}

fn exit_for(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

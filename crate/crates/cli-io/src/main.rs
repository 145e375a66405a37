//! `spcorr`: block data, dominance extremes, multiplicity tables, and
//! verification sweeps for marked symplectic couples.
//!
//! Every command prints one JSON document (tables may opt into TSV) shaped
//! as `{schema_version, inputs, outputs, timings}` with stable key order,
//! so fixed inputs and flags always produce identical bytes. Exit codes:
//! 2 for usage errors, 1 for a failed verification, 0 otherwise.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thiserror::Error;

use extremal::{
    bar_with_trace, lambda_max, lambda_min, mult_pair, mult_table, verify_sweep, BarTrace,
    MultTable, SweepKind,
};
use pab_engine::{p_constrained_set, p_set, IndexedPair, Params, ShuffleOrder};
use partition_core::{parse_sign_map, Partition, Rat, SignMap};
use springer_corr::{springer_to_pair, MarkedSymplectic};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] partition_core::CoreError),
    #[error(transparent)]
    Engine(#[from] pab_engine::EngineError),
    #[error(transparent)]
    Corr(#[from] springer_corr::CorrError),
    #[error(transparent)]
    Extremal(#[from] extremal::ExtremalError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser)]
#[command(name = "spcorr", version, about, propagate_version = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Block index and staircase rows of a couple.
    Springer(SpringerArgs),
    /// Dominance-greatest couple over the source, with its peeling chain.
    Max(ExtremeArgs),
    /// Dominance-least couple, reached by twisting the maximum.
    Min(ExtremeArgs),
    /// One multiplicity value, or the whole nonzero table with --all.
    Mult(MultArgs),
    /// The bipartition set of an indexed pair, optionally constrained.
    Pset(PsetArgs),
    /// Verification sweeps over every couple up to a total.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SpringerArgs {
    /// Partition as comma-separated parts, e.g. 2,2
    #[arg(long)]
    lambda: String,
    /// Signs on the distinct even parts, e.g. 2:+ (omit when there are none)
    #[arg(long, default_value = "")]
    epsilon: String,
    /// Ambient row count; defaults to half the total
    #[arg(long)]
    r: Option<usize>,
    /// Write the payload to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExtremeArgs {
    /// Partition as comma-separated parts, e.g. 2,2
    #[arg(long)]
    lambda: String,
    /// Signs on the distinct even parts, e.g. 2:+ (omit when there are none)
    #[arg(long, default_value = "")]
    epsilon: String,
    /// Write the payload to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MultArgs {
    /// Source partition
    #[arg(long)]
    lambda: String,
    /// Source signs
    #[arg(long, default_value = "")]
    epsilon: String,
    /// Target partition (excludes --all)
    #[arg(long)]
    target_lambda: Option<String>,
    /// Target signs
    #[arg(long, default_value = "")]
    target_epsilon: String,
    /// Emit every nonzero entry of the source's table
    #[arg(long)]
    all: bool,
    /// Output format for tables
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the payload to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PsetArgs {
    /// First row, e.g. 2,1
    #[arg(long)]
    alpha: String,
    /// Second row
    #[arg(long, default_value = "")]
    beta: String,
    /// Shuffle word over A and B, e.g. ABA
    #[arg(long)]
    order: String,
    /// First staircase top as a rational p/q; needs --B and --s
    #[arg(long = "A")]
    top_a: Option<String>,
    /// Second staircase top as a rational p/q; needs --A and --s
    #[arg(long = "B")]
    top_b: Option<String>,
    /// Staircase step as a rational p/q; needs --A and --B
    #[arg(long = "s")]
    step: Option<String>,
    /// Write the payload to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest couple total to sweep, inclusive
    #[arg(long)]
    max_2n: i64,
    /// Restrict to one family: max, min, bar, defect, uv, roundtrip,
    /// transfer, or halfstep
    #[arg(long)]
    theorem: Option<String>,
    /// Include wall-clock milliseconds in the payload
    #[arg(long)]
    timings: bool,
    /// Write the payload to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Springer(args) => springer_command(args),
        Command::Max(args) => extreme_command(args, true),
        Command::Min(args) => extreme_command(args, false),
        Command::Mult(args) => mult_command(args),
        Command::Pset(args) => pset_command(args),
        Command::Verify(args) => verify_command(args),
    }
}

/// Couple from its two text fields; the sign keys must be exactly the
/// distinct even parts.
fn parse_marked(lambda: &str, epsilon: &str) -> Result<MarkedSymplectic, CliError> {
    let lambda: Partition = lambda.parse()?;
    let epsilon = parse_sign_map(epsilon)?;
    Ok(MarkedSymplectic::new(lambda, epsilon)?)
}

fn parse_rat(text: &str) -> Result<Rat, CliError> {
    text.trim()
        .parse::<Rat>()
        .map_err(|_| CliError::Usage(format!("bad rational literal: {text}")))
}

fn envelope(inputs: Value, outputs: Value, timings: Value) -> Value {
    json!({
        "schema_version": 1,
        "inputs": inputs,
        "outputs": outputs,
        "timings": timings,
    })
}

/// Sign map as an object with string part keys in descending part order and
/// ±1 integer values.
fn epsilon_json(map: &SignMap) -> Value {
    let mut object = Map::new();
    for (part, sign) in map.iter().rev() {
        object.insert(part.to_string(), json!(sign.value()));
    }
    Value::Object(object)
}

fn couple_inputs(couple: &MarkedSymplectic) -> Value {
    json!({
        "lambda": couple.lambda().parts(),
        "epsilon": epsilon_json(couple.epsilon()),
    })
}

fn chain_json(chain: &[BarTrace]) -> Value {
    let steps: Vec<Value> = chain
        .iter()
        .map(|step| {
            json!({
                "bar_first": step.bar_first(),
                "sign": step.leading_sign().value(),
                "changes": step.frak_s(),
                "index_class_a": step.j_a(),
                "index_class_b": step.j_b(),
                "residual_lambda": step.derived().lambda().parts(),
                "residual_epsilon": epsilon_json(step.derived().epsilon()),
            })
        })
        .collect();
    json!(steps)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn springer_command(args: SpringerArgs) -> Result<ExitCode, CliError> {
    let couple = parse_marked(&args.lambda, &args.epsilon)?;
    let r = args.r.unwrap_or_else(|| couple.default_r());
    let datum = springer_to_pair(&couple, r)?;
    let payload = envelope(
        json!({
            "lambda": couple.lambda().parts(),
            "epsilon": epsilon_json(couple.epsilon()),
            "r": r,
        }),
        json!({
            "k": datum.k(),
            "alpha": datum.alpha().parts(),
            "beta": datum.beta().parts(),
        }),
        Value::Null,
    );
    emit(&payload.to_string(), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn extreme_command(args: ExtremeArgs, greatest: bool) -> Result<ExitCode, CliError> {
    let couple = parse_marked(&args.lambda, &args.epsilon)?;
    let extreme = if greatest {
        lambda_max(&couple)?
    } else {
        lambda_min(&couple)?
    };
    let (_, chain) = bar_with_trace(&couple)?;
    let (lambda_key, epsilon_key) = if greatest {
        ("lambda_max", "epsilon_max")
    } else {
        ("lambda_min", "epsilon_min")
    };
    let payload = envelope(
        couple_inputs(&couple),
        json!({
            (lambda_key): extreme.lambda().parts(),
            (epsilon_key): epsilon_json(extreme.epsilon()),
            "chain": chain_json(&chain),
        }),
        Value::Null,
    );
    emit(&payload.to_string(), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

/// Table rows ordered by descending dominance rank: the count of entries
/// whose partition the row's partition dominates.
fn table_rows(table: &MultTable) -> Vec<(&MarkedSymplectic, i64, usize)> {
    let mut rows: Vec<(&MarkedSymplectic, i64, usize)> = table
        .entries()
        .iter()
        .map(|(target, &value)| {
            let rank = table
                .entries()
                .keys()
                .filter(|other| other.lambda().dominance_leq(target.lambda()))
                .count();
            (target, value, rank)
        })
        .collect();
    rows.sort_by(|x, y| y.2.cmp(&x.2).then_with(|| x.0.cmp(y.0)));
    rows
}

fn table_tsv(rows: &[(&MarkedSymplectic, i64, usize)]) -> String {
    let mut text = String::from("lambda\tepsilon\tmult\tdominance-rank");
    for (target, value, rank) in rows {
        text.push_str(&format!(
            "\n{}\t{}\t{value}\t{rank}",
            target.lambda_text(),
            target.epsilon_text()
        ));
    }
    text
}

fn mult_command(args: MultArgs) -> Result<ExitCode, CliError> {
    let couple = parse_marked(&args.lambda, &args.epsilon)?;
    match (&args.target_lambda, args.all) {
        (Some(_), true) => Err(CliError::Usage(
            "--all and --target-lambda exclude each other".to_string(),
        )),
        (None, false) => Err(CliError::Usage(
            "give either --target-lambda or --all".to_string(),
        )),
        (Some(target_lambda), false) => {
            if args.format == Format::Tsv {
                return Err(CliError::Usage("tsv output requires --all".to_string()));
            }
            let target = parse_marked(target_lambda, &args.target_epsilon)?;
            let value = mult_pair(&couple, &target)?;
            let payload = envelope(
                json!({
                    "lambda": couple.lambda().parts(),
                    "epsilon": epsilon_json(couple.epsilon()),
                    "target_lambda": target.lambda().parts(),
                    "target_epsilon": epsilon_json(target.epsilon()),
                }),
                json!({ "mult": value }),
                Value::Null,
            );
            emit(&payload.to_string(), args.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        (None, true) => {
            let table = mult_table(&couple)?;
            let rows = table_rows(&table);
            let text = match args.format {
                Format::Tsv => table_tsv(&rows),
                Format::Json => {
                    let entries: Vec<Value> = rows
                        .iter()
                        .map(|(target, value, rank)| {
                            json!({
                                "lambda": target.lambda().parts(),
                                "epsilon": epsilon_json(target.epsilon()),
                                "mult": value,
                                "dominance_rank": rank,
                            })
                        })
                        .collect();
                    envelope(
                        couple_inputs(&couple),
                        json!({ "table": entries }),
                        Value::Null,
                    )
                    .to_string()
                }
            };
            emit(&text, args.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn pset_command(args: PsetArgs) -> Result<ExitCode, CliError> {
    let alpha: Partition = args.alpha.parse()?;
    let beta: Partition = args.beta.parse()?;
    let order: ShuffleOrder = args.order.parse()?;
    let pair = IndexedPair::new(alpha, beta, order)?;
    let given = [&args.top_a, &args.top_b, &args.step]
        .iter()
        .filter(|option| option.is_some())
        .count();
    let elements = match given {
        0 => p_set(&pair),
        3 => {
            let params = Params::new(
                pair.n(),
                pair.m(),
                parse_rat(args.top_a.as_deref().unwrap())?,
                parse_rat(args.top_b.as_deref().unwrap())?,
                parse_rat(args.step.as_deref().unwrap())?,
            )?;
            p_constrained_set(&pair, &params)?
        }
        _ => {
            return Err(CliError::Usage(
                "give all of --A, --B, --s or none".to_string(),
            ))
        }
    };
    let listed: Vec<Value> = elements
        .iter()
        .map(|element| json!({ "nu": element.nu.parts(), "mu": element.mu.parts() }))
        .collect();
    let payload = envelope(
        json!({
            "alpha": pair.alpha().parts(),
            "beta": pair.beta().parts(),
            "order": pair.order().to_string(),
            "A": args.top_a,
            "B": args.top_b,
            "s": args.step,
        }),
        json!({ "count": listed.len(), "elements": listed }),
        Value::Null,
    );
    emit(&payload.to_string(), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn verify_command(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let kinds: Vec<SweepKind> = match &args.theorem {
        Some(name) => vec![name.parse()?],
        None => SweepKind::ALL.to_vec(),
    };
    let started = Instant::now();
    let mut sweeps = Vec::new();
    let mut times = Map::new();
    let mut pass = true;
    for kind in kinds {
        let sweep_started = Instant::now();
        let outcome = verify_sweep(kind, args.max_2n);
        times.insert(
            format!("{kind}_ms"),
            json!(sweep_started.elapsed().as_millis() as u64),
        );
        pass &= outcome.pass();
        sweeps.push(json!({
            "kind": outcome.kind.to_string(),
            "max_2n": outcome.max_two_n,
            "instances": outcome.instances,
            "failures": outcome.failures,
        }));
    }
    let timings = if args.timings {
        times.insert(
            "total_ms".to_string(),
            json!(started.elapsed().as_millis() as u64),
        );
        Value::Object(times)
    } else {
        Value::Null
    };
    let payload = envelope(
        json!({ "max_2n": args.max_2n, "theorem": args.theorem }),
        json!({ "sweeps": sweeps, "pass": pass }),
        timings,
    );
    emit(&payload.to_string(), args.out.as_deref())?;
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_marked_accepts_a_valid_couple() {
        let couple = parse_marked("2,2", "2:-").unwrap();
        assert_eq!(couple.lambda_text(), "2,2");
        assert_eq!(couple.epsilon_text(), "2:-");
    }

    #[test]
    fn parse_marked_rejects_bad_couples() {
        assert!(parse_marked("3,1", "").is_err());
        assert!(parse_marked("2", "4:+").is_err());
        assert!(parse_marked("2,x", "").is_err());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rat("7/2").unwrap(), Rat::new(7, 2));
        assert_eq!(parse_rat("4").unwrap(), Rat::new(4, 1));
        assert!(parse_rat("4/").is_err());
    }

    #[test]
    fn table_rows_put_the_maximum_first() {
        let couple = parse_marked("2,2", "2:+").unwrap();
        let table = mult_table(&couple).unwrap();
        let rows = table_rows(&table);
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].0.lambda_text(), "4");
        assert_eq!((rows[0].1, rows[0].2), (1, 2));
        assert_eq!(rows[1].0.lambda_text(), "2,2");
        assert_eq!((rows[1].1, rows[1].2), (1, 1));
    }
}

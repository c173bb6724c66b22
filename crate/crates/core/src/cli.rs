//! The `qdivisor` command line: `table`, `verify` and `bench`.
//!
//! Exit status is 0 when everything requested succeeded, 1 when a
//! verification (or a bench equivalence check) failed, and 2 on usage
//! errors.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::divisor_sums::{divisor_sum, divisor_table, DivisorSumKind};
use crate::identity::{check_many, IdentityName, VerificationReport};
use crate::recurrences::{recurrence_table, RecurrenceKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qdivisor",
    version,
    about = "Divisor sums, partitions and q-series identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print divisor-sum values for n = 1..=max.
    Table(TableArgs),
    /// Certify identities to a truncation order.
    Verify(VerifyArgs),
    /// Time trial division, sieve and recurrence for one kind.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Oracle,
    Recurrence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Trial,
    Sieve,
    Recurrence,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Trial => "trial",
            Engine::Sieve => "sieve",
            Engine::Recurrence => "recurrence",
        }
    }
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long = "max", value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
    /// Comma-separated: sigma, sigma-even, sigma-odd, tilde, bar.
    #[arg(long, value_delimiter = ',', required = true)]
    kinds: Vec<DivisorSumKind>,
    #[arg(long, value_enum, default_value = "oracle")]
    source: Source,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// `all`, or comma-separated identity names.
    #[arg(long, default_value = "all")]
    identities: String,
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    kind: DivisorSumKind,
    #[arg(long = "max", value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
    #[arg(long = "reps", default_value = "3", value_parser = clap::value_parser!(u64).range(1..))]
    repetitions: u64,
    #[arg(
        long,
        value_delimiter = ',',
        value_enum,
        default_value = "trial,sieve,recurrence"
    )]
    engines: Vec<Engine>,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

/// Integers below 2^53 in magnitude as JSON numbers, larger ones as
/// decimal strings.
pub fn json_integer(v: &BigInt) -> Value {
    const LIMIT: i64 = 1 << 53;
    match i64::try_from(v) {
        Ok(small) if small.abs() < LIMIT => Value::from(small),
        _ => Value::String(v.to_string()),
    }
}

fn write_json(out: &mut dyn Write, doc: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)
}

fn write_aligned(out: &mut dyn Write, header: &[String], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(header))?;
    for row in rows {
        writeln!(out, "{}", line(row))?;
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, header: &[String], rows: &[Vec<String>]) -> io::Result<()> {
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

fn column(kind: DivisorSumKind, max_n: usize, source: Source) -> Result<Vec<BigInt>, String> {
    match source {
        Source::Oracle => Ok(divisor_table(max_n, kind)
            .map_err(|e| e.to_string())?
            .into_values()),
        Source::Recurrence => {
            let rec = RecurrenceKind::for_divisor_sum(kind).map_err(|e| e.to_string())?;
            Ok(recurrence_table(rec, max_n)
                .map_err(|e| e.to_string())?
                .values()
                .to_vec())
        }
    }
}

fn run_table(args: TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let max_n = args.max_n as usize;
    let mut columns = Vec::with_capacity(args.kinds.len());
    for &kind in &args.kinds {
        match column(kind, max_n, args.source) {
            Ok(c) => columns.push(c),
            Err(msg) => {
                writeln!(err, "error: {msg}")?;
                return Ok(EXIT_USAGE);
            }
        }
    }

    let header: Vec<String> = std::iter::once("n".to_string())
        .chain(args.kinds.iter().map(|k| k.name().to_string()))
        .collect();

    match args.format {
        OutputFormat::Json => {
            let rows: Vec<Value> = (0..max_n)
                .map(|i| {
                    let mut row = Map::new();
                    row.insert("n".into(), Value::from(i + 1));
                    for (kind, col) in args.kinds.iter().zip(&columns) {
                        row.insert(kind.name().into(), json_integer(&col[i]));
                    }
                    Value::Object(row)
                })
                .collect();
            let source = match args.source {
                Source::Oracle => "oracle",
                Source::Recurrence => "recurrence",
            };
            let doc = json!({
                "command": "table",
                "parameters": {
                    "max": max_n,
                    "kinds": args.kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
                    "source": source,
                },
                "rows": rows,
            });
            write_json(out, &doc)?;
        }
        format => {
            let rows: Vec<Vec<String>> = (0..max_n)
                .map(|i| {
                    std::iter::once((i + 1).to_string())
                        .chain(columns.iter().map(|c| c[i].to_string()))
                        .collect()
                })
                .collect();
            if format == OutputFormat::Csv {
                write_csv(out, &header, &rows)?;
            } else {
                write_aligned(out, &header, &rows)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_identities(list: &str) -> Result<Vec<IdentityName>, String> {
    if list == "all" {
        return Ok(IdentityName::ALL.to_vec());
    }
    let names: Result<Vec<_>, _> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse::<IdentityName>)
        .collect();
    match names {
        Ok(names) if !names.is_empty() => Ok(names),
        Ok(_) => Err("no identities given".into()),
        Err(e) => Err(e),
    }
}

fn support_text(support: &[(u64, BigInt)]) -> String {
    let terms: Vec<String> = support
        .iter()
        .map(|(e, c)| {
            let sign = if c.is_negative() { "" } else { "+" };
            format!("{e}:{sign}{c}")
        })
        .collect();
    format!("{{{}}}", terms.join(", "))
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "identity": r.identity.name(),
        "order": r.order,
        "domain": r.domain.to_string(),
        "passed": r.passed,
        "first_mismatch": r.first_mismatch.as_ref().map(|m| json!({
            "index": m.index,
            "lhs": json_integer(&m.lhs),
            "rhs": json_integer(&m.rhs),
        })),
        "support": r.support.as_ref().map(|s| {
            s.iter().map(|(e, c)| json!([e, json_integer(c)])).collect::<Vec<_>>()
        }),
        "elapsed_ms": millis(r.elapsed),
    })
}

fn run_verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let identities = match parse_identities(&args.identities) {
        Ok(ids) => ids,
        Err(msg) => {
            let valid: Vec<_> = IdentityName::ALL.iter().map(|i| i.name()).collect();
            writeln!(err, "error: {msg}")?;
            writeln!(err, "valid identities: all, {}", valid.join(", "))?;
            return Ok(EXIT_USAGE);
        }
    };

    let reports = check_many(&identities, args.order);
    let all_passed = reports.iter().all(|r| r.passed);

    match args.format {
        OutputFormat::Json => {
            let doc = json!({
                "command": "verify",
                "parameters": {
                    "identities": identities.iter().map(|i| i.name()).collect::<Vec<_>>(),
                    "order": args.order,
                },
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            });
            write_json(out, &doc)?;
        }
        OutputFormat::Csv => {
            writeln!(
                out,
                "identity,order,domain,passed,mismatch_index,mismatch_lhs,mismatch_rhs,elapsed_ms"
            )?;
            for r in &reports {
                let (index, lhs, rhs) = match &r.first_mismatch {
                    Some(m) => (m.index.to_string(), m.lhs.to_string(), m.rhs.to_string()),
                    None => Default::default(),
                };
                writeln!(
                    out,
                    "{},{},{},{},{index},{lhs},{rhs},{:.3}",
                    r.identity,
                    r.order,
                    r.domain,
                    r.passed,
                    millis(r.elapsed)
                )?;
            }
        }
        OutputFormat::Plain => {
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                write!(
                    out,
                    "{status} {} order={} ({})",
                    r.identity, r.order, r.domain
                )?;
                if let Some(m) = &r.first_mismatch {
                    write!(
                        out,
                        " first mismatch at {}: lhs={} rhs={}",
                        m.index, m.lhs, m.rhs
                    )?;
                }
                if let Some(s) = &r.support {
                    write!(out, " support={}", support_text(s))?;
                }
                writeln!(out, " [{:.1} ms]", millis(r.elapsed))?;
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} passed", reports.len())?;
        }
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_FAILED })
}

fn compute(engine: Engine, kind: DivisorSumKind, max_n: usize) -> Vec<BigInt> {
    match engine {
        Engine::Trial => (1..=max_n as i64).map(|n| divisor_sum(n, kind)).collect(),
        Engine::Sieve => divisor_table(max_n, kind)
            .expect("max_n >= 1")
            .into_values(),
        Engine::Recurrence => {
            let rec = RecurrenceKind::for_divisor_sum(kind).expect("checked before timing");
            recurrence_table(rec, max_n)
                .expect("max_n >= 1")
                .values()
                .to_vec()
        }
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

const HEAD: usize = 10;

fn run_bench(args: BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let max_n = args.max_n as usize;
    let mut engines = args.engines.clone();
    engines.dedup();
    if engines.contains(&Engine::Recurrence) {
        if let Err(e) = RecurrenceKind::for_divisor_sum(args.kind) {
            writeln!(err, "error: {e}; pass --engines trial,sieve")?;
            return Ok(EXIT_USAGE);
        }
    }

    let reference: Vec<Vec<BigInt>> = engines
        .iter()
        .map(|&e| compute(e, args.kind, max_n))
        .collect();
    if let Some(i) = reference.iter().position(|v| v != &reference[0]) {
        let n = reference[0]
            .iter()
            .zip(&reference[i])
            .position(|(a, b)| a != b)
            .map_or(0, |p| p + 1);
        writeln!(
            err,
            "error: {} and {} disagree at n = {n}",
            engines[0].name(),
            engines[i].name()
        )?;
        return Ok(EXIT_FAILED);
    }

    let timings: Vec<Duration> = engines
        .iter()
        .map(|&e| {
            let samples = (0..args.repetitions)
                .map(|_| {
                    let start = Instant::now();
                    std::hint::black_box(compute(e, args.kind, max_n));
                    start.elapsed()
                })
                .collect();
            median(samples)
        })
        .collect();

    let checksum = |v: &[BigInt]| v.iter().fold(BigInt::zero(), |acc, x| acc + x);

    match args.format {
        OutputFormat::Json => {
            let rows: Vec<Value> = engines
                .iter()
                .zip(&timings)
                .zip(&reference)
                .map(|((e, t), values)| {
                    json!({
                        "engine": e.name(),
                        "median_ms": millis(*t),
                        "checksum": json_integer(&checksum(values)),
                        "values_head": values.iter().take(HEAD).map(json_integer).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "command": "bench",
                "parameters": {
                    "kind": args.kind.name(),
                    "max": max_n,
                    "reps": args.repetitions,
                },
                "rows": rows,
            });
            write_json(out, &doc)?;
        }
        format => {
            let header: Vec<String> = ["engine", "median_ms", "checksum", "first_values"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rows: Vec<Vec<String>> = engines
                .iter()
                .zip(&timings)
                .zip(&reference)
                .map(|((e, t), values)| {
                    let head: Vec<String> =
                        values.iter().take(HEAD).map(ToString::to_string).collect();
                    vec![
                        e.name().to_string(),
                        format!("{:.3}", millis(*t)),
                        checksum(values).to_string(),
                        head.join(" "),
                    ]
                })
                .collect();
            if format == OutputFormat::Csv {
                write_csv(out, &header, &rows)?;
            } else {
                write_aligned(out, &header, &rows)?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the subcommand, writing to
/// `out` and `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match cli.command {
        Command::Table(args) => run_table(args, out, err),
        Command::Verify(args) => run_verify(args, out, err),
        Command::Bench(args) => run_bench(args, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_FAILED
    })
}

//! Command-line front end: argument definitions, output records and the
//! command dispatcher. `main.rs` only wires stdout/stderr and the exit code.

use std::io::{self, Write};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use idpt::generator::{generate_all_with, stream_for_d};
use idpt::oracle::{self, brute_force_by_d, VerdictKind, DEFAULT_SCAN_CAP};
use idpt::{
    admissible_ds_up_to, classify, factorize, Error, Execution, GeneratedTriple, Limit, Order,
};

/// Environment variable overriding the `n` cap of `idpt brute`.
pub const SCAN_CAP_ENV: &str = "IDPT_SCAN_CAP";

pub const EXIT_OK: u8 = 0;
/// Domain negative: not primitive, inadmissible gap, oracle disagreement.
pub const EXIT_NEGATIVE: u8 = 1;
/// Usage errors and arithmetic overflow.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "idpt",
    version,
    about = "Primitive Pythagorean triples by hypotenuse-leg gap"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate primitive triples for one gap d, or all with a <= a-max.
    Gen(GenArgs),
    /// Classify a triple: prints idpt, dpt gcd=<g> or not-dpt.
    Check(CheckArgs),
    /// List admissible gaps d up to a bound.
    Admissible(AdmissibleArgs),
    /// Print the prime factorization of n.
    Factor(FactorArgs),
    /// Brute-force n-scan for one gap (cap from IDPT_SCAN_CAP).
    Brute(BruteArgs),
    /// Compare the generator against both brute-force oracles.
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["d", "a_max"])))]
pub struct GenArgs {
    /// Gap c - b.
    #[arg(long, requires = "count")]
    pub d: Option<u64>,
    /// Number of triples to emit for --d.
    #[arg(long, requires = "d")]
    pub count: Option<usize>,
    /// Emit every primitive triple with shorter leg a <= this.
    #[arg(long)]
    pub a_max: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Ordering for --a-max output.
    #[arg(long, value_enum, default_value_t = OrderArg::ByLegs)]
    pub order: OrderArg,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub a: u64,
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub b: u64,
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub c: u64,
}

#[derive(Debug, Args)]
pub struct AdmissibleArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max: u64,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[arg(value_parser = clap::value_parser!(u64).range(2..))]
    pub n: u64,
}

#[derive(Debug, Args)]
pub struct BruteArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub d: u64,
    #[arg(long)]
    pub count: usize,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long)]
    pub a_max: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    ByR,
    ByLegs,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::ByR => Order::ByR,
            OrderArg::ByLegs => Order::ByLegs,
        }
    }
}

/// One output row: a generated triple with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub d: u64,
    pub n: u64,
    pub r: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl From<&GeneratedTriple> for OutputRecord {
    fn from(t: &GeneratedTriple) -> Self {
        Self {
            d: t.d,
            n: t.n,
            r: t.r,
            a: t.a,
            b: t.b,
            c: t.c,
        }
    }
}

pub fn write_records(
    out: &mut dyn Write,
    records: &[OutputRecord],
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Table => write_table(out, records),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if records.is_empty() {
                w.write_record(["d", "n", "r", "a", "b", "c"])?;
            }
            for r in records {
                w.serialize(r)?;
            }
            w.flush()
        }
        Format::Jsonl => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn write_table(out: &mut dyn Write, records: &[OutputRecord]) -> io::Result<()> {
    const HEADER: [&str; 6] = ["d", "n", "r", "a", "b", "c"];
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| [r.d, r.n, r.r, r.a, r.b, r.c].map(|v| v.to_string()))
        .collect();
    let mut widths = HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |out: &mut dyn Write, cells: [&str; 6]| -> io::Result<()> {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", parts.join("  "))
    };
    line(out, HEADER)?;
    for row in &rows {
        line(
            out,
            [&row[0], &row[1], &row[2], &row[3], &row[4], &row[5]].map(String::as_str),
        )?;
    }
    Ok(())
}

pub fn read_csv(input: &str) -> Result<Vec<OutputRecord>, csv::Error> {
    csv::Reader::from_reader(input.as_bytes())
        .deserialize()
        .collect()
}

pub fn read_jsonl(input: &str) -> Result<Vec<OutputRecord>, serde_json::Error> {
    input
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(serde_json::from_str)
        .collect()
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Inadmissible { .. } | Error::ScanCapReached { .. } => EXIT_NEGATIVE,
        _ => EXIT_USAGE,
    }
}

/// Runs one parsed command. `scan_cap` is the value of [`SCAN_CAP_ENV`], if set.
pub fn run(
    cli: Cli,
    scan_cap: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args, out, err),
        Command::Check(args) => cmd_check(args, out, err),
        Command::Admissible(args) => {
            for d in admissible_ds_up_to(args.max) {
                writeln!(out, "{d}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Factor(args) => match factorize(args.n) {
            Ok(pf) => {
                writeln!(out, "{pf}")?;
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "idpt: {e}")?;
                Ok(EXIT_USAGE)
            }
        },
        Command::Brute(args) => cmd_brute(args, scan_cap, out, err),
        Command::Crosscheck(args) => cmd_crosscheck(args, out, err),
    }
}

fn cmd_gen(args: GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<u8> {
    let (records, failure) = match (args.d, args.count, args.a_max) {
        (Some(d), Some(count), None) => match stream_for_d(d, Limit::MaxCount(count)) {
            Err(e) => (Vec::new(), Some(e)),
            Ok(stream) => {
                let mut records = Vec::new();
                let mut failure = None;
                for t in stream {
                    match t {
                        Ok(t) => records.push(OutputRecord::from(&t)),
                        Err(e) => {
                            failure = Some(e);
                            break;
                        }
                    }
                }
                (records, failure)
            }
        },
        (None, None, Some(a_max)) => {
            match generate_all_with(a_max, args.order.into(), Execution::default()) {
                Ok(all) => (all.iter().map(OutputRecord::from).collect(), None),
                Err(e) => (Vec::new(), Some(e)),
            }
        }
        _ => {
            writeln!(err, "idpt: give either --d with --count, or --a-max")?;
            return Ok(EXIT_USAGE);
        }
    };
    if failure
        .as_ref()
        .is_some_and(|e| matches!(e, Error::Inadmissible { .. }))
    {
        writeln!(err, "idpt: {}", failure.as_ref().unwrap())?;
        return Ok(EXIT_NEGATIVE);
    }
    write_records(out, &records, args.format)?;
    match failure {
        None => Ok(EXIT_OK),
        Some(e) => {
            writeln!(err, "idpt: {e}")?;
            Ok(exit_for(&e))
        }
    }
}

fn cmd_check(args: CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<u8> {
    match classify(args.a, args.b, args.c) {
        Ok(v) => {
            match v.kind {
                VerdictKind::Idpt => writeln!(out, "idpt")?,
                VerdictKind::ReducibleDpt => writeln!(out, "dpt gcd={}", v.gcd)?,
                VerdictKind::NotDpt => writeln!(out, "not-dpt")?,
            }
            Ok(if v.is_idpt() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Err(e) => {
            writeln!(err, "idpt: {e}")?;
            Ok(EXIT_USAGE)
        }
    }
}

fn cmd_brute(
    args: BruteArgs,
    scan_cap: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    let cap = match scan_cap.map(str::parse::<u64>) {
        None => DEFAULT_SCAN_CAP,
        Some(Ok(cap)) => cap,
        Some(Err(_)) => {
            writeln!(err, "idpt: {SCAN_CAP_ENV} must be a nonnegative integer")?;
            return Ok(EXIT_USAGE);
        }
    };
    match brute_force_by_d(args.d, args.count, cap) {
        Ok(found) => {
            writeln!(out, "d,n,a,b,c")?;
            for s in found {
                let t = s.triple;
                writeln!(out, "{},{},{},{},{}", args.d, s.n, t.a, t.b, t.c)?;
            }
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(err, "idpt: {e}")?;
            Ok(exit_for(&e))
        }
    }
}

fn cmd_crosscheck(
    args: CrosscheckArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    use std::collections::BTreeSet;

    let generated: BTreeSet<_> = match idpt::generate_all(args.a_max) {
        Ok(all) => all.iter().map(GeneratedTriple::triple).collect(),
        Err(e) => {
            writeln!(err, "idpt: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let brute = oracle::brute_force_by_a(args.a_max);
    let euclid = oracle::euclid_by_a(args.a_max);
    writeln!(out, "generated {}", generated.len())?;
    writeln!(out, "brute-force {}", brute.len())?;
    writeln!(out, "euclid {}", euclid.len())?;
    let agree = generated == brute && brute == euclid;
    writeln!(out, "{}", if agree { "agree" } else { "DISAGREE" })?;
    Ok(if agree { EXIT_OK } else { EXIT_NEGATIVE })
}

//! `sptforge`: verifies the identity catalog, prints spt and crank tables,
//! checks congruences and compares series against enumeration.
//!
//! Exit status 0 means every executed check verified, 1 means some check
//! failed or could not be evaluated, 2 means the invocation was rejected.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use sptforge_core::combinatorics::spt_oracle;
use sptforge_core::qseries::Mismatch;
use sptforge_core::registry::{self, IdentityCase};
use sptforge_core::report::{Status, VerificationReport};
use sptforge_core::sptcrank::{check_congruence, crank_table, spt_table, CongruenceFailure, SptFamily};
use sptforge_core::{Error, N_MAX_CAP};

/// Largest n compared by `oracle-compare`: partition enumeration grows
/// exponentially, overpartition convolution faster still.
fn oracle_cap(family: SptFamily) -> usize {
    match family {
        SptFamily::F3 | SptFamily::G4 | SptFamily::AG4 => 40,
        _ => 60,
    }
}

#[derive(Parser, Debug)]
#[command(name = "sptforge", version, about = "Exact verifier for spt-crank-type q-series identities and congruences")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    parallelism: Option<usize>,
    /// Shuffle the dispatch order with this seed. Output order is unaffected.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Run the mod 7 F3 cases at exactly the orders certified by the
    /// modular-function argument (211 and 148).
    #[arg(long, global = true)]
    paper_bounds: bool,
    /// Report `millis` as null so that runs compare byte for byte.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify catalog identities.
    Verify {
        /// Glob over identity ids.
        #[arg(long, default_value = "*")]
        id: String,
        /// Minimum truncation order; cases never run below their default.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Print spt_X(n) for 1 ≤ n ≤ max.
    Spt {
        #[arg(long, value_parser = parse_family)]
        family: SptFamily,
        #[arg(long)]
        max: usize,
    },
    /// Print the class counts M_X(k, t, n) for 1 ≤ n ≤ max and 0 ≤ k < t.
    Crank {
        #[arg(long, value_parser = parse_family)]
        family: SptFamily,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[arg(long)]
        max: usize,
    },
    /// Check spt_X(pn + b) ≡ 0 (mod p) for pn + b ≤ max.
    Congruence {
        #[arg(long, value_parser = parse_family)]
        family: SptFamily,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        max: usize,
    },
    /// Compare spt_X(n) from the series with direct enumeration.
    OracleCompare {
        #[arg(long, value_parser = parse_family)]
        family: SptFamily,
        #[arg(long)]
        max: usize,
    },
    /// List catalog identities.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_family(s: &str) -> Result<SptFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Why a run stopped before producing its verdict.
enum Fatal {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Fatal {
    fn from(e: io::Error) -> Self {
        Fatal::Io(e)
    }
}

impl From<csv::Error> for Fatal {
    fn from(e: csv::Error) -> Self {
        Fatal::Io(e.into())
    }
}

impl From<serde_json::Error> for Fatal {
    fn from(e: serde_json::Error) -> Self {
        Fatal::Io(e.into())
    }
}

/// Errors that reject the request itself map to usage failures.
fn classify(e: Error) -> Fatal {
    Fatal::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fatal::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fatal::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Fatal> {
    let sink: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let ok = match &cli.command {
        Command::Verify { id, order } => verify(cli, &mut out, id, *order)?,
        Command::Spt { family, max } => spt(cli, &mut out, *family, *max)?,
        Command::Crank { family, t, max } => crank(cli, &mut out, *family, *t, *max)?,
        Command::Congruence { family, p, b, max } => congruence(cli, &mut out, *family, *p, *b, *max)?,
        Command::OracleCompare { family, max } => oracle_compare(cli, &mut out, *family, *max)?,
        Command::List => list(cli, &mut out)?,
    };
    out.flush()?;
    Ok(ok)
}

fn parallelism(cli: &Cli) -> usize {
    cli.parallelism
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

fn check_n_max(n: usize) -> Result<(), Fatal> {
    if n > N_MAX_CAP {
        return Err(Fatal::Usage(format!("--max {n} exceeds the cap {N_MAX_CAP}")));
    }
    Ok(())
}

/// Schema of one verification result in JSON and CSV output.
#[derive(Serialize)]
struct ReportRow<'a> {
    id: &'a str,
    order: usize,
    status: Status,
    first_mismatch: Option<&'a Mismatch>,
    millis: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<&'a CongruenceFailure>,
}

impl<'a> ReportRow<'a> {
    fn new(r: &'a VerificationReport, timing: bool) -> Self {
        ReportRow {
            id: &r.id,
            order: r.order,
            status: r.status,
            first_mismatch: r.first_mismatch.as_ref(),
            millis: if timing { r.millis } else { None },
            error: r.error.as_deref(),
            failure: None,
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::Mismatch => "mismatch",
        Status::Error => "error",
    }
}

fn write_reports(cli: &Cli, out: &mut impl Write, rows: &[ReportRow<'_>]) -> Result<(), Fatal> {
    match cli.format {
        Format::Json => {
            serde_json::to_writer(&mut *out, rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["id", "order", "status", "power", "lhs", "rhs", "millis", "error"])?;
            for r in rows {
                let m = r.first_mismatch;
                let detail = r.error.map(str::to_string).or_else(|| r.failure.map(|f| format!("{}: {}", f.check, f.detail)));
                w.write_record([
                    r.id.to_string(),
                    r.order.to_string(),
                    status_word(r.status).to_string(),
                    m.map_or(String::new(), |m| m.power.to_string()),
                    m.map_or(String::new(), |m| m.lhs.clone()),
                    m.map_or(String::new(), |m| m.rhs.clone()),
                    r.millis.map_or(String::new(), |t| t.to_string()),
                    detail.unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in rows {
                write!(out, "{:<8} {} (order {})", status_word(r.status), r.id, r.order)?;
                if let Some(t) = r.millis {
                    write!(out, " {t} ms")?;
                }
                if let Some(m) = r.first_mismatch {
                    write!(out, ": first mismatch at q^{}: lhs {} rhs {}", m.power, m.lhs, m.rhs)?;
                }
                if let Some(e) = r.error {
                    write!(out, ": {e}")?;
                }
                if let Some(f) = r.failure {
                    write!(out, ": {} fails at {}: {}", f.check, f.argument, f.detail)?;
                }
                writeln!(out)?;
            }
            let passed = rows.iter().filter(|r| r.status == Status::Verified).count();
            writeln!(out, "{passed}/{} verified", rows.len())?;
        }
    }
    Ok(())
}

fn verify(cli: &Cli, out: &mut impl Write, glob: &str, order: Option<usize>) -> Result<bool, Fatal> {
    let mut cases: Vec<&IdentityCase> = registry::select(Some(glob)).map_err(classify)?;
    if cases.is_empty() {
        return Err(Fatal::Usage(format!("no identity matches `{glob}`")));
    }
    if let Some(seed) = cli.seed {
        cases.shuffle(&mut StdRng::seed_from_u64(seed));
    }
    let paper = cli.paper_bounds;
    let order_of = move |c: &IdentityCase| match registry::certified_order(&c.id) {
        Some(n) if paper => n,
        _ => registry::effective_order(c, order),
    };
    let reports = registry::verify_cases(&cases, order_of, parallelism(cli)).map_err(classify)?;
    let rows: Vec<ReportRow<'_>> = reports.iter().map(|r| ReportRow::new(r, !cli.no_timing)).collect();
    write_reports(cli, out, &rows)?;
    Ok(reports.iter().all(VerificationReport::is_verified))
}

/// Streams rows of a table in the chosen format; `fields` names the columns.
struct TableWriter<'w, W: Write> {
    format: Format,
    out: &'w mut W,
    rows: usize,
}

impl<'w, W: Write> TableWriter<'w, W> {
    fn start(format: Format, out: &'w mut W, fields: &[&str]) -> io::Result<Self> {
        match format {
            Format::Json => write!(out, "[")?,
            Format::Csv => writeln!(out, "{}", fields.join(","))?,
            Format::Text => writeln!(out, "{}", fields.join("\t"))?,
        }
        Ok(TableWriter { format, out, rows: 0 })
    }

    /// `values` are exact decimals; JSON keeps them as strings.
    fn row(&mut self, fields: &[&str], values: &[String]) -> io::Result<()> {
        match self.format {
            Format::Json => {
                let obj: serde_json::Map<String, serde_json::Value> = fields
                    .iter()
                    .zip(values)
                    .map(|(f, v)| {
                        let v = match v.parse::<u64>() {
                            Ok(n) if *f != "value" && *f != "count" => serde_json::Value::from(n),
                            _ => serde_json::Value::from(v.as_str()),
                        };
                        (f.to_string(), v)
                    })
                    .collect();
                if self.rows > 0 {
                    write!(self.out, ",")?;
                }
                serde_json::to_writer(&mut *self.out, &obj)?;
            }
            Format::Csv => writeln!(self.out, "{}", values.join(","))?,
            Format::Text => writeln!(self.out, "{}", values.join("\t"))?,
        }
        self.rows += 1;
        Ok(())
    }

    fn finish(self) -> io::Result<()> {
        if self.format == Format::Json {
            writeln!(self.out, "]")?;
        }
        Ok(())
    }
}

fn spt(cli: &Cli, out: &mut impl Write, family: SptFamily, max: usize) -> Result<bool, Fatal> {
    check_n_max(max)?;
    let values = spt_table(family, max).map_err(classify)?;
    let fields = ["n", "value"];
    let mut t = TableWriter::start(cli.format, out, &fields)?;
    for (i, v) in values.iter().enumerate() {
        t.row(&fields, &[(i + 1).to_string(), v.to_string()])?;
    }
    t.finish()?;
    Ok(true)
}

fn crank(cli: &Cli, out: &mut impl Write, family: SptFamily, t: u32, max: usize) -> Result<bool, Fatal> {
    check_n_max(max)?;
    let table = crank_table(family, max + 1).map_err(classify)?;
    let fields = ["n", "k", "count"];
    let mut w = TableWriter::start(cli.format, out, &fields)?;
    for n in 1..=max {
        for k in 0..t {
            let c = table.class_count(k as i64, t as i64, n);
            w.row(&fields, &[n.to_string(), k.to_string(), c.to_string()])?;
        }
    }
    w.finish()?;
    Ok(true)
}

fn congruence(cli: &Cli, out: &mut impl Write, family: SptFamily, p: u32, b: u32, max: usize) -> Result<bool, Fatal> {
    check_n_max(max)?;
    let start = Instant::now();
    let report = check_congruence(family, p, b, max).map_err(classify)?;
    let millis = start.elapsed().as_millis() as u64;
    let id = report.id();
    let row = ReportRow {
        id: &id,
        order: max + 1,
        status: report.status,
        first_mismatch: None,
        millis: (!cli.no_timing).then_some(millis),
        error: None,
        failure: report.failure.as_ref(),
    };
    write_reports(cli, out, &[row])?;
    Ok(report.is_verified())
}

fn oracle_compare(cli: &Cli, out: &mut impl Write, family: SptFamily, max: usize) -> Result<bool, Fatal> {
    check_n_max(max)?;
    let cap = oracle_cap(family);
    let n = max.min(cap);
    if n < max {
        eprintln!("note: enumeration for {family} is capped at n = {cap}; comparing 1..={n}");
    }
    let start = Instant::now();
    let series = spt_table(family, n.max(1)).map_err(classify)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism(cli))
        .build()
        .map_err(|e| Fatal::Io(io::Error::other(e)))?;
    let oracle: Vec<_> = pool.install(|| (1..=n as u32).into_par_iter().map(|m| spt_oracle(family, m)).collect());
    let id = format!("oracle_{family}");
    let mut report = match (1..=n).find(|&m| series[m - 1] != oracle[m - 1]) {
        None => VerificationReport::verified(&id, n + 1),
        Some(m) => VerificationReport::mismatch(
            &id,
            n + 1,
            Mismatch { power: m as i64, lhs: series[m - 1].to_string(), rhs: oracle[m - 1].to_string() },
        ),
    };
    report.millis = Some(start.elapsed().as_millis() as u64);
    write_reports(cli, out, &[ReportRow::new(&report, !cli.no_timing)])?;
    Ok(report.is_verified())
}

#[derive(Serialize)]
struct ListRow<'a> {
    id: &'a str,
    ring: String,
    default_order: usize,
    statement: &'a str,
}

fn list(cli: &Cli, out: &mut impl Write) -> Result<bool, Fatal> {
    let rows: Vec<ListRow<'_>> = registry::catalog()
        .iter()
        .map(|c| ListRow { id: &c.id, ring: c.ring().to_string(), default_order: c.default_order, statement: &c.statement })
        .collect();
    match cli.format {
        Format::Json => {
            serde_json::to_writer(&mut *out, &rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in &rows {
                writeln!(out, "{:<24} {:<16} {:>4}  {}", r.id, r.ring, r.default_order, r.statement)?;
            }
        }
    }
    Ok(true)
}

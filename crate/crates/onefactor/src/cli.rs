//! Command line front end. The binary is a thin wrapper around [`run`];
//! everything it does is reachable through the library and the examples.
//!
//! Exit codes: 0 on success, 1 on any error (including usage and per-line
//! parse errors), 2 when an oracle cross-check disagrees with the engine.

use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand};
use num_bigint::BigInt;

use crate::engine;
use crate::graph::Graph;
use crate::nullstellensatz::{
    grid_coefficient, FactoredPolynomial, LinearForm, ListSystem, Rat,
};
use crate::oracle;
use crate::survey::{self, ScanOptions};

/// Environment variable supplying the default worker count.
pub const JOBS_ENV: &str = "ONEFACTOR_JOBS";

#[derive(Parser, Debug)]
#[command(
    name = "onefactor",
    about = "Signed enumeration of 1-factorizations of regular graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct JobsArg {
    /// Worker threads (default: ONEFACTOR_JOBS or all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print factorization count and signed sum, one line per input graph.
    Signsum {
        /// Input file: one graph per line, graph6 or bracket adjacency.
        file: PathBuf,
        #[command(flatten)]
        jobs: JobsArg,
    },
    /// Classify every graph in a file and report per-graph verdicts.
    Survey {
        file: PathBuf,
        /// Emit JSON instead of the text table.
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit CSV instead of the text table.
        #[arg(long)]
        csv: bool,
        /// Skip the signed sum; verdicts only separate Class2 from Factorable.
        #[arg(long)]
        count_only: bool,
        /// Classify only connected graphs, dropping the rest.
        #[arg(long)]
        require_connected: bool,
        #[command(flatten)]
        jobs: JobsArg,
    },
    /// Cross-check the engine against the brute-force oracle; exit 2 on any
    /// mismatch.
    Oracle {
        file: PathBuf,
        /// Override the oracle's desk-scale guard.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        jobs: JobsArg,
    },
    /// Quantitative coefficient extraction over rational grids.
    Cn {
        #[command(subcommand)]
        command: CnCommand,
    },
    /// For class-2 graphs: add every perfect matching of the complement and
    /// report whether some extension has a nonzero signed sum.
    ExtendAndClassify {
        file: PathBuf,
        #[command(flatten)]
        jobs: JobsArg,
    },
}

#[derive(Subcommand, Debug)]
enum CnCommand {
    /// Evaluate the grid-sum coefficient of a factored polynomial.
    Eval {
        /// Problem description; see the manual for the format.
        file: PathBuf,
    },
}

/// Parses `args` (including the program name) and runs; returns the exit
/// code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            let _ = Cli::command().write_help(&mut std::io::stderr());
            return 1;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Signsum { file, jobs } => with_pool(jobs, || cmd_signsum(&file)),
        Command::Survey { file, json, csv, count_only, require_connected, jobs } => {
            with_pool(jobs, || cmd_survey(&file, json, csv, count_only, require_connected))
        }
        Command::Oracle { file, force, jobs } => with_pool(jobs, || cmd_oracle(&file, force)),
        Command::Cn { command: CnCommand::Eval { file } } => cmd_cn_eval(&file),
        Command::ExtendAndClassify { file, jobs } => {
            with_pool(jobs, || cmd_extend_and_classify(&file))
        }
    }
}

/// Runs `f` on a rayon pool sized by `--jobs`, the environment, or default.
fn with_pool(jobs: JobsArg, f: impl FnOnce() -> Result<i32, String> + Send) -> Result<i32, String> {
    let jobs = jobs.jobs.or_else(|| {
        std::env::var(JOBS_ENV).ok().and_then(|v| v.parse().ok())
    });
    match jobs {
        None => f(),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| e.to_string())?;
            pool.install(f)
        }
    }
}

fn read_lines(path: &Path) -> Result<Vec<String>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(text.lines().map(str::to_string).collect())
}

fn cmd_signsum(path: &Path) -> Result<i32, String> {
    let mut failed = false;
    for (idx, line) in read_lines(path)?.iter().enumerate() {
        match survey::parse_line(line) {
            None => {}
            Some(Err(e)) => {
                eprintln!("{}:{}: {e}", path.display(), idx + 1);
                failed = true;
            }
            Some(Ok(g)) => match engine::weighted_sum_auto(&g) {
                Ok(r) => println!("{} {}", r.factorization_count, r.signed_sum),
                Err(e) => {
                    eprintln!("{}:{}: {e}", path.display(), idx + 1);
                    failed = true;
                }
            },
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn cmd_survey(
    path: &Path,
    json: bool,
    csv: bool,
    count_only: bool,
    require_connected: bool,
) -> Result<i32, String> {
    let lines = read_lines(path)?;
    let report = survey::scan(
        lines,
        ScanOptions { count_only, require_connected, parallel: true },
    );
    for e in &report.errors {
        eprintln!("{}:{}: {}", path.display(), e.line, e.message);
    }
    if json {
        println!("{}", report.to_json());
    } else if csv {
        print!("{}", report.to_csv());
    } else {
        print!("{}", report.to_table());
        if report.skipped > 0 {
            println!("-- skipped {} disconnected graphs", report.skipped);
        }
    }
    Ok(if report.errors.is_empty() { 0 } else { 1 })
}

fn cmd_oracle(path: &Path, force: bool) -> Result<i32, String> {
    let mut failed = false;
    let mut mismatch = false;
    for (idx, line) in read_lines(path)?.iter().enumerate() {
        let line_no = idx + 1;
        let g = match survey::parse_line(line) {
            None => continue,
            Some(Err(e)) => {
                eprintln!("{}:{line_no}: {e}", path.display());
                failed = true;
                continue;
            }
            Some(Ok(g)) => g,
        };
        match check_graph(&g, force) {
            Err(e) => {
                eprintln!("{}:{line_no}: {e}", path.display());
                failed = true;
            }
            Ok(outcome) => {
                let status = if outcome.ok { "ok" } else { "MISMATCH" };
                println!(
                    "{}:{line_no}: n={} k={} {} colorings, {} factorizations, sum {}: {status}",
                    path.display(),
                    outcome.n,
                    outcome.k,
                    outcome.colorings,
                    outcome.count,
                    outcome.sum,
                );
                if !outcome.ok {
                    for d in &outcome.details {
                        eprintln!("{}:{line_no}: {d}", path.display());
                    }
                    mismatch = true;
                }
            }
        }
    }
    Ok(if mismatch {
        2
    } else if failed {
        1
    } else {
        0
    })
}

struct OracleOutcome {
    n: usize,
    k: usize,
    colorings: u64,
    count: String,
    sum: String,
    ok: bool,
    details: Vec<String>,
}

fn check_graph(g: &Graph, force: bool) -> Result<OracleOutcome, String> {
    let k = g.validate_regular_even().map_err(|e| e.to_string())?;
    let theorem = oracle::validate_sign_theorem(g, force).map_err(|e| e.to_string())?;
    let brute = if force {
        oracle::brute_signsum_unguarded(g)
    } else {
        oracle::brute_signsum(g)
    }
    .map_err(|e| e.to_string())?;
    let engine = engine::weighted_sum_auto(g).map_err(|e| e.to_string())?;
    let mut details = Vec::new();
    if engine != brute {
        details.push(format!(
            "engine ({}, {}) != brute force ({}, {})",
            engine.factorization_count, engine.signed_sum, brute.factorization_count, brute.signed_sum
        ));
    }
    if theorem.mismatches > 0 {
        details.push(format!("{} colorings break the sign identity", theorem.mismatches));
    }
    let fact: BigInt = (1..=k as i64).map(BigInt::from).product();
    if BigInt::from(theorem.colorings) != fact.clone() * BigInt::from(engine.factorization_count.clone()) {
        details.push(format!(
            "{} colorings but k! * count = {}",
            theorem.colorings,
            fact.clone() * BigInt::from(engine.factorization_count.clone())
        ));
    }
    if BigInt::from(theorem.sign_sum) != fact.clone() * engine.signed_sum.clone() {
        details.push(format!(
            "coloring sign sum {} but k! * signed sum = {}",
            theorem.sign_sum,
            fact * engine.signed_sum.clone()
        ));
    }
    Ok(OracleOutcome {
        n: g.n_vertices(),
        k,
        colorings: theorem.colorings,
        count: engine.factorization_count.to_string(),
        sum: engine.signed_sum.to_string(),
        ok: details.is_empty(),
        details,
    })
}

fn cmd_extend_and_classify(path: &Path) -> Result<i32, String> {
    let mut failed = false;
    for (idx, line) in read_lines(path)?.iter().enumerate() {
        let line_no = idx + 1;
        match survey::parse_line(line) {
            None => {}
            Some(Err(e)) => {
                eprintln!("{}:{line_no}: {e}", path.display());
                failed = true;
            }
            Some(Ok(g)) => match survey::extend_and_classify(&g) {
                Err(e) => {
                    eprintln!("{}:{line_no}: {e}", path.display());
                    failed = true;
                }
                Ok(report) => {
                    print!(
                        "{}:{line_no}: {} extensions tried, {} certified, {} zero-sum, {} class 2",
                        path.display(),
                        report.attempts,
                        report.certified,
                        report.zero_sum,
                        report.class2
                    );
                    match report.witness {
                        Some((matching, c)) => println!(
                            "; witness {:?} with sum {}",
                            matching,
                            c.sum.map(|s| s.to_string()).unwrap_or_default()
                        ),
                        None => println!(),
                    }
                }
            },
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn cmd_cn_eval(path: &Path) -> Result<i32, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (p, ls) = parse_cn_problem(&text)?;
    let value = grid_coefficient(&p, &ls).map_err(|e| e.to_string())?;
    println!("{value}");
    Ok(0)
}

/// Problem format, one item per line (`#` comments allowed):
///
/// ```text
/// vars 2
/// factor x1 - x2
/// factor x1 + x2 - 1/2
/// list 1: 0 1
/// list 2: 0 1 2
/// ```
///
/// Variables are 1-based in the file. Every variable needs a list; the grid
/// sum is the coefficient of the monomial with exponent `|L_j| - 1` per
/// variable.
pub fn parse_cn_problem(text: &str) -> Result<(FactoredPolynomial, ListSystem), String> {
    let mut n_vars: Option<usize> = None;
    let mut factors: Vec<LinearForm> = Vec::new();
    let mut lists: Vec<Option<Vec<Rat>>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars") {
            let n: usize = rest.trim().parse().map_err(|_| format!("line {line_no}: bad vars count"))?;
            n_vars = Some(n);
            lists = vec![None; n];
        } else if let Some(rest) = line.strip_prefix("factor") {
            let n = n_vars.ok_or(format!("line {line_no}: vars must come first"))?;
            let form = parse_linear_form(rest.trim(), n)
                .map_err(|e| format!("line {line_no}: {e}"))?;
            factors.push(form);
        } else if let Some(rest) = line.strip_prefix("list") {
            let n = n_vars.ok_or(format!("line {line_no}: vars must come first"))?;
            let (idx_part, values_part) = rest
                .split_once(':')
                .ok_or(format!("line {line_no}: expected `list <var>: <values>`"))?;
            let var: usize = idx_part.trim().parse().map_err(|_| format!("line {line_no}: bad list index"))?;
            if var == 0 || var > n {
                return Err(format!("line {line_no}: list index {var} out of 1..={n}"));
            }
            let values = values_part
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| format!("line {line_no}: {e}"))?;
            lists[var - 1] = Some(values);
        } else {
            return Err(format!("line {line_no}: unrecognized directive"));
        }
    }
    let n = n_vars.ok_or("missing `vars` line".to_string())?;
    let lists = lists
        .into_iter()
        .enumerate()
        .map(|(j, l)| l.ok_or(format!("missing list for x{}", j + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    let p = FactoredPolynomial::new(n, factors).map_err(|e| e.to_string())?;
    let ls = ListSystem::new(lists).map_err(|e| e.to_string())?;
    Ok((p, ls))
}

/// Parses `3/4`, `-2`, `7` into an exact rational.
fn parse_rational(s: &str) -> Result<Rat, String> {
    let (numer, denom) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let numer: i64 = numer.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    let denom: i64 = denom.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    if denom == 0 {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(numer.into(), denom.into()))
}

/// Parses a linear expression like `x1 - 2*x3 + 1/2`; variables are 1-based.
fn parse_linear_form(expr: &str, n_vars: usize) -> Result<LinearForm, String> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty factor".into());
    }
    let bytes = compact.as_bytes();
    let mut pos = 0;
    let mut terms: Vec<(usize, Rat)> = Vec::new();
    let mut constant = Rat::new(0.into(), 1.into());
    while pos < bytes.len() {
        let mut sign = 1i64;
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        }
        if pos >= bytes.len() {
            return Err("dangling sign".into());
        }
        // optional rational coefficient
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let coeff = if pos > start {
            parse_rational(&compact[start..pos])?
        } else {
            Rat::new(1.into(), 1.into())
        };
        let coeff = if sign < 0 { -coeff } else { coeff };
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
        }
        if pos < bytes.len() && bytes[pos] == b'x' {
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let var: usize = compact[start..pos]
                .parse()
                .map_err(|_| "bad variable index".to_string())?;
            if var == 0 || var > n_vars {
                return Err(format!("variable x{var} out of 1..={n_vars}"));
            }
            terms.push((var - 1, coeff));
        } else if pos == start {
            return Err(format!("unexpected character at {:?}", &compact[pos..]));
        } else {
            constant += coeff;
        }
    }
    LinearForm::new(terms, constant).map_err(|e| e.to_string())
}

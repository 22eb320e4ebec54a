use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use factchar::algebra::json::poly_to_json;
use factchar::characters::{character, GroupKind, DEFAULT_ROUTE};
use factchar::qfunctions::{q_function, QKind, DEFAULT_Q_ROUTE};
use factchar::suites::{run_suite, SuiteParams, SuiteReport};
use factchar::tableau::{count_tableaux, enumerate_tableaux, parse_parts, tableau_to_paths, TableauKind};
use factchar::{MultiPoly, Partition, StrictPartition, VarTable};

const EXIT_USAGE: u8 = 2;
const EXIT_IDENTITY: u8 = 3;

/// Factorial characters of classical groups and factorial Q-functions.
#[derive(Parser)]
#[command(name = "factchar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a factorial character.
    Char(ComputeArgs),
    /// Compute a factorial Q-function.
    Qfun(ComputeArgs),
    /// List or count tableaux of one shape.
    Tableaux(TableauxArgs),
    /// Run an identity suite.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AMode {
    Symbolic,
    Zero,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Text,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    /// Comma-separated parts; empty for the empty partition.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    lambda: String,
    /// One route, or several separated by commas to cross-check them.
    #[arg(long)]
    method: Option<String>,
    #[arg(long, value_enum, default_value = "symbolic")]
    a: AMode,
    #[arg(long, value_enum, default_value = "json")]
    out: Out,
}

#[derive(Args)]
struct TableauxArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "")]
    lambda: String,
    /// Print only the number of tableaux.
    #[arg(long)]
    count: bool,
    /// Attach the lattice-path image of each tableau.
    #[arg(long)]
    paths: bool,
    #[arg(long, value_enum, default_value = "json")]
    out: Out,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    lambda: Option<String>,
    /// Single μ for the Tokuyama suite.
    #[arg(long)]
    mu: Option<String>,
    #[arg(long, default_value_t = 2)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    lambda_max: usize,
    #[arg(long, default_value_t = 2)]
    mu_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Include per-case wall times (makes output run-dependent).
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value = "json")]
    out: Out,
}

enum Failure {
    Usage(String),
    Identity(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = io::stdout();
    let mut w = BufWriter::new(out.lock());
    let res = match cli.command {
        Command::Char(a) => run_compute(&a, false, &mut w),
        Command::Qfun(a) => run_compute(&a, true, &mut w),
        Command::Tableaux(a) => run_tableaux(&a, &mut w),
        Command::Verify(a) => run_verify(&a, &mut w),
    };
    let flushed = w.flush();
    match res {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::FAILURE,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Identity(msg)) => {
            eprintln!("identity failure: {msg}");
            ExitCode::from(EXIT_IDENTITY)
        }
    }
}

fn run_compute(a: &ComputeArgs, q: bool, w: &mut impl Write) -> Res {
    let parts = parse_parts(&a.lambda)?;
    let methods: Vec<String> = a
        .method
        .as_deref()
        .unwrap_or(if q { DEFAULT_Q_ROUTE } else { DEFAULT_ROUTE })
        .split(',')
        .map(|s| s.trim().to_string())
        .collect();
    let lambda = Partition::new(&parts, a.n)?;
    let vt = VarTable::for_partition(a.n, lambda.largest())?;

    let (kind_name, values) = if q {
        let kind: QKind = a.kind.parse()?;
        let strict = StrictPartition::try_from(lambda)?;
        let vals = methods
            .iter()
            .map(|m| q_function(kind, &strict, &vt, m))
            .collect::<Result<Vec<_>, _>>()?;
        (kind.name(), vals)
    } else {
        let kind: GroupKind = a.kind.parse()?;
        let vals = methods
            .iter()
            .map(|m| character(kind, &lambda, &vt, m))
            .collect::<Result<Vec<_>, _>>()?;
        (kind.name(), vals)
    };
    let agree = values.windows(2).all(|p| p[0] == p[1]);
    let (result, out_vt) = match a.a {
        AMode::Symbolic => (values[0].clone(), vt),
        AMode::Zero => (values[0].at_a_zero(), VarTable::new(a.n, 0)?),
    };

    match a.out {
        Out::Json => {
            let mut doc = json!({
                "kind": kind_name,
                "n": a.n,
                "lambda": parts,
                "routes": methods,
                "a": if a.a == AMode::Zero { "zero" } else { "symbolic" },
                "result": poly_to_json(&result, &out_vt),
            });
            if methods.len() > 1 {
                doc["equal"] = json!(agree);
            }
            writeln!(w, "{doc}")?;
        }
        Out::Text => {
            writeln!(w, "{}", result.to_text())?;
            if methods.len() > 1 {
                writeln!(w, "routes {} agree: {agree}", methods.join(","))?;
            }
        }
    }
    if !agree {
        let counts: Vec<String> = values.iter().map(|v: &MultiPoly| v.len().to_string()).collect();
        return Err(Failure::Identity(format!(
            "routes {} disagree (terms {})",
            methods.join(","),
            counts.join(",")
        )));
    }
    Ok(())
}

fn run_tableaux(a: &TableauxArgs, w: &mut impl Write) -> Res {
    let kind: TableauKind = a.kind.parse()?;
    let parts = parse_parts(&a.lambda)?;
    if a.count {
        writeln!(w, "{}", count_tableaux(kind, &parts, a.n)?)?;
        return Ok(());
    }
    let vt = VarTable::for_partition(a.n, parts.first().copied().unwrap_or(0))?;
    for (i, t) in enumerate_tableaux(kind, &parts, a.n)?.enumerate() {
        match a.out {
            Out::Json => {
                let doc: Value = if a.paths {
                    json!({"tableau": t.to_json(), "paths": tableau_to_paths(&t).to_json(&vt)})
                } else {
                    t.to_json()
                };
                writeln!(w, "{doc}")?;
            }
            Out::Text => {
                if i > 0 {
                    writeln!(w)?;
                }
                writeln!(w, "{t}")?;
                if a.paths {
                    writeln!(w, "weight: {}", tableau_to_paths(&t).weight().to_text())?;
                }
            }
        }
    }
    Ok(())
}

fn run_verify(a: &VerifyArgs, w: &mut impl Write) -> Res {
    let shape = a.mu.as_deref().or(a.lambda.as_deref()).map(parse_parts).transpose()?;
    let params = SuiteParams {
        n_max: a.n_max,
        lambda_max: a.lambda_max,
        mu_max: a.mu_max,
        kind: a.kind.clone(),
        n: a.n,
        lambda: shape,
        seed: a.seed,
    };
    let report = run_suite(&a.suite, &params, a.jobs)?;
    match a.out {
        Out::Json => writeln!(w, "{}", report.to_json(a.timings))?,
        Out::Text => write_text_report(&report, a.timings, w)?,
    }
    if let Some(bad) = report.first_failure() {
        return Err(Failure::Identity(format!(
            "{} of {} cases failed; first: {}",
            report.failed(),
            report.cases.len(),
            bad.to_json(false)
        )));
    }
    Ok(())
}

fn write_text_report(r: &SuiteReport, timings: bool, w: &mut impl Write) -> io::Result<()> {
    for c in &r.cases {
        let terms: Vec<String> = c.terms.iter().map(|t| t.to_string()).collect();
        write!(
            w,
            "{} {} {} [{}] terms {}",
            if c.equal { "ok  " } else { "FAIL" },
            c.index,
            c.inputs,
            c.routes.join(","),
            terms.join("/")
        )?;
        if timings {
            write!(w, " {}us", c.wall_us)?;
        }
        if let Some(e) = &c.error {
            write!(w, " error: {e}")?;
        }
        writeln!(w)?;
    }
    writeln!(w, "{}: passed {}, failed {}", r.suite, r.passed(), r.failed())
}

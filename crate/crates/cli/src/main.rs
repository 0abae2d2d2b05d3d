//! `iterant`: evaluate expressions, decompose matrices, run verification
//! suites and work with framed-braid particles from the command line.
//!
//! Exit status: 0 when everything holds, 1 when a check fails or an
//! expression cannot be evaluated, 2 for usage and parse errors.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value as Json};
use thiserror::Error;

use iterant_core::braids::{embed_su3, rho, verify_factorization, BraidAlgebraElement, Catalogue, FramedBraid, ParticleJson};
use iterant_core::expr::{eval_str, parse, Algebra, Context, ExprError, ParseError, Value};
use iterant_core::iterants::{Iterant, Matrix};
use iterant_core::suites::{run_all, run_suite, SuiteReport};
use iterant_core::{builtin_group, AlgebraError, Cyclotomic, Group, LaurentPoly};

#[derive(Parser)]
#[command(name = "iterant", version, about = "Exact iterant algebra over finite groups")]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Particle definitions (JSON) to load before running.
    #[arg(long = "particles-file", global = true, value_name = "FILE")]
    particles_file: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression exactly.
    Eval {
        #[command(flatten)]
        ctx: ContextArgs,
        expr: String,
    },
    /// Evaluate an expression and print its matrix image.
    Matrix {
        #[command(flatten)]
        ctx: ContextArgs,
        expr: String,
    },
    /// Write a square matrix as an iterant over a group acting regularly.
    Decompose {
        #[arg(short = 'g', long)]
        group: String,
        /// JSON file: an array of rows, entries integers, "p/q" or scalar expressions.
        #[arg(short = 'm', long)]
        matrix: String,
        #[arg(short = 'N', long = "order", default_value_t = 12)]
        order: u32,
    },
    /// Print the Cayley table of a group.
    Cayley { group: String },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// Framed-braid particle catalogue.
    Particles {
        #[command(subcommand)]
        action: ParticlesAction,
    },
    /// Framed-braid arithmetic on catalogue particles.
    Braid {
        #[command(subcommand)]
        action: BraidAction,
    },
}

#[derive(clap::Args)]
struct ContextArgs {
    /// Group or context: C2, C<n>, su3, klein4, S3, S3nat, FB3, pauli, ...
    #[arg(short = 'g', long = "group", default_value = "C2")]
    group: String,
    /// Scalar field order N of Q(ζ_N).
    #[arg(short = 'N', long = "order", default_value_t = 12)]
    order: u32,
}

#[derive(Subcommand)]
enum ParticlesAction {
    /// List the catalogue.
    List,
    /// Validate and add particle definitions from a JSON file.
    Define { file: String },
}

#[derive(Subcommand)]
enum BraidAction {
    /// Multiply particles left to right.
    Mul {
        #[arg(required = true)]
        particles: Vec<String>,
    },
    /// Check that the factors multiply to the product.
    VerifyFactorization {
        #[arg(long)]
        product: String,
        #[arg(long, value_delimiter = ',', required = true)]
        factors: Vec<String>,
    },
    /// Images under rho and in su(3) at a chosen root t.
    Embed {
        #[arg(long, default_value = "zeta(6,1)")]
        t: String,
        particle: String,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error at {0}")]
    Parse(ParseError),
    #[error("{0}")]
    Eval(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Eval(_) => 1,
        }
    }

    fn to_json(&self) -> Json {
        match self {
            CliError::Parse(p) => json!({"error": {
                "kind": "parse",
                "line": p.pos.line,
                "col": p.pos.col,
                "message": p.message,
                "expected": p.expected,
            }}),
            CliError::Usage(m) => json!({"error": {"kind": "usage", "message": m}}),
            CliError::Eval(m) => json!({"error": {"kind": "evaluation", "message": m}}),
        }
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Parse(p) => CliError::Parse(p),
            other => CliError::Eval(other.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::UnknownSuite { .. } | AlgebraError::UnsupportedGroup(_) | AlgebraError::Json(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Eval(other.to_string()),
        }
    }
}

type Outcome = Result<bool, CliError>;

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, text: impl FnOnce() -> String, data: impl FnOnce() -> Json) {
        let body = if self.json { serde_json::to_string_pretty(&data()).expect("JSON values serialize") } else { text() };
        // a closed pipe (`| head`) is not an error worth reporting
        let _ = writeln!(io::stdout().lock(), "{body}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out { json: cli.json };
    match run(&cli, &out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            if cli.json {
                println!("{}", e.to_json());
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.code())
        }
    }
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
}

fn catalogue(files: &[String]) -> Result<Arc<Catalogue>, CliError> {
    let cat = Catalogue::default();
    for f in files {
        cat.load_json(&read(f)?).map_err(|e| CliError::Usage(format!("{f}: {e}")))?;
    }
    Ok(Arc::new(cat))
}

fn context(args: &ContextArgs, cat: &Arc<Catalogue>) -> Result<Context, CliError> {
    Ok(Context::new(&args.group, args.order).map_err(|e| CliError::Usage(e.to_string()))?.with_catalogue(cat.clone()))
}

fn run(cli: &Cli, out: &Out) -> Outcome {
    let cat = catalogue(&cli.particles_file)?;
    match &cli.command {
        Command::Eval { ctx, expr } => eval_cmd(out, &context(ctx, &cat)?, expr),
        Command::Matrix { ctx, expr } => matrix_cmd(out, &context(ctx, &cat)?, expr),
        Command::Decompose { group, matrix, order } => decompose_cmd(out, group, matrix, *order),
        Command::Cayley { group } => cayley_cmd(out, group),
        Command::Verify { suite } => verify_cmd(out, suite),
        Command::Particles { action } => particles_cmd(out, &cat, action),
        Command::Braid { action } => braid_cmd(out, &cat, action),
    }
}

fn value_json(v: &Value) -> Json {
    let structured = match v {
        Value::Scalar(p) => serde_json::to_value(p).ok(),
        Value::Iterant(x) => serde_json::to_value(x).ok(),
        Value::Braid(x) => x
            .as_framed()
            .and_then(|b| ParticleJson::from_braid("value", &b).ok())
            .and_then(|p| serde_json::to_value(p).ok()),
    };
    json!({"kind": v.kind(), "exact": v.to_string(), "decimal": v.decimal(), "value": structured})
}

/// The exact text, plus a `~` line when the decimal form says more than
/// the integers already shown.
fn with_decimal(exact: &str, decimal: Option<String>) -> String {
    match decimal {
        Some(d) if d.replace(".000000", "") != exact => format!("{exact}\n~ {d}"),
        _ => exact.to_string(),
    }
}

fn eval_cmd(out: &Out, ctx: &Context, input: &str) -> Outcome {
    let v = eval_str(input, ctx)?;
    out.emit(
        || with_decimal(&v.to_string(), v.decimal()),
        || json!({"context": ctx.name(), "order": ctx.field().order(), "input": input, "result": value_json(&v)}),
    );
    Ok(true)
}

fn matrix_of(v: &Value, ctx: &Context) -> Result<Matrix<LaurentPoly>, CliError> {
    let Algebra::Iterants(g) = ctx.algebra() else {
        return Err(CliError::Usage(format!("matrix images need an iterant context, not {}", ctx.name())));
    };
    match v {
        Value::Scalar(c) => Ok(Iterant::scalar(g, c.clone()).to_matrix()),
        Value::Iterant(x) => Ok(x.to_matrix()),
        Value::Braid(_) => Err(CliError::Eval("a framed braid has no matrix image here".into())),
    }
}

fn matrix_cmd(out: &Out, ctx: &Context, input: &str) -> Outcome {
    let v = eval_str(input, ctx)?;
    let m = matrix_of(&v, ctx)?;
    let decimals: Option<Vec<Vec<String>>> = m
        .to_rows()
        .iter()
        .map(|row| row.iter().map(|p| p.as_constant().map(|c| c.to_decimal_string())).collect())
        .collect();
    let exact: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    out.emit(
        || {
            let mut s = m.to_string();
            if decimals.is_some() {
                let dm = m.map(|p| p.as_constant().map(|c| c.to_decimal_string()).unwrap_or_default());
                if dm.to_string().replace(".000000", "") != s {
                    s = format!("{s}\n~\n{dm}");
                }
            }
            s
        },
        || json!({"context": ctx.name(), "input": input, "value": v.to_string(), "rows": exact, "decimal": decimals}),
    );
    Ok(true)
}

/// A builtin group by name, else the group of a named context.
fn group_named(name: &str) -> Result<Arc<Group>, CliError> {
    if let Ok(g) = builtin_group(name) {
        return Ok(Arc::new(g));
    }
    let ctx = Context::new(name, 12).map_err(|e| CliError::Usage(e.to_string()))?;
    match ctx.algebra() {
        Algebra::Iterants(g) => Ok(g.clone()),
        Algebra::Braids(_) => Err(CliError::Usage(format!("{name} is not a finite group"))),
    }
}

fn scalar_entry(x: &Json, ctx: &Context) -> Result<Cyclotomic, CliError> {
    let bad = |what: String| CliError::Usage(format!("matrix entry {x}: {what}"));
    match x {
        Json::Number(n) => n.as_i64().map(Cyclotomic::from).ok_or_else(|| bad("decimals are not exact; use \"p/q\"".into())),
        Json::String(s) => {
            let v = eval_str(s, ctx).map_err(|e| bad(e.to_string()))?;
            v.as_cyclotomic().ok_or_else(|| bad(format!("not a scalar ({})", v.kind())))
        }
        Json::Object(_) => serde_json::from_value(x.clone()).map_err(|e| bad(e.to_string())),
        _ => Err(bad("expected a number, string or cyclotomic object".into())),
    }
}

fn decompose_cmd(out: &Out, group: &str, path: &str, order: u32) -> Outcome {
    let g = &group_named(group)?;
    let text = read(path)?;
    let json: Json = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    let rows = match &json {
        Json::Object(o) => o.get("matrix").or_else(|| o.get("rows")).cloned().unwrap_or(Json::Null),
        other => other.clone(),
    };
    let Json::Array(rows) = rows else {
        return Err(CliError::Usage(format!("{path}: expected an array of rows")));
    };
    let scalar_ctx = Context::new("C2", order).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut cells = Vec::new();
    for row in &rows {
        let Json::Array(row) = row else {
            return Err(CliError::Usage(format!("{path}: row {row} is not an array")));
        };
        cells.push(row.iter().map(|x| scalar_entry(x, &scalar_ctx)).collect::<Result<Vec<_>, _>>()?);
    }
    let m = Matrix::from_rows(cells).map_err(|e| CliError::Usage(e.to_string()))?;
    let x = Iterant::from_matrix(&m, g).map_err(|e| CliError::Eval(e.to_string()))?;
    let lifted = Value::Iterant(x.map(|c| LaurentPoly::constant(c.clone()))).normalized();
    out.emit(
        || with_decimal(&lifted.to_string(), lifted.decimal()),
        || json!({"group": g.name(), "result": value_json(&lifted), "iterant": serde_json::to_value(&x).ok()}),
    );
    Ok(true)
}

fn cayley_cmd(out: &Out, name: &str) -> Outcome {
    let g = &group_named(name)?;
    out.emit(|| cayley_text(g), || serde_json::to_value(g.to_json()).expect("group JSON"));
    Ok(true)
}

fn cayley_text(g: &Group) -> String {
    let width = g.labels().iter().map(|l| l.chars().count()).max().unwrap_or(1);
    let cell = |s: &str| format!("{s:>width$}");
    let mut lines = vec![format!("{} (order {}, degree {})", g.name(), g.order(), g.degree())];
    let header: Vec<String> = g.labels().iter().map(|l| cell(l)).collect();
    lines.push(format!("{} | {}", cell(""), header.join(" ")));
    lines.push(format!("{}-+-{}", "-".repeat(width), "-".repeat(header.join(" ").chars().count())));
    for a in g.elements() {
        let row: Vec<String> = g.elements().map(|b| cell(g.label(g.mul(a, b)))).collect();
        lines.push(format!("{} | {}", cell(g.label(a)), row.join(" ")));
    }
    lines.join("\n")
}

fn report_text(r: &SuiteReport) -> String {
    let mut lines = vec![format!("suite {}", r.suite)];
    for c in &r.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        if c.pass || c.detail.is_empty() {
            lines.push(format!("  {status}  {}", c.name));
        } else {
            lines.push(format!("  {status}  {}  [{}]", c.name, c.detail));
        }
    }
    for d in &r.derived {
        match &d.decimal {
            Some(dec) => lines.push(format!("  {} = {}  (~ {dec})", d.name, d.exact)),
            None => lines.push(format!("  {} = {}", d.name, d.exact)),
        }
    }
    let failed = r.failures().count();
    lines.push(format!("  {}: {} checks, {failed} failed", if r.pass { "pass" } else { "FAIL" }, r.checks.len()));
    lines.join("\n")
}

fn verify_cmd(out: &Out, suite: &str) -> Outcome {
    let reports = if suite.eq_ignore_ascii_case("all") { run_all()? } else { vec![run_suite(suite)?] };
    let pass = reports.iter().all(|r| r.pass);
    out.emit(
        || reports.iter().map(report_text).collect::<Vec<_>>().join("\n"),
        || {
            if reports.len() == 1 {
                serde_json::to_value(&reports[0]).expect("report JSON")
            } else {
                json!({"pass": pass, "suites": reports})
            }
        },
    );
    Ok(pass)
}

fn particles_cmd(out: &Out, cat: &Catalogue, action: &ParticlesAction) -> Outcome {
    let added = match action {
        ParticlesAction::List => Vec::new(),
        ParticlesAction::Define { file } => {
            cat.load_json(&read(file)?).map_err(|e| CliError::Usage(format!("{file}: {e}")))?
        }
    };
    let records = cat.to_json()?;
    let listing: Vec<(String, String)> = cat
        .names()
        .into_iter()
        .map(|n| {
            let shown = cat.get(&n).map(|x| x.to_string()).unwrap_or_default();
            (n, shown)
        })
        .collect();
    out.emit(
        || {
            let mut lines: Vec<String> = listing.iter().map(|(n, x)| format!("{n}\t{x}")).collect();
            if !added.is_empty() {
                lines.push(format!("defined: {}", added.join(", ")));
            }
            lines.join("\n")
        },
        || json!({"defined": added, "particles": records}),
    );
    Ok(true)
}

fn lookup(cat: &Catalogue, names: &[String]) -> Result<Vec<FramedBraid>, CliError> {
    names.iter().map(|n| cat.get(n.trim()).map_err(|e| CliError::Usage(e.to_string()))).collect()
}

fn braid_cmd(out: &Out, cat: &Catalogue, action: &BraidAction) -> Outcome {
    match action {
        BraidAction::Mul { particles } => {
            let xs = lookup(cat, particles)?;
            let product = xs[1..].iter().try_fold(xs[0].clone(), |acc, x| acc.mul(x))?;
            out.emit(
                || product.to_string(),
                || {
                    json!({
                        "factors": particles,
                        "product": product.to_string(),
                        "record": ParticleJson::from_braid("product", &product).ok(),
                    })
                },
            );
            Ok(true)
        }
        BraidAction::VerifyFactorization { product, factors } => {
            let p = lookup(cat, std::slice::from_ref(product))?.remove(0);
            let fs = lookup(cat, factors)?;
            let report = verify_factorization(&p, &fs)?;
            out.emit(
                || {
                    let verdict = if report.holds { "holds" } else { "FAILS" };
                    format!(
                        "{product} = {}: {verdict}\n  {product} = {}\n  product of factors = {}",
                        factors.join(" "),
                        report.product,
                        report.factors_product
                    )
                },
                || json!({"product": product, "factors": factors, "report": report}),
            );
            Ok(report.holds)
        }
        BraidAction::Embed { t, particle } => {
            parse(t).map_err(CliError::Parse)?;
            let scalar_ctx = Context::new("C2", 12).map_err(|e| CliError::Usage(e.to_string()))?;
            let tv = eval_str(t, &scalar_ctx)?
                .as_cyclotomic()
                .ok_or_else(|| CliError::Usage(format!("--t {t} is not a scalar")))?;
            let x = BraidAlgebraElement::from(lookup(cat, std::slice::from_ref(particle))?.remove(0));
            let r = rho(&x, &tv)?;
            let su3 = if x.strands() == 3 { Some(embed_su3(&x, &tv)?) } else { None };
            out.emit(
                || {
                    let mut lines = vec![format!("{particle} = {x}"), format!("rho = {r}")];
                    match &su3 {
                        Some(s) => lines.push(format!("su3 = {s}\n{}", s.to_matrix())),
                        None => lines.push("su3: needs three strands".into()),
                    }
                    lines.join("\n")
                },
                || {
                    json!({
                        "particle": particle,
                        "t": tv.to_string(),
                        "braid": x.to_string(),
                        "rho": r.to_string(),
                        "su3": su3.as_ref().map(ToString::to_string),
                        "su3_matrix": su3.as_ref().map(|s| s.to_matrix().to_rows().iter()
                            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>()),
                    })
                },
            );
            Ok(true)
        }
    }
}

//! Command-line front end: field construction, circle listings, functional
//! evaluation, table emission, verification suites, and method benchmarks.
//!
//! Exit codes: 0 success, 1 math-layer error or failed verification,
//! 2 flag/usage error. Every command is a pure function of its flags (the
//! verify suites use a seeded generator), so repeated runs are byte-stable;
//! only `bench` prints wall-clock timings.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::chromogeometry::{circle_enumerate, circle_parametrize, Color, UnitCircle};
use crate::error::{Error, Result};
use crate::finite_field::{parse_field_spec, Field, FieldElement};
use crate::fourier::{psi, LadderPlan, Method, PsiEvaluation, PsiInput, PsiRequest};
use crate::polynumber::Polynumber2;
use crate::tables::{
    render_circular, render_omega, render_psi_grid, render_super_catalan, TableFormat,
};
use crate::verify::{
    axioms_suite, field_family, identities_suite, oracle_suite, periodicity_suite,
    small_degree_suite, structural_suite, subfield_stability_suite, SuiteReport,
};

#[derive(Parser)]
#[command(
    name = "chromasum",
    about = "Exact polynomial summation over unit circles of finite fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a field and print its spec, circle sizes, and a generator
    Field(FieldCmd),
    /// List the points of a unit circle as JSON
    Circle(CircleCmd),
    /// Evaluate the summation functional
    Psi(PsiCmd),
    /// Emit the number tables
    Tables(TablesCmd),
    /// Run verification suites
    Verify(VerifyCmd),
    /// Compare evaluation methods, asserting agreement before timing
    Bench(BenchCmd),
}

#[derive(Args)]
struct FieldArgs {
    /// Combined spec string "p=3,r=3,modulus=1,1,0,-1"
    #[arg(long, conflicts_with_all = ["p", "r", "modulus"])]
    spec: Option<String>,
    /// Odd prime characteristic
    #[arg(long, required_unless_present = "spec")]
    p: Option<u64>,
    /// Extension degree
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Modulus coefficients, constant term first (e.g. 1,1,0,-1)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    modulus: Option<Vec<i64>>,
}

impl FieldArgs {
    fn build(&self) -> Result<Field> {
        match &self.spec {
            Some(s) => parse_field_spec(s),
            None => Field::new(
                self.p.expect("clap enforces presence"),
                self.r,
                self.modulus.as_deref(),
            ),
        }
    }
}

#[derive(Args)]
struct FieldCmd {
    #[command(flatten)]
    field: FieldArgs,
}

#[derive(Args)]
struct CircleCmd {
    #[arg(long)]
    color: Color,
    #[command(flatten)]
    field: FieldArgs,
    /// Point construction route
    #[arg(long, default_value = "enumerate", value_parser = ["enumerate", "parametrize"])]
    route: String,
}

#[derive(Args)]
struct PsiCmd {
    #[arg(long)]
    color: Color,
    #[command(flatten)]
    field: FieldArgs,
    /// Exponent of the first variable
    #[arg(long, requires = "l", conflicts_with = "poly")]
    k: Option<u64>,
    /// Exponent of the second variable
    #[arg(long, requires = "k", conflicts_with = "poly")]
    l: Option<u64>,
    /// JSON 2-polynumber file ("-" for stdin)
    #[arg(long, required_unless_present = "k")]
    poly: Option<String>,
    #[arg(long, default_value = "auto")]
    method: Method,
    /// Include the ladder plan and reduction chain in the output
    #[arg(long)]
    explain: bool,
}

#[derive(Args)]
struct TablesCmd {
    /// One of super-catalan, omega, circular-polynumbers, psi-grid
    #[arg(long, value_parser = ["super-catalan", "omega", "circular-polynumbers", "psi-grid"])]
    which: String,
    /// Grid bound (inclusive); for circular-polynumbers the bound on k + l
    #[arg(long)]
    max: Option<u64>,
    #[arg(long, default_value = "text")]
    format: TableFormat,
    /// Color for psi-grid
    #[arg(long, default_value = "blue")]
    color: Color,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    modulus: Option<Vec<i64>>,
}

#[derive(Args)]
struct VerifyCmd {
    /// One of oracle, axioms, identities, periodicity, structural, all
    #[arg(
        long,
        value_parser = ["oracle", "axioms", "identities", "periodicity", "structural", "all"]
    )]
    suite: String,
    /// Primes to build fields from
    #[arg(long, value_delimiter = ',', default_value = "3,5,7,11,13")]
    p_list: Vec<u64>,
    /// Largest extension degree per prime
    #[arg(long, default_value_t = 1)]
    max_r: u32,
    /// Monomial degree bound for the oracle suite (default 2q + 2 per field)
    #[arg(long)]
    max_degree: Option<u64>,
    /// Seed for the randomized batteries
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct BenchCmd {
    #[arg(long)]
    color: Color,
    #[command(flatten)]
    field: FieldArgs,
    /// Largest total degree k + l to sample
    #[arg(long, default_value_t = 256)]
    max_degree: u64,
    /// Evaluations per timing measurement
    #[arg(long, default_value_t = 3)]
    reps: u32,
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Field(cmd) => cmd_field(cmd),
        Command::Circle(cmd) => cmd_circle(cmd),
        Command::Psi(cmd) => cmd_psi(cmd),
        Command::Tables(cmd) => cmd_tables(cmd),
        Command::Verify(cmd) => cmd_verify(cmd),
        Command::Bench(cmd) => cmd_bench(cmd),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::BadRange(_) | Error::BadFieldSpec(_) => 2,
                _ => 1,
            })
        }
    }
}

fn element_json(v: &FieldElement) -> Value {
    json!({ "coeffs": v.coeffs() })
}

fn circle_json(circle: &UnitCircle) -> Value {
    Value::Array(
        circle
            .points()
            .iter()
            .map(|pt| json!({ "x": element_json(&pt.x), "y": element_json(&pt.y) }))
            .collect(),
    )
}

fn cmd_field(cmd: FieldCmd) -> Result<ExitCode> {
    let field = cmd.field.build()?;
    let sizes: Value = Color::ALL
        .iter()
        .map(|c| (c.name().to_string(), json!(c.circle_size(&field))))
        .collect::<serde_json::Map<_, _>>()
        .into();
    let out = json!({
        "p": field.p(),
        "r": field.r(),
        "q": field.q(),
        "modulus": field.modulus(),
        "jacobi_minus_one": field.jacobi_minus_one(),
        "circle_sizes": sizes,
        "generator": element_json(&field.multiplicative_generator()),
    });
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_circle(cmd: CircleCmd) -> Result<ExitCode> {
    let field = cmd.field.build()?;
    let circle = match cmd.route.as_str() {
        "parametrize" => circle_parametrize(cmd.color, &field),
        _ => circle_enumerate(cmd.color, &field),
    };
    println!("{}", circle_json(&circle));
    Ok(ExitCode::SUCCESS)
}

/// Parse a 2-polynumber from the wire format: a row-major grid with explicit
/// dimensions, entries encoded like elements.
///
/// ```json
/// {"rows": 2, "cols": 3, "coeffs": [{"coeffs": [1]}, ...]}
/// ```
fn parse_poly_json(field: &Field, text: &str) -> Result<Polynumber2<Field>> {
    let bad = |msg: &str| Error::BadPolynumber(msg.to_string());
    let v: Value = serde_json::from_str(text).map_err(|e| bad(&format!("invalid JSON: {e}")))?;
    let rows = v["rows"].as_u64().ok_or_else(|| bad("missing \"rows\""))? as usize;
    let cols = v["cols"].as_u64().ok_or_else(|| bad("missing \"cols\""))? as usize;
    let entries = v["coeffs"].as_array().ok_or_else(|| bad("missing \"coeffs\" array"))?;
    if entries.len() != rows * cols {
        return Err(bad(&format!(
            "expected {} entries ({rows} x {cols}), got {}",
            rows * cols,
            entries.len()
        )));
    }
    let mut grid = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for j in 0..cols {
            let entry = &entries[i * cols + j];
            let coeffs = entry["coeffs"]
                .as_array()
                .ok_or_else(|| bad("entry missing \"coeffs\""))?
                .iter()
                .map(|c| c.as_i64().ok_or_else(|| bad("coefficient must be an integer")))
                .collect::<Result<Vec<i64>>>()?;
            row.push(field.element(&coeffs)?);
        }
        grid.push(row);
    }
    Ok(Polynumber2::from_grid(field.clone(), grid))
}

fn ladder_json(plan: &LadderPlan) -> Value {
    json!({ "w": plan.w, "R": plan.radius, "indices": plan.indices })
}

fn cmd_psi(cmd: PsiCmd) -> Result<ExitCode> {
    let field = cmd.field.build()?;
    let request = match (&cmd.k, &cmd.poly) {
        (Some(k), None) => PsiRequest::monomial(cmd.color, &field, *k, cmd.l.unwrap()),
        (None, Some(path)) => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::BadPolynumber(format!("reading stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| Error::BadPolynumber(format!("reading {path}: {e}")))?
            };
            PsiRequest::poly(cmd.color, &field, parse_poly_json(&field, &text)?)?
        }
        _ => unreachable!("clap enforces exactly one input form"),
    };
    let evaluation = psi(&request, cmd.method)?;
    println!("{}", psi_json(&request, &evaluation, cmd.explain));
    Ok(ExitCode::SUCCESS)
}

fn psi_json(request: &PsiRequest, evaluation: &PsiEvaluation, explain: bool) -> Value {
    let field = &request.field;
    let (k, l) = match &request.input {
        PsiInput::Monomial { k, l } => (json!(k), json!(l)),
        PsiInput::Poly(_) => (Value::Null, Value::Null),
    };
    let mut out = json!({
        "color": request.color.name(),
        "p": field.p(),
        "r": field.r(),
        "k": k,
        "l": l,
        "method": evaluation.method.name(),
        "value": element_json(&evaluation.value),
    });
    if let Some(plan) = &evaluation.ladder {
        out["ladder"] = ladder_json(plan);
    }
    if explain {
        if let Some(chain) = &evaluation.chain {
            out["chain"] = json!(chain);
        }
    }
    out
}

fn cmd_tables(cmd: TablesCmd) -> Result<ExitCode> {
    let rendered = match cmd.which.as_str() {
        "super-catalan" => render_super_catalan(cmd.max.unwrap_or(10), cmd.format)?,
        "omega" => render_omega(cmd.max.unwrap_or(8), cmd.format)?,
        "circular-polynumbers" => render_circular(cmd.max.unwrap_or(5), cmd.format)?,
        "psi-grid" => {
            let p = cmd
                .p
                .ok_or_else(|| Error::BadRange("psi-grid needs --p".to_string()))?;
            let field = Field::new(p, cmd.r, cmd.modulus.as_deref())?;
            render_psi_grid(cmd.color, &field, cmd.max.unwrap_or(6), cmd.format)?
        }
        _ => unreachable!("clap restricts the choices"),
    };
    print!("{rendered}");
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &SuiteReport) {
    println!(
        "suite {:<12} {:>8} checks  {}",
        report.name,
        report.checks,
        if report.passed() { "PASS" } else { "FAIL" }
    );
    for failure in &report.failures {
        println!("  failed: {failure}");
    }
}

fn cmd_verify(cmd: VerifyCmd) -> Result<ExitCode> {
    let fields = field_family(&cmd.p_list, cmd.max_r)?;
    let mut reports = Vec::new();
    let suite = cmd.suite.as_str();
    if suite == "oracle" || suite == "all" {
        reports.push(oracle_suite(&fields, cmd.max_degree));
    }
    if suite == "identities" || suite == "all" {
        reports.push(identities_suite());
    }
    if suite == "structural" || suite == "all" {
        reports.push(structural_suite(&fields));
    }
    if suite == "periodicity" || suite == "all" {
        reports.push(periodicity_suite(&fields));
    }
    if suite == "axioms" || suite == "all" {
        reports.push(axioms_suite(&fields, cmd.seed));
    }
    if suite == "all" {
        reports.push(small_degree_suite(&fields));
        reports.push(subfield_stability_suite(&cmd.p_list, cmd.max_r));
    }
    let mut ok = true;
    for report in &reports {
        print_report(report);
        ok &= report.passed();
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn bench_methods(q: u64, k: u64, l: u64) -> Vec<Method> {
    let mut methods = vec![Method::Program];
    // brute force walks the whole circle; fine at desk scale
    methods.push(Method::Brute);
    // the closed form expands a polynumber of degree k + l; skip it once
    // that becomes the very cost the program route exists to avoid
    if k + l <= 2 * q + 64 {
        methods.push(Method::Closed);
    }
    methods
}

fn cmd_bench(cmd: BenchCmd) -> Result<ExitCode> {
    let field = cmd.field.build()?;
    let q = field.q();
    let mut degrees: Vec<u64> = [0u64, 4, 16, 64, 256, 1024]
        .iter()
        .copied()
        .filter(|&d| d <= cmd.max_degree)
        .collect();
    if cmd.max_degree % 2 == 0 && !degrees.contains(&cmd.max_degree) {
        degrees.push(cmd.max_degree);
    }
    println!("{:>6} {:>6} {:>9}  {:>12}  value", "k", "l", "method", "micros");
    for d in degrees {
        let k = (d / 2) & !1;
        let l = d - k;
        let methods = bench_methods(q, k, l);
        // correctness first: every route must agree before anything is timed
        let request = PsiRequest::monomial(cmd.color, &field, k, l);
        let values: Vec<FieldElement> = methods
            .iter()
            .map(|&m| psi(&request, m).map(|e| e.value))
            .collect::<Result<_>>()?;
        if values.windows(2).any(|w| w[0] != w[1]) {
            eprintln!("error: methods disagree at k={k} l={l}");
            return Ok(ExitCode::FAILURE);
        }
        for (method, value) in methods.iter().zip(&values) {
            let start = Instant::now();
            for _ in 0..cmd.reps {
                let _ = psi(&request, *method)?;
            }
            let micros = start.elapsed().as_micros() / cmd.reps as u128;
            println!(
                "{:>6} {:>6} {:>9}  {:>12}  {}",
                k,
                l,
                method.name(),
                micros,
                value
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

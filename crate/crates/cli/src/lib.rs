//! `rrcodes` command line. Every command prints one JSON document on stdout;
//! failures print `{"error": …, "message": …}` on stderr.
//!
//! Exit status: 0 on success, 2 for bad flags or parameters, 1 when a
//! computation cannot finish (caps, unmet preconditions).

pub mod json;
pub mod verify;

use clap::{Args, Parser, Subcommand};
use rrcodes_core::codes::{self, CodeParams};
use rrcodes_core::gf::make_field;
use rrcodes_core::poly::{factor_binomial, split_reciprocal};
use rrcodes_core::{Error, RingContext};
use serde_json::{json, Value};

/// Above this many codes `codes list` wants `--force`.
pub const LIST_LIMIT: u64 = 100_000;

#[derive(Parser, Debug)]
#[command(name = "rrcodes", version, about = "Repeated-root constacyclic codes over F_{p^r}[u]/(u^e)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe F_{p^r}.
    FieldInfo(FieldArgs),
    /// Factor x^m − λ₀ over F_{p^r}.
    Factor(FactorArgs),
    /// Count or list the codes of the principal family.
    Codes {
        #[command(subcommand)]
        action: CodesAction,
    },
    /// Cardinality or dual of one principal code.
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Decide whether a self-dual code exists and list generators.
    Selfdual(SelfDualArgs),
    /// Decide equivalence with the cyclic code of the same length.
    Equiv(CodeArgs),
    /// Run the named oracle cross-checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct FieldArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: u32,
}

#[derive(Args, Debug)]
struct FactorArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long)]
    m: u64,
    /// Field element, digits c0,c1,… (default 1).
    #[arg(long, default_value = "1")]
    lambda0: String,
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long)]
    e: u32,
    #[arg(long, default_value_t = 0)]
    s: u32,
    #[arg(long)]
    m: u64,
    /// Ring element, u-parts separated by ';' (e.g. "1;1" is 1 + u).
    #[arg(long, default_value = "1")]
    lambda: String,
}

#[derive(Subcommand, Debug)]
enum CodesAction {
    Count(CodeArgs),
    List {
        #[command(flatten)]
        code: CodeArgs,
        /// List even when there are more than 100000 codes.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Args, Debug)]
struct ExponentArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Comma-separated exponents, one per irreducible factor.
    #[arg(long)]
    exponents: String,
}

#[derive(Subcommand, Debug)]
enum CodeAction {
    Card(ExponentArgs),
    Dual(ExponentArgs),
}

#[derive(Args, Debug)]
struct SelfDualArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Check every listed generator against the oracle.
    #[arg(long)]
    verify: bool,
    /// How many self-dual codes to print.
    #[arg(long, default_value_t = 32)]
    limit: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, conflicts_with_all = ["all", "list"])]
    case: Option<String>,
    #[arg(long)]
    all: bool,
    /// Print the case names.
    #[arg(long, conflicts_with = "all")]
    list: bool,
}

/// What a run produced; `main` writes it out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(v: Value) -> Self {
        Outcome { code: 0, stdout: render(&v), stderr: String::new() }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, kind: "usage", message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::CapExceeded { .. } => (1, "cap-exceeded"),
            Error::Precondition(_) => (1, "precondition"),
            Error::Hypothesis(_) => (1, "hypothesis"),
            Error::Internal(_) => (1, "internal"),
            Error::Parse(_) => (2, "parse"),
            _ => (2, "invalid-parameter"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            return Outcome { code: 0, stdout: e.to_string(), stderr: String::new() };
        }
        Err(e) => return failure(Failure::usage(e.to_string().trim_end())),
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(f) => failure(f),
    }
}

fn failure(f: Failure) -> Outcome {
    Outcome {
        code: f.code,
        stdout: String::new(),
        stderr: render(&json!({ "error": f.kind, "message": f.message })),
    }
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    let value = match command {
        Command::FieldInfo(a) => field_info(&a)?,
        Command::Factor(a) => factor(&a)?,
        Command::Codes { action: CodesAction::Count(a) } => {
            json!({ "count": json::big(&codes::count_codes(&a.params()?)?) })
        }
        Command::Codes { action: CodesAction::List { code, force } } => list(&code, force)?,
        Command::Code { action: CodeAction::Card(a) } => card(&a)?,
        Command::Code { action: CodeAction::Dual(a) } => dual(&a)?,
        Command::Selfdual(a) => self_dual(&a)?,
        Command::Equiv(a) => equiv(&a)?,
        Command::Verify(a) => return run_verify(&a),
    };
    Ok(Outcome::ok(value))
}

impl CodeArgs {
    fn params(&self) -> Result<CodeParams, Error> {
        let rc = RingContext::new(make_field(self.p, self.r)?, self.e)?;
        let lambda = rc.parse_element(&self.lambda)?;
        CodeParams::new(rc, self.m, self.s, lambda)
    }
}

fn field_info(a: &FieldArgs) -> Result<Value, Failure> {
    let f = make_field(a.p, a.r)?;
    Ok(json!({
        "p": f.p(),
        "r": f.r(),
        "q": f.order(),
        "modulus": f.modulus(),
        "modulus_text": f.describe(),
        "primitive_element": json::field_element(&f, f.primitive_element()),
        "minus_one_is_square": f.minus_one_is_square(),
    }))
}

fn factor(a: &FactorArgs) -> Result<Value, Failure> {
    let f = make_field(a.p, a.r)?;
    let lambda0 = f.parse_element(&a.lambda0)?;
    let fac = factor_binomial(&f, a.m, lambda0)?;
    let factors: Vec<Value> = fac
        .factors()
        .iter()
        .map(|g| json!({ "poly": json::field_poly(&f, g), "text": g.format(), "degree": g.degree() }))
        .collect();
    let mut out = json!({
        "p": a.p,
        "r": a.r,
        "m": a.m,
        "lambda0": json::field_element(&f, lambda0),
        "factors": factors,
        "l": fac.l(),
        "cyclotomic_classes": fac.cyclotomic_class_count(),
        "class_count_agrees": fac.class_count_agrees(),
    });
    if f.mul(lambda0, lambda0) == f.one() {
        out["reciprocal_split"] = json::split(&f, &split_reciprocal(&fac, &f)?);
    }
    Ok(out)
}

fn list(a: &CodeArgs, force: bool) -> Result<Value, Failure> {
    let pr = a.params()?;
    let count = codes::count_codes(&pr)?;
    let small = u64::try_from(&count).is_ok_and(|c| c <= LIST_LIMIT);
    if !small && !force {
        return Err(Failure {
            code: 1,
            kind: "too-many-codes",
            message: format!("{count} codes; pass --force to list them"),
        });
    }
    let mut listed = Vec::new();
    for v in codes::all_exponent_vectors(&pr) {
        let c = codes::build_principal(&pr, &v)?;
        let mut entry = json::principal(&c);
        entry["cardinality"] = json::big(&codes::principal_cardinality(&c).value);
        listed.push(entry);
    }
    Ok(json!({ "count": json::big(&count), "codes": listed }))
}

fn parse_exponents(text: &str) -> Result<Vec<u64>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::usage(format!("bad exponent {t:?}")))
        })
        .collect()
}

fn card(a: &ExponentArgs) -> Result<Value, Failure> {
    let pr = a.code.params()?;
    let c = codes::build_principal(&pr, &parse_exponents(&a.exponents)?)?;
    let report = codes::principal_cardinality(&c);
    let mut out = json::principal(&c);
    out["cardinality"] = json::big(&report.value);
    out["cardinality_exponent"] = json!(report.exponent);
    if report.differs {
        out["uncorrected"] = json::cardinality(&report)["uncorrected"].take();
    }
    Ok(out)
}

fn dual(a: &ExponentArgs) -> Result<Value, Failure> {
    let pr = a.code.params()?;
    let c = codes::build_principal(&pr, &parse_exponents(&a.exponents)?)?;
    let d = codes::dual_principal(&c)?;
    Ok(json!({
        "code": json::principal(&c),
        "dual": json::principal(&d.code),
        "lambda_inv": json::ring_element(pr.ring(), &d.lambda_inv),
        "lambda_inv_text": pr.ring().format_element(&d.lambda_inv),
    }))
}

fn self_dual(a: &SelfDualArgs) -> Result<Value, Failure> {
    let pr = a.code.params()?;
    let report = codes::self_dual_exists(&pr)?;
    let mut out = json!({
        "exists": report.exists,
        "method": report.method.name(),
        "reason": report.reason,
        "hypotheses_vacuous": report.hypotheses_vacuous,
        "criterion": report.criterion,
        "oracle": report.oracle,
        "oracle_count": report.oracle_count,
    });
    if let Some(w) = &report.witness {
        out["witness"] = json!(w);
    }
    if let Some(s) = &report.split {
        out["split"] = json::split(pr.ring().field(), s);
    }
    if report.exists == Some(true) {
        let shown = codes::self_dual_generators_first(&pr, a.limit)?;
        let mut listed = Vec::new();
        for c in &shown {
            let mut entry = json::self_dual_code(pr.ring(), c);
            if a.verify {
                entry["verified"] = json!(codes::verify_self_dual(&pr, c)?);
            }
            listed.push(entry);
        }
        out["generator_count"] = json::big(&codes::self_dual_family_size(&pr)?);
        out["generators"] = json!(listed);
    }
    Ok(out)
}

fn equiv(a: &CodeArgs) -> Result<Value, Failure> {
    let pr = a.params()?;
    let d = codes::equivalent_to_cyclic(&pr)?;
    let f = pr.ring().field();
    Ok(json!({
        "equivalent": d.equivalent,
        "delta0": d.delta0.map(|x| json::field_element(f, x)),
        "criterion_odd": d.criterion_odd,
        "criterion_even": d.criterion_even,
        "minus_delta0": d.minus_delta0.map(|x| json::field_element(f, x)),
        "reason": d.reason,
    }))
}

fn run_verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    if a.list {
        let names: Vec<&str> = verify::CASES.iter().map(|c| c.name).collect();
        return Ok(Outcome::ok(json!({ "cases": names })));
    }
    let cases: Vec<&verify::Case> = match (&a.case, a.all) {
        (Some(name), _) => vec![verify::find(name)
            .ok_or_else(|| Failure::usage(format!("unknown case {name:?}")))?],
        (None, true) => verify::CASES.iter().collect(),
        (None, false) => return Err(Failure::usage("pass --case <name>, --all or --list")),
    };
    let results: Vec<Value> = cases.iter().map(|c| c.run()).collect();
    let pass = results.iter().all(|r| r["pass"] == true);
    let mut outcome = Outcome::ok(json!({ "cases": results, "pass": pass }));
    if !pass {
        outcome.code = 1;
    }
    Ok(outcome)
}

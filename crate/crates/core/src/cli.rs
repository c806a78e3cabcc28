//! Command-line front end. [`run`] parses arguments, reads a matroid file,
//! dispatches to the library and writes a text or JSON report.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 internal invariant
//! violation, 4 a checker found a counterexample candidate.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::exactpoly::{Ambient, LaurentPoly, RatFunc, Term};
use crate::matroid::{Matroid, MatroidError, Subset};
use crate::orbitclass::{self, OrbitError};
use crate::projclass::{self, ProjError};
use crate::schubert::{self, ExpansionResult, PositivityReport, SchubertError};
use crate::selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_COUNTEREXAMPLE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "matroid-kclass",
    version,
    about = "Equivariant K-classes and Chow classes of matrix orbit closures of matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads (output does not depend on it).
    #[arg(long, env = "MATROID_KCLASS_JOBS", global = true)]
    jobs: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report wall-clock time.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// K-class K(M).
    Kclass { file: PathBuf },
    /// Chow class C(M).
    Chow { file: PathBuf },
    /// S(M) and the class in the Chow ring of (P^(r-1))^n.
    PnClass { file: PathBuf },
    /// Equivariant multiplicity at a basis, e.g. --basis 1,3.
    Multiplicity {
        file: PathBuf,
        #[arg(long)]
        basis: String,
    },
    /// Expansion of K(M) or C(M) in a Schubert basis.
    Expand {
        file: PathBuf,
        #[arg(long, value_enum)]
        basis: ExpandBasis,
    },
    /// Schur multiplicities of the multidegree (1,...,1) character.
    Characters { file: PathBuf },
    /// Positivity checks.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
    },
    /// Run the worked examples.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExpandBasis {
    Grothendieck,
    DoubleSchur,
    Composition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Pos1,
    Pos2,
    Sqfree,
    Chow2,
    Crosscheck,
    All,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

fn orbit_code(e: &OrbitError) -> i32 {
    match e {
        OrbitError::InvalidInput(_) | OrbitError::ResourceLimit { .. } | OrbitError::NotABasis(_) => {
            EXIT_INPUT
        }
        _ => EXIT_INVARIANT,
    }
}

impl From<OrbitError> for CliError {
    fn from(e: OrbitError) -> CliError {
        CliError {
            code: orbit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<SchubertError> for CliError {
    fn from(e: SchubertError) -> CliError {
        let code = match &e {
            SchubertError::Orbit(o) => orbit_code(o),
            SchubertError::InvalidDimensions { .. } | SchubertError::HasLoops(_) => EXIT_INPUT,
            _ => EXIT_INVARIANT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ProjError> for CliError {
    fn from(e: ProjError) -> CliError {
        let code = match &e {
            ProjError::Orbit(o) => orbit_code(o),
            ProjError::Poly(_) => EXIT_INVARIANT,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// On-disk matroid: either explicit bases (1-indexed) or a matrix whose
/// entries are integers or rational strings such as `"-3/2"`.
#[derive(Deserialize, Debug)]
#[serde(untagged)]
pub enum MatroidFile {
    Bases {
        n: usize,
        r: usize,
        bases: Vec<Vec<usize>>,
    },
    Matrix {
        matrix: Vec<Vec<Value>>,
        #[serde(default)]
        rank: Option<usize>,
    },
}

fn parse_entry(v: &Value) -> Result<BigRational, String> {
    let text = match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => return Err(format!("matrix entry {} is not an integer or \"p/q\" string", other)),
    };
    text.parse::<BigRational>()
        .map_err(|_| format!("matrix entry {:?} is not a rational number", text))
}

impl MatroidFile {
    pub fn into_matroid(self) -> Result<Matroid, String> {
        let echo = format!("{:?}", self);
        let wrap = |e: MatroidError| format!("{} (input: {})", e, echo);
        match self {
            MatroidFile::Bases { n, r, bases } => Matroid::from_bases(n, r, &bases).map_err(wrap),
            MatroidFile::Matrix { matrix, rank } => {
                let rows = matrix
                    .iter()
                    .map(|row| row.iter().map(parse_entry).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Matroid::from_matrix(&rows, rank).map_err(wrap)
            }
        }
    }
}

/// Parse a matroid from JSON text.
pub fn parse_matroid(text: &str) -> Result<Matroid, String> {
    let file: MatroidFile = serde_json::from_str(text).map_err(|e| {
        format!(
            "expected {{\"n\", \"r\", \"bases\"}} or {{\"matrix\"}}: {}",
            e
        )
    })?;
    file.into_matroid()
}

struct Input {
    path: String,
    digest: String,
    matroid: Matroid,
}

fn load(path: &PathBuf) -> Result<Input, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::input(format!("{}: {}", path.display(), e)))?;
    let text = String::from_utf8_lossy(&bytes);
    let matroid = parse_matroid(&text)
        .map_err(|e| CliError::input(format!("{}: {}", path.display(), e)))?;
    let digest: String = Sha256::digest(&bytes).iter().map(|b| format!("{:02x}", b)).collect();
    Ok(Input {
        path: path.display().to_string(),
        digest,
        matroid,
    })
}

fn matroid_json(m: &Matroid) -> Value {
    json!({ "n": m.n(), "r": m.rank_total(), "bases": m.basis_lists() })
}

fn poly_json(p: &LaurentPoly) -> Value {
    json!({ "text": p.to_string(), "terms": p.to_term_list() })
}

/// Rebuild a polynomial from the `terms` list of a JSON report.
pub fn poly_from_json(v: &Value, ambient: Ambient) -> Result<LaurentPoly, String> {
    let terms: Vec<Term> =
        serde_json::from_value(v["terms"].clone()).map_err(|e| e.to_string())?;
    LaurentPoly::from_term_list(ambient, &terms).map_err(|e| e.to_string())
}

fn ratfunc_json(f: &RatFunc) -> Value {
    let denominator: Vec<Value> = f
        .denominator()
        .map(|(d, k)| {
            let (a, b) = d.indices();
            json!({ "a": a, "b": b, "power": k })
        })
        .collect();
    json!({
        "text": f.to_string(),
        "numerator": poly_json(f.numerator()),
        "denominator": denominator,
    })
}

fn expansion_json(e: &ExpansionResult) -> Value {
    let coefficients: Vec<Value> = e
        .rows()
        .into_iter()
        .map(|(label, c)| json!({ "label": label, "coefficient": poly_json(c) }))
        .collect();
    json!({
        "basis": e.basis.to_string(),
        "coefficients": coefficients,
        "residual": e.residual.to_string(),
    })
}

fn report_json(r: &PositivityReport) -> Value {
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "label": e.label,
                "sign_exponent": e.sign_exponent,
                "verdict": e.verdict.name(),
                "witness": e.witness,
            })
        })
        .collect();
    json!({
        "statement": r.statement.to_string(),
        "codim": r.codim,
        "all_positive": r.all_positive(),
        "entries": entries,
    })
}

/// Result of one subcommand: text lines, a JSON payload and the exit code.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

fn check_output(m: &Matroid, which: Which) -> Result<Output, CliError> {
    let all = which == Which::All;
    let mut text = String::new();
    let mut payload = serde_json::Map::new();
    let mut code = EXIT_OK;
    let mut flag = |r: &PositivityReport, text: &mut String, payload: &mut serde_json::Map<String, Value>| {
        if r.counterexample_candidate() {
            code = code.max(EXIT_COUNTEREXAMPLE);
        }
        text.push_str(&r.to_string());
        payload.insert(r.statement.to_string(), report_json(r));
    };
    let skip = |name: &str, e: CliError, text: &mut String, payload: &mut serde_json::Map<String, Value>| {
        text.push_str(&format!("{} skipped: {}\n", name, e.message));
        payload.insert(name.to_string(), json!({ "skipped": e.message }));
    };

    if matches!(which, Which::Pos1 | Which::All) {
        let r = schubert::check_pos1(m)?;
        flag(&r, &mut text, &mut payload);
    }
    if matches!(which, Which::Pos2 | Which::All) {
        match schubert::check_pos2(m) {
            Ok(r) => flag(&r, &mut text, &mut payload),
            Err(e @ SchubertError::HasLoops(_)) if all => skip("pos2", e.into(), &mut text, &mut payload),
            Err(e) => return Err(e.into()),
        }
    }
    if matches!(which, Which::Sqfree | Which::All) {
        let r = schubert::check_sqfree(m)?;
        flag(&r, &mut text, &mut payload);
    }
    if matches!(which, Which::Chow2 | Which::All) {
        let r = schubert::check_chow2(m)?;
        flag(&r, &mut text, &mut payload);
    }
    if matches!(which, Which::Crosscheck | Which::All) {
        match projclass::cross_check(m) {
            Ok(c) => {
                if !c.equal {
                    code = code.max(EXIT_INVARIANT);
                }
                text.push_str(&format!(
                    "crosscheck: li = {}, via K = {}, {}\n",
                    c.li,
                    c.via_k,
                    if c.equal { "equal" } else { "MISMATCH" }
                ));
                payload.insert(
                    "crosscheck".into(),
                    json!({
                        "li": poly_json(c.li.poly()),
                        "via_k": poly_json(c.via_k.poly()),
                        "equal": c.equal,
                    }),
                );
            }
            Err(e @ (ProjError::Loops(_) | ProjError::Disconnected(_))) if all => {
                skip("crosscheck", e.into(), &mut text, &mut payload)
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Output {
        text,
        json: Value::Object(payload),
        code,
    })
}

fn execute(command: &Command, input: Option<&Input>) -> Result<Output, CliError> {
    let m = || &input.expect("subcommand has a file").matroid;
    match command {
        Command::Kclass { .. } => {
            let k = orbitclass::kclass(m())?;
            Ok(Output::ok(
                format!("{}\n", k.poly()),
                json!({ "codim": k.codim(), "kclass": poly_json(k.poly()) }),
            ))
        }
        Command::Chow { .. } => {
            let c = orbitclass::chow_class(m())?;
            Ok(Output::ok(
                format!("{}\n", c.poly()),
                json!({ "degree": c.degree(), "chow": poly_json(c.poly()) }),
            ))
        }
        Command::PnClass { .. } => {
            let s = projclass::s_of_m(m())?;
            let li = projclass::li_class(m())?;
            Ok(Output::ok(
                format!("S(M) = {}\nclass = {}\n", s, li),
                json!({ "s_points": s.points(), "class": poly_json(li.poly()) }),
            ))
        }
        Command::Multiplicity { basis, .. } => {
            let b = Subset::parse(basis).map_err(CliError::input)?;
            let f = orbitclass::equiv_multiplicity(m(), b)?;
            Ok(Output::ok(
                format!("{}\n", f),
                json!({ "basis": b.elements(), "multiplicity": ratfunc_json(&f) }),
            ))
        }
        Command::Expand { basis, .. } => {
            let e = match basis {
                ExpandBasis::Grothendieck => {
                    schubert::expand_grothendieck(&orbitclass::kclass(m())?)?
                }
                ExpandBasis::DoubleSchur => {
                    schubert::expand_double_schur(&orbitclass::chow_class(m())?)?
                }
                ExpandBasis::Composition => {
                    schubert::expand_composition(&orbitclass::kclass(m())?)?
                }
            };
            Ok(Output::ok(e.to_string(), expansion_json(&e)))
        }
        Command::Characters { .. } => {
            let ch = orbitclass::gv_character(m())?;
            let mut text = String::new();
            if let Some(w) = &ch.warning {
                text.push_str(&format!("warning: {}\n", w));
            }
            let mut mult = serde_json::Map::new();
            for (lambda, c) in ch.multiplicities.iter().rev() {
                text.push_str(&format!("{}: {}\n", lambda, c));
                mult.insert(lambda.to_string(), Value::String(c.to_string()));
            }
            Ok(Output::ok(
                text,
                json!({ "multiplicities": mult, "warning": ch.warning }),
            ))
        }
        Command::Check { which, .. } => check_output(m(), *which),
        Command::Selftest => {
            let results = selftest::run_all();
            let mut text = String::new();
            let mut rows = Vec::new();
            for o in &results {
                let status = if o.passed { "PASS" } else { "FAIL" };
                text.push_str(&format!("{} {}: {}\n", status, o.name, o.detail));
                rows.push(json!({ "name": o.name, "passed": o.passed, "detail": o.detail }));
            }
            let code = if results.iter().all(|o| o.passed) {
                EXIT_OK
            } else {
                EXIT_INVARIANT
            };
            Ok(Output {
                text,
                json: json!({ "fixtures": rows }),
                code,
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Kclass { .. } => "kclass",
        Command::Chow { .. } => "chow",
        Command::PnClass { .. } => "pn-class",
        Command::Multiplicity { .. } => "multiplicity",
        Command::Expand { .. } => "expand",
        Command::Characters { .. } => "characters",
        Command::Check { .. } => "check",
        Command::Selftest => "selftest",
    }
}

fn file_of(c: &Command) -> Option<&PathBuf> {
    match c {
        Command::Kclass { file }
        | Command::Chow { file }
        | Command::PnClass { file }
        | Command::Multiplicity { file, .. }
        | Command::Expand { file, .. }
        | Command::Characters { file }
        | Command::Check { file, .. } => Some(file),
        Command::Selftest => None,
    }
}

fn render(cli: &Cli, input: Option<&Input>, out: &Output, elapsed_ms: f64) -> String {
    match cli.format {
        Format::Text => {
            let mut s = out.text.clone();
            if cli.timing {
                s.push_str(&format!("time: {:.1} ms\n", elapsed_ms));
            }
            s
        }
        Format::Json => {
            let mut report = serde_json::Map::new();
            report.insert("command".into(), json!(command_name(&cli.command)));
            if let Some(inp) = input {
                report.insert(
                    "input".into(),
                    json!({
                        "file": inp.path,
                        "sha256": inp.digest,
                        "matroid": matroid_json(&inp.matroid),
                    }),
                );
            }
            report.insert("result".into(), out.json.clone());
            report.insert("exit_code".into(), json!(out.code));
            if cli.timing {
                report.insert("timing_ms".into(), json!(elapsed_ms));
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(report))
                .expect("report serializes");
            s.push('\n');
            s
        }
    }
}

fn run_parsed(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let input = file_of(&cli.command).map(load).transpose()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::input(format!("--jobs: {}", e)))?;
    let start = Instant::now();
    let result = pool.install(|| execute(&cli.command, input.as_ref()))?;
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let text = render(cli, input.as_ref(), &result, elapsed);
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::input(format!("{}: {}", path.display(), e)))?,
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::input(e.to_string()))?,
    }
    Ok(result.code)
}

/// Run the command line `args` (program name first) and return the exit
/// code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match run_parsed(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_file_shapes() {
        let m = parse_matroid(r#"{"n": 3, "r": 2, "bases": [[1,2],[1,3],[2,3]]}"#).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
        let m = parse_matroid(r#"{"matrix": [[1, 0, "1/2"], [0, 1, "-3"]]}"#).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
        let err = parse_matroid(r#"{"n": 4, "r": 2, "bases": [[1,2],[3,4]]}"#).unwrap_err();
        assert!(err.contains("exchange"), "{}", err);
        assert!(parse_matroid(r#"{"matrix": [[1, "x"]]}"#).is_err());
        assert!(parse_matroid(r#"{"n": 2, "r": 1, "bases": [[1],[1]]}"#).is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["matroid-kclass", "frobnicate"], &mut out, &mut err), EXIT_INPUT);
        assert_eq!(run(["matroid-kclass", "--help"], &mut out, &mut err), EXIT_OK);
    }
}

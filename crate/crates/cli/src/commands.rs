//! `run_command` and the exit-code contract.
//!
//! Exit 0 on success and 1 when the input cannot be read or parsed.
//! Domain errors exit 2, and so does a `verify` with failing checks.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use whfact_core::{
    diagonalize_2x2, fredholm_report, regional_smith, smith_decompose, verify_smith, verify_wh, wh_factorize, Error,
    RatMatFun, Region, VerificationReport,
};

use crate::document::{
    checks_to_wire, parse_matrix, Diag2x2Wire, DocumentError, FactorOutput, FactorizationWire, FredholmWire,
    InputDocument, SmithWire, TraceWire, VerifyWire,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "whfact", version, about = "Exact Wiener-Hopf type factorization of rational matrix functions")]
struct Cli {
    /// Write JSON to this path instead of text to stdout (`-` for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith form of qΩ, classical or relative to a region.
    Smith {
        input: PathBuf,
        #[arg(long, value_enum)]
        region: Option<RegionArg>,
    },
    /// Factor Ω = z^-k Ω₋ Ω∘ P₀ Ω₊.
    Factor {
        input: PathBuf,
        /// Include every intermediate of the construction and its checks.
        #[arg(long)]
        trace: bool,
    },
    /// Fredholm verdict and index of the Toeplitz operator with symbol Ω.
    Fredholm { input: PathBuf },
    /// Check a factorization (JSON as written by `factor --json`) against Ω.
    Verify { input: PathBuf, factorization: PathBuf },
    /// Bezout diagonalization of a lower-triangular 2×2 symbol.
    #[command(name = "diag2x2")]
    Diag2x2 { input: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RegionArg {
    Inside,
    Circle,
    Outside,
}

impl From<RegionArg> for Region {
    fn from(r: RegionArg) -> Self {
        match r {
            RegionArg::Inside => Region::InsideDisk,
            RegionArg::Circle => Region::OnCircle,
            RegionArg::Outside => Region::OutsideDisk,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Domain(d) => Failure::Domain(d),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Result of a command: JSON value plus the text rendering.
struct Rendered {
    json: serde_json::Value,
    text: String,
}

fn rendered(value: &impl Serialize, text: String) -> Rendered {
    Rendered { json: serde_json::to_value(value).expect("wire types serialize"), text }
}

/// Runs the CLI on `argv` (including the program name) without touching the
/// process streams, except for `--json <path>` files.
pub fn run_command<I, S>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput { code: 1, stdout: String::new(), stderr: text }
            } else {
                CommandOutput { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = CommandOutput { code: 0, stdout: String::new(), stderr: String::new() };
    let (result, domain_failure) = execute(&cli.command);
    let rendered = match result {
        Ok(r) => r,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) | Failure::Input(m) => (1, format!("error: {m}\n")),
                Failure::Domain(e) => (2, format!("{}: {e}\n", e.name())),
            };
            out.code = code;
            out.stderr = msg;
            return out;
        }
    };
    match &cli.json {
        None => out.stdout = rendered.text,
        Some(path) => {
            let body = serde_json::to_string_pretty(&rendered.json).expect("json values serialize") + "\n";
            if path.as_os_str() == "-" {
                out.stdout = body;
            } else if let Err(e) = std::fs::write(path, body) {
                out.code = 1;
                out.stderr = format!("error: cannot write {}: {e}\n", path.display());
                return out;
            }
        }
    }
    if let Some(e) = domain_failure {
        out.code = 2;
        out.stderr = format!("{}: {e}\n", e.name());
    }
    out
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_input(path: &Path) -> Result<RatMatFun, Failure> {
    let doc: InputDocument = serde_json::from_str(&read_file(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_matrix(&doc)?)
}

/// The second value carries a domain failure that still produced output,
/// such as a verification report with failing checks.
fn execute(cmd: &Command) -> (Result<Rendered, Failure>, Option<Error>) {
    match cmd {
        Command::Verify { input, factorization } => match verify(input, factorization) {
            Ok((r, rep)) => {
                let failure = (!rep.all_passed()).then(|| {
                    let names: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
                    Error::InvalidFactorization(format!("failed checks: {}", names.join(", ")))
                });
                (Ok(r), failure)
            }
            Err(f) => (Err(f), None),
        },
        Command::Smith { input, region } => (smith(input, region.map(Region::from)), None),
        Command::Factor { input, trace } => (factor(input, *trace), None),
        Command::Fredholm { input } => (fredholm(input), None),
        Command::Diag2x2 { input } => (diag2x2(input), None),
    }
}

fn smith(input: &Path, region: Option<Region>) -> Result<Rendered, Failure> {
    let om = load_input(input)?;
    let s = match region {
        Some(r) => regional_smith(&om.p1, r)?,
        None => smith_decompose(&om.p1)?,
    };
    if region.is_none() {
        let rep = verify_smith(&om.p1, &s);
        if !rep.all_passed() {
            return Err(Failure::Domain(Error::InvalidFactorization(rep.to_string())));
        }
    }
    let mut text = String::new();
    let _ = writeln!(text, "region = {}", region.map_or_else(|| "plane".to_string(), |r| r.to_string()));
    let _ = writeln!(text, "q = {}", om.q);
    let _ = writeln!(text, "E = {}", s.e);
    let _ = writeln!(text, "D = diag({})", join(&s.d));
    let _ = writeln!(text, "F = {}", s.f);
    Ok(rendered(&SmithWire::new(&om.q, &s), text))
}

fn factorization_text(f: &whfact_core::WHFactorization) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "k = {}", f.k);
    let _ = writeln!(text, "Omega_minus = {}", f.omega_minus);
    let _ = writeln!(text, "Omega_circ = diag({})", join(&f.omega_circ));
    let _ = writeln!(text, "P0 = {}", f.p0);
    let _ = writeln!(text, "Omega_plus = {}", f.omega_plus);
    text
}

fn factor(input: &Path, with_trace: bool) -> Result<Rendered, Failure> {
    let om = load_input(input)?;
    let (fact, trace) = wh_factorize(&om)?;
    let mut text = factorization_text(&fact);
    if with_trace {
        let _ = writeln!(text, "\ntrace:");
        let _ = writeln!(text, "q = {}, kappa = {}", trace.q, trace.kappa);
        let _ = writeln!(text, "P1 = {}", trace.p1);
        let _ = writeln!(text, "Smith(P1): D = diag({})", join(&trace.smith1.d));
        let _ = writeln!(text, "N = {}", trace.n);
        let _ = writeln!(text, "P2 = {}", trace.p2);
        let _ = writeln!(text, "Smith(P2): D = diag({})", join(&trace.smith2.d));
        let _ = writeln!(text, "rho = {:?}, eta = {:?}", trace.rho, trace.eta);
        let _ = writeln!(text, "K = {}", trace.k_shift);
        let _ = writeln!(text, "P3 = {}", trace.p3);
        for (i, st) in trace.split3.steps.iter().enumerate() {
            let _ = writeln!(text, "Q{} = {}", i + 1, st.q);
        }
        let _ = writeln!(text, "N - K + kappa = {}", trace.exponent);
        let _ = writeln!(text, "checks:");
        text.push_str(&check_lines(&trace.checks));
    }
    let out = FactorOutput {
        factorization: FactorizationWire::new(&fact),
        trace: with_trace.then(|| TraceWire::new(&trace)),
    };
    Ok(rendered(&out, text))
}

fn fredholm(input: &Path) -> Result<Rendered, Failure> {
    let om = load_input(input)?;
    let (fact, _) = wh_factorize(&om)?;
    let r = fredholm_report(&fact)?;
    let wire = FredholmWire::new(&r);
    let mut text = String::new();
    if r.is_fredholm {
        let _ = writeln!(text, "Fredholm, index {}", r.index.unwrap_or_default());
    } else {
        let _ = writeln!(text, "not Fredholm; nonconstant s_j: {}", wire.witnesses.join(", "));
    }
    let _ = writeln!(text, "m = {}, k = {}, deg q_j = {:?}, n_j = {:?}", r.m, r.k, r.q_degrees, r.n_exponents);
    Ok(rendered(&wire, text))
}

fn verify(input: &Path, fact_path: &Path) -> Result<(Rendered, VerificationReport), Failure> {
    let om = load_input(input)?;
    let bad = |e: serde_json::Error| Failure::Input(format!("{}: {e}", fact_path.display()));
    let mut value: serde_json::Value = serde_json::from_str(&read_file(fact_path)?).map_err(bad)?;
    // accept the full `factor --json` output as well as the bare factorization
    if let Some(inner) = value.get_mut("factorization") {
        value = inner.take();
    }
    let wire: FactorizationWire = serde_json::from_value(value).map_err(bad)?;
    let fact = wire.decode().map_err(|e| Failure::Input(format!("{}: {e}", fact_path.display())))?;
    if fact.size() != om.size() {
        return Err(Failure::Usage(format!(
            "factorization has size {} but the input has size {}",
            fact.size(),
            om.size()
        )));
    }
    let rep = verify_wh(&om, &fact);
    let text = check_lines(&rep);
    let r = rendered(&VerifyWire { all_passed: rep.all_passed(), checks: checks_to_wire(&rep.checks) }, text);
    Ok((r, rep))
}

fn diag2x2(input: &Path) -> Result<Rendered, Failure> {
    let om = load_input(input)?;
    let d = diagonalize_2x2(&om.omega)?;
    let mut text = String::new();
    let _ = writeln!(text, "k1 = {}, k2 = {}, k12 = {}", d.k1, d.k2, d.k12.map_or("none".to_string(), |k| k.to_string()));
    let _ = writeln!(text, "p1 = {}, p2 = {}", d.p1, d.p2);
    let _ = writeln!(text, "Omega_minus = {}", d.omega_minus);
    let _ = writeln!(text, "middle = diag({})", join(&d.middle));
    let _ = writeln!(text, "Omega_plus = {}", d.omega_plus);
    Ok(rendered(&Diag2x2Wire::new(&d), text))
}

fn check_lines(rep: &VerificationReport) -> String {
    let mut s = String::new();
    for c in &rep.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        if c.detail.is_empty() {
            let _ = writeln!(s, "  {mark} {}", c.name);
        } else {
            let _ = writeln!(s, "  {mark} {}: {}", c.name, c.detail);
        }
    }
    s
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}


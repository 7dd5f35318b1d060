use std::time::Instant;

use g2mod::exactnum::{complex_from_strings, complex_to_strings, parse_rational};
use g2mod::g2curve::{validate_curve, Genus2Curve, IgusaTriple};
use g2mod::siegel::SiegelPoint;
use g2mod::sp4::SymplecticMatrix;
use rug::{Complex, Integer, Rational};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Precision(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Input(_) => 3,
            Self::Precision(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Input(m) => write!(f, "invalid input: {m}"),
            Self::Precision(m) => write!(f, "precision failure: {m}"),
        }
    }
}

impl From<g2mod::Error> for CliError {
    fn from(e: g2mod::Error) -> Self {
        match e {
            g2mod::Error::Precision(m) => Self::Precision(m),
            other => Self::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Self { name: name.to_string(), pass, detail: detail.into() }
    }
}

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    pub precision: u32,
    pub elapsed: u64,
}

/// What a command hands back before timing and framing are added.
pub struct Outcome {
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn new(inputs: Value, results: Value) -> Self {
        Self { inputs, results, checks: Vec::new() }
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.checks = checks;
        self
    }

    pub fn into_report(self, command: &str, precision: u32, started: Instant) -> RunReport {
        RunReport {
            command: command.to_string(),
            inputs: self.inputs,
            results: self.results,
            checks: self.checks,
            precision,
            elapsed: u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX),
        }
    }
}

pub fn read_file(path: &std::path::Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> CliResult<T> {
    serde_json::from_str(&read_file(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn rational(s: &str) -> CliResult<Rational> {
    parse_rational(s).map_err(CliError::from)
}

pub fn integer(s: &str) -> CliResult<Integer> {
    s.trim().parse::<Integer>().map_err(|e| CliError::Input(format!("bad integer {s:?}: {e}")))
}

pub fn complex_json(z: &Complex) -> Value {
    let [re, im] = complex_to_strings(z);
    json!([re, im])
}

#[derive(Deserialize)]
pub struct CurveFile {
    pub f: Vec<String>,
}

pub fn load_curve(path: &std::path::Path) -> CliResult<Genus2Curve<Rational>> {
    let file: CurveFile = read_json(path)?;
    let coeffs = file.f.iter().map(|s| rational(s)).collect::<CliResult<Vec<_>>>()?;
    Ok(validate_curve(&coeffs)?)
}

pub fn curve_json<S: ToString>(f: &[S]) -> Value {
    json!({ "f": f.iter().map(ToString::to_string).collect::<Vec<_>>() })
}

pub fn complex_curve_json(f: &[Complex]) -> Value {
    json!({ "f": f.iter().map(complex_json).collect::<Vec<_>>() })
}

pub fn triple_json_rational(j: &IgusaTriple<Rational>) -> Value {
    json!({ "j1": j.j1.to_string(), "j2": j.j2.to_string(), "j3": j.j3.to_string(), "finite": j.finite })
}

pub fn triple_json_complex(j: &IgusaTriple<Complex>) -> Value {
    json!({ "j1": complex_json(&j.j1), "j2": complex_json(&j.j2), "j3": complex_json(&j.j3), "finite": j.finite })
}

#[derive(Deserialize)]
pub struct SiegelFile {
    pub tau1: [String; 2],
    pub tau2: [String; 2],
    pub tau3: [String; 2],
    pub prec: Option<u32>,
}

pub fn load_siegel(path: &std::path::Path, prec: u32) -> CliResult<SiegelPoint> {
    let file: SiegelFile = read_json(path)?;
    let prec = file.prec.unwrap_or(prec);
    let c = |v: &[String; 2]| complex_from_strings(&v[0], &v[1], prec).map_err(CliError::from);
    Ok(SiegelPoint::new(c(&file.tau1)?, c(&file.tau2)?, c(&file.tau3)?, prec)?)
}

pub fn siegel_json(tau: &SiegelPoint) -> Value {
    let [a, b, c] = tau.components();
    json!({ "tau1": complex_json(a), "tau2": complex_json(b), "tau3": complex_json(c), "prec": tau.prec() })
}

pub fn load_matrix(path: &std::path::Path) -> CliResult<SymplecticMatrix> {
    let rows: Vec<Vec<String>> = read_json(path)?;
    if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
        return Err(CliError::Input("matrix must be 4x4".into()));
    }
    let mut entries: [[Integer; 4]; 4] = Default::default();
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            entries[i][j] = integer(v)?;
        }
    }
    Ok(SymplecticMatrix::new(entries)?)
}

pub fn matrix_json(m: &SymplecticMatrix) -> Value {
    json!(m.to_strings())
}

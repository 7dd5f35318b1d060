use std::path::{Path, PathBuf};

use clap::Subcommand;
use g2mod::qseries::{
    fit_coefficients, koecher_check, laurent_quotient, series_invert, series_mul, FourierSeries, LinearTemplate,
    SeriesDataset,
};
use serde_json::{json, Value};

use crate::report::{read_file, Check, CliResult, Outcome};
use crate::Global;

#[derive(Subcommand)]
pub enum QexpCmd {
    /// Product of two series files.
    Mul {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Inverse of a unit.
    Invert {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// numerator / cusp^power as a Laurent series.
    Quotient {
        #[arg(long)]
        num: PathBuf,
        #[arg(long)]
        cusp: PathBuf,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Validate a series file: cone support, and cusp normalisation for
    /// names starting with `chi`.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "series")]
        name: String,
    },
    /// Solve sum u_j basis_j = target (or = 0) for rational u_j.
    Fit {
        #[arg(long, num_args = 1.., required = true)]
        basis: Vec<PathBuf>,
        #[arg(long)]
        target: Option<PathBuf>,
    },
}

fn load(path: &Path) -> CliResult<FourierSeries> {
    Ok(FourierSeries::parse(&read_file(path)?)?)
}

fn series_json(s: &FourierSeries) -> Value {
    json!({ "order": s.order(), "shift": s.shift(), "terms": s.len(), "text": s.to_text() })
}

fn path(p: &Path) -> String {
    p.display().to_string()
}

impl QexpCmd {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Mul { .. } => "mul",
            Self::Invert { .. } => "invert",
            Self::Quotient { .. } => "quotient",
            Self::Check { .. } => "check",
            Self::Fit { .. } => "fit",
        }
    }

    pub fn run(&self, _g: &Global) -> CliResult<Outcome> {
        match self {
            Self::Mul { a, b } => {
                let (x, y) = (load(a)?, load(b)?);
                let prod = series_mul(&x, &y);
                let closed = !(koecher_check(&x) && koecher_check(&y)) || koecher_check(&prod);
                Ok(Outcome::new(json!({ "a": path(a), "b": path(b) }), json!({ "product": series_json(&prod) }))
                    .with_checks(vec![Check::new("cone_closure", closed, "product of cone series stays in the cone")]))
            }
            Self::Invert { input } => {
                let s = load(input)?;
                let inv = series_invert(&s)?;
                let one = series_mul(&s, &inv).normalize_shift();
                let ok = one == FourierSeries::one(one.order());
                Ok(Outcome::new(json!({ "in": path(input) }), json!({ "inverse": series_json(&inv) }))
                    .with_checks(vec![Check::new("inverse_identity", ok, "s * s^-1 = 1 to the truncation order")]))
            }
            Self::Quotient { num, cusp, power } => {
                let n = load(num)?;
                let c = SeriesDataset::new("chi", load(cusp)?, &path(cusp))?;
                let q = laurent_quotient(&n, &c, *power)?;
                Ok(Outcome::new(
                    json!({ "num": path(num), "cusp": path(cusp), "power": power }),
                    json!({ "quotient": series_json(&q) }),
                ))
            }
            Self::Check { input, name } => {
                let s = load(input)?;
                let cone = koecher_check(&s);
                let mut checks = vec![Check::new("koecher_cone", cone, "all indices satisfy 4km - l^2 >= 0")];
                let mut results = json!({ "series": series_json(&s) });
                if name.starts_with("chi") {
                    let normalized = SeriesDataset::new(name, s.clone(), &path(input));
                    checks.push(Check::new(
                        "cusp_normalized",
                        normalized.is_ok(),
                        normalized.as_ref().err().map_or_else(|| "ok".to_string(), ToString::to_string),
                    ));
                    if let Some(c) = normalized.ok().and_then(|d| d.normalization_constant()) {
                        results["normalization_constant"] = json!(c);
                    }
                }
                Ok(Outcome::new(json!({ "in": path(input), "name": name }), results).with_checks(checks))
            }
            Self::Fit { basis, target } => {
                let b = basis.iter().map(|p| load(p)).collect::<CliResult<Vec<_>>>()?;
                let t = target.as_deref().map(load).transpose()?;
                let template = LinearTemplate::from_series(&b, t.as_ref());
                let solution = fit_coefficients(&template)?;
                let results = json!({
                    "equations": template.coefficients.len(),
                    "unknowns": template.unknowns,
                    "solution": solution.map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()),
                });
                Ok(Outcome::new(
                    json!({ "basis": basis.iter().map(|p| path(p)).collect::<Vec<_>>(), "target": target.as_deref().map(path) }),
                    results,
                ))
            }
        }
    }
}

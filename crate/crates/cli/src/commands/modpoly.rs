use std::path::PathBuf;

use clap::Subcommand;
use g2mod::exactnum::ComplexPoly;
use g2mod::g2curve::{upoly, IgusaTriple};
use g2mod::modpoly::{degree_profile, evaluated_ftilde, evaluated_p2, l2_evaluate, reconstruct_p2, ReconstructOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::report::{
    complex_json, integer, load_curve, rational, read_json, triple_json_complex, Check, CliResult, Outcome,
};
use crate::Global;

#[derive(Subcommand)]
pub enum ModpolyCmd {
    /// The level-2 modular polynomial evaluated at a curve.
    Eval2 {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also recover exact rational coefficients.
        #[arg(long)]
        reconstruct: bool,
        /// Largest denominator accepted, as an integer or `2^k`.
        #[arg(long, default_value = "2^256")]
        denom_bound: String,
        /// Precision cap for escalation.
        #[arg(long, default_value_t = 2000)]
        max_prec: u32,
    },
    /// The companion polynomial F_k for k = 2 or 3.
    Ftilde {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        k: u8,
    },
    /// Evaluate L2 at a rational point (j1, j2, j3).
    L2 {
        #[arg(long, allow_hyphen_values = true)]
        j1: String,
        #[arg(long, allow_hyphen_values = true)]
        j2: String,
        #[arg(long, allow_hyphen_values = true)]
        j3: String,
    },
    /// Numerator and denominator degrees of a sampled rational function.
    Degprof {
        /// {"numerator": [c0, c1, ..], "denominator": [..], "samples": [..]}
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        mmax: usize,
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Deserialize)]
struct FunctionSpec {
    numerator: Vec<String>,
    denominator: Vec<String>,
    samples: Option<Vec<String>>,
}

fn poly_json(p: &ComplexPoly) -> Value {
    json!(p.coeffs().iter().map(complex_json).collect::<Vec<_>>())
}

fn parse_bound(s: &str) -> CliResult<rug::Integer> {
    match s.trim().strip_prefix("2^") {
        Some(k) => Ok(rug::Integer::from(1) << integer(k)?.to_u32().unwrap_or(0)),
        None => integer(s),
    }
}

impl ModpolyCmd {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Eval2 { .. } => "eval2",
            Self::Ftilde { .. } => "ftilde",
            Self::L2 { .. } => "l2",
            Self::Degprof { .. } => "degprof",
        }
    }

    pub fn run(&self, g: &Global) -> CliResult<Outcome> {
        match self {
            Self::Eval2 { input, reconstruct, denom_bound, max_prec } => {
                let c = load_curve(input)?;
                let e = evaluated_p2(&c, g.prec)?;
                let mut results = json!({
                    "P": poly_json(&e.p),
                    "source": triple_json_complex(&e.source),
                    "image_j1": e.images.iter().map(|j| complex_json(&j.j1)).collect::<Vec<_>>(),
                });
                let mut checks = vec![Check::new("degree", e.p.degree() == Some(15), "monic of degree 15")];
                if *reconstruct {
                    let opts = ReconstructOptions { denom_bound: parse_bound(denom_bound)?, max_prec: *max_prec };
                    let r = reconstruct_p2(&c, g.prec, &opts)?;
                    checks.push(Check::new(
                        "rational_reconstruction",
                        r.coefficients.is_some(),
                        format!("attempts at {:?} bits", r.attempts),
                    ));
                    results["rational_P"] =
                        json!(r.coefficients.map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()));
                    results["reconstruction_attempts"] = json!(r.attempts);
                }
                Ok(Outcome::new(
                    json!({ "in": input.display().to_string(), "reconstruct": reconstruct, "denom_bound": denom_bound, "max_prec": max_prec }),
                    results,
                )
                .with_checks(checks))
            }
            Self::Ftilde { input, k } => {
                let c = load_curve(input)?;
                let f = evaluated_ftilde(&c, usize::from(*k), g.prec)?;
                Ok(Outcome::new(json!({ "in": input.display().to_string(), "k": k }), json!({ "F": poly_json(&f) })))
            }
            Self::L2 { j1, j2, j3 } => {
                let j = IgusaTriple { j1: rational(j1)?, j2: rational(j2)?, j3: rational(j3)?, finite: true };
                let v = l2_evaluate(&j);
                Ok(Outcome::new(json!({ "j1": j1, "j2": j2, "j3": j3 }), json!({ "value": v.to_string() })))
            }
            Self::Degprof { spec, mmax, nmax } => {
                let f: FunctionSpec = read_json(spec)?;
                let num = f.numerator.iter().map(|s| rational(s)).collect::<CliResult<Vec<_>>>()?;
                let den = f.denominator.iter().map(|s| rational(s)).collect::<CliResult<Vec<_>>>()?;
                let samples = match &f.samples {
                    Some(s) => s.iter().map(|x| rational(x)).collect::<CliResult<Vec<_>>>()?,
                    None => default_nodes(2 * (mmax + nmax + 2), g.seed),
                };
                let eval = |x: &Rational| {
                    let d = upoly::eval(&den, x);
                    (d != 0).then(|| upoly::eval(&num, x) / d)
                };
                let found = degree_profile(eval, *mmax, *nmax, &samples)?;
                Ok(Outcome::new(
                    json!({ "spec": spec.display().to_string(), "mmax": mmax, "nmax": nmax, "samples": samples.len() }),
                    json!({ "degrees": found.map(|(m, n)| json!({ "numerator": m, "denominator": n })) }),
                ))
            }
        }
    }
}

/// Distinct random rationals `p/q` with `|p| <= 1000`, `1 <= q <= 1000`.
pub fn default_nodes(count: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let x = Rational::from((rng.gen_range(-1000i64..=1000), rng.gen_range(1i64..=1000)));
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

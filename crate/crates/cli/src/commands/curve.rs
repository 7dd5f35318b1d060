use std::path::PathBuf;

use clap::Subcommand;
use g2mod::exactnum::complex_to_strings;
use g2mod::g2curve::{absolute_igusa, igusa_clebsch, transform_model};
use g2mod::richelot::{all_richelot_steps, split_count, IsogenyRecord, RichelotImage};
use rug::Rational;
use serde_json::{json, Value};

use crate::report::{
    complex_curve_json, complex_json, curve_json, load_curve, rational, triple_json_complex, triple_json_rational,
    Check, CliError, CliResult, Outcome,
};
use crate::Global;

#[derive(Subcommand)]
pub enum CurveCmd {
    /// Check that a curve file describes a monic separable sextic.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Igusa-Clebsch and absolute Igusa invariants.
    Invariants {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Change of model by x -> (a x + b)/(c x + d).
    Transform {
        #[arg(long = "in")]
        input: PathBuf,
        /// Matrix entries a,b,c,d as rationals.
        #[arg(long, value_delimiter = ',', num_args = 4)]
        g: Vec<String>,
    },
}

#[derive(Subcommand)]
pub enum RichelotCmd {
    /// All 15 Richelot steps with their image invariants.
    All {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

impl CurveCmd {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Validate { .. } => "validate",
            Self::Invariants { .. } => "invariants",
            Self::Transform { .. } => "transform",
        }
    }

    pub fn run(&self, _g: &Global) -> CliResult<Outcome> {
        match self {
            Self::Validate { input } => {
                let c = load_curve(input)?;
                Ok(Outcome::new(
                    json!({ "in": input.display().to_string() }),
                    json!({ "curve": curve_json(c.coefficients()), "valid": true }),
                ))
            }
            Self::Invariants { input } => {
                let c = load_curve(input)?;
                let ic = igusa_clebsch(&c);
                let j = absolute_igusa(&c);
                Ok(Outcome::new(
                    json!({ "in": input.display().to_string() }),
                    json!({
                        "igusa_clebsch": [ic.i2.to_string(), ic.i4.to_string(), ic.i6.to_string(), ic.i10.to_string()],
                        "absolute": triple_json_rational(&j),
                    }),
                )
                .with_checks(vec![Check::new("finite", j.finite, "I10 is non-zero")]))
            }
            Self::Transform { input, g } => {
                let c = load_curve(input)?;
                let e = g.iter().map(|s| rational(s)).collect::<CliResult<Vec<Rational>>>()?;
                let [a, b, cc, d]: [Rational; 4] =
                    e.try_into().map_err(|_| CliError::Input("--g needs four entries".into()))?;
                let t = transform_model(&c, &[[a, b], [cc, d]])?;
                let same = absolute_igusa(&c) == absolute_igusa(&t);
                Ok(Outcome::new(
                    json!({ "in": input.display().to_string(), "g": g }),
                    json!({ "curve": curve_json(t.coefficients()) }),
                )
                .with_checks(vec![Check::new(
                    "invariants_preserved",
                    same,
                    "absolute invariants agree exactly",
                )]))
            }
        }
    }
}

pub fn record_json(r: &IsogenyRecord) -> Value {
    let quad = |q: &[rug::Complex; 3]| q.iter().map(complex_json).collect::<Vec<_>>();
    json!({
        "pairs": r.triple.pairs,
        "triple": [quad(&r.triple.a), quad(&r.triple.b), quad(&r.triple.c)],
        "delta": complex_to_strings(&r.delta),
        "invariants": r.invariants.as_ref().map(triple_json_complex),
        "split": r.invariants.is_none(),
    })
}

impl RichelotCmd {
    pub fn name(&self) -> &'static str {
        "all"
    }

    pub fn run(&self, g: &Global) -> CliResult<Outcome> {
        let Self::All { input } = self;
        let c = load_curve(input)?;
        let steps = all_richelot_steps(&c, g.prec)?;
        let records: Vec<IsogenyRecord> = steps
            .iter()
            .map(|s| IsogenyRecord {
                triple: s.triple.clone(),
                delta: s.delta.clone(),
                invariants: match &s.image {
                    RichelotImage::Curve(img) => Some(absolute_igusa(img)),
                    RichelotImage::Split => None,
                },
            })
            .collect();
        let images: Vec<Value> = steps
            .iter()
            .map(|s| match &s.image {
                RichelotImage::Curve(img) => complex_curve_json(img.coefficients()),
                RichelotImage::Split => Value::Null,
            })
            .collect();
        let mut steps_json: Vec<Value> = records.iter().map(record_json).collect();
        for (s, img) in steps_json.iter_mut().zip(images) {
            s["image"] = img;
        }
        let checks = vec![
            Check::new("fifteen_factorizations", records.len() == 15, format!("{} records", records.len())),
            Check::new("images_finite", records.iter().flat_map(|r| &r.invariants).all(|j| j.finite), "no poles"),
        ];
        Ok(Outcome::new(
            json!({ "in": input.display().to_string() }),
            json!({ "steps": steps_json, "split_markers": split_count(&records) }),
        )
        .with_checks(checks))
    }
}

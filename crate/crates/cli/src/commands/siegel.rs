use std::path::PathBuf;

use clap::Subcommand;
use g2mod::siegel::{riemann_form_check, symplectic_act};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{load_matrix, load_siegel, siegel_json, Check, CliResult, Outcome};
use crate::Global;

#[derive(Subcommand)]
pub enum SiegelCmd {
    /// Apply a symplectic matrix to a point of H2.
    Act {
        /// 4x4 matrix as rows of integer strings.
        #[arg(long)]
        matrix: PathBuf,
        /// Point as {"tau1": [re, im], "tau2": .., "tau3": .., "prec": bits}.
        #[arg(long)]
        tau: PathBuf,
    },
    /// Check that a point defines a principally polarised abelian surface.
    Check {
        #[arg(long)]
        tau: PathBuf,
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
}

impl SiegelCmd {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Act { .. } => "act",
            Self::Check { .. } => "check",
        }
    }

    pub fn run(&self, g: &Global) -> CliResult<Outcome> {
        match self {
            Self::Act { matrix, tau } => {
                let m = load_matrix(matrix)?;
                let t = load_siegel(tau, g.prec)?;
                let image = symplectic_act(&m, &t)?;
                Ok(Outcome::new(
                    json!({ "matrix": matrix.display().to_string(), "tau": siegel_json(&t) }),
                    json!({ "image": siegel_json(&image) }),
                ))
            }
            Self::Check { tau, samples } => {
                let t = load_siegel(tau, g.prec)?;
                let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
                let r = riemann_form_check(&t, &mut rng, *samples);
                let checks = vec![
                    Check::new("precision", r.precision_ok, "Im(tau) positive definite beyond tolerance"),
                    Check::new("hermitian_positive", r.hermitian_positive, "H positive definite"),
                    Check::new("riemann_integral", r.riemann_integral, "E integral on the lattice"),
                    Check::new("riemann_skew", r.riemann_skew, "E alternating"),
                    Check::new("complex_invariant", r.complex_invariant, "E(ix, iy) = E(x, y)"),
                ];
                let matrix: Vec<Vec<String>> = r
                    .riemann_matrix
                    .iter()
                    .map(|row| row.iter().map(g2mod::exactnum::float_to_string).collect())
                    .collect();
                Ok(Outcome::new(
                    json!({ "tau": siegel_json(&t), "samples": samples }),
                    json!({ "riemann_matrix": matrix }),
                )
                .with_checks(checks))
            }
        }
    }
}

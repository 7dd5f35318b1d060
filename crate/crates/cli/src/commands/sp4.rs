use clap::Subcommand;
use g2mod::sp4::{
    coset_representatives, enumerate_isotropic_planes, expected_index, is_prime, verify_coset_set,
    MAX_ENUMERATION_PRIME,
};
use serde_json::json;

use crate::report::{matrix_json, Check, CliError, CliResult, Outcome};
use crate::Global;

#[derive(Subcommand)]
pub enum Sp4Cmd {
    /// Number of isotropic planes in F_p^4, by formula and (small p) by count.
    Index {
        #[arg(long)]
        p: u64,
    },
    /// List the isotropic planes of F_p^4.
    Planes {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        count_only: bool,
    },
    /// Coset representatives of Gamma0(p) in Sp(4, Z).
    Cosets {
        #[arg(long)]
        p: u64,
        /// Certify the family: size and pairwise inequivalence.
        #[arg(long)]
        verify: bool,
    },
}

impl Sp4Cmd {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Index { .. } => "index",
            Self::Planes { .. } => "planes",
            Self::Cosets { .. } => "cosets",
        }
    }

    pub fn run(&self, _g: &Global) -> CliResult<Outcome> {
        match self {
            Self::Index { p } => {
                if !is_prime(*p) {
                    return Err(CliError::Input(format!("{p} is not prime")));
                }
                let index = expected_index(*p);
                let mut checks = Vec::new();
                if *p <= MAX_ENUMERATION_PRIME {
                    let count = enumerate_isotropic_planes(*p)?.len() as u64;
                    checks.push(Check::new("enumeration_matches_formula", count == index, format!("{count} planes")));
                }
                Ok(Outcome::new(json!({ "p": p }), json!({ "index": index })).with_checks(checks))
            }
            Self::Planes { p, count_only } => {
                let planes = enumerate_isotropic_planes(*p)?;
                let mut results = json!({ "count": planes.len() });
                if !count_only {
                    results["planes"] = json!(planes.iter().map(|pl| pl.basis().to_vec()).collect::<Vec<_>>());
                }
                let checks = vec![Check::new(
                    "count_matches_formula",
                    planes.len() as u64 == expected_index(*p),
                    format!("expected {}", expected_index(*p)),
                )];
                Ok(Outcome::new(json!({ "p": p, "count_only": count_only }), results).with_checks(checks))
            }
            Self::Cosets { p, verify } => {
                let set = coset_representatives(*p)?;
                let results = json!({
                    "count": set.reps.len(),
                    "representatives": set.reps.iter().map(matrix_json).collect::<Vec<_>>(),
                });
                let mut checks = Vec::new();
                if *verify {
                    let r = verify_coset_set(&set);
                    checks.push(Check::new("count", r.count_ok, format!("{} of {}", r.count, r.expected)));
                    checks.push(Check::new(
                        "pairwise_inequivalent",
                        r.offending_pair.is_none(),
                        r.offending_pair
                            .map_or_else(|| "all pairs distinct".to_string(), |(i, j)| format!("{i} ~ {j}")),
                    ));
                }
                Ok(Outcome::new(json!({ "p": p, "verify": verify }), results).with_checks(checks))
            }
        }
    }
}

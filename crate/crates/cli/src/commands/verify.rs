use clap::Subcommand;
use g2mod::exactnum::tolerance;
use g2mod::g2curve::{absolute_igusa, validate_curve, Genus2Curve};
use g2mod::modpoly::{degree_profile, l2_evaluate, l2_vanishes};
use g2mod::qseries::{series_invert, series_mul, FourierSeries, SupportIndex};
use g2mod::richelot::{enumerate_factorizations, richelot_image, RichelotImage};
use g2mod::siegel::{symplectic_act, SiegelPoint};
use g2mod::sp4::{
    coset_representatives, enumerate_isotropic_planes, expected_index, gamma0_conjugate, random_gamma0,
    random_symplectic, verify_coset_set,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Complex, Rational};
use serde_json::json;

use super::modpoly::default_nodes;
use crate::report::{Check, CliResult, Outcome};
use crate::Global;

#[derive(Subcommand)]
pub enum VerifyCmd {
    /// A fast pass over every subsystem.
    All {
        /// Random samples per randomized check.
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
}

fn random_curve(rng: &mut ChaCha8Rng) -> Genus2Curve<Rational> {
    loop {
        let mut f: Vec<Rational> = (0..6).map(|_| Rational::from(rng.gen_range(-3i64..=3))).collect();
        f.push(Rational::from(1));
        if let Ok(c) = validate_curve(&f) {
            return c;
        }
    }
}

fn bielliptic(rng: &mut ChaCha8Rng) -> Genus2Curve<Rational> {
    loop {
        let a: Vec<Rational> =
            (0..3).map(|_| Rational::from((rng.gen_range(1i64..=20), rng.gen_range(1i64..=5)))).collect();
        let mut f = vec![Rational::from(1)];
        for ai in &a {
            f = g2mod::g2curve::upoly::mul(
                &f,
                &[(-(ai.clone() * ai)), Rational::new(), Rational::from(1)],
            );
        }
        if let Ok(c) = validate_curve(&f) {
            return c;
        }
    }
}

impl VerifyCmd {
    pub fn name(&self) -> &'static str {
        "all"
    }

    pub fn run(&self, g: &Global) -> CliResult<Outcome> {
        let Self::All { samples } = self;
        let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
        let mut checks = Vec::new();

        for p in [2, 3, 5] {
            let n = enumerate_isotropic_planes(p)?.len() as u64;
            checks.push(Check::new(&format!("index_p{p}"), n == expected_index(p), format!("{n} planes")));
        }
        for p in [2, 3] {
            let r = verify_coset_set(&coset_representatives(p)?);
            checks.push(Check::new(&format!("cosets_p{p}"), r.pass, format!("{} representatives", r.count)));
        }

        let prec = 128;
        let tol = tolerance(prec);
        let mut bridge = true;
        let mut action = true;
        for i in 0..*samples {
            let p = [2, 3, 5][i % 3];
            let tau = SiegelPoint::random(&mut rng, prec);
            let m = random_gamma0(&mut rng, p, 4);
            let b = gamma0_conjugate(&m, p)?;
            let lhs = symplectic_act(&m, &tau)?.scale(p);
            let rhs = symplectic_act(&b, &tau.scale(p))?;
            bridge &= lhs.distance(&rhs) <= tol.clone() * (lhs.magnitude() + 1u32);
            let (m, n) = (random_symplectic(&mut rng, 4), random_symplectic(&mut rng, 4));
            let once = symplectic_act(&m.mul(&n), &tau)?;
            let twice = symplectic_act(&m, &symplectic_act(&n, &tau)?)?;
            action &= once.distance(&twice) <= tol.clone() * (once.magnitude() + 1u32);
        }
        checks.push(Check::new("conjugation_bridge", bridge, format!("{samples} samples at {prec} bits")));
        checks.push(Check::new("action_law", action, format!("{samples} samples at {prec} bits")));

        let curves: Vec<Genus2Curve<Rational>> =
            (0..samples.min(&3).to_owned()).map(|_| random_curve(&mut rng)).collect();
        let mut counts = true;
        let mut involution = true;
        for c in &curves {
            let triples = enumerate_factorizations(c, g.prec)?;
            counts &= triples.len() == 15;
            let original = absolute_igusa(&c.to_complex(g.prec));
            for t in &triples {
                let step = richelot_image(t)?;
                let Some(dual) = t.dual() else { continue };
                if step.is_split() {
                    continue;
                }
                if let RichelotImage::Curve(back) = richelot_image(&dual)?.image {
                    let j = absolute_igusa(&back);
                    for (x, y) in j.as_array().iter().zip(original.as_array()) {
                        let d = Complex::with_val(g.prec, *x - y);
                        involution &= g2mod::exactnum::Scalar::negligible(&d, y);
                    }
                }
            }
        }
        checks.push(Check::new("richelot_count", counts, format!("{} curves", curves.len())));
        checks.push(Check::new("richelot_involution", involution, "dual step returns the original invariants"));

        let mut split = true;
        let mut generic = true;
        for _ in 0..*samples {
            let b = bielliptic(&mut rng);
            split &= l2_evaluate(&absolute_igusa(&b)) == 0;
            let c = random_curve(&mut rng);
            generic &= !l2_vanishes(&absolute_igusa(&c.to_complex(g.prec)), None);
        }
        checks.push(Check::new("l2_vanishes_on_split", split, "exact zero on bielliptic curves"));
        checks.push(Check::new("l2_nonzero_generic", generic, "random curves off the locus"));

        let mut inversion = true;
        for _ in 0..*samples {
            let mut terms = vec![(SupportIndex::ZERO, Rational::from(rng.gen_range(1i64..=5)))];
            for _ in 0..6 {
                let k = rng.gen_range(0..=3);
                let m = rng.gen_range(0..=3);
                let bound = (2.0 * ((k * m) as f64).sqrt()).floor() as i64;
                let l = rng.gen_range(-bound..=bound);
                if k + m > 0 {
                    terms.push((
                        SupportIndex::new(k, l, m),
                        Rational::from((rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4))),
                    ));
                }
            }
            let s = FourierSeries::from_terms(terms, 6, 0);
            inversion &= series_mul(&s, &series_invert(&s)?) == FourierSeries::one(6);
        }
        checks.push(Check::new("series_inversion", inversion, format!("{samples} random units to order 6")));

        let mut degrees = true;
        for _ in 0..*samples {
            let (m, n) = (rng.gen_range(0..=4usize), rng.gen_range(0..=4usize));
            let mut num: Vec<Rational> = (0..=m).map(|_| Rational::from(rng.gen_range(-9i64..=9))).collect();
            let mut den: Vec<Rational> = (0..=n).map(|_| Rational::from(rng.gen_range(-9i64..=9))).collect();
            num[m] = Rational::from(rng.gen_range(1i64..=9));
            den[n] = Rational::from(rng.gen_range(1i64..=9));
            let gcd = g2mod::g2curve::upoly::gcd(&num, &den);
            if gcd.len() > 1 {
                continue;
            }
            let eval = |x: &Rational| {
                let d = g2mod::g2curve::upoly::eval(&den, x);
                (d != 0).then(|| g2mod::g2curve::upoly::eval(&num, x) / d)
            };
            let nodes = default_nodes(24, rng.gen());
            degrees &= matches!(degree_profile(eval, 5, 5, &nodes), Ok(Some(found)) if found == (m, n));
        }
        checks.push(Check::new("degree_detection", degrees, format!("{samples} random rational functions")));

        Ok(Outcome::new(json!({ "samples": samples, "seed": g.seed }), json!({ "checks_run": checks.len() }))
            .with_checks(checks))
    }
}

//! Acceptance harness. Prints one line per criterion and exits non-zero if
//! any criterion fails.

use std::time::{Duration, Instant};

use g2mod::exactnum::{tolerance, Scalar};
use g2mod::g2curve::{absolute_igusa, upoly, validate_curve, Genus2Curve};
use g2mod::modpoly::{degree_profile, evaluated_p2, l2_evaluate, reconstruct_p2, ReconstructOptions};
use g2mod::qseries::{koecher_check, series_invert, series_mul, FourierSeries, SupportIndex};
use g2mod::richelot::{enumerate_factorizations, richelot_image, RichelotImage};
use g2mod::siegel::{is_in_h2, symplectic_act, SiegelPoint};
use g2mod::sp4::{
    coset_representatives, enumerate_isotropic_planes, expected_index, gamma0_conjugate, is_symplectic, random_gamma0,
    random_symplectic, verify_coset_set,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::{Complex, Float, Rational};

const SEED: u64 = 20_240_601;
const PREC: u32 = 300;
const ACTION_PREC: u32 = 128;

/// Degree counts of the full level-2 polynomials in `j1`, `j2`, `j3` and
/// their monomial count. These are far beyond what this harness computes
/// and are recorded here only as the large-scale targets.
const LARGE_SCALE_TARGETS: &str = "P2 degree 60 (num) / 51 (den) in j1, 42 in j2, 30 in j3, 16795 monomials";

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn run(id: u32, name: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let pass = o.pass && in_time;
    let timing = format!("{:.2}s / budget {}s", elapsed.as_secs_f64(), budget.as_secs());
    println!(
        "[{}] {id:>2} {name}: {} ({timing}{})",
        if pass { "PASS" } else { "FAIL" },
        o.detail,
        if in_time { "" } else { ", over budget" }
    );
    pass
}

fn random_sextic(rng: &mut ChaCha8Rng) -> Genus2Curve<Rational> {
    loop {
        let mut f: Vec<Rational> = (0..6).map(|_| Rational::from(rng.gen_range(-3i64..=3))).collect();
        f.push(Rational::from(1));
        if let Ok(c) = validate_curve(&f) {
            return c;
        }
    }
}

/// Random curves whose 15 neighbours are all non-split, so the evaluated
/// polynomial is defined.
fn non_split_sextics(rng: &mut ChaCha8Rng, count: usize) -> Vec<Genus2Curve<Rational>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c = random_sextic(rng);
        if evaluated_p2(&c, 64).is_ok() {
            out.push(c);
        }
    }
    out
}

fn bielliptic(rng: &mut ChaCha8Rng) -> Genus2Curve<Rational> {
    loop {
        let a: Vec<Rational> =
            (0..3).map(|_| Rational::from((rng.gen_range(1i64..=30), rng.gen_range(1i64..=7)))).collect();
        if a[0] == a[1] || a[0] == a[2] || a[1] == a[2] {
            continue;
        }
        let mut f = vec![Rational::from(1)];
        for ai in &a {
            f = upoly::mul(&f, &[(-(ai.clone() * ai)), Rational::new(), Rational::from(1)]);
        }
        if let Ok(c) = validate_curve(&f) {
            return c;
        }
    }
}

fn random_unit(rng: &mut ChaCha8Rng, order: i64) -> FourierSeries {
    let mut terms = vec![(SupportIndex::ZERO, Rational::from((rng.gen_range(1i64..=7), rng.gen_range(1i64..=3))))];
    for _ in 0..rng.gen_range(2..=12) {
        let k = rng.gen_range(0..=5i64);
        let m = rng.gen_range(0..=5i64);
        let bound = (4 * k * m).isqrt();
        let idx = SupportIndex::new(k, rng.gen_range(-bound..=bound), m);
        if k + m > 0 && idx.in_cone() {
            terms.push((idx, Rational::from((rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)))));
        }
    }
    FourierSeries::from_terms(terms, order, 0)
}

fn relative_close(got: &Complex, want: &Complex, prec: u32) -> bool {
    let err = Complex::with_val(prec, got - want).magnitude();
    err <= tolerance(prec) * want.magnitude().max(&Float::with_val(prec, 1))
}

fn index_counts() -> Outcome {
    let mut found = Vec::new();
    let mut pass = true;
    for p in [2, 3, 5] {
        let n = enumerate_isotropic_planes(p).map(|v| v.len() as u64).unwrap_or(0);
        pass &= n == expected_index(p) && n == (p.pow(4) - 1) / (p - 1);
        found.push(n.to_string());
    }
    outcome(pass, format!("planes for p=2,3,5: {} (want 15/40/156)", found.join("/")))
}

fn coset_certification() -> Outcome {
    let mut pass = true;
    let mut found = Vec::new();
    for p in [2, 3] {
        let Ok(set) = coset_representatives(p) else { return outcome(false, format!("p={p}: generation failed")) };
        let symplectic = set.reps.iter().all(|m| is_symplectic(m.entries()));
        let report = verify_coset_set(&set);
        pass &= symplectic && report.pass && report.count as u64 == p.pow(3) + p.pow(2) + p + 1;
        found.push(format!("p={p}: {} reps, inequivalent={}", report.count, report.offending_pair.is_none()));
    }
    outcome(pass, found.join("; "))
}

fn conjugation_bridge(rng: &mut ChaCha8Rng) -> Outcome {
    let tol = tolerance(ACTION_PREC);
    let mut worst = Float::with_val(ACTION_PREC, 0);
    let mut pass = true;
    for p in [2, 3, 5] {
        for _ in 0..100 {
            let m = random_gamma0(rng, p, 6);
            let tau = SiegelPoint::random(rng, ACTION_PREC);
            let Ok(b) = gamma0_conjugate(&m, p) else { return outcome(false, "conjugate not symplectic") };
            pass &= is_symplectic(b.entries());
            match (symplectic_act(&m, &tau), symplectic_act(&b, &tau.scale(p))) {
                (Ok(lhs), Ok(rhs)) => {
                    let d = lhs.scale(p).distance(&rhs);
                    pass &= d <= tol;
                    worst = worst.max(&d);
                }
                _ => pass = false,
            }
        }
    }
    outcome(pass, format!("300 samples, max |p(M tau) - B(p tau)| = {:.3e} (tol 2^-64)", worst.to_f64()))
}

fn action_laws(rng: &mut ChaCha8Rng) -> Outcome {
    let tol = tolerance(ACTION_PREC);
    let mut worst = Float::with_val(ACTION_PREC, 0);
    let mut pass = true;
    for _ in 0..100 {
        let (m, n) = (random_symplectic(rng, 6), random_symplectic(rng, 6));
        let tau = SiegelPoint::random(rng, ACTION_PREC);
        let once = symplectic_act(&m.mul(&n), &tau);
        let twice = symplectic_act(&n, &tau).and_then(|t| symplectic_act(&m, &t));
        match (once, twice) {
            (Ok(a), Ok(b)) => {
                let d = a.distance(&b) / (a.magnitude() + 1u32);
                pass &= d <= tol && is_in_h2(&a.matrix(), &tol) && is_in_h2(&b.matrix(), &tol);
                worst = worst.max(&d);
            }
            _ => pass = false,
        }
    }
    outcome(pass, format!("100 samples, max relative deviation {:.3e} (tol 2^-64)", worst.to_f64()))
}

fn richelot_counts(curves: &[Genus2Curve<Rational>]) -> Outcome {
    let per_curve: Vec<(bool, f64)> = curves
        .iter()
        .map(|c| {
            let start = Instant::now();
            let f: Vec<Complex> = c.coefficients().iter().map(|v| v.to_complex(PREC)).collect();
            let ok = match enumerate_factorizations(c, PREC) {
                Ok(triples) => {
                    triples.len() == 15
                        && triples.iter().all(|t| t.product().iter().zip(&f).all(|(x, y)| relative_close(x, y, PREC)))
                }
                Err(_) => false,
            };
            (ok, start.elapsed().as_secs_f64())
        })
        .collect();
    let slowest = per_curve.iter().map(|r| r.1).fold(0.0, f64::max);
    let pass = per_curve.iter().all(|r| r.0) && slowest < 5.0;
    outcome(pass, format!("{} curves, 15 factorizations each, slowest {slowest:.3}s (limit 5s)", curves.len()))
}

fn rationality(curves: &[Genus2Curve<Rational>]) -> Outcome {
    let opts = ReconstructOptions::default();
    let results: Vec<_> = curves.par_iter().map(|c| reconstruct_p2(c, PREC, &opts)).collect();
    let mut ok = 0;
    let mut notes = Vec::new();
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok(r) if r.coefficients.is_some() => ok += 1,
            Ok(r) => notes.push(format!(
                "curve {i} coeff {} at {} bits",
                r.failed_coefficient.unwrap_or(0),
                r.attempts.last().copied().unwrap_or(0)
            )),
            Err(e) => notes.push(format!("curve {i}: {e}")),
        }
    }
    let mut detail =
        format!("{ok}/{} reconstructed (denominators <= 2^256, up to {} bits)", curves.len(), opts.max_prec);
    if !notes.is_empty() {
        detail.push_str(&format!("; failed: {}", notes.join(", ")));
    }
    outcome(ok == curves.len(), detail)
}

fn moduli_relation(curves: &[Genus2Curve<Rational>]) -> Outcome {
    let results: Vec<bool> = curves
        .par_iter()
        .map(|c| {
            let Ok(e) = evaluated_p2(c, PREC) else { return false };
            let dp = e.p.derivative();
            e.images.iter().all(|img| {
                let d = dp.eval(&img.j1);
                [(&e.ftilde2, &img.j2), (&e.ftilde3, &img.j3)].iter().all(|(f, want)| {
                    let got = Complex::with_val(PREC, f.eval(&img.j1) / &d);
                    Complex::with_val(PREC, &got - *want).magnitude() <= tolerance(PREC) * want.magnitude()
                })
            })
        })
        .collect();
    let ok = results.iter().filter(|r| **r).count();
    outcome(ok == curves.len(), format!("{ok}/{} curves, 15 roots each, k=2,3, tol 2^-150 relative", curves.len()))
}

fn split_locus(rng: &mut ChaCha8Rng) -> Outcome {
    let split = (0..20).filter(|_| l2_evaluate(&absolute_igusa(&bielliptic(rng))) == 0).count();
    let generic = (0..20).filter(|_| l2_evaluate(&absolute_igusa(&random_sextic(rng))) != 0).count();
    outcome(
        split == 20 && generic == 20,
        format!("exact zero on {split}/20 bielliptic, nonzero on {generic}/20 generic"),
    )
}

fn involution(curves: &[Genus2Curve<Rational>]) -> Outcome {
    let results: Vec<(usize, bool)> = curves
        .par_iter()
        .map(|c| {
            let original = absolute_igusa(&c.to_complex(PREC));
            let Ok(triples) = enumerate_factorizations(c, PREC) else { return (0, false) };
            let mut checked = 0;
            let mut ok = true;
            for t in &triples {
                let (Ok(step), Some(dual)) = (richelot_image(t), t.dual()) else { return (checked, false) };
                if step.is_split() {
                    continue;
                }
                match richelot_image(&dual).map(|s| s.image) {
                    Ok(RichelotImage::Curve(back)) => {
                        let j = absolute_igusa(&back);
                        ok &= j.as_array().iter().zip(original.as_array()).all(|(x, y)| relative_close(x, y, PREC));
                        checked += 1;
                    }
                    _ => ok = false,
                }
            }
            (checked, ok && checked > 0)
        })
        .collect();
    let ok = results.iter().filter(|r| r.1).count();
    let steps: usize = results.iter().map(|r| r.0).sum();
    outcome(ok == curves.len(), format!("{ok}/{} curves, {steps} return steps within 2^-150 relative", curves.len()))
}

fn series_engine(rng: &mut ChaCha8Rng) -> Outcome {
    let order = 10;
    let units: Vec<FourierSeries> = (0..100).map(|_| random_unit(rng, order)).collect();
    let one = FourierSeries::one(order);
    let mut inverted = 0;
    let mut closed = true;
    let mut products = 0;
    for s in &units {
        let Ok(inv) = series_invert(s) else { continue };
        closed &= koecher_check(&inv);
        let prod = series_mul(s, &inv);
        closed &= koecher_check(&prod);
        products += 1;
        if prod == one {
            inverted += 1;
        }
    }
    for pair in units.windows(2) {
        closed &= koecher_check(&series_mul(&pair[0], &pair[1]));
        products += 1;
    }
    outcome(
        inverted == units.len() && closed,
        format!("s * s^-1 = 1 exactly on {inverted}/100 units to order {order}; cone closure on {products} products"),
    )
}

fn degree_detection(rng: &mut ChaCha8Rng) -> Outcome {
    let mut nodes: Vec<Rational> = Vec::new();
    while nodes.len() < 40 {
        let x = Rational::from((rng.gen_range(-500i64..=500), rng.gen_range(1i64..=500)));
        if !nodes.contains(&x) {
            nodes.push(x);
        }
    }
    let mut cases = Vec::new();
    while cases.len() < 50 {
        let (m, n) = (rng.gen_range(0..=10usize), rng.gen_range(0..=10usize));
        let mut num: Vec<Rational> = (0..=m).map(|_| Rational::from(rng.gen_range(-20i64..=20))).collect();
        let mut den: Vec<Rational> = (0..=n).map(|_| Rational::from(rng.gen_range(-20i64..=20))).collect();
        num[m] = Rational::from(rng.gen_range(1i64..=20));
        den[n] = Rational::from(rng.gen_range(1i64..=20));
        if upoly::gcd(&num, &den).len() == 1 && nodes.iter().all(|x| upoly::eval(&den, x) != 0) {
            cases.push((num, den));
        }
    }
    let hits = cases
        .par_iter()
        .filter(|(num, den)| {
            let eval = |x: &Rational| {
                let d = upoly::eval(den, x);
                (d != 0).then(|| upoly::eval(num, x) / d)
            };
            matches!(degree_profile(eval, 10, 10, &nodes), Ok(Some(found)) if found == (num.len() - 1, den.len() - 1))
        })
        .count();
    outcome(hits == 50, format!("{hits}/50 exact (deg <= 10); not reproduced: {LARGE_SCALE_TARGETS}"))
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let secs = Duration::from_secs;
    let mut results = Vec::new();

    results.push(run(1, "isotropic plane counts", secs(10), index_counts));
    results.push(run(2, "coset certification", secs(10), coset_certification));
    results.push(run(3, "Gamma0 conjugation bridge", secs(30), || conjugation_bridge(&mut rng)));
    results.push(run(4, "symplectic action laws", secs(10), || action_laws(&mut rng)));

    let mut richelot_curves = vec![
        validate_curve(&[1, 0, 0, 0, 0, 0, 1].map(Rational::from)).unwrap(),
        validate_curve(&[1, 1, 0, 0, 0, 0, 1].map(Rational::from)).unwrap(),
    ];
    richelot_curves.extend((0..8).map(|_| random_sextic(&mut rng)));
    results.push(run(5, "Richelot factorization count", secs(60), || richelot_counts(&richelot_curves)));

    let curves = non_split_sextics(&mut rng, 10);
    results.push(run(6, "evaluated P2 rationality", secs(900), || rationality(&curves)));
    results.push(run(7, "moduli relation at roots of P2", secs(300), || moduli_relation(&curves)));

    results.push(run(8, "L2 split locus", secs(60), || split_locus(&mut rng)));
    let generic = non_split_sextics(&mut rng, 10);
    results.push(run(9, "Richelot involution", secs(60), || involution(&generic)));
    results.push(run(10, "series inversion and cone closure", secs(10), || series_engine(&mut rng)));
    results.push(run(11, "degree detection", secs(30), || degree_detection(&mut rng)));

    let passed = results.iter().filter(|r| **r).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}

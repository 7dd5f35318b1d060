use rayon::prelude::*;
use rug::{Integer, Rational};

use crate::exactnum::rank;
use crate::{Error, Result};

const MODULUS: u64 = (1 << 61) - 1;

fn reduce(q: &Rational) -> Option<u64> {
    let m = Integer::from(MODULUS);
    let num = Integer::from(q.numer() % &m);
    let den = Integer::from(q.denom() % &m);
    let inv = den.invert(&m).ok()?;
    let v = (num * inv) % &m;
    let v = if v < 0 { v + &m } else { v };
    v.to_u64()
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(MODULUS)) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

/// Full rank modulo a prime implies full rank over the rationals.
fn full_rank_mod_p(rows: &[Vec<Rational>]) -> bool {
    let Some(mut m): Option<Vec<Vec<u64>>> =
        rows.iter().map(|r| r.iter().map(reduce).collect::<Option<Vec<u64>>>()).collect()
    else {
        return false;
    };
    let n = m.len();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else {
            return false;
        };
        m.swap(col, piv);
        let inv = powmod(m[col][col], MODULUS - 2);
        for r in col + 1..n {
            let f = mulmod(m[r][col], inv);
            if f == 0 {
                continue;
            }
            for c in col..n {
                let sub = mulmod(f, m[col][c]);
                m[r][c] = (m[r][c] + MODULUS - sub) % MODULUS;
            }
        }
    }
    true
}

/// Rows `[1, x, ..., x^m, -c, -c x, ..., -c x^n]`, one per node.
fn system(nodes: &[Rational], values: &[Rational], m: usize, n: usize) -> Vec<Vec<Rational>> {
    nodes
        .iter()
        .zip(values)
        .map(|(x, c)| {
            let mut row = Vec::with_capacity(m + n + 2);
            let mut p = Rational::from(1);
            for _ in 0..=m {
                row.push(p.clone());
                p *= x;
            }
            let mut p = Rational::from(-c);
            for _ in 0..=n {
                row.push(p.clone());
                p *= x;
            }
            row
        })
        .collect()
}

fn has_nullspace(nodes: &[Rational], values: &[Rational], m: usize, n: usize) -> bool {
    let rows = system(nodes, values, m, n);
    if rows.len() == m + n + 2 && full_rank_mod_p(&rows) {
        return false;
    }
    rank(&rows) < m + n + 2
}

/// Smallest `(m, n)`, by `m + n` and then `m`, such that the sampled
/// function agrees with some `a(x)/b(x)` with `deg a <= m`, `deg b <= n`.
///
/// The system is tested on the first and on the last `m + n + 2` samples
/// and must be singular on both. Needs at least `m_max + n_max + 2`
/// distinct nodes; `None` when no pair within the bounds fits.
pub fn degree_profile<F>(
    evaluator: F,
    m_max: usize,
    n_max: usize,
    samples: &[Rational],
) -> Result<Option<(usize, usize)>>
where
    F: Fn(&Rational) -> Option<Rational> + Sync,
{
    let needed = m_max + n_max + 2;
    if samples.len() < needed {
        return Err(Error::InsufficientSamples { needed, got: samples.len() });
    }
    for i in 0..samples.len() {
        if let Some(j) = (i + 1..samples.len()).find(|&j| samples[j] == samples[i]) {
            return Err(Error::CoincidentNodes(i, j));
        }
    }
    let values: Vec<Rational> =
        samples.par_iter().enumerate().map(|(i, x)| evaluator(x).ok_or(Error::Pole(i))).collect::<Result<_>>()?;
    for total in 0..=m_max + n_max {
        for m in 0..=total.min(m_max) {
            let n = total - m;
            if n > n_max {
                continue;
            }
            let k = m + n + 2;
            let tail = samples.len() - k;
            if has_nullspace(&samples[..k], &values[..k], m, n)
                && has_nullspace(&samples[tail..], &values[tail..], m, n)
            {
                return Ok(Some((m, n)));
            }
        }
    }
    Ok(None)
}

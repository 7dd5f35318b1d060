use std::collections::BTreeSet;

use rayon::prelude::*;

use super::matrix::SymplecticMatrix;
use crate::{Error, Result};

/// Largest prime accepted by the brute-force plane enumeration.
pub const MAX_ENUMERATION_PRIME: u64 = 13;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `(p^4 - 1) / (p - 1)`, the number of 2-dimensional isotropic subspaces
/// of `F_p^4`.
pub fn expected_index(p: u64) -> u64 {
    p * p * p + p * p + p + 1
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and small
    let mut r = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

/// `x J y^T` for the standard alternating form.
fn form(x: &[u64; 4], y: &[u64; 4], p: u64) -> u64 {
    let pos = x[0] * y[2] + x[1] * y[3];
    let neg = x[2] * y[0] + x[3] * y[1];
    (pos + (p * p - neg % (p * p))) % p
}

/// A 2-dimensional subspace of `F_p^4` on which the symplectic form
/// vanishes, stored by its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsotropicPlane {
    p: u64,
    basis: [[u64; 4]; 2],
}

impl IsotropicPlane {
    /// Canonicalises the span of two vectors; `None` unless they are
    /// independent and span an isotropic plane.
    pub fn from_vectors(x: [u64; 4], y: [u64; 4], p: u64) -> Option<Self> {
        let basis = rref2([x.map(|v| v % p), y.map(|v| v % p)], p)?;
        let plane = Self { p, basis };
        plane.is_isotropic().then_some(plane)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn basis(&self) -> &[[u64; 4]; 2] {
        &self.basis
    }

    pub fn is_isotropic(&self) -> bool {
        form(&self.basis[0], &self.basis[1], self.p) == 0
    }

    /// The `p + 1` lines in the plane, each as its normalised spanning
    /// vector (first non-zero coordinate 1).
    pub fn lines(&self) -> Vec<[u64; 4]> {
        let p = self.p;
        let [u, v] = self.basis;
        let mut out = BTreeSet::new();
        for s in 0..p {
            for t in 0..p {
                if s == 0 && t == 0 {
                    continue;
                }
                let w: [u64; 4] = std::array::from_fn(|i| (s * u[i] + t * v[i]) % p);
                out.insert(normalise(w, p));
            }
        }
        out.into_iter().collect()
    }

    pub fn contains(&self, w: &[u64; 4]) -> bool {
        rank3([self.basis[0], self.basis[1], w.map(|x| x % self.p)], self.p) == 2
    }
}

fn normalise(w: [u64; 4], p: u64) -> [u64; 4] {
    let lead = w.iter().find(|&&x| x != 0).copied().unwrap_or(1);
    let inv = inv_mod(lead, p);
    w.map(|x| x * inv % p)
}

fn rank3(rows: [[u64; 4]; 3], p: u64) -> usize {
    let mut m = rows;
    let mut r = 0;
    for c in 0..4 {
        let Some(piv) = (r..3).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        m[r] = m[r].map(|x| x * inv % p);
        for i in 0..3 {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..4 {
                    m[i][k] = (m[i][k] + p * p - f * m[r][k] % (p * p)) % p;
                }
            }
        }
        r += 1;
        if r == 3 {
            break;
        }
    }
    r
}

/// Reduced row-echelon form of a pair of vectors, `None` when dependent.
fn rref2(rows: [[u64; 4]; 2], p: u64) -> Option<[[u64; 4]; 2]> {
    let mut m = rows;
    let mut r = 0;
    for c in 0..4 {
        if r == 2 {
            break;
        }
        let Some(piv) = (r..2).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        m[r] = m[r].map(|x| x * inv % p);
        for i in 0..2 {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..4 {
                    m[i][k] = (m[i][k] + p * p - f * m[r][k] % (p * p)) % p;
                }
            }
        }
        r += 1;
    }
    (r == 2).then_some(m)
}

/// Every 2-dimensional isotropic subspace of `F_p^4`, sorted.
///
/// Walks all reduced echelon forms of rank 2 (one per 2-dimensional
/// subspace) and keeps the isotropic ones.
pub fn enumerate_isotropic_planes(p: u64) -> Result<Vec<IsotropicPlane>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > MAX_ENUMERATION_PRIME {
        return Err(Error::PrimeTooLarge(p));
    }
    let pivot_pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    let mut planes: Vec<IsotropicPlane> = pivot_pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            // free slots: row 0 after column i except column j, row 1 after column j
            let free: Vec<(usize, usize)> =
                (i + 1..4).filter(|&c| c != j).map(|c| (0, c)).chain((j + 1..4).map(|c| (1, c))).collect();
            let total = p.pow(free.len() as u32);
            (0..total).filter_map(move |mut code| {
                let mut basis = [[0u64; 4]; 2];
                basis[0][i] = 1;
                basis[1][j] = 1;
                for &(r, c) in &free {
                    basis[r][c] = code % p;
                    code /= p;
                }
                let plane = IsotropicPlane { p, basis };
                plane.is_isotropic().then_some(plane)
            })
        })
        .collect();
    planes.sort();
    Ok(planes)
}

/// The isotropic plane attached to the coset `Gamma0(p) M`: the row space
/// of the bottom half `(c | d)` of `M`, reduced mod `p`.
pub fn plane_of_coset(m: &SymplecticMatrix, p: u64) -> IsotropicPlane {
    let e = m.entries();
    let row = |i: usize| -> [u64; 4] {
        std::array::from_fn(|j| {
            let r = e[i][j].mod_u(p as u32);
            r as u64
        })
    };
    IsotropicPlane::from_vectors(row(2), row(3), p).expect("bottom rows of a symplectic matrix span an isotropic plane")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_index_formula() {
        for (p, n) in [(2, 15), (3, 40), (5, 156)] {
            let planes = enumerate_isotropic_planes(p).unwrap();
            assert_eq!(planes.len(), n);
            assert_eq!(expected_index(p), n as u64);
        }
    }

    #[test]
    fn bounds_and_primality() {
        assert_eq!(enumerate_isotropic_planes(17), Err(Error::PrimeTooLarge(17)));
        assert_eq!(enumerate_isotropic_planes(4), Err(Error::NotPrime(4)));
        assert!(is_prime(13) && !is_prime(1) && !is_prime(9));
    }

    #[test]
    fn every_plane_has_p_plus_one_lines() {
        for p in [2, 3, 5] {
            for plane in enumerate_isotropic_planes(p).unwrap() {
                assert!(plane.is_isotropic());
                let lines = plane.lines();
                assert_eq!(lines.len() as u64, p + 1);
                assert!(lines.iter().all(|l| plane.contains(l)));
            }
        }
    }

    #[test]
    fn standard_lagrangian_is_found() {
        let planes = enumerate_isotropic_planes(3).unwrap();
        let first = IsotropicPlane::from_vectors([1, 0, 0, 0], [0, 1, 0, 0], 3).unwrap();
        assert!(planes.contains(&first));
        assert!(IsotropicPlane::from_vectors([1, 0, 0, 0], [0, 0, 1, 0], 3).is_none());
    }
}

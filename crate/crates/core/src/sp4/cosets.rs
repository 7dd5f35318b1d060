use rug::Integer;

use super::matrix::{in_gamma0, IntMatrix4, SymplecticMatrix};
use super::planes::{expected_index, is_prime};
use crate::{Error, Result};

/// Representatives of the right cosets `Gamma0(p) \ Sp(4, Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSet {
    pub p: u64,
    pub reps: Vec<SymplecticMatrix>,
}

impl CosetSet {
    /// Wraps raw matrices, rejecting any that are not symplectic.
    pub fn from_raw(p: u64, raw: Vec<IntMatrix4>) -> Result<Self> {
        let reps = raw.into_iter().map(SymplecticMatrix::new).collect::<Result<Vec<_>>>()?;
        Ok(Self { p, reps })
    }
}

fn sym(a: u64, b: u64, c: u64) -> [[Integer; 2]; 2] {
    [[Integer::from(a), Integer::from(b)], [Integer::from(b), Integer::from(c)]]
}

fn one2() -> [[Integer; 2]; 2] {
    sym(1, 0, 1)
}

fn zero2() -> [[Integer; 2]; 2] {
    sym(0, 0, 0)
}

fn neg2(x: [[Integer; 2]; 2]) -> [[Integer; 2]; 2] {
    x.map(|r| r.map(|v| -v))
}

/// The explicit coset family for level `p`:
///
/// * `[[1, 0], [S, 1]]` for every symmetric `S = [[a, b], [b, c]]` over
///   `F_p` (`p^3` matrices);
/// * `[[0, -1], [1, S]]` for the symmetric `S` with `ac = b^2` in `F_p`
///   (`p^2` matrices);
/// * `p + 1` further matrices, `p` of them parametrised by `a` in `F_p`.
///
/// Entries of `F_p` are lifted to `0..p`.
pub fn coset_representatives(p: u64) -> Result<CosetSet> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut reps = Vec::with_capacity(expected_index(p) as usize);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                reps.push(SymplecticMatrix::from_blocks(&one2(), &zero2(), &sym(a, b, c), &one2())?);
            }
        }
    }
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                if (a * c) % p == (b * b) % p {
                    reps.push(SymplecticMatrix::from_blocks(&zero2(), &neg2(one2()), &one2(), &sym(a, b, c))?);
                }
            }
        }
    }
    for a in 0..p as i64 {
        reps.push(SymplecticMatrix::from_rows([[1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, a], [-a, 1, 0, 0]])?);
    }
    reps.push(SymplecticMatrix::from_rows([[-1, -1, 1, -1], [0, 0, -1, 1], [0, 0, 0, -1], [1, 0, 0, -1]])?);
    Ok(CosetSet { p, reps })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetReport {
    pub p: u64,
    pub count: usize,
    pub expected: u64,
    pub count_ok: bool,
    /// First pair `(i, j)` with `M_i M_j^{-1}` in `Gamma0(p)`.
    pub offending_pair: Option<(usize, usize)>,
    pub pass: bool,
}

/// Certifies that the representatives are pairwise inequivalent modulo
/// `Gamma0(p)` and that there are `(p^4 - 1) / (p - 1)` of them.
pub fn verify_coset_set(set: &CosetSet) -> CosetReport {
    let inverses: Vec<SymplecticMatrix> = set.reps.iter().map(SymplecticMatrix::inverse).collect();
    let mut offending_pair = None;
    'outer: for (i, mi) in set.reps.iter().enumerate() {
        for (j, inv_j) in inverses.iter().enumerate().skip(i + 1) {
            if in_gamma0(&mi.mul(inv_j), set.p) {
                offending_pair = Some((i, j));
                break 'outer;
            }
        }
    }
    let expected = expected_index(set.p);
    let count_ok = set.reps.len() as u64 == expected;
    CosetReport {
        p: set.p,
        count: set.reps.len(),
        expected,
        count_ok,
        offending_pair,
        pass: count_ok && offending_pair.is_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sp4::is_symplectic;

    #[test]
    fn family_sizes() {
        assert_eq!(coset_representatives(2).unwrap().reps.len(), 15);
        assert_eq!(coset_representatives(3).unwrap().reps.len(), 40);
        assert_eq!(coset_representatives(5).unwrap().reps.len(), 156);
        assert_eq!(coset_representatives(6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn all_members_symplectic() {
        for p in [2, 3, 5] {
            assert!(coset_representatives(p).unwrap().reps.iter().all(|m| is_symplectic(m.entries())));
        }
    }

    #[test]
    fn verification_passes() {
        for p in [2, 3] {
            let r = verify_coset_set(&coset_representatives(p).unwrap());
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn duplicate_member_is_named() {
        let mut set = coset_representatives(2).unwrap();
        let dup = set.reps[3].clone();
        set.reps.push(dup);
        let r = verify_coset_set(&set);
        assert!(!r.pass);
        assert_eq!(r.offending_pair, Some((3, 15)));
    }

    #[test]
    fn raw_non_symplectic_member_rejected() {
        let bad: IntMatrix4 = std::array::from_fn(|i| std::array::from_fn(|j| Integer::from(i64::from(i == j) * 2)));
        assert!(matches!(CosetSet::from_raw(2, vec![bad]), Err(Error::NotSymplectic(_))));
    }
}

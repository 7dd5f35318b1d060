use rug::Integer;

use crate::{Error, Result};

pub type IntMatrix4 = [[Integer; 4]; 4];
pub type Block2 = [[Integer; 2]; 2];

fn from_i64(rows: [[i64; 4]; 4]) -> IntMatrix4 {
    rows.map(|r| r.map(Integer::from))
}

fn identity4() -> IntMatrix4 {
    from_i64([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
}

fn form_j() -> IntMatrix4 {
    from_i64([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

fn mul4(x: &IntMatrix4, y: &IntMatrix4) -> IntMatrix4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).fold(Integer::new(), |acc, k| acc + Integer::from(&x[i][k] * &y[k][j])))
    })
}

fn transpose4(x: &IntMatrix4) -> IntMatrix4 {
    std::array::from_fn(|i| std::array::from_fn(|j| x[j][i].clone()))
}

/// `M J M^T = J`, checked exactly.
pub fn is_symplectic(m: &IntMatrix4) -> bool {
    mul4(&mul4(m, &form_j()), &transpose4(m)) == form_j()
}

fn block_of(m: &IntMatrix4, row: usize, col: usize) -> Block2 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[row + i][col + j].clone()))
}

fn mul2(x: &Block2, y: &Block2) -> Block2 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| Integer::from(&x[i][0] * &y[0][j]) + Integer::from(&x[i][1] * &y[1][j]))
    })
}

fn t2(x: &Block2) -> Block2 {
    std::array::from_fn(|i| std::array::from_fn(|j| x[j][i].clone()))
}

fn sub2(x: &Block2, y: &Block2) -> Block2 {
    std::array::from_fn(|i| std::array::from_fn(|j| Integer::from(&x[i][j] - &y[i][j])))
}

fn is_identity2(x: &Block2) -> bool {
    x[0][0] == 1 && x[1][1] == 1 && x[0][1] == 0 && x[1][0] == 0
}

/// Two ways of writing the symplectic condition as relations between the
/// 2x2 blocks `a, b, c, d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockRelationForm {
    /// `a b^T = b a^T`, `c d^T = d c^T`, `a d^T - b c^T = 1`: equivalent to
    /// `M J M^T = J`.
    Standard,
    /// `a b^T = b^T a`, `c d^T = d^T c`, `a d^T - b c^T = 1`.
    LeftTransposed,
}

pub fn block_relations_hold(m: &IntMatrix4, form: BlockRelationForm) -> bool {
    let (a, b, c, d) = (block_of(m, 0, 0), block_of(m, 0, 2), block_of(m, 2, 0), block_of(m, 2, 2));
    let unimodular = is_identity2(&sub2(&mul2(&a, &t2(&d)), &mul2(&b, &t2(&c))));
    match form {
        BlockRelationForm::Standard => {
            mul2(&a, &t2(&b)) == mul2(&b, &t2(&a)) && mul2(&c, &t2(&d)) == mul2(&d, &t2(&c)) && unimodular
        }
        BlockRelationForm::LeftTransposed => {
            mul2(&a, &t2(&b)) == mul2(&t2(&b), &a) && mul2(&c, &t2(&d)) == mul2(&t2(&d), &c) && unimodular
        }
    }
}

/// An element of `Sp(4, Z)`. Construction certifies `M J M^T = J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    entries: IntMatrix4,
}

impl SymplecticMatrix {
    pub fn new(entries: IntMatrix4) -> Result<Self> {
        if !is_symplectic(&entries) {
            return Err(Error::NotSymplectic(format!("{:?}", entries)));
        }
        Ok(Self { entries })
    }

    pub fn from_rows(rows: [[i64; 4]; 4]) -> Result<Self> {
        Self::new(from_i64(rows))
    }

    pub fn from_blocks(a: &Block2, b: &Block2, c: &Block2, d: &Block2) -> Result<Self> {
        let entries = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let blk = match (i < 2, j < 2) {
                    (true, true) => a,
                    (true, false) => b,
                    (false, true) => c,
                    (false, false) => d,
                };
                blk[i % 2][j % 2].clone()
            })
        });
        Self::new(entries)
    }

    pub fn identity() -> Self {
        Self { entries: identity4() }
    }

    /// The standard alternating form `J`.
    pub fn j() -> Self {
        Self { entries: form_j() }
    }

    pub fn entries(&self) -> &IntMatrix4 {
        &self.entries
    }

    pub fn a(&self) -> Block2 {
        block_of(&self.entries, 0, 0)
    }
    pub fn b(&self) -> Block2 {
        block_of(&self.entries, 0, 2)
    }
    pub fn c(&self) -> Block2 {
        block_of(&self.entries, 2, 0)
    }
    pub fn d(&self) -> Block2 {
        block_of(&self.entries, 2, 2)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { entries: mul4(&self.entries, &other.entries) }
    }

    /// `M^{-1} = [[d^T, -b^T], [-c^T, a^T]]`.
    pub fn inverse(&self) -> Self {
        let e = &self.entries;
        let entries = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let (bi, bj) = (i / 2, j / 2);
                let (ii, jj) = (i % 2, j % 2);
                // transpose inside each block, swap a and d, negate b and c
                match (bi, bj) {
                    (0, 0) => e[2 + jj][2 + ii].clone(),
                    (0, 1) => Integer::from(-&e[jj][2 + ii]),
                    (1, 0) => Integer::from(-&e[2 + jj][ii]),
                    _ => e[jj][ii].clone(),
                }
            })
        });
        Self { entries }
    }

    /// Row-major entries as decimal strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }
}

pub fn in_gamma0(m: &SymplecticMatrix, p: u64) -> bool {
    let p = Integer::from(p);
    m.c().iter().flatten().all(|x| x.is_divisible(&p))
}

/// For `M = [[a, b], [c, d]]` in `Gamma0(p)` returns
/// `B = [[a, p b], [c / p, d]]`, which satisfies `p (M tau) = B (p tau)`.
pub fn gamma0_conjugate(m: &SymplecticMatrix, p: u64) -> Result<SymplecticMatrix> {
    if !in_gamma0(m, p) {
        return Err(Error::NotInGamma0(p));
    }
    let pb = m.b().map(|r| r.map(|x| x * p));
    let pz = Integer::from(p);
    let c_over_p = m.c().map(|r| r.map(|x| x.div_exact(&pz)));
    SymplecticMatrix::from_blocks(&m.a(), &pb, &c_over_p, &m.d())
}

use rand::Rng;
use rug::Integer;

use super::matrix::{IntMatrix4, SymplecticMatrix};

fn sym_block<R: Rng>(rng: &mut R, span: i64) -> [[Integer; 2]; 2] {
    let (a, b, c) = (rng.gen_range(-span..=span), rng.gen_range(-span..=span), rng.gen_range(-span..=span));
    [[Integer::from(a), Integer::from(b)], [Integer::from(b), Integer::from(c)]]
}

fn ident() -> [[Integer; 2]; 2] {
    [[Integer::from(1), Integer::new()], [Integer::new(), Integer::from(1)]]
}

fn zero() -> [[Integer; 2]; 2] {
    [[Integer::new(), Integer::new()], [Integer::new(), Integer::new()]]
}

/// `[[U, 0], [0, U^{-T}]]` for a random elementary `U` in `GL(2, Z)`.
fn gl2_lift<R: Rng>(rng: &mut R) -> SymplecticMatrix {
    let rows = match rng.gen_range(0..4) {
        0 => [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1]],
        1 => [[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 0, 1]],
        2 => [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        _ => [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
    };
    SymplecticMatrix::from_rows(rows).expect("GL2 lift is symplectic")
}

fn generator<R: Rng>(rng: &mut R) -> SymplecticMatrix {
    match rng.gen_range(0..5) {
        0 => SymplecticMatrix::from_blocks(&ident(), &zero(), &sym_block(rng, 2), &ident()),
        1 => SymplecticMatrix::from_blocks(&ident(), &sym_block(rng, 2), &zero(), &ident()),
        2 => Ok(SymplecticMatrix::j()),
        3 => {
            let a = rng.gen_range(-2..=2);
            SymplecticMatrix::from_rows([[1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, a], [-a, 1, 0, 0]])
        }
        _ => Ok(gl2_lift(rng)),
    }
    .expect("generators are symplectic")
}

/// A word of length `len` in the block-triangular families, the
/// parametrised coset family, `J` and lifts of `GL(2, Z)`.
pub fn random_symplectic<R: Rng>(rng: &mut R, len: usize) -> SymplecticMatrix {
    (0..len).fold(SymplecticMatrix::identity(), |acc, _| acc.mul(&generator(rng)))
}

/// A random element of `Gamma0(p)` built from generators of that group.
pub fn random_gamma0<R: Rng>(rng: &mut R, p: u64, len: usize) -> SymplecticMatrix {
    let pz = Integer::from(p);
    (0..len).fold(SymplecticMatrix::identity(), |acc, _| {
        let g = match rng.gen_range(0..3) {
            0 => SymplecticMatrix::from_blocks(&ident(), &sym_block(rng, 2), &zero(), &ident()),
            1 => {
                let c = sym_block(rng, 2).map(|r| r.map(|x| x * &pz));
                SymplecticMatrix::from_blocks(&ident(), &zero(), &c, &ident())
            }
            _ => Ok(gl2_lift(rng)),
        }
        .expect("Gamma0 generators are symplectic");
        acc.mul(&g)
    })
}

/// Uniform integer matrix with entries in `[-span, span]`.
pub fn random_integer_matrix<R: Rng>(rng: &mut R, span: i64) -> IntMatrix4 {
    std::array::from_fn(|_| std::array::from_fn(|_| Integer::from(rng.gen_range(-span..=span))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sp4::{in_gamma0, is_symplectic};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_stay_in_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert!(is_symplectic(random_symplectic(&mut rng, 6).entries()));
            for p in [2, 3, 5] {
                assert!(in_gamma0(&random_gamma0(&mut rng, p, 6), p));
            }
        }
    }
}

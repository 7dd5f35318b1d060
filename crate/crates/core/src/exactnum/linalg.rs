use rug::Rational;

/// Reduced row-echelon form in place; returns the pivot column of each
/// non-zero row.
fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c].cmp0().is_ne()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone().recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].cmp0().is_eq() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= Rational::from(&f * pv);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let mut m = matrix.to_vec();
    rref(&mut m).len()
}

/// Basis of the right nullspace `{v : matrix * v = 0}`, one vector per free
/// column of the reduced echelon form. Empty iff the nullspace is trivial.
pub fn nullspace(matrix: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(matrix.iter().all(|r| r.len() == cols), "matrix must be rectangular");
    let mut m = matrix.to_vec();
    let pivots = rref(&mut m);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::new(); cols];
            v[free] = Rational::from(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = Rational::from(-&m[row][free]);
            }
            v
        })
        .collect()
}

pub fn mat_vec(matrix: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    matrix
        .iter()
        .map(|row| row.iter().zip(v).fold(Rational::new(), |acc, (a, b)| acc + Rational::from(a * b)))
        .collect()
}

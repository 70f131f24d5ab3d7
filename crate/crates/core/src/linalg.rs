//! Exact linear algebra over ℚ and ℤ on small dense matrices.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form over ℚ. Returns the nonzero rows and pivot columns.
pub fn rref(rows: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..ncols {
                    let delta = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

pub fn rank(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Scales a rational row to a primitive integer row with the same sign pattern.
pub fn primitive_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// A basis of `{v ∈ ℚⁿ : r·v = 0 for every row r}` as primitive integer rows,
/// in reduced echelon shape (each basis vector has a 1-scaled free column).
pub fn kernel(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            primitive_row(&v)
        })
        .collect()
}

/// Canonical integer basis of a row space: reduced echelon form over ℚ with
/// every row scaled to a primitive integer vector whose pivot is positive.
pub fn canonical_row_basis(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let (r, _) = rref(rows, ncols);
    r.iter().map(|row| primitive_row(row)).collect()
}

/// True when two integer matrices have the same row space over ℚ.
pub fn row_equivalent(a: &[Vec<BigInt>], b: &[Vec<BigInt>], ncols: usize) -> bool {
    let ra = rank(a, ncols);
    let rb = rank(b, ncols);
    let stacked: Vec<Vec<BigInt>> = a.iter().chain(b).cloned().collect();
    ra == rb && rank(&stacked, ncols) == ra
}

/// Nonzero invariant factors of the Smith normal form of an integer matrix.
pub fn invariant_factors(rows: &[Vec<BigInt>], ncols: usize) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let mut factors = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Pick the smallest nonzero entry in the trailing block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if !m[i][t].is_zero() {
                    let q = m[i][t].div_floor(&m[t][t]);
                    for j in t..ncols {
                        let delta = &q * &m[t][j];
                        m[i][j] -= delta;
                    }
                    if !m[i][t].is_zero() {
                        m.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..ncols {
                if !m[t][j].is_zero() {
                    let q = m[t][j].div_floor(&m[t][t]);
                    for row in m.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                    if !m[t][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let pivot = m[t][t].clone();
            let offender =
                (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !(&m[i][j] % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..ncols {
                        let add = m[i][j].clone();
                        m[t][j] += add;
                    }
                }
                None => break,
            }
        }
        factors.push(m[t][t].abs());
        t += 1;
    }
    factors
}

pub fn to_bigint_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

//! Complex Gaussian elimination with partial pivoting: solve, invert,
//! determinant. Used as the independent oracle for the closed-form
//! Vandermonde routines and the stationary solves.

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Solve A x = b. Returns None when the pivoting breaks down.
pub fn solve(a: &[Vec<Complex64>], b: &[Complex64]) -> Option<Vec<Complex64>> {
    let mut aug: Vec<Vec<Complex64>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    forward_eliminate(&mut aug)?;
    back_substitute(&aug)
}

/// Inverse of A by eliminating against the identity. None when singular.
pub fn inverse(a: &[Vec<Complex64>]) -> Option<Vec<Vec<Complex64>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Complex64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { ONE } else { ZERO });
            }
            r
        })
        .collect();
    // Full Gauss-Jordan.
    for col in 0..n {
        let pivot = (col..n).max_by(|&r, &s| aug[r][col].norm().total_cmp(&aug[s][col].norm()))?;
        if aug[pivot][col].norm() == 0.0 {
            return None;
        }
        aug.swap(col, pivot);
        let inv = ONE / aug[col][col];
        for c in 0..2 * n {
            aug[col][c] *= inv;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = aug[r][col];
            if f == ZERO {
                continue;
            }
            for c in 0..2 * n {
                let sub = f * aug[col][c];
                aug[r][c] -= sub;
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant by LU with partial pivoting.
pub fn det(a: &[Vec<Complex64>]) -> Complex64 {
    let n = a.len();
    let mut m: Vec<Vec<Complex64>> = a.to_vec();
    let mut result = ONE;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r, &s| m[r][col].norm().total_cmp(&m[s][col].norm()))
            .expect("non-empty range");
        if m[pivot][col].norm() == 0.0 {
            return ZERO;
        }
        if pivot != col {
            m.swap(col, pivot);
            result = -result;
        }
        result *= m[col][col];
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            if f == ZERO {
                continue;
            }
            for c in col..n {
                let sub = f * m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    result
}

fn forward_eliminate(aug: &mut [Vec<Complex64>]) -> Option<()> {
    let n = aug.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&r, &s| aug[r][col].norm().total_cmp(&aug[s][col].norm()))?;
        if aug[pivot][col].norm() == 0.0 {
            return None;
        }
        aug.swap(col, pivot);
        for r in col + 1..n {
            let f = aug[r][col] / aug[col][col];
            if f == ZERO {
                continue;
            }
            for c in col..aug[r].len() {
                let sub = f * aug[col][c];
                aug[r][c] -= sub;
            }
        }
    }
    Some(())
}

fn back_substitute(aug: &[Vec<Complex64>]) -> Option<Vec<Complex64>> {
    let n = aug.len();
    let mut x = vec![ZERO; n];
    for r in (0..n).rev() {
        let mut acc = aug[r][n];
        for c in r + 1..n {
            acc -= aug[r][c] * x[c];
        }
        x[r] = acc / aug[r][r];
        if !x[r].re.is_finite() || !x[r].im.is_finite() {
            return None;
        }
    }
    Some(x)
}

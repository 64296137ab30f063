//! Matrix-power oracles: repeated squaring for complex matrices, real
//! successive powers, and companion-matrix evaluation of recurrences.

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub fn complex_mul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let m = a.len();
    let mut out = vec![vec![ZERO; m]; m];
    for i in 0..m {
        for k in 0..m {
            let v = a[i][k];
            if v == ZERO {
                continue;
            }
            for j in 0..m {
                out[i][j] += v * b[k][j];
            }
        }
    }
    out
}

pub fn complex_identity(m: usize) -> Vec<Vec<Complex64>> {
    let mut out = vec![vec![ZERO; m]; m];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    out
}

/// A^n by repeated squaring.
pub fn complex_power_squaring(a: &[Vec<Complex64>], mut n: u64) -> Vec<Vec<Complex64>> {
    let mut result = complex_identity(a.len());
    let mut base = a.to_vec();
    while n > 0 {
        if n & 1 == 1 {
            result = complex_mul(&result, &base);
        }
        base = complex_mul(&base, &base);
        n >>= 1;
    }
    result
}

pub fn real_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let m = a.len();
    let mut out = vec![vec![0.0; m]; m];
    for i in 0..m {
        for k in 0..m {
            let v = a[i][k];
            if v == 0.0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += v * b[k][j];
            }
        }
    }
    out
}

/// P^1..P^upto by successive multiplication.
pub fn real_powers(p: &[Vec<f64>], upto: usize) -> Vec<Vec<Vec<f64>>> {
    let mut out: Vec<Vec<Vec<f64>>> = Vec::with_capacity(upto);
    for k in 0..upto {
        let next = if k == 0 {
            p.to_vec()
        } else {
            real_mul(&out[k - 1], p)
        };
        out.push(next);
    }
    out
}

/// x_n for the recurrence x_n = a_(m-1)x_(n-1) + ... + a_0 x_(n-m),
/// evaluated through powers of the companion matrix (repeated squaring), an
/// arithmetic route independent of direct term-by-term iteration.
pub fn companion_power_term(coeffs: &[Complex64], initial: &[Complex64], n: u64) -> Complex64 {
    let m = coeffs.len();
    assert_eq!(m, initial.len(), "order mismatch");
    let mut companion = vec![vec![ZERO; m]; m];
    for r in 0..m - 1 {
        companion[r][r + 1] = Complex64::new(1.0, 0.0);
    }
    companion[m - 1].clone_from_slice(coeffs);
    let power = complex_power_squaring(&companion, n);
    (0..m).map(|k| power[0][k] * initial[k]).sum()
}

/// Stationary-distribution oracle: roll the uniform distribution forward.
pub fn power_iteration_stationary(p: &[Vec<f64>], steps: usize) -> Vec<f64> {
    let m = p.len();
    let mut v = vec![1.0 / m as f64; m];
    for _ in 0..steps {
        let mut next = vec![0.0; m];
        for (i, row) in p.iter().enumerate() {
            for (j, &w) in row.iter().enumerate() {
                next[j] += v[i] * w;
            }
        }
        v = next;
    }
    v
}

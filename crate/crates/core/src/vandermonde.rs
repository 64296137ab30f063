//! The power-1-to-power-n Vandermonde matrix, its closed-form determinant
//! and its closed-form inverse in terms of elementary symmetric polynomials.
//!
//! Note the row convention: row t holds the t-th powers of the nodes for
//! t = 1..n. This is not the usual power-0 Vandermonde matrix; the inverse
//! below is specific to it.

use num_complex::Complex64;

use crate::error::{HypothesisError, Result};
use crate::numkernel::{elementary_symmetric_all_excluding, RootSet, Tolerances};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Soft size cap: above this the double-precision closed form degrades and
/// callers get a diagnostic, but the computation still runs.
pub const SOFT_NODE_CAP: usize = 25;

/// An n×n grid with entry `(t, i) = nodes[i]^(t+1)`, i.e. rows run over powers
/// 1..n. Nonsingular exactly when the nodes are nonzero and distinct.
#[derive(Debug, Clone, PartialEq)]
pub struct VandermondeMatrix {
    nodes: Vec<Complex64>,
    rows: Vec<Vec<Complex64>>,
}

impl VandermondeMatrix {
    pub fn new(nodes: &[Complex64]) -> Self {
        let n = nodes.len();
        let rows = (1..=n)
            .map(|t| nodes.iter().map(|z| z.powu(t as u32)).collect())
            .collect();
        VandermondeMatrix {
            nodes: nodes.to_vec(),
            rows,
        }
    }

    pub fn n(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    /// Rows in power order: `rows()[t-1][i]` is `nodes[i]^t`.
    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.rows
    }

    /// Max-norm of W·V − I for a candidate inverse `w`.
    pub fn inverse_residual(&self, w: &[Vec<Complex64>]) -> f64 {
        let n = self.n();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for t in 0..n {
                    acc += w[i][t] * self.rows[t][j];
                }
                let expect = if i == j {
                    ONE
                } else {
                    Complex64::new(0.0, 0.0)
                };
                worst = worst.max((acc - expect).norm());
            }
        }
        worst
    }
}

/// Closed-form determinant:
/// (−1)^C(n,2) · ∏ λ_i · ∏_{i>j} (λ_j − λ_i). Returns 1 for n = 0.
pub fn vandermonde_det(nodes: &RootSet) -> Complex64 {
    let roots = nodes.roots();
    let n = roots.len();
    let pairs = n.saturating_sub(1) * n / 2;
    let mut det = if pairs % 2 == 1 { -ONE } else { ONE };
    for &z in roots {
        det *= z;
    }
    for i in 0..n {
        for j in 0..i {
            det *= roots[j] - roots[i];
        }
    }
    det
}

/// Closed-form inverse of the power-1..n Vandermonde matrix:
///
///   `w[i][j] = (−1)^(n−j) · e_(n−j)(λ_1, ..., λ̂_i, ..., λ_n)`
///   `          / (λ_i · ∏_{k≠i} (λ_i − λ_k))`       (1-based i, j)
///
/// Each row costs one excluded-symmetric-polynomial sweep and one
/// denominator product. Zero or near-coincident nodes are rejected before
/// any division.
pub fn vandermonde_inverse(nodes: &RootSet) -> Result<Vec<Vec<Complex64>>> {
    vandermonde_inverse_with(nodes, &Tolerances::default())
}

pub fn vandermonde_inverse_with(nodes: &RootSet, tols: &Tolerances) -> Result<Vec<Vec<Complex64>>> {
    let roots = nodes.roots();
    let n = roots.len();
    let max_abs = nodes.max_abs();
    let zero_thr = tols.zero_threshold(max_abs);
    if n > 0 && nodes.abs_min() <= zero_thr {
        return Err(HypothesisError::ZeroNode {
            abs_min: nodes.abs_min(),
            threshold: zero_thr,
        }
        .into());
    }
    let sep_thr = tols.distinctness_threshold(max_abs);
    if n >= 2 && nodes.sep_min() <= sep_thr {
        return Err(HypothesisError::NodeSeparation {
            sep_min: nodes.sep_min(),
            threshold: sep_thr,
        }
        .into());
    }

    let mut w = Vec::with_capacity(n);
    for i in 0..n {
        let e = elementary_symmetric_all_excluding(roots, i)?;
        let mut den = roots[i];
        for (k, &z) in roots.iter().enumerate() {
            if k != i {
                den *= roots[i] - z;
            }
        }
        let row = (0..n)
            .map(|j0| {
                // 1-based column j = j0 + 1, so the exponent n − j = n − 1 − j0.
                let idx = n - 1 - j0;
                let sign = if idx % 2 == 1 { -ONE } else { ONE };
                sign * e[idx] / den
            })
            .collect();
        w.push(row);
    }
    Ok(w)
}

//! Dense complex matrices, characteristic polynomials via the
//! Faddeev–LeVerrier recursion, eigenvalue extraction through the root
//! finder, and the closed form of matrix-power entries.
//!
//! Eigenvalues come from characteristic-polynomial roots rather than QR
//! iteration: the whole pipeline here is char-poly-centric and sizes are
//! desk scale. Char-poly root finding is ill-conditioned for large m, hence
//! the hard cap at 60 and the recommended cap at 25.

use num_complex::Complex64;

use crate::error::{Error, HypothesisError, Result};
use crate::numkernel::{find_roots, Polynomial, RootSet, Tolerances};
use crate::recurrence::ClosedForm;
use crate::vandermonde::vandermonde_inverse_with;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Hard size cap for eigenvalue extraction.
pub const MAX_EIGEN_DIM: usize = 60;
/// Above this size the CLI attaches a conditioning warning.
pub const RECOMMENDED_EIGEN_DIM: usize = 25;

/// Row-major dense square matrix over ℂ.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    m: usize,
    data: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::input("matrix must have at least one row"));
        }
        let mut data = Vec::with_capacity(m * m);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::Input(format!(
                    "row {i} has {} entries, expected {m}",
                    row.len()
                )));
            }
            for (j, &z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::Input(format!("entry ({i}, {j}) is not finite")));
                }
                data.push(z);
            }
        }
        Ok(SquareMatrix { m, data })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Complex64::new(v, 0.0)).collect())
            .collect();
        SquareMatrix::from_rows(&complex)
    }

    pub fn zero(m: usize) -> Self {
        SquareMatrix {
            m,
            data: vec![ZERO; m * m],
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut a = SquareMatrix::zero(m);
        for i in 0..m {
            a.set(i, i, ONE);
        }
        a
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.m + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.m + j] = v;
    }

    pub fn mul(&self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.m, rhs.m, "dimension mismatch");
        let m = self.m;
        let mut out = SquareMatrix::zero(m);
        for i in 0..m {
            for k in 0..m {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                for j in 0..m {
                    out.data[i * m + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    pub fn add_diagonal(&mut self, v: Complex64) {
        for i in 0..self.m {
            self.data[i * self.m + i] += v;
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.m).map(|i| self.get(i, i)).sum()
    }

    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn to_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.m)
            .map(|i| (0..self.m).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// Characteristic polynomial p(λ) = det(λI − A) by the Faddeev–LeVerrier
/// recursion, monic of degree m, ascending coefficient order.
pub fn char_poly(a: &SquareMatrix) -> Result<Polynomial> {
    let m = a.m();
    if m > MAX_EIGEN_DIM {
        return Err(Error::Input(format!(
            "matrix dimension {m} exceeds the supported cap of {MAX_EIGEN_DIM}"
        )));
    }
    let mut coeffs = vec![ZERO; m + 1];
    coeffs[m] = ONE;
    // am holds A·M_k; M_(k+1) = A·M_k + c_(m-k)·I.
    let mut am = SquareMatrix::zero(m);
    for k in 1..=m {
        let mut mk = am;
        mk.add_diagonal(coeffs[m - k + 1]);
        am = a.mul(&mk);
        coeffs[m - k] = -am.trace() / k as f64;
    }
    Ok(Polynomial::new(coeffs))
}

/// Substitute `a` into `p` by Horner's scheme on matrices. Substituting the
/// characteristic polynomial should annihilate the matrix (Cayley–Hamilton),
/// which the test suites use as a smoke check.
pub fn apply_polynomial(p: &Polynomial, a: &SquareMatrix) -> SquareMatrix {
    let m = a.m();
    let mut acc = SquareMatrix::zero(m);
    for &c in p.coeffs().iter().rev() {
        acc = acc.mul(a);
        acc.add_diagonal(c);
    }
    acc
}

/// Successive powers A^1..A^upto.
pub fn matrix_powers(a: &SquareMatrix, upto: usize) -> Vec<SquareMatrix> {
    let mut out: Vec<SquareMatrix> = Vec::with_capacity(upto);
    for k in 0..upto {
        let next = if k == 0 { a.clone() } else { out[k - 1].mul(a) };
        out.push(next);
    }
    out
}

/// The eigenvalue list of a matrix with classification flags.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: RootSet,
    all_simple: bool,
    all_nonzero: bool,
    dominant: Complex64,
    rho: f64,
    distinctness_threshold: f64,
    zero_threshold: f64,
}

impl Spectrum {
    /// Classify a root set (assumed already in spectral order). `rho` is the
    /// largest modulus strictly below the dominant modulus; eigenvalues
    /// tying the dominant modulus (within a small relative slack) do not
    /// count towards it.
    pub fn classify(eigenvalues: RootSet, tols: &Tolerances) -> Spectrum {
        let max_abs = eigenvalues.max_abs();
        let distinctness_threshold = tols.distinctness_threshold(max_abs);
        let zero_threshold = tols.zero_threshold(max_abs);
        let all_simple = eigenvalues.len() < 2 || eigenvalues.sep_min() > distinctness_threshold;
        let all_nonzero = eigenvalues.abs_min() > zero_threshold;
        let dominant = eigenvalues.roots().first().copied().unwrap_or(ZERO);
        let dom_mod = dominant.norm();
        let tie = 1e-10 * dom_mod.max(1.0);
        let rho = eigenvalues
            .roots()
            .iter()
            .map(|z| z.norm())
            .filter(|&r| r < dom_mod - tie)
            .fold(0.0, f64::max);
        Spectrum {
            eigenvalues,
            all_simple,
            all_nonzero,
            dominant,
            rho,
            distinctness_threshold,
            zero_threshold,
        }
    }

    pub fn eigenvalues(&self) -> &RootSet {
        &self.eigenvalues
    }

    pub fn all_simple(&self) -> bool {
        self.all_simple
    }

    pub fn all_nonzero(&self) -> bool {
        self.all_nonzero
    }

    pub fn dominant(&self) -> Complex64 {
        self.dominant
    }

    /// Largest modulus strictly inside the dominant modulus; 0 if none.
    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn distinctness_threshold(&self) -> f64 {
        self.distinctness_threshold
    }

    pub fn zero_threshold(&self) -> f64 {
        self.zero_threshold
    }

    /// Error for the simplicity/nonzero gates, if either fails.
    pub fn hypothesis_violation(&self) -> Option<HypothesisError> {
        if !self.all_simple {
            return Some(HypothesisError::RepeatedEigenvalue {
                sep_min: self.eigenvalues.sep_min(),
                threshold: self.distinctness_threshold,
            });
        }
        if !self.all_nonzero {
            return Some(HypothesisError::ZeroEigenvalue {
                abs_min: self.eigenvalues.abs_min(),
                threshold: self.zero_threshold,
            });
        }
        None
    }
}

/// Eigenvalues as the roots of the characteristic polynomial.
pub fn eigenvalues(a: &SquareMatrix) -> Result<Spectrum> {
    eigenvalues_with(a, &Tolerances::default())
}

pub fn eigenvalues_with(a: &SquareMatrix, tols: &Tolerances) -> Result<Spectrum> {
    let p = char_poly(a)?;
    let roots = find_roots(&p, tols.root_residual)?;
    Ok(Spectrum::classify(roots, tols))
}

/// Closed form for the (i, j) entry of A^n: the sequence {(A^n)_(i,j)} for
/// n ≥ 1 obeys an order-m recurrence with the characteristic polynomial of
/// A, so its coefficients come from the same Vandermonde-inverse formula,
/// fed with the entries of A^1..A^m.
pub fn power_entry_closed_form(a: &SquareMatrix, i: usize, j: usize) -> Result<ClosedForm> {
    let m = a.m();
    if i >= m || j >= m {
        return Err(Error::Input(format!(
            "entry ({i}, {j}) out of range for an {m}x{m} matrix"
        )));
    }
    let tols = Tolerances::default();
    let spectrum = eigenvalues_with(a, &tols)?;
    if let Some(violation) = spectrum.hypothesis_violation() {
        return Err(violation.into());
    }
    let powers = matrix_powers(a, m);
    let terms: Vec<Complex64> = powers.iter().map(|p| p.get(i, j)).collect();
    let w = vandermonde_inverse_with(spectrum.eigenvalues(), &tols)?;
    let coefficients: Vec<Complex64> = (0..m)
        .map(|r| (0..m).map(|t| w[r][t] * terms[t]).sum())
        .collect();
    ClosedForm::new(spectrum.eigenvalues.clone(), coefficients)
}

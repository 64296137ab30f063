//! Complex arithmetic kernel: polynomials, elementary symmetric polynomials
//! and simultaneous root finding. Everything else in the crate sits on top
//! of this module.

use num_complex::Complex64;

use crate::error::{Error, NumericalError, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Default residual tolerance for accepting a polynomial root.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;
/// Iteration cap for the simultaneous root solvers.
pub const MAX_ROOT_ITERATIONS: u32 = 1000;

/// Numerical thresholds shared by the spectral pipeline. The closed-form
/// denominators contain `λ_i` and `λ_i − λ_k` factors, so values are
/// classified against these thresholds before any division happens.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Scaled residual |p(z)| / (max|coeff| · (1+|z|)^deg) accepted for a root.
    pub root_residual: f64,
    /// Roots closer than `distinctness · max_modulus` are treated as repeated.
    pub distinctness: f64,
    /// Roots smaller than `zero · max(1, max_modulus)` are treated as zero.
    pub zero: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            root_residual: ROOT_RESIDUAL_TOL,
            distinctness: 1e-8,
            zero: 1e-8,
        }
    }
}

impl Tolerances {
    /// Absolute distance below which two values of this scale coincide.
    pub fn distinctness_threshold(&self, max_abs: f64) -> f64 {
        self.distinctness * max_abs
    }

    /// Absolute modulus below which a value of this scale counts as zero.
    pub fn zero_threshold(&self, max_abs: f64) -> f64 {
        self.zero * max_abs.max(1.0)
    }
}

/// Sort into the crate's spectral order: descending modulus, ties broken by
/// descending real part, then descending imaginary part. Deterministic, so
/// downstream formulas indexed by eigenvalue position are reproducible.
pub fn sort_spectral(values: &mut [Complex64]) {
    values.sort_by(|a, b| {
        b.norm()
            .total_cmp(&a.norm())
            .then(b.re.total_cmp(&a.re))
            .then(b.im.total_cmp(&a.im))
    });
}

fn check_finite(values: &[Complex64], what: &str) -> Result<()> {
    for (k, z) in values.iter().enumerate() {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::Input(format!("{what} {k} is not finite")));
        }
    }
    Ok(())
}

/// A list of complex roots together with the spacing data the closed-form
/// denominators depend on. Order is preserved from construction.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<Complex64>,
    sep_min: f64,
    abs_min: f64,
}

impl RootSet {
    /// Wraps `roots` in the given order, computing the minimum pairwise
    /// distance (0 if fewer than two roots) and the minimum modulus
    /// (infinite if empty).
    pub fn new(roots: Vec<Complex64>) -> Result<Self> {
        check_finite(&roots, "root")?;
        let sep_min = if roots.len() < 2 {
            0.0
        } else {
            let mut sep = f64::INFINITY;
            for i in 0..roots.len() {
                for j in i + 1..roots.len() {
                    sep = sep.min((roots[i] - roots[j]).norm());
                }
            }
            sep
        };
        let abs_min = roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
        Ok(RootSet {
            roots,
            sep_min,
            abs_min,
        })
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn into_roots(self) -> Vec<Complex64> {
        self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Minimum pairwise distance; 0 when fewer than two roots.
    pub fn sep_min(&self) -> f64 {
        self.sep_min
    }

    /// Minimum modulus; infinite when empty.
    pub fn abs_min(&self) -> f64 {
        self.abs_min
    }

    /// Maximum modulus; 0 when empty.
    pub fn max_abs(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Dense univariate polynomial over ℂ, coefficients in ascending degree
/// order. Trailing zero coefficients are trimmed on construction; the zero
/// polynomial keeps a single zero coefficient so `degree` stays defined.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&ZERO) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().expect("coeffs never empty")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(derivative_coeffs(&self.coeffs))
    }

    /// Largest coefficient modulus; used as the residual scale.
    pub fn max_coeff_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
}

fn derivative_coeffs(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

/// Ascending coefficients of ∏ (x + v_k). The coefficient of `x^t` ends up
/// at index `t`; the product is monic, so the last entry is 1.
fn expand_product(values: &[Complex64]) -> Vec<Complex64> {
    let mut c = Vec::with_capacity(values.len() + 1);
    c.push(ONE);
    for &v in values {
        c.push(ZERO);
        for t in (1..c.len()).rev() {
            c[t] = c[t - 1] + v * c[t];
        }
        c[0] *= v;
    }
    c
}

/// The j-th elementary symmetric polynomial of `values`: the sum of all
/// j-fold products of distinct entries, read off as the coefficient of
/// `x^(n-j)` in ∏ (x + λ_k). `e_0 = 1` by the empty-product convention.
pub fn elementary_symmetric(values: &[Complex64], j: usize) -> Result<Complex64> {
    let n = values.len();
    if j > n {
        return Err(Error::Input(format!(
            "elementary_symmetric: j = {j} out of range for {n} values"
        )));
    }
    let coeffs = expand_product(values);
    Ok(coeffs[n - j])
}

/// All elementary symmetric polynomials of the values with index `i`
/// omitted, in one product sweep: returns `[e_0, e_1, ..., e_(n-1)]` over
/// the remaining n−1 values.
pub fn elementary_symmetric_all_excluding(
    values: &[Complex64],
    i: usize,
) -> Result<Vec<Complex64>> {
    let n = values.len();
    if i >= n {
        return Err(Error::Input(format!(
            "elementary_symmetric_all_excluding: index {i} out of range for {n} values"
        )));
    }
    let rest: Vec<Complex64> = values
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, &v)| v)
        .collect();
    let coeffs = expand_product(&rest);
    // coeffs[t] is the coefficient of x^t in a degree n−1 product, so
    // e_j = coeffs[(n−1) − j].
    Ok((0..n).map(|j| coeffs[n - 1 - j]).collect())
}

/// Monic polynomial with exactly the given roots (Vieta's formulas).
pub fn poly_from_roots(roots: &[Complex64]) -> Polynomial {
    let negated: Vec<Complex64> = roots.iter().map(|&r| -r).collect();
    Polynomial::new(expand_product(&negated))
}

/// All complex roots of `p`, found by Aberth–Ehrlich simultaneous iteration
/// with a Durand–Kerner fallback, returned in spectral order (descending
/// modulus, deterministic tie-break).
///
/// Each root is accepted only if |p(z)| < tol · max|coeff| · (1 + |z|)^deg.
/// Hitting the iteration cap without meeting that bound is a numerical
/// error carrying the best iterate and its residual.
pub fn find_roots(p: &Polynomial, tol: f64) -> Result<RootSet> {
    let n = p.degree();
    if n < 1 || p.is_zero() {
        return Err(Error::input(
            "find_roots: polynomial degree must be at least 1",
        ));
    }
    let lead = p.leading();
    let monic: Vec<Complex64> = p.coeffs().iter().map(|&c| c / lead).collect();

    if n == 1 {
        let mut roots = vec![-monic[0]];
        sort_spectral(&mut roots);
        return RootSet::new(roots);
    }

    let deriv = derivative_coeffs(&monic);
    // Cauchy-style inclusion radius for a monic polynomial.
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);

    let mut best: Option<(Vec<Complex64>, f64)> = None;
    // First attempt: Aberth. Second: Durand–Kerner from a rotated start.
    for (attempt, rotation) in [(0usize, 0.4f64), (1, 1.9)] {
        let mut z = initial_guesses(n, radius, rotation);
        if attempt == 0 {
            aberth_iterate(&monic, &deriv, &mut z);
        } else {
            durand_kerner_iterate(&monic, &mut z);
        }
        if z.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            continue;
        }
        let residual = worst_residual(p, &z);
        if residual < tol {
            sort_spectral(&mut z);
            return RootSet::new(z);
        }
        if best.as_ref().is_none_or(|(_, r)| residual < *r) {
            best = Some((z, residual));
        }
    }

    let (mut best_roots, residual) =
        best.unwrap_or_else(|| (initial_guesses(n, radius, 0.4), f64::INFINITY));
    sort_spectral(&mut best_roots);
    Err(NumericalError::RootsDidNotConverge {
        iterations: MAX_ROOT_ITERATIONS,
        residual,
        best: best_roots,
    }
    .into())
}

/// Guesses on a circle of the inclusion radius, rotated off the real axis so
/// symmetric polynomials do not stall on symmetric configurations.
fn initial_guesses(n: usize, radius: f64, rotation: f64) -> Vec<Complex64> {
    (0..n)
        .map(|k| {
            Complex64::from_polar(
                radius,
                std::f64::consts::TAU * k as f64 / n as f64 + rotation,
            )
        })
        .collect()
}

fn aberth_iterate(monic: &[Complex64], deriv: &[Complex64], z: &mut [Complex64]) {
    let n = z.len();
    for _ in 0..MAX_ROOT_ITERATIONS {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let zi = z[i];
            let pv = horner(monic, zi);
            let dv = horner(deriv, zi);
            if dv == ZERO {
                // Stationary point: nudge off it rather than divide by zero.
                z[i] = zi + Complex64::new(1e-4 * (1.0 + zi.norm()), 1e-4);
                max_step = f64::INFINITY;
                continue;
            }
            let w = pv / dv;
            let mut s = ZERO;
            for (j, &zj) in z.iter().enumerate() {
                if j != i && zi != zj {
                    s += (zi - zj).finv();
                }
            }
            let denom = ONE - w * s;
            let step = if denom == ZERO { w } else { w / denom };
            z[i] = zi - step;
            if !z[i].re.is_finite() || !z[i].im.is_finite() {
                return;
            }
            max_step = max_step.max(step.norm() / (1.0 + zi.norm()));
        }
        if max_step < 1e-14 {
            return;
        }
    }
}

fn durand_kerner_iterate(monic: &[Complex64], z: &mut [Complex64]) {
    let n = z.len();
    for _ in 0..MAX_ROOT_ITERATIONS {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let zi = z[i];
            let mut denom = ONE;
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            if denom == ZERO {
                z[i] = zi + Complex64::new(1e-4 * (1.0 + zi.norm()), 1e-4);
                max_step = f64::INFINITY;
                continue;
            }
            let step = horner(monic, zi) / denom;
            z[i] = zi - step;
            if !z[i].re.is_finite() || !z[i].im.is_finite() {
                return;
            }
            max_step = max_step.max(step.norm() / (1.0 + zi.norm()));
        }
        if max_step < 1e-14 {
            return;
        }
    }
}

/// Worst scaled residual of the candidate roots against the original
/// polynomial: max |p(z)| / (max|coeff| · (1 + |z|)^deg).
pub fn worst_residual(p: &Polynomial, roots: &[Complex64]) -> f64 {
    let scale = p.max_coeff_abs();
    let n = p.degree() as i32;
    roots
        .iter()
        .map(|&z| p.eval(z).norm() / (scale * (1.0 + z.norm()).powi(n)))
        .fold(0.0, f64::max)
}

//! Markov-chain structure analysis and the spectral convergence bounds:
//! irreducibility and period from the support digraph, the stationary
//! distribution by pivoted elimination, and the constants Φ (per state
//! pair) and Ψ (pair-independent) that bound |p_ij^(n) − π_j| by Φρ^n and
//! Ψρ^(n−1) respectively.

use num_complex::Complex64;

use crate::error::{Error, HypothesisError, NumericalError, Result};
use crate::numkernel::{
    elementary_symmetric_all_excluding, find_roots, sort_spectral, RootSet, Tolerances,
};
use crate::spectral::{char_poly, Spectrum, SquareMatrix};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Slack allowed on the [0, 1] entry range.
pub const ENTRY_SLACK: f64 = 1e-12;
/// Allowed deviation of each row sum from 1.
pub const ROW_SUM_TOL: f64 = 1e-10;
/// Max-norm residual accepted for the stationary solve.
pub const STATIONARY_RESIDUAL_TOL: f64 = 1e-8;
/// How far the eigenvalue nearest 1 may sit from 1 before the matrix is
/// declared not stochastic to working precision.
pub const DOMINANT_SNAP_TOL: f64 = 1e-8;

/// Which bound a mixing-time estimate is based on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixingMode {
    /// Smallest n with (max_ij Φ_ij)·ρ^n below ε.
    PhiMax,
    /// Smallest n with Ψ·ρ^(n−1) below ε.
    Psi,
}

/// A validated row-stochastic matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    rows: Vec<Vec<f64>>,
}

/// Irreducibility and period of the support digraph. The period is defined
/// only for irreducible chains (all states then share it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStructure {
    pub irreducible: bool,
    pub period: Option<u64>,
}

impl ChainStructure {
    pub fn aperiodic(&self) -> bool {
        self.period == Some(1)
    }
}

/// The unique stationary distribution of an irreducible aperiodic chain.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution {
    pi: Vec<f64>,
}

impl StationaryDistribution {
    pub fn pi(&self) -> &[f64] {
        &self.pi
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.pi
    }
}

/// Everything the convergence theorems produce for an accepted chain.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralBounds {
    pub spectrum: Spectrum,
    /// max_(k≥2) |λ_k| with λ_1 snapped to 1; strictly below 1 for accepted
    /// chains.
    pub rho: f64,
    /// Φ per (i, j) pair.
    pub phi: Vec<Vec<f64>>,
    pub phi_max: f64,
    /// Ψ, independent of the pair.
    pub psi: f64,
}

impl TransitionMatrix {
    /// Validate a raw grid: square, entries in [0, 1] within slack, rows
    /// summing to 1 within tolerance. Reducible or periodic chains are
    /// still valid matrices; structure is checked separately.
    pub fn validate(rows: Vec<Vec<f64>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::input(
                "transition matrix must have at least one state",
            ));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::Input(format!(
                    "row {i} has {} entries, expected {m}",
                    row.len()
                )));
            }
            for (j, &p) in row.iter().enumerate() {
                if !p.is_finite() {
                    return Err(Error::Input(format!("entry ({i}, {j}) is not finite")));
                }
                if !(-ENTRY_SLACK..=1.0 + ENTRY_SLACK).contains(&p) {
                    return Err(Error::Input(format!(
                        "entry ({i}, {j}) = {p} lies outside [0, 1]"
                    )));
                }
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > ROW_SUM_TOL {
                return Err(Error::Input(format!(
                    "row {i} sums to {sum}, expected 1 within {ROW_SUM_TOL:e}"
                )));
            }
        }
        Ok(TransitionMatrix { rows })
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn to_square(&self) -> SquareMatrix {
        SquareMatrix::from_real_rows(&self.rows).expect("validated matrix is square and finite")
    }

    /// Ordered pairs (i, j) with p_ij > 0, sorted.
    pub fn support_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &p) in row.iter().enumerate() {
                if p > 0.0 {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    fn support_adjacency(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(_, &p)| p > 0.0)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect()
    }

    /// Irreducibility by two-pass reachability on the support digraph, and
    /// the period as the gcd of `level[u] + 1 − level[v]` over all support
    /// edges, with BFS levels from state 0.
    pub fn structure(&self) -> ChainStructure {
        let adj = self.support_adjacency();
        let m = self.m();
        let forward = reachable(&adj, 0);
        let mut radj = vec![Vec::new(); m];
        for (u, outs) in adj.iter().enumerate() {
            for &v in outs {
                radj[v].push(u);
            }
        }
        let backward = reachable(&radj, 0);
        let irreducible = forward.iter().all(|&r| r) && backward.iter().all(|&r| r);
        let period = if irreducible {
            let level = bfs_levels(&adj, 0);
            let mut g: u64 = 0;
            for (u, outs) in adj.iter().enumerate() {
                for &v in outs {
                    g = gcd(g, level[u] + 1 - level[v]);
                }
            }
            Some(g.max(1))
        } else {
            None
        };
        ChainStructure {
            irreducible,
            period,
        }
    }

    /// Stationary distribution by pivoted elimination on π(P − I) = 0 with
    /// the last equation replaced by Σπ = 1. Requires an irreducible,
    /// aperiodic chain.
    pub fn stationary(&self) -> Result<StationaryDistribution> {
        let st = self.structure();
        if !st.irreducible {
            return Err(HypothesisError::Reducible.into());
        }
        if !st.aperiodic() {
            return Err(HypothesisError::Periodic {
                period: st.period.unwrap_or(0),
            }
            .into());
        }
        let m = self.m();
        // Rows 0..m-1 of (P^T − I), last row replaced by the normalization.
        let mut a = vec![vec![0.0f64; m]; m];
        for (r, row) in a.iter_mut().enumerate().take(m - 1) {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = self.rows[c][r] - if r == c { 1.0 } else { 0.0 };
            }
        }
        a[m - 1] = vec![1.0; m];
        let mut b = vec![0.0; m];
        b[m - 1] = 1.0;
        let mut pi = solve_real(a, b).ok_or(NumericalError::SingularSystem {
            residual: f64::INFINITY,
        })?;
        let sum: f64 = pi.iter().sum();
        if sum <= 0.0 || !sum.is_finite() {
            return Err(NumericalError::SingularSystem {
                residual: f64::INFINITY,
            }
            .into());
        }
        for p in &mut pi {
            *p /= sum;
        }
        let residual = self.stationary_residual(&pi);
        if residual > STATIONARY_RESIDUAL_TOL {
            return Err(NumericalError::SingularSystem { residual }.into());
        }
        for (index, &value) in pi.iter().enumerate() {
            if value <= 0.0 {
                return Err(NumericalError::StationaryNotPositive { index, value }.into());
            }
        }
        Ok(StationaryDistribution { pi })
    }

    /// Max-norm of πP − π.
    pub fn stationary_residual(&self, pi: &[f64]) -> f64 {
        let m = self.m();
        (0..m)
            .map(|j| {
                let image: f64 = (0..m).map(|i| pi[i] * self.rows[i][j]).sum();
                (image - pi[j]).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Rolls the uniform distribution forward `steps` times; cross-check for
    /// the elimination solve.
    pub fn power_iteration(&self, steps: usize) -> Vec<f64> {
        let m = self.m();
        let mut v = vec![1.0 / m as f64; m];
        for _ in 0..steps {
            let mut next = vec![0.0; m];
            for (i, row) in self.rows.iter().enumerate() {
                for (j, &p) in row.iter().enumerate() {
                    next[j] += v[i] * p;
                }
            }
            v = next;
        }
        v
    }

    /// n-step transition matrices P^1..P^upto by successive multiplication.
    /// Kept in real arithmetic, independent of the spectral closed forms the
    /// bounds are derived from.
    pub fn step_probabilities(&self, upto: usize) -> Vec<Vec<Vec<f64>>> {
        let m = self.m();
        let mut out: Vec<Vec<Vec<f64>>> = Vec::with_capacity(upto);
        for k in 0..upto {
            if k == 0 {
                out.push(self.rows.clone());
                continue;
            }
            let prev = &out[k - 1];
            let mut next = vec![vec![0.0; m]; m];
            for i in 0..m {
                for t in 0..m {
                    let a = prev[i][t];
                    if a == 0.0 {
                        continue;
                    }
                    for j in 0..m {
                        next[i][j] += a * self.rows[t][j];
                    }
                }
            }
            out.push(next);
        }
        out
    }

    /// Spectrum with the eigenvalue nearest 1 snapped to exactly 1 (its
    /// floating image may be 1 ± 1e−12, and the Φ/Ψ denominators divide by
    /// |λ_k − λ_1|). Also returns the snap distance for diagnostics.
    pub fn snapped_spectrum(&self) -> Result<(Spectrum, f64)> {
        let tols = Tolerances::default();
        let poly = char_poly(&self.to_square())?;
        let roots = find_roots(&poly, tols.root_residual)?;
        let mut eigs = roots.into_roots();
        let nearest = (0..eigs.len())
            .min_by(|&a, &b| (eigs[a] - ONE).norm().total_cmp(&(eigs[b] - ONE).norm()))
            .expect("at least one eigenvalue");
        let distance = (eigs[nearest] - ONE).norm();
        if distance > DOMINANT_SNAP_TOL {
            return Err(NumericalError::DominantNotOne { distance }.into());
        }
        eigs[nearest] = ONE;
        sort_spectral(&mut eigs);
        if eigs[0] != ONE {
            return Err(NumericalError::DominantNotOne {
                distance: (eigs[0] - ONE).norm(),
            }
            .into());
        }
        let spectrum = Spectrum::classify(RootSet::new(eigs)?, &tols);
        Ok((spectrum, distance))
    }

    /// Full hypothesis gate plus the Φ grid and Ψ. Fails with a typed
    /// hypothesis error if the chain is reducible, periodic, or its spectrum
    /// is not simple and nonzero.
    pub fn bounds(&self) -> Result<SpectralBounds> {
        let st = self.structure();
        if !st.irreducible {
            return Err(HypothesisError::Reducible.into());
        }
        if !st.aperiodic() {
            return Err(HypothesisError::Periodic {
                period: st.period.unwrap_or(0),
            }
            .into());
        }
        let (spectrum, _) = self.snapped_spectrum()?;
        if let Some(violation) = spectrum.hypothesis_violation() {
            return Err(violation.into());
        }
        let eigs = spectrum.eigenvalues().roots().to_vec();
        let m = self.m();
        let rho = eigs[1..].iter().map(|z| z.norm()).fold(0.0, f64::max);
        if m >= 2 && rho >= 1.0 {
            return Err(NumericalError::SubdominantNotContracting { rho }.into());
        }

        let powers = self.step_probabilities(m);
        let mut phi = vec![vec![0.0f64; m]; m];
        let mut psi = 0.0f64;
        for k in 1..m {
            let e = elementary_symmetric_all_excluding(&eigs, k)?;
            let mut den = eigs[k].norm();
            let mut psi_term = 1.0f64;
            for (t, &lambda) in eigs.iter().enumerate() {
                if t != k {
                    let gap = (eigs[k] - lambda).norm();
                    den *= gap;
                    psi_term *= (1.0 + lambda.norm()) / gap;
                }
            }
            psi += psi_term;
            for i in 0..m {
                for j in 0..m {
                    let mut num = Complex64::new(0.0, 0.0);
                    for l in 1..=m {
                        let sign = if (m - l) % 2 == 1 { -1.0 } else { 1.0 };
                        num += e[m - l] * sign * powers[l - 1][i][j];
                    }
                    phi[i][j] += num.norm() / den;
                }
            }
        }
        let phi_max = phi
            .iter()
            .flat_map(|row| row.iter().copied())
            .fold(0.0, f64::max);
        Ok(SpectralBounds {
            spectrum,
            rho,
            phi,
            phi_max,
            psi,
        })
    }

    /// Φ for a single (i, j) pair.
    pub fn phi_bound(&self, i: usize, j: usize) -> Result<f64> {
        let m = self.m();
        if i >= m || j >= m {
            return Err(Error::Input(format!(
                "pair ({i}, {j}) out of range for {m} states"
            )));
        }
        Ok(self.bounds()?.phi[i][j])
    }

    /// Ψ (pair-independent).
    pub fn psi_bound(&self) -> Result<f64> {
        Ok(self.bounds()?.psi)
    }

    /// Smallest n at which the chosen bound drops below ε.
    pub fn mixing_time(&self, epsilon: f64, mode: MixingMode) -> Result<u64> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::Input(format!(
                "epsilon must lie strictly between 0 and 1, got {epsilon}"
            )));
        }
        let b = self.bounds()?;
        Ok(mixing_time_from(&b, epsilon, mode))
    }
}

/// Mixing time from precomputed bounds; see `TransitionMatrix::mixing_time`.
pub fn mixing_time_from(b: &SpectralBounds, epsilon: f64, mode: MixingMode) -> u64 {
    match mode {
        MixingMode::PhiMax => {
            if b.phi_max <= epsilon {
                return 0;
            }
            if b.rho == 0.0 {
                return 1;
            }
            let n = ((b.phi_max / epsilon).ln() / (1.0 / b.rho).ln()).ceil();
            n.max(0.0) as u64
        }
        MixingMode::Psi => {
            if b.psi == 0.0 {
                return 0;
            }
            if b.rho == 0.0 {
                return 1;
            }
            let n = 1.0 + ((b.psi / epsilon).ln() / (1.0 / b.rho).ln()).ceil();
            n.max(0.0) as u64
        }
    }
}

fn reachable(adj: &[Vec<usize>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

/// BFS levels from `start`; every vertex must be reachable.
fn bfs_levels(adj: &[Vec<usize>], start: usize) -> Vec<u64> {
    let mut level = vec![u64::MAX; adj.len()];
    let mut queue = std::collections::VecDeque::new();
    level[start] = 0;
    queue.push_back(start);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if level[v] == u64::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    level
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Gaussian elimination with partial pivoting; consumes the system.
fn solve_real(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))?;
        if a[pivot][col] == 0.0 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let mut acc = b[r];
        for c in r + 1..n {
            acc -= a[r][c] * x[c];
        }
        x[r] = acc / a[r][r];
        if !x[r].is_finite() {
            return None;
        }
    }
    Some(x)
}

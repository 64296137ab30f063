//! Digraphs, Markov-matrix constructions for them, the exact all-sources
//! BFS diameter, the spectral diameter upper bound, and its k-regular
//! specialization.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::markov::{SpectralBounds, StationaryDistribution, TransitionMatrix};

/// Allocation guard for vertex counts coming from untrusted edge lists.
pub const MAX_VERTICES: usize = 100_000;

/// A directed graph over vertices 0..m with adjacency stored as sorted
/// out-neighbor sets. Self-loops are permitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    m: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Digraph {
    pub fn new(m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::input("graph must have at least one vertex"));
        }
        if m > MAX_VERTICES {
            return Err(Error::Input(format!(
                "vertex count {m} exceeds the supported cap of {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![BTreeSet::new(); m];
        for (u, v) in edges {
            if u >= m || v >= m {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) out of range for {m} vertices"
                )));
            }
            adj[u].insert(v);
        }
        Ok(Digraph { m, adj })
    }

    /// Vertex count inferred as the largest endpoint plus one.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self> {
        let m = edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .ok_or_else(|| Error::input("edge list is empty"))?;
        Digraph::new(m, edges.iter().copied())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// All edges, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, outs) in self.adj.iter().enumerate() {
            for &v in outs {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.adj
            .iter()
            .enumerate()
            .all(|(u, outs)| outs.iter().all(|&v| self.adj[v].contains(&u)))
    }

    /// Neighbor count ignoring a self-loop at v.
    fn undirected_degree(&self, v: usize) -> usize {
        self.adj[v].len() - usize::from(self.adj[v].contains(&v))
    }
}

/// The uniform out-degree construction: p_ij = 1/d⁺(v_i) on edges, zero
/// elsewhere. Every vertex needs at least one outgoing edge.
pub fn markov_matrix_uniform(g: &Digraph) -> Result<TransitionMatrix> {
    for v in 0..g.m() {
        if g.out_degree(v) == 0 {
            return Err(Error::Input(format!(
                "vertex {v} has out-degree 0; the uniform construction needs an outgoing edge"
            )));
        }
    }
    let rows = (0..g.m())
        .map(|i| {
            let w = 1.0 / g.out_degree(i) as f64;
            let mut row = vec![0.0; g.m()];
            for j in g.out_neighbors(i) {
                row[j] = w;
            }
            row
        })
        .collect();
    TransitionMatrix::validate(rows)
}

/// The lazy symmetric construction for an undirected graph: every edge gets
/// weight 1/d with d the maximum degree, and each vertex a self-loop of
/// weight 1 − deg(v)/d. Input self-loops are ignored; the construction adds
/// its own. The added self-loops do not change the diameter.
pub fn markov_matrix_lazy_undirected(g: &Digraph) -> Result<TransitionMatrix> {
    if !g.is_symmetric() {
        return Err(Error::input(
            "adjacency must be symmetric for the lazy undirected construction",
        ));
    }
    let degrees: Vec<usize> = (0..g.m()).map(|v| g.undirected_degree(v)).collect();
    let d = degrees.iter().copied().max().unwrap_or(0);
    if d == 0 {
        return Err(Error::input(
            "the lazy undirected construction needs at least one non-loop edge",
        ));
    }
    let rows = (0..g.m())
        .map(|i| {
            let mut row = vec![0.0; g.m()];
            for j in g.out_neighbors(i) {
                if j != i {
                    row[j] = 1.0 / d as f64;
                }
            }
            row[i] = 1.0 - degrees[i] as f64 / d as f64;
            row
        })
        .collect();
    TransitionMatrix::validate(rows)
}

/// A shortest-path distance or diameter value, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn is_finite(&self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(*d),
            Distance::Infinite => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "infinity"),
        }
    }
}

/// Exact diameter by BFS from every vertex: the maximum of d(v_i, v_j) over
/// ordered pairs i ≠ j, infinite as soon as some ordered pair is
/// unreachable. Self-distances are 0 and excluded from the maximum, so a
/// single-vertex graph has diameter 0.
pub fn exact_diameter(g: &Digraph) -> Distance {
    let m = g.m();
    let mut worst = 0u64;
    for src in 0..m {
        let mut dist = vec![u64::MAX; m];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for v in g.out_neighbors(u) {
                if dist[v] == u64::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (v, &d) in dist.iter().enumerate() {
            if v == src {
                continue;
            }
            if d == u64::MAX {
                return Distance::Infinite;
            }
            worst = worst.max(d);
        }
    }
    Distance::Finite(worst)
}

/// The spectral diameter bound for one graph/matrix pair.
#[derive(Debug, Clone, PartialEq)]
pub struct DiameterReport {
    pub exact: Distance,
    /// max over ordered pairs (i, j) of the per-pair ceiling term; absent
    /// when the hypotheses fail.
    pub bound: Option<u64>,
    pub hypothesis_ok: bool,
    pub failure_reason: Option<String>,
    /// Per-target-state partial maxima of the ceiling terms (empty when the
    /// hypotheses fail).
    pub per_j_terms: Vec<f64>,
    pub pi: Option<Vec<f64>>,
    pub rho: Option<f64>,
}

/// Upper bound on the diameter from the convergence constants: walks of
/// length n from i to j are guaranteed once Φ_ij·ρ^n < π_j, so the bound is
/// the max over ordered pairs of ⌈log(Φ_ij/π_j)/log(1/ρ)⌉.
///
/// Φ depends on both endpoints through the n-step probabilities, so the max
/// ranges over both indices. When the log-ratio sits within 1e−12 of an
/// integer the term rounds up to the next integer: the guarantee needs a
/// strictly larger n.
pub fn diameter_bound(g: &Digraph, p: &TransitionMatrix) -> Result<DiameterReport> {
    if p.m() != g.m() {
        return Err(Error::Input(format!(
            "matrix has {} states but the graph has {} vertices",
            p.m(),
            g.m()
        )));
    }
    if p.support_edges() != g.edges() {
        return Err(Error::input(
            "support mismatch: the matrix support must equal the graph adjacency",
        ));
    }
    let exact = exact_diameter(g);
    let analysis = p.stationary().and_then(|pi| Ok((pi, p.bounds()?)));
    let (pi, bounds) = match analysis {
        Ok(found) => found,
        Err(Error::Hypothesis(h)) => {
            return Ok(DiameterReport {
                exact,
                bound: None,
                hypothesis_ok: false,
                failure_reason: Some(h.to_string()),
                per_j_terms: Vec::new(),
                pi: None,
                rho: None,
            });
        }
        Err(other) => return Err(other),
    };
    let (bound, per_j_terms) = bound_terms(&pi, &bounds);
    Ok(DiameterReport {
        exact,
        bound: Some(bound),
        hypothesis_ok: true,
        failure_reason: None,
        per_j_terms,
        pi: Some(pi.into_vec()),
        rho: Some(bounds.rho),
    })
}

fn bound_terms(pi: &StationaryDistribution, b: &SpectralBounds) -> (u64, Vec<f64>) {
    let m = pi.pi().len();
    let mut per_j = vec![i64::MIN; m];
    let mut overall = i64::MIN;
    for i in 0..m {
        for j in 0..m {
            let term = ceiling_term(b.phi[i][j], pi.pi()[j], b.rho);
            per_j[j] = per_j[j].max(term);
            overall = overall.max(term);
        }
    }
    (
        overall.max(0) as u64,
        per_j.iter().map(|&t| t as f64).collect(),
    )
}

fn ceiling_term(phi: f64, pi_j: f64, rho: f64) -> i64 {
    if phi == 0.0 {
        // Only possible for the one-state chain, where p_ii^(n) = π_i
        // exactly and the distance is already 0.
        return 0;
    }
    let l = (phi / pi_j).ln() / (1.0 / rho).ln();
    let r = l.round();
    if (l - r).abs() <= 1e-12 {
        r as i64 + 1
    } else {
        l.ceil() as i64
    }
}

/// Chung's k-regular specialization: D(Γ) ≤ ⌈log(m−1)/log(k/τ)⌉ where τ is
/// the second-largest adjacency eigenvalue in absolute value.
pub fn chung_bound(m: u64, k: u64, tau: f64) -> Result<i64> {
    if m < 2 {
        return Err(Error::input("chung_bound requires at least 2 vertices"));
    }
    if k == 0 {
        return Err(Error::input("chung_bound requires degree k >= 1"));
    }
    if !tau.is_finite() || tau <= 0.0 {
        return Err(Error::Input(format!("tau must be positive, got {tau}")));
    }
    if tau >= k as f64 {
        return Err(Error::Input(format!(
            "tau = {tau} must be strictly below k = {k}; the bound is meaningless otherwise"
        )));
    }
    let value = ((m - 1) as f64).ln() / (k as f64 / tau).ln();
    Ok(value.ceil() as i64)
}

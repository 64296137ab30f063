//! Seeded random instance generators. These produce raw data (value lists,
//! stochastic grids, edge lists); hypothesis-level rejection sampling is
//! done by the callers against the code under test.

use num_complex::Complex64;
use rand::Rng;

use crate::brute;

/// Complex value with modulus uniform in [min_abs, max_abs] and uniform
/// argument.
pub fn complex_in_annulus<R: Rng>(rng: &mut R, min_abs: f64, max_abs: f64) -> Complex64 {
    let r = rng.gen_range(min_abs..=max_abs);
    let theta = rng.gen_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, theta)
}

/// n complex values with pairwise separation at least `min_sep`, moduli in
/// [min_abs, max_abs]. Resamples the whole set until it fits; panics after
/// an absurd number of attempts (callers pick feasible parameters).
pub fn separated_roots<R: Rng>(
    rng: &mut R,
    n: usize,
    min_sep: f64,
    min_abs: f64,
    max_abs: f64,
) -> Vec<Complex64> {
    'outer: for _ in 0..100_000 {
        let candidate: Vec<Complex64> = (0..n)
            .map(|_| complex_in_annulus(rng, min_abs, max_abs))
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                if (candidate[i] - candidate[j]).norm() < min_sep {
                    continue 'outer;
                }
            }
        }
        return candidate;
    }
    panic!("separated_roots: could not place {n} roots with separation {min_sep}");
}

/// Dense row-stochastic matrix with strictly positive entries.
pub fn random_stochastic_dense<R: Rng>(rng: &mut R, m: usize) -> Vec<Vec<f64>> {
    (0..m)
        .map(|_| {
            let mut row: Vec<f64> = (0..m).map(|_| rng.gen_range(0.05..1.0)).collect();
            let sum: f64 = row.iter().sum();
            for v in &mut row {
                *v /= sum;
            }
            row
        })
        .collect()
}

/// Sparse row-stochastic matrix: each entry is kept with probability
/// `keep`, at least one entry per row survives, surviving entries are
/// normalized. Structure (irreducibility, aperiodicity) is NOT guaranteed.
pub fn random_stochastic_sparse<R: Rng>(rng: &mut R, m: usize, keep: f64) -> Vec<Vec<f64>> {
    (0..m)
        .map(|_| {
            let mut row = vec![0.0f64; m];
            for v in row.iter_mut() {
                if rng.gen_bool(keep) {
                    *v = rng.gen_range(0.05..1.0);
                }
            }
            if row.iter().all(|&v| v == 0.0) {
                row[rng.gen_range(0..m)] = 1.0;
            }
            let sum: f64 = row.iter().sum();
            for v in &mut row {
                *v /= sum;
            }
            row
        })
        .collect()
}

/// Erdős–Rényi digraph with edge probability `p_edge`, forced to contain at
/// least one self-loop (for aperiodicity) and no sink vertices, rejection
/// sampled until strongly connected (by the brute-force boolean-power
/// check, independent of the library's structure analysis).
pub fn random_strongly_connected_digraph<R: Rng>(
    rng: &mut R,
    m: usize,
    p_edge: f64,
) -> Vec<(usize, usize)> {
    for _ in 0..100_000 {
        let mut edges = Vec::new();
        for u in 0..m {
            for v in 0..m {
                if rng.gen_bool(p_edge) {
                    edges.push((u, v));
                }
            }
        }
        // Every vertex needs an outgoing edge for Markov constructions.
        for u in 0..m {
            if !edges.iter().any(|&(a, _)| a == u) {
                edges.push((u, rng.gen_range(0..m)));
            }
        }
        if !edges.iter().any(|&(a, b)| a == b) {
            let v = rng.gen_range(0..m);
            edges.push((v, v));
        }
        edges.sort_unstable();
        edges.dedup();
        let adj = brute::adjacency_from_edges(m, &edges);
        if brute::strongly_connected_bruteforce(&adj) {
            return edges;
        }
    }
    panic!("random_strongly_connected_digraph: rejection sampling exhausted");
}

/// Plain random digraph (possibly disconnected); used for exhaustive-style
/// structure sweeps.
pub fn random_digraph<R: Rng>(rng: &mut R, m: usize, p_edge: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..m {
        for v in 0..m {
            if rng.gen_bool(p_edge) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Simple k-regular undirected graph by the pairing model; returns the
/// symmetric directed edge list (both orientations), or None when the
/// attempt produced a self-loop or multi-edge. m·k must be even.
pub fn random_regular_edges<R: Rng>(
    rng: &mut R,
    m: usize,
    k: usize,
) -> Option<Vec<(usize, usize)>> {
    assert!((m * k).is_multiple_of(2), "m*k must be even");
    let mut stubs: Vec<usize> = (0..m).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    // Fisher-Yates shuffle.
    for i in (1..stubs.len()).rev() {
        let j = rng.gen_range(0..=i);
        stubs.swap(i, j);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::with_capacity(m * k);
    for pair in stubs.chunks(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v || seen.contains(&(u.min(v), u.max(v))) {
            return None;
        }
        seen.insert((u.min(v), u.max(v)));
        edges.push((u, v));
        edges.push((v, u));
    }
    edges.sort_unstable();
    Some(edges)
}

/// Random real matrix with entries uniform in [-scale, scale].
pub fn random_real_matrix<R: Rng>(rng: &mut R, m: usize, scale: f64) -> Vec<Vec<f64>> {
    (0..m)
        .map(|_| (0..m).map(|_| rng.gen_range(-scale..scale)).collect())
        .collect()
}

/// Random complex matrix with re/im uniform in [-scale, scale].
pub fn random_complex_matrix<R: Rng>(rng: &mut R, m: usize, scale: f64) -> Vec<Vec<Complex64>> {
    (0..m)
        .map(|_| {
            (0..m)
                .map(|_| Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)))
                .collect()
        })
        .collect()
}

/// Random symmetric real matrix.
pub fn random_symmetric_matrix<R: Rng>(rng: &mut R, m: usize, scale: f64) -> Vec<Vec<f64>> {
    let mut a = vec![vec![0.0; m]; m];
    for i in 0..m {
        for j in i..m {
            let v = rng.gen_range(-scale..scale);
            a[i][j] = v;
            a[j][i] = v;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    #[test]
    fn separated_roots_respects_constraints() {
        let mut r = rng(7);
        let roots = separated_roots(&mut r, 6, 0.2, 0.3, 3.0);
        assert_eq!(roots.len(), 6);
        for i in 0..6 {
            assert!(roots[i].norm() >= 0.3 - 1e-12 && roots[i].norm() <= 3.0 + 1e-12);
            for j in i + 1..6 {
                assert!((roots[i] - roots[j]).norm() >= 0.2);
            }
        }
    }

    #[test]
    fn stochastic_rows_sum_to_one() {
        let mut r = rng(11);
        for rows in [
            random_stochastic_dense(&mut r, 5),
            random_stochastic_sparse(&mut r, 5, 0.4),
        ] {
            for row in rows {
                let sum: f64 = row.iter().sum();
                assert!((sum - 1.0).abs() < 1e-12);
                assert!(row.iter().all(|&v| v >= 0.0));
            }
        }
    }

    #[test]
    fn strongly_connected_generator_is_strongly_connected() {
        let mut r = rng(13);
        for _ in 0..10 {
            let edges = random_strongly_connected_digraph(&mut r, 5, 0.3);
            let adj = brute::adjacency_from_edges(5, &edges);
            assert!(brute::strongly_connected_bruteforce(&adj));
            assert!(edges.iter().any(|&(a, b)| a == b));
        }
    }

    #[test]
    fn regular_generator_degrees() {
        let mut r = rng(17);
        let mut found = 0;
        for _ in 0..200 {
            if let Some(edges) = random_regular_edges(&mut r, 8, 3) {
                let mut deg = [0usize; 8];
                for &(u, _) in &edges {
                    deg[u] += 1;
                }
                assert!(deg.iter().all(|&d| d == 3));
                found += 1;
            }
        }
        assert!(found > 0, "pairing model never produced a simple graph");
    }
}

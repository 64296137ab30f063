//! Brute-force combinatorial oracles: subset enumeration for elementary
//! symmetric polynomials, and boolean matrix powers for reachability,
//! strong connectivity and period checks.

use num_complex::Complex64;

/// e_j by direct enumeration of all j-element subsets. Exponential; callers
/// keep n small (n <= 12 or so).
pub fn elementary_symmetric_subsets(values: &[Complex64], j: usize) -> Complex64 {
    fn rec(values: &[Complex64], j: usize, start: usize, acc: Complex64) -> Complex64 {
        if j == 0 {
            return acc;
        }
        let mut total = Complex64::new(0.0, 0.0);
        for k in start..=values.len() - j {
            total += rec(values, j - 1, k + 1, acc * values[k]);
        }
        total
    }
    assert!(j <= values.len(), "j out of range");
    rec(values, j, 0, Complex64::new(1.0, 0.0))
}

/// Dense boolean adjacency from an edge list.
pub fn adjacency_from_edges(m: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; m]; m];
    for &(u, v) in edges {
        adj[u][v] = true;
    }
    adj
}

/// Boolean matrix product: walks of combined length.
pub fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let m = a.len();
    let mut out = vec![vec![false; m]; m];
    for i in 0..m {
        for k in 0..m {
            if a[i][k] {
                for j in 0..m {
                    if b[k][j] {
                        out[i][j] = true;
                    }
                }
            }
        }
    }
    out
}

/// Powers A^1..A^upto of a boolean adjacency matrix; entry (i, j) of the
/// n-th power says whether a walk of length exactly n exists.
pub fn bool_powers(adj: &[Vec<bool>], upto: usize) -> Vec<Vec<Vec<bool>>> {
    let mut out: Vec<Vec<Vec<bool>>> = Vec::with_capacity(upto);
    for k in 0..upto {
        let next = if k == 0 {
            adj.to_vec()
        } else {
            bool_mul(&out[k - 1], adj)
        };
        out.push(next);
    }
    out
}

/// Strong connectivity by accumulating walk existence over lengths 1..m:
/// every ordered pair must be connected by some positive-length walk of
/// length at most m.
pub fn strongly_connected_bruteforce(adj: &[Vec<bool>]) -> bool {
    let m = adj.len();
    let powers = bool_powers(adj, m);
    for i in 0..m {
        for j in 0..m {
            if !powers.iter().any(|p| p[i][j]) {
                return false;
            }
        }
    }
    true
}

/// Period of `state` as the gcd of all closed-walk lengths up to `max_len`.
/// For a strongly connected graph on m vertices, max_len around 16·m is far
/// more than enough for the gcd to stabilize. Returns 0 when the state lies
/// on no cycle at all.
pub fn period_bruteforce(adj: &[Vec<bool>], state: usize, max_len: usize) -> u64 {
    let powers = bool_powers(adj, max_len);
    let mut g: u64 = 0;
    for (n, p) in powers.iter().enumerate() {
        if p[state][state] {
            g = gcd(g, (n + 1) as u64);
        }
    }
    g
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

//! Cyclic Jacobi eigenvalue iteration for real symmetric matrices. Serves
//! as the independent oracle for the characteristic-polynomial eigenvalue
//! path on symmetric inputs.

/// Eigenvalues of a real symmetric matrix, sorted descending. Panics on a
/// non-square input; symmetry is assumed, not checked.
pub fn symmetric_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let m = a.len();
    let mut w: Vec<Vec<f64>> = a.to_vec();
    for row in &w {
        assert_eq!(row.len(), m, "matrix must be square");
    }
    let scale: f64 = w
        .iter()
        .flat_map(|r| r.iter().map(|v| v * v))
        .sum::<f64>()
        .sqrt()
        .max(1.0);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..m {
            for q in p + 1..m {
                off += w[p][q] * w[p][q];
            }
        }
        if off.sqrt() < 1e-13 * scale {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                let apq = w[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = w[p][p];
                let aqq = w[q][q];
                // Symmetric Schur rotation annihilating (p, q).
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..m {
                    if k != p && k != q {
                        let akp = w[k][p];
                        let akq = w[k][q];
                        w[k][p] = c * akp - s * akq;
                        w[p][k] = w[k][p];
                        w[k][q] = s * akp + c * akq;
                        w[q][k] = w[k][q];
                    }
                }
                w[p][p] = app - t * apq;
                w[q][q] = aqq + t * apq;
                w[p][q] = 0.0;
                w[q][p] = 0.0;
            }
        }
    }
    let mut eigs: Vec<f64> = (0..m).map(|i| w[i][i]).collect();
    eigs.sort_by(|a, b| b.total_cmp(a));
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_two_by_two() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1.
        let eigs = symmetric_eigenvalues(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!((eigs[0] - 3.0).abs() < 1e-12);
        assert!((eigs[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_passthrough() {
        let eigs = symmetric_eigenvalues(&[vec![5.0, 0.0], vec![0.0, -2.0]]);
        assert_eq!(eigs, vec![5.0, -2.0]);
    }

    #[test]
    fn trace_preserved() {
        let a = vec![
            vec![1.0, 0.4, -0.2],
            vec![0.4, -0.7, 0.9],
            vec![-0.2, 0.9, 0.3],
        ];
        let eigs = symmetric_eigenvalues(&a);
        let trace: f64 = (0..3).map(|i| a[i][i]).sum();
        assert!((eigs.iter().sum::<f64>() - trace).abs() < 1e-10);
    }
}

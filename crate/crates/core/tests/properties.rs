//! Module invariants checked against independent oracles: brute-force
//! subset enumeration, Gaussian elimination, Jacobi rotations, companion
//! powers, boolean walk matrices and power iteration.

#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;

use rhomix::graphs::{self, Digraph};
use rhomix::markov::{mixing_time_from, MixingMode, TransitionMatrix};
use rhomix::numkernel::{elementary_symmetric, find_roots, poly_from_roots, RootSet};
use rhomix::recurrence::Recurrence;
use rhomix::spectral::{
    self, apply_polynomial, char_poly, eigenvalues, power_entry_closed_form, SquareMatrix,
};
use rhomix::vandermonde::{vandermonde_det, vandermonde_inverse, VandermondeMatrix};

use rhomix_testkit::{brute, elim, gen, jacobi, powers, rng};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

// ---------------------------------------------------------------------------
// numkernel

fn complex_strategy() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn elementary_symmetric_matches_subset_enumeration(
        values in proptest::collection::vec(complex_strategy(), 0..12),
        j_seed in 0usize..12,
    ) {
        let j = if values.is_empty() { 0 } else { j_seed % (values.len() + 1) };
        let fast = elementary_symmetric(&values, j).unwrap();
        let slow = brute::elementary_symmetric_subsets(&values, j);
        // Conditioning-aware scale: the sum of absolute products bounds the
        // roundoff either route can accumulate.
        let moduli: Vec<Complex64> = values.iter().map(|z| c(z.norm(), 0.0)).collect();
        let scale = brute::elementary_symmetric_subsets(&moduli, j).re;
        prop_assert!(
            (fast - slow).norm() <= 1e-10 * (1.0 + slow.norm() + scale),
            "e_{j} mismatch: {fast} vs {slow}"
        );
    }

    #[test]
    fn symmetric_sum_equals_product_of_one_plus_moduli(
        values in proptest::collection::vec(complex_strategy(), 0..10),
    ) {
        // Evaluating prod (x + |λ_k|) at x = 1 collapses the e_j sum.
        let moduli: Vec<Complex64> = values.iter().map(|z| c(z.norm(), 0.0)).collect();
        let sum: Complex64 = (0..=moduli.len())
            .map(|j| elementary_symmetric(&moduli, j).unwrap())
            .sum();
        let product: f64 = values.iter().map(|z| 1.0 + z.norm()).product();
        prop_assert!((sum.re - product).abs() <= 1e-12 * (1.0 + product));
        prop_assert!(sum.im.abs() <= 1e-12 * (1.0 + product));
    }
}

#[test]
fn roots_round_trip_through_polynomial() {
    let mut r = rng(0xA1);
    for _ in 0..60 {
        let degree = r.gen_range(1..=10);
        let original = gen::separated_roots(&mut r, degree, 0.1, 0.05, 2.0);
        let poly = poly_from_roots(&original);
        let recovered = find_roots(&poly, 1e-10).unwrap();
        let mut used = vec![false; degree];
        for &root in recovered.roots() {
            let (best, dist) = original
                .iter()
                .enumerate()
                .filter(|&(k, _)| !used[k])
                .map(|(k, &orig)| (k, (orig - root).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            assert!(
                dist < 1e-8,
                "recovered root {root} is {dist:e} from nearest original"
            );
            used[best] = true;
        }
    }
}

// ---------------------------------------------------------------------------
// vandermonde

#[test]
fn inverse_is_two_sided_and_det_consistent() {
    let mut r = rng(0xA2);
    for _ in 0..50 {
        let n = r.gen_range(1..=10);
        let nodes = gen::separated_roots(&mut r, n, 0.25, 0.3, 2.5);
        let node_set = RootSet::new(nodes.clone()).unwrap();
        let w = vandermonde_inverse(&node_set).unwrap();
        let v = VandermondeMatrix::new(&nodes);
        assert!(v.inverse_residual(&w) < 1e-9, "W·V residual too large");
        // V·W = I as well.
        let mut vw_residual = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut acc = c(0.0, 0.0);
                for t in 0..n {
                    acc += v.rows()[i][t] * w[t][j];
                }
                let expect = if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) };
                vw_residual = vw_residual.max((acc - expect).norm());
            }
        }
        assert!(vw_residual < 1e-9, "V·W residual {vw_residual:e}");
        // det(V) · det(W) = 1 with det(W) from the elimination oracle.
        let product = vandermonde_det(&node_set) * elim::det(&w);
        assert!(
            (product - c(1.0, 0.0)).norm() < 1e-8,
            "det(V)·det(W) = {product}"
        );
    }
}

// ---------------------------------------------------------------------------
// recurrence

fn random_recurrence<R: Rng>(r: &mut R, max_order: usize) -> Recurrence {
    let m = r.gen_range(1..=max_order);
    let roots = gen::separated_roots(r, m, 0.2, 0.35, 1.4);
    let poly = poly_from_roots(&roots);
    let coeffs: Vec<Complex64> = poly.coeffs()[..m].iter().map(|&q| -q).collect();
    let initial: Vec<Complex64> = (0..m)
        .map(|_| c(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)))
        .collect();
    Recurrence::new(coeffs, initial).unwrap()
}

#[test]
fn solved_coefficients_match_direct_linear_solve() {
    let mut r = rng(0xA3);
    for _ in 0..40 {
        let rec = random_recurrence(&mut r, 8);
        let m = rec.order();
        let cf = rec.solve_closed_form(1e-8).unwrap();
        // Independent route: solve V c = [x_1..x_m] by elimination.
        let v = VandermondeMatrix::new(cf.roots().roots());
        let terms = rec.iterate(m);
        let oracle = elim::solve(v.rows(), &terms[1..]).expect("oracle solve");
        for (got, want) in cf.coefficients().iter().zip(oracle.iter()) {
            assert!(
                (got - want).norm() <= 1e-8 * (1.0 + want.norm()),
                "coefficient mismatch: {got} vs {want}"
            );
        }
    }
}

#[test]
fn iteration_matches_companion_power_oracle() {
    let mut r = rng(0xA4);
    for _ in 0..40 {
        let rec = random_recurrence(&mut r, 6);
        let direct = rec.iterate(20);
        for n in [0usize, 1, 7, 20] {
            let oracle = powers::companion_power_term(rec.coeffs(), rec.initial(), n as u64);
            assert!(
                (direct[n] - oracle).norm() <= 1e-9 * (1.0 + oracle.norm()),
                "x_{n} mismatch against companion powers"
            );
        }
    }
}

#[test]
fn characteristic_polynomial_annihilates_companion_matrix() {
    let mut r = rng(0xA5);
    for _ in 0..30 {
        let rec = random_recurrence(&mut r, 8);
        let companion = rec.companion_matrix();
        let residual = apply_polynomial(&rec.characteristic_polynomial(), &companion).max_norm();
        assert!(residual < 1e-9, "Cayley-Hamilton residual {residual:e}");
    }
}

// ---------------------------------------------------------------------------
// spectral

#[test]
fn char_poly_matches_elimination_det_at_sample_points() {
    let mut r = rng(0xA6);
    for _ in 0..25 {
        let m = 5;
        let rows = gen::random_complex_matrix(&mut r, m, 1.0);
        let a = SquareMatrix::from_rows(&rows).unwrap();
        let p = char_poly(&a).unwrap();
        for k in 0..6 {
            // Sample points on a circle comfortably inside no eigenvalue.
            let z = Complex64::from_polar(2.5, 0.7 + k as f64);
            let mut shifted = rows.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = if i == j { z - *cell } else { -*cell };
                }
            }
            let oracle = elim::det(&shifted);
            let value = p.eval(z);
            assert!(
                (value - oracle).norm() <= 1e-8 * (1.0 + oracle.norm()),
                "char poly disagrees with det(zI - A) at {z}"
            );
        }
    }
}

#[test]
fn symmetric_eigenvalues_match_jacobi_oracle() {
    let mut r = rng(0xA7);
    for _ in 0..20 {
        let a_rows = gen::random_symmetric_matrix(&mut r, 6, 1.0);
        let a = SquareMatrix::from_real_rows(&a_rows).unwrap();
        let spectrum = eigenvalues(&a).unwrap();
        for z in spectrum.eigenvalues().roots() {
            assert!(
                z.im.abs() < 1e-7,
                "symmetric matrix produced eigenvalue {z}"
            );
        }
        let mut got: Vec<f64> = spectrum
            .eigenvalues()
            .roots()
            .iter()
            .map(|z| z.re)
            .collect();
        got.sort_by(|x, y| y.total_cmp(x));
        let oracle = jacobi::symmetric_eigenvalues(&a_rows);
        for (g, o) in got.iter().zip(oracle.iter()) {
            assert!((g - o).abs() < 1e-7, "eigenvalue {g} vs Jacobi {o}");
        }
    }
}

#[test]
fn power_entry_closed_forms_match_repeated_squaring() {
    let mut r = rng(0xA8);
    let mut done = 0;
    while done < 15 {
        let rows = gen::random_complex_matrix(&mut r, 4, 0.8);
        let a = SquareMatrix::from_rows(&rows).unwrap();
        let Ok(spectrum) = eigenvalues(&a) else {
            continue;
        };
        if !spectrum.all_simple() || !spectrum.all_nonzero() {
            continue;
        }
        done += 1;
        for i in 0..4 {
            for j in 0..4 {
                let cf = power_entry_closed_form(&a, i, j).unwrap();
                // n = 1 consistency.
                let linear: Complex64 = cf
                    .roots()
                    .roots()
                    .iter()
                    .zip(cf.coefficients())
                    .map(|(&l, &cc)| cc * l)
                    .sum();
                assert!((linear - rows[i][j]).norm() <= 1e-8 * (1.0 + rows[i][j].norm()));
                for n in 1..=20u64 {
                    let pn = powers::complex_power_squaring(&rows, n);
                    let scale = pn
                        .iter()
                        .flat_map(|row| row.iter().map(|z| z.norm()))
                        .fold(0.0, f64::max);
                    let diff = (cf.evaluate(n as usize) - pn[i][j]).norm();
                    assert!(
                        diff <= 1e-7 * (1.0 + scale),
                        "entry ({i}, {j}) at n = {n}: diff {diff:e}"
                    );
                }
            }
        }
    }
}

#[test]
fn trace_equals_eigenvalue_sum() {
    let mut r = rng(0xA9);
    for _ in 0..25 {
        let m = r.gen_range(2..=6);
        let rows = gen::random_complex_matrix(&mut r, m, 1.0);
        let a = SquareMatrix::from_rows(&rows).unwrap();
        let spectrum = eigenvalues(&a).unwrap();
        let sum: Complex64 = spectrum.eigenvalues().roots().iter().sum();
        assert!((sum - a.trace()).norm() <= 1e-8 * (1.0 + a.trace().norm()));
    }
}

// ---------------------------------------------------------------------------
// markov

fn accepted_chain<R: Rng>(r: &mut R, max_m: usize) -> TransitionMatrix {
    loop {
        let m = r.gen_range(2..=max_m);
        let rows = if r.gen_bool(0.5) {
            gen::random_stochastic_dense(r, m)
        } else {
            gen::random_stochastic_sparse(r, m, 0.6)
        };
        let Ok(p) = TransitionMatrix::validate(rows) else {
            continue;
        };
        if p.bounds().is_ok() {
            return p;
        }
    }
}

#[test]
fn chain_converges_below_epsilon_at_mixing_time() {
    let mut r = rng(0xB1);
    for _ in 0..30 {
        let p = accepted_chain(&mut r, 6);
        let pi = p.stationary().unwrap().into_vec();
        let b = p.bounds().unwrap();
        for (mode, offset_ok) in [(MixingMode::PhiMax, true), (MixingMode::Psi, true)] {
            let n = mixing_time_from(&b, 1e-6, mode);
            assert!(offset_ok);
            // Fundamental-theorem limit, operationally.
            let steps = powers::real_powers(p.rows(), (n as usize).max(1));
            let last = &steps[steps.len() - 1];
            let worst = last
                .iter()
                .flat_map(|row| row.iter().zip(pi.iter()).map(|(&v, &pj)| (v - pj).abs()))
                .fold(0.0, f64::max);
            if n > 0 {
                assert!(
                    worst < 1e-6,
                    "distance {worst:e} at the mixing-time estimate {n}"
                );
            }
        }
    }
}

#[test]
fn empirical_mixing_never_exceeds_estimate() {
    let mut r = rng(0xB2);
    for _ in 0..20 {
        let p = accepted_chain(&mut r, 5);
        let pi = p.stationary().unwrap().into_vec();
        let b = p.bounds().unwrap();
        let epsilon = 1e-3;
        let estimate = mixing_time_from(&b, epsilon, MixingMode::PhiMax) as usize;
        let steps = powers::real_powers(p.rows(), estimate.max(1) + 5);
        let empirical = (1..=steps.len())
            .find(|&n| {
                steps[n - 1]
                    .iter()
                    .flat_map(|row| row.iter().zip(pi.iter()).map(|(&v, &pj)| (v - pj).abs()))
                    .fold(0.0, f64::max)
                    < epsilon
            })
            .unwrap_or(usize::MAX);
        assert!(
            empirical <= estimate.max(1),
            "empirical mixing {empirical} exceeds the estimate {estimate}"
        );
    }
}

#[test]
fn stationary_entries_are_the_dominant_closed_form_coefficients() {
    let mut r = rng(0xB3);
    for _ in 0..15 {
        let p = accepted_chain(&mut r, 5);
        let pi = p.stationary().unwrap().into_vec();
        let a = p.to_square();
        let m = p.m();
        for i in 0..m {
            for j in 0..m {
                let cf = power_entry_closed_form(&a, i, j).unwrap();
                // The eigenvalue-1 coefficient of the (i, j) power sequence
                // is the limit pi_j, for every source state i.
                let dominant_index = cf
                    .roots()
                    .roots()
                    .iter()
                    .enumerate()
                    .min_by(|(_, x), (_, y)| {
                        (*x - c(1.0, 0.0))
                            .norm()
                            .total_cmp(&(*y - c(1.0, 0.0)).norm())
                    })
                    .map(|(k, _)| k)
                    .unwrap();
                let coefficient = cf.coefficients()[dominant_index];
                assert!(
                    (coefficient - c(pi[j], 0.0)).norm() < 1e-8,
                    "pi_{j} = {} but c^(1) = {coefficient}",
                    pi[j]
                );
            }
        }
    }
}

#[test]
fn dominant_eigenvalue_is_one_and_simple_on_accepted_chains() {
    let mut r = rng(0xB4);
    for _ in 0..25 {
        let p = accepted_chain(&mut r, 6);
        let (spectrum, snap) = p.snapped_spectrum().unwrap();
        assert!(snap < 1e-8, "dominant eigenvalue {snap:e} away from 1");
        assert!(spectrum.all_simple());
        assert_eq!(spectrum.dominant(), c(1.0, 0.0));
    }
}

#[test]
fn stationary_matches_power_iteration_oracle() {
    let mut r = rng(0xB5);
    for _ in 0..20 {
        let rows = gen::random_stochastic_dense(&mut r, 6);
        let p = TransitionMatrix::validate(rows.clone()).unwrap();
        let pi = p.stationary().unwrap().into_vec();
        assert!(p.stationary_residual(&pi) < 1e-9);
        let oracle = powers::power_iteration_stationary(&rows, 500);
        for (a, b) in pi.iter().zip(oracle.iter()) {
            assert!((a - b).abs() < 1e-8, "pi {a} vs power iteration {b}");
        }
    }
}

// ---------------------------------------------------------------------------
// graphs

#[test]
fn walk_existence_matches_positive_step_probability() {
    let mut r = rng(0xB6);
    for _ in 0..40 {
        let m = r.gen_range(2..=6);
        let edges = gen::random_strongly_connected_digraph(&mut r, m, 0.3);
        let g = Digraph::new(m, edges.iter().copied()).unwrap();
        let p = graphs::markov_matrix_uniform(&g).unwrap();
        let steps = p.step_probabilities(6);
        let walks = brute::bool_powers(&brute::adjacency_from_edges(m, &edges), 6);
        for n in 0..6 {
            for i in 0..m {
                for j in 0..m {
                    assert_eq!(
                        steps[n][i][j] > 0.0,
                        walks[n][i][j],
                        "walk/probability mismatch at n = {}, pair ({i}, {j})",
                        n + 1
                    );
                }
            }
        }
    }
}

#[test]
fn lazy_construction_is_symmetric_stochastic_and_diameter_preserving() {
    let mut r = rng(0xB7);
    let mut done = 0;
    while done < 25 {
        let m = r.gen_range(2..=7);
        // Random symmetric graph, conditioned on connectivity.
        let mut edges = Vec::new();
        for u in 0..m {
            for v in u + 1..m {
                if r.gen_bool(0.5) {
                    edges.push((u, v));
                    edges.push((v, u));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let Ok(g) = Digraph::new(m, edges.iter().copied()) else {
            continue;
        };
        if graphs::exact_diameter(&g) == graphs::Distance::Infinite {
            continue;
        }
        done += 1;
        let p = graphs::markov_matrix_lazy_undirected(&g).unwrap();
        for (i, row) in p.rows().iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert!((v - p.rows()[j][i]).abs() < 1e-15, "asymmetric output");
            }
            let sum: f64 = row.iter().sum();
            assert!((sum - 1.0).abs() < 1e-12, "row {i} sums to {sum}");
        }
        // Self-loops added by the construction leave the diameter alone.
        let augmented = Digraph::new(m, p.support_edges()).unwrap();
        assert_eq!(
            graphs::exact_diameter(&augmented),
            graphs::exact_diameter(&g)
        );
    }
}

#[test]
fn spectral_module_rejects_oversized_matrices_cleanly() {
    let a = SquareMatrix::identity(61);
    assert!(spectral::char_poly(&a).is_err());
    assert!(spectral::eigenvalues(&a).is_err());
}

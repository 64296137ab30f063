//! Command-line entry point. Every subcommand parses its inputs, runs the
//! corresponding analysis, and emits one JSON report on stdout.
//!
//! Exit codes: 0 success, 2 input/validation error, 3 hypothesis failure
//! (the report is still emitted, with `hypothesis_ok = false` and no
//! numeric bounds), 4 numerical failure, 64 unknown subcommand.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, NumericalError, Result};
use crate::graphs::{self, Digraph, Distance};
use crate::io as input;
use crate::markov::{mixing_time_from, MixingMode, TransitionMatrix};
use crate::numkernel::{RootSet, Tolerances};
use crate::recurrence::{reproduction_residual, Recurrence};
use crate::report::{complex_grid, complex_pair, complex_vec, to_json_string, Diagnostic, Report};
use crate::spectral::{self, SquareMatrix, MAX_EIGEN_DIM, RECOMMENDED_EIGEN_DIM};
use crate::vandermonde::{
    vandermonde_det, vandermonde_inverse_with, VandermondeMatrix, SOFT_NODE_CAP,
};

#[derive(Parser)]
#[command(
    name = "rhomix",
    version,
    about = "Spectral analysis of linear recurrences, Markov chains and digraph diameters"
)]
struct Cli {
    /// Render an indented human-readable view instead of compact JSON.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Linear recurrent sequences.
    Recurrence {
        #[command(subcommand)]
        cmd: RecurrenceCmd,
    },
    /// Vandermonde matrices in the power-1..n convention.
    Vandermonde {
        #[command(subcommand)]
        cmd: VandermondeCmd,
    },
    /// Markov chain structure and convergence bounds.
    Markov {
        #[command(subcommand)]
        cmd: MarkovCmd,
    },
    /// Directed graphs and diameter bounds.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Spectra of general square matrices.
    Spectral {
        #[command(subcommand)]
        cmd: SpectralCmd,
    },
}

#[derive(Subcommand)]
enum RecurrenceCmd {
    /// Solve x_n = a_(m-1)x_(n-1) + ... + a_0 x_(n-m) in closed form.
    Solve(RecurrenceSolveArgs),
}

#[derive(Args)]
struct RecurrenceSolveArgs {
    /// Comma-separated a_0,...,a_(m-1); entries may be complex like `1-2i`.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Comma-separated initial terms x_0,...,x_(m-1).
    #[arg(long, allow_hyphen_values = true)]
    initial: String,
    /// Also evaluate the closed form at n = 0..=N.
    #[arg(long, value_name = "N")]
    eval: Option<usize>,
    /// Relative tolerance for the closed-form self-check.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Subcommand)]
enum VandermondeCmd {
    /// Closed-form inverse of the Vandermonde matrix of the given nodes.
    Invert(VandermondeArgs),
    /// Closed-form determinant.
    Det(VandermondeArgs),
}

#[derive(Args)]
struct VandermondeArgs {
    /// JSON file: array of numbers or [re, im] pairs.
    #[arg(long)]
    nodes: String,
    /// Relative pairwise-distinctness threshold.
    #[arg(long, default_value_t = 1e-8)]
    distinctness: f64,
    /// Relative zero-modulus threshold.
    #[arg(long, default_value_t = 1e-8)]
    zero: f64,
}

#[derive(Subcommand)]
enum MarkovCmd {
    /// Structure, stationary distribution, spectrum and convergence bounds.
    Analyze(MarkovAnalyzeArgs),
}

#[derive(Args)]
struct MarkovAnalyzeArgs {
    /// Matrix file: JSON 2-D array or CSV of reals.
    #[arg(long)]
    matrix: String,
    /// Target accuracy for the mixing-time estimates.
    #[arg(long, default_value_t = 1e-6)]
    epsilon: f64,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Spectral upper bound on the diameter, with the exact BFS diameter.
    DiameterBound(DiameterBoundArgs),
    /// Chung's k-regular bound ceil(log(m-1) / log(k/tau)).
    Chung(ChungArgs),
}

#[derive(Args)]
struct DiameterBoundArgs {
    /// Edge file: `i j` lines or a JSON array of pairs.
    #[arg(long)]
    edges: String,
    /// Markov matrix construction for the graph.
    #[arg(long, value_enum, default_value_t = Construction::Uniform)]
    construction: Construction,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Construction {
    /// p_ij = 1/outdegree(i) on edges.
    Uniform,
    /// Symmetric lazy walk with self-loops, for undirected graphs.
    Lazy,
}

#[derive(Args)]
struct ChungArgs {
    /// Vertex count.
    #[arg(long)]
    m: u64,
    /// Regular degree.
    #[arg(long)]
    k: u64,
    /// Second-largest adjacency eigenvalue in absolute value.
    #[arg(long)]
    tau: f64,
}

#[derive(Subcommand)]
enum SpectralCmd {
    /// Eigenvalues via the characteristic polynomial.
    Eigs(SpectralEigsArgs),
}

#[derive(Args)]
struct SpectralEigsArgs {
    /// Matrix file: JSON 2-D array (entries may be [re, im] pairs) or CSV.
    #[arg(long)]
    matrix: String,
}

/// Cap on `--eval` so closed-form evaluation stays bounded.
const MAX_EVAL_TERMS: usize = 100_000;

struct CommandOutput {
    report_json: String,
    exit: i32,
}

/// Run the CLI against `args` (including the program name). Writes the
/// report to `stdout` and error messages to `stderr`; returns the exit code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                ErrorKind::InvalidSubcommand => {
                    let _ = write!(stderr, "{e}");
                    64
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    let outcome = match &cli.command {
        Cmd::Recurrence {
            cmd: RecurrenceCmd::Solve(a),
        } => recurrence_solve(a),
        Cmd::Vandermonde {
            cmd: VandermondeCmd::Invert(a),
        } => vandermonde_invert(a),
        Cmd::Vandermonde {
            cmd: VandermondeCmd::Det(a),
        } => vandermonde_det_cmd(a),
        Cmd::Markov {
            cmd: MarkovCmd::Analyze(a),
        } => markov_analyze(a),
        Cmd::Graph {
            cmd: GraphCmd::DiameterBound(a),
        } => graph_diameter_bound(a),
        Cmd::Graph {
            cmd: GraphCmd::Chung(a),
        } => graph_chung(a),
        Cmd::Spectral {
            cmd: SpectralCmd::Eigs(a),
        } => spectral_eigs(a),
    };
    match outcome {
        Ok(output) => {
            if cli.human {
                let value: serde_json::Value =
                    serde_json::from_str(&output.report_json).expect("report is valid JSON");
                let _ = writeln!(stdout, "{}", render_human(&value));
            } else {
                let _ = writeln!(stdout, "{}", output.report_json);
            }
            output.exit
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Input(_) => 2,
                Error::Hypothesis(_) => 3,
                Error::Numerical(_) => 4,
            }
        }
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read '{path}': {e}")))
}

fn emit<T: Serialize>(report: &Report<T>, exit: i32) -> CommandOutput {
    CommandOutput {
        report_json: to_json_string(report),
        exit,
    }
}

// ---------------------------------------------------------------------------
// recurrence solve

#[derive(Serialize)]
struct RecurrenceSolveResults {
    hypothesis_ok: bool,
    failure_reason: Option<String>,
    order: usize,
    roots: Option<Vec<[f64; 2]>>,
    coefficients: Option<Vec<[f64; 2]>>,
    terms: Option<Vec<[f64; 2]>>,
}

fn recurrence_solve(args: &RecurrenceSolveArgs) -> Result<CommandOutput> {
    let coeffs = input::parse_complex_csv(&args.coeffs)?;
    let initial = input::parse_complex_csv(&args.initial)?;
    if args.tol <= 0.0 || !args.tol.is_finite() {
        return Err(Error::input("tol must be positive"));
    }
    if let Some(n) = args.eval {
        if n > MAX_EVAL_TERMS {
            return Err(Error::Input(format!(
                "--eval {n} exceeds the supported cap of {MAX_EVAL_TERMS}"
            )));
        }
    }
    let rec = Recurrence::new(coeffs.clone(), initial.clone())?;
    let inputs_echo = json!({
        "coeffs": complex_vec(&coeffs),
        "initial": complex_vec(&initial),
        "eval": args.eval,
        "tol": args.tol,
    });
    let mut residuals = BTreeMap::new();
    match rec.solve_closed_form(args.tol) {
        Ok(cf) => {
            let evaluated = match args.eval {
                Some(n) => {
                    let values: Vec<_> = (0..=n).map(|k| cf.evaluate(k)).collect();
                    if let Some(term) = values
                        .iter()
                        .position(|z| !z.re.is_finite() || !z.im.is_finite())
                    {
                        return Err(NumericalError::EvaluationOverflow { term }.into());
                    }
                    Some(values)
                }
                None => None,
            };
            let horizon = args.eval.unwrap_or(2 * rec.order()).max(2 * rec.order());
            residuals.insert(
                "closed_form_vs_iterate".to_string(),
                reproduction_residual(&rec, &cf, horizon),
            );
            let terms = evaluated.as_deref().map(complex_vec);
            let results = RecurrenceSolveResults {
                hypothesis_ok: true,
                failure_reason: None,
                order: rec.order(),
                roots: Some(complex_vec(cf.roots().roots())),
                coefficients: Some(complex_vec(cf.coefficients())),
                terms,
            };
            Ok(emit(
                &Report {
                    command: "recurrence solve".into(),
                    inputs_echo,
                    results,
                    diagnostics: vec![],
                    residuals,
                },
                0,
            ))
        }
        Err(Error::Hypothesis(h)) => {
            let results = RecurrenceSolveResults {
                hypothesis_ok: false,
                failure_reason: Some(h.to_string()),
                order: rec.order(),
                roots: None,
                coefficients: None,
                terms: None,
            };
            Ok(emit(
                &Report {
                    command: "recurrence solve".into(),
                    inputs_echo,
                    results,
                    diagnostics: vec![],
                    residuals,
                },
                3,
            ))
        }
        Err(other) => Err(other),
    }
}

// ---------------------------------------------------------------------------
// vandermonde invert / det

#[derive(Serialize)]
struct VandermondeInvertResults {
    hypothesis_ok: bool,
    failure_reason: Option<String>,
    n: usize,
    inverse: Option<Vec<Vec<[f64; 2]>>>,
}

fn node_diagnostics(n: usize) -> Vec<Diagnostic> {
    if n > SOFT_NODE_CAP {
        vec![Diagnostic::warning(format!(
            "{n} nodes exceed the recommended cap of {SOFT_NODE_CAP}; \
             the double-precision closed form degrades at this size"
        ))]
    } else {
        vec![]
    }
}

fn vandermonde_invert(args: &VandermondeArgs) -> Result<CommandOutput> {
    let nodes = input::parse_complex_list(&read_file(&args.nodes)?)?;
    let node_set = RootSet::new(nodes.clone())?;
    let tols = Tolerances {
        distinctness: args.distinctness,
        zero: args.zero,
        ..Tolerances::default()
    };
    let inputs_echo = json!({
        "nodes": complex_vec(&nodes),
        "distinctness": args.distinctness,
        "zero": args.zero,
    });
    let diagnostics = node_diagnostics(nodes.len());
    let mut residuals = BTreeMap::new();
    match vandermonde_inverse_with(&node_set, &tols) {
        Ok(w) => {
            let v = VandermondeMatrix::new(node_set.roots());
            residuals.insert("inverse_residual_max".to_string(), v.inverse_residual(&w));
            let results = VandermondeInvertResults {
                hypothesis_ok: true,
                failure_reason: None,
                n: nodes.len(),
                inverse: Some(complex_grid(&w)),
            };
            Ok(emit(
                &Report {
                    command: "vandermonde invert".into(),
                    inputs_echo,
                    results,
                    diagnostics,
                    residuals,
                },
                0,
            ))
        }
        Err(Error::Hypothesis(h)) => {
            let results = VandermondeInvertResults {
                hypothesis_ok: false,
                failure_reason: Some(h.to_string()),
                n: nodes.len(),
                inverse: None,
            };
            Ok(emit(
                &Report {
                    command: "vandermonde invert".into(),
                    inputs_echo,
                    results,
                    diagnostics,
                    residuals,
                },
                3,
            ))
        }
        Err(other) => Err(other),
    }
}

#[derive(Serialize)]
struct VandermondeDetResults {
    n: usize,
    det: [f64; 2],
}

fn vandermonde_det_cmd(args: &VandermondeArgs) -> Result<CommandOutput> {
    let nodes = input::parse_complex_list(&read_file(&args.nodes)?)?;
    let node_set = RootSet::new(nodes.clone())?;
    let det = vandermonde_det(&node_set);
    let report = Report {
        command: "vandermonde det".into(),
        inputs_echo: json!({ "nodes": complex_vec(&nodes) }),
        results: VandermondeDetResults {
            n: nodes.len(),
            det: complex_pair(det),
        },
        diagnostics: node_diagnostics(nodes.len()),
        residuals: BTreeMap::new(),
    };
    Ok(emit(&report, 0))
}

// ---------------------------------------------------------------------------
// markov analyze

#[derive(Serialize)]
struct StructureWire {
    irreducible: bool,
    period: Option<u64>,
    aperiodic: bool,
}

#[derive(Serialize)]
struct SpectrumWire {
    eigenvalues: Vec<[f64; 2]>,
    all_simple: bool,
    all_nonzero: bool,
    dominant: [f64; 2],
}

#[derive(Serialize)]
struct HypothesisChecks {
    row_stochastic: bool,
    irreducible: bool,
    aperiodic: bool,
    simple_spectrum: Option<bool>,
    nonzero_spectrum: Option<bool>,
    dominant_is_one: Option<bool>,
}

#[derive(Serialize)]
struct MarkovAnalyzeResults {
    m: usize,
    hypothesis_ok: bool,
    failure_reason: Option<String>,
    hypothesis_checks: HypothesisChecks,
    structure: StructureWire,
    pi: Option<Vec<f64>>,
    spectrum: Option<SpectrumWire>,
    rho: Option<f64>,
    phi_grid: Option<Vec<Vec<f64>>>,
    phi_max: Option<f64>,
    psi: Option<f64>,
    mixing_time_phi: Option<u64>,
    mixing_time_psi: Option<u64>,
    epsilon: f64,
}

fn markov_analyze(args: &MarkovAnalyzeArgs) -> Result<CommandOutput> {
    if !(args.epsilon > 0.0 && args.epsilon < 1.0) {
        return Err(Error::input("epsilon must lie strictly between 0 and 1"));
    }
    let rows = input::parse_matrix(&read_file(&args.matrix)?)?;
    let p = TransitionMatrix::validate(rows.clone())?;
    let m = p.m();
    let inputs_echo = json!({ "matrix": rows, "epsilon": args.epsilon });
    let diagnostics = if m > RECOMMENDED_EIGEN_DIM {
        vec![Diagnostic::warning(format!(
            "{m} states exceed the recommended spectral cap of {RECOMMENDED_EIGEN_DIM}"
        ))]
    } else {
        vec![]
    };

    let st = p.structure();
    let structure = StructureWire {
        irreducible: st.irreducible,
        period: st.period,
        aperiodic: st.aperiodic(),
    };
    let mut residuals = BTreeMap::new();
    // The spectrum is reportable even when structure gates fail.
    let snapped = p.snapped_spectrum().ok();
    let spectrum_wire = snapped.as_ref().map(|(s, _)| SpectrumWire {
        eigenvalues: complex_vec(s.eigenvalues().roots()),
        all_simple: s.all_simple(),
        all_nonzero: s.all_nonzero(),
        dominant: complex_pair(s.dominant()),
    });
    if let Some((s, snap)) = &snapped {
        residuals.insert("dominant_snap_distance".to_string(), *snap);
        let eigensum: Complex64 = s.eigenvalues().roots().iter().sum();
        let trace: f64 = (0..m).map(|i| p.rows()[i][i]).sum();
        residuals.insert(
            "eigensum_minus_trace".to_string(),
            (eigensum - Complex64::new(trace, 0.0)).norm(),
        );
    }

    let degraded = |reason: String,
                    checks: HypothesisChecks,
                    pi: Option<Vec<f64>>,
                    spectrum: Option<SpectrumWire>,
                    rho: Option<f64>,
                    residuals: BTreeMap<String, f64>|
     -> CommandOutput {
        emit(
            &Report {
                command: "markov analyze".into(),
                inputs_echo: inputs_echo.clone(),
                results: MarkovAnalyzeResults {
                    m,
                    hypothesis_ok: false,
                    failure_reason: Some(reason),
                    hypothesis_checks: checks,
                    structure: StructureWire {
                        irreducible: st.irreducible,
                        period: st.period,
                        aperiodic: st.aperiodic(),
                    },
                    pi,
                    spectrum,
                    rho,
                    phi_grid: None,
                    phi_max: None,
                    psi: None,
                    mixing_time_phi: None,
                    mixing_time_psi: None,
                    epsilon: args.epsilon,
                },
                diagnostics: diagnostics.clone(),
                residuals,
            },
            3,
        )
    };

    if !st.irreducible || !st.aperiodic() {
        let reason = if !st.irreducible {
            crate::error::HypothesisError::Reducible.to_string()
        } else {
            crate::error::HypothesisError::Periodic {
                period: st.period.unwrap_or(0),
            }
            .to_string()
        };
        let checks = HypothesisChecks {
            row_stochastic: true,
            irreducible: st.irreducible,
            aperiodic: st.aperiodic(),
            simple_spectrum: snapped.as_ref().map(|(s, _)| s.all_simple()),
            nonzero_spectrum: snapped.as_ref().map(|(s, _)| s.all_nonzero()),
            dominant_is_one: snapped.as_ref().map(|_| true),
        };
        let rho = snapped.as_ref().map(|(s, _)| s.rho());
        return Ok(degraded(
            reason,
            checks,
            None,
            spectrum_wire,
            rho,
            residuals,
        ));
    }

    let pi = p.stationary()?;
    residuals.insert(
        "stationary_max_residual".to_string(),
        p.stationary_residual(pi.pi()),
    );
    let iterated = p.power_iteration(500);
    let power_delta = pi
        .pi()
        .iter()
        .zip(iterated.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    residuals.insert("power_iteration_delta".to_string(), power_delta);

    let (spectrum, _snap) = p.snapped_spectrum()?;
    if spectrum.hypothesis_violation().is_some() {
        let reason = spectrum.hypothesis_violation().unwrap().to_string();
        let checks = HypothesisChecks {
            row_stochastic: true,
            irreducible: true,
            aperiodic: true,
            simple_spectrum: Some(spectrum.all_simple()),
            nonzero_spectrum: Some(spectrum.all_nonzero()),
            dominant_is_one: Some(true),
        };
        return Ok(degraded(
            reason,
            checks,
            Some(pi.pi().to_vec()),
            spectrum_wire,
            Some(spectrum.rho()),
            residuals,
        ));
    }

    let bounds = p.bounds()?;
    let mixing_time_phi = mixing_time_from(&bounds, args.epsilon, MixingMode::PhiMax);
    let mixing_time_psi = mixing_time_from(&bounds, args.epsilon, MixingMode::Psi);
    let results = MarkovAnalyzeResults {
        m,
        hypothesis_ok: true,
        failure_reason: None,
        hypothesis_checks: HypothesisChecks {
            row_stochastic: true,
            irreducible: true,
            aperiodic: true,
            simple_spectrum: Some(true),
            nonzero_spectrum: Some(true),
            dominant_is_one: Some(true),
        },
        structure,
        pi: Some(pi.pi().to_vec()),
        spectrum: spectrum_wire,
        rho: Some(bounds.rho),
        phi_grid: Some(bounds.phi.clone()),
        phi_max: Some(bounds.phi_max),
        psi: Some(bounds.psi),
        mixing_time_phi: Some(mixing_time_phi),
        mixing_time_psi: Some(mixing_time_psi),
        epsilon: args.epsilon,
    };
    Ok(emit(
        &Report {
            command: "markov analyze".into(),
            inputs_echo,
            results,
            diagnostics,
            residuals,
        },
        0,
    ))
}

// ---------------------------------------------------------------------------
// graph diameter-bound / chung

fn distance_wire(d: Distance) -> serde_json::Value {
    match d {
        Distance::Finite(v) => json!(v),
        Distance::Infinite => json!("infinity"),
    }
}

#[derive(Serialize)]
struct DiameterBoundResults {
    m: usize,
    construction: String,
    exact: serde_json::Value,
    hypothesis_ok: bool,
    failure_reason: Option<String>,
    bound: Option<u64>,
    per_j_terms: Option<Vec<f64>>,
    pi: Option<Vec<f64>>,
    rho: Option<f64>,
}

fn graph_diameter_bound(args: &DiameterBoundArgs) -> Result<CommandOutput> {
    let edges = input::parse_edges(&read_file(&args.edges)?)?;
    let g = Digraph::from_edges(&edges)?;
    // The bound needs the full spectral pipeline, which is capped; refuse
    // before materializing a dense transition matrix.
    if g.m() > MAX_EIGEN_DIM {
        return Err(Error::Input(format!(
            "the spectral diameter bound supports at most {MAX_EIGEN_DIM} vertices, got {}",
            g.m()
        )));
    }
    let (construction, p, analyzed) = match args.construction {
        Construction::Uniform => {
            let p = graphs::markov_matrix_uniform(&g)?;
            ("uniform", p, g.clone())
        }
        Construction::Lazy => {
            let p = graphs::markov_matrix_lazy_undirected(&g)?;
            // The lazy walk adds self-loops; they do not change the
            // diameter, so the bound is computed on the augmented graph.
            let analyzed = Digraph::new(g.m(), p.support_edges())?;
            ("lazy", p, analyzed)
        }
    };
    let report = graphs::diameter_bound(&analyzed, &p)?;
    let exit = if report.hypothesis_ok { 0 } else { 3 };
    let results = DiameterBoundResults {
        m: g.m(),
        construction: construction.to_string(),
        exact: distance_wire(report.exact),
        hypothesis_ok: report.hypothesis_ok,
        failure_reason: report.failure_reason.clone(),
        bound: report.bound,
        per_j_terms: report.hypothesis_ok.then_some(report.per_j_terms.clone()),
        pi: report.pi.clone(),
        rho: report.rho,
    };
    Ok(emit(
        &Report {
            command: "graph diameter-bound".into(),
            inputs_echo: json!({
                "edges": edges,
                "construction": construction,
            }),
            results,
            diagnostics: vec![],
            residuals: BTreeMap::new(),
        },
        exit,
    ))
}

#[derive(Serialize)]
struct ChungResults {
    bound: i64,
}

fn graph_chung(args: &ChungArgs) -> Result<CommandOutput> {
    let bound = graphs::chung_bound(args.m, args.k, args.tau)?;
    Ok(emit(
        &Report {
            command: "graph chung".into(),
            inputs_echo: json!({ "m": args.m, "k": args.k, "tau": args.tau }),
            results: ChungResults { bound },
            diagnostics: vec![],
            residuals: BTreeMap::new(),
        },
        0,
    ))
}

// ---------------------------------------------------------------------------
// spectral eigs

#[derive(Serialize)]
struct SpectralEigsResults {
    m: usize,
    eigenvalues: Vec<[f64; 2]>,
    dominant: [f64; 2],
    rho: f64,
    all_simple: bool,
    all_nonzero: bool,
    char_poly: Vec<[f64; 2]>,
}

fn spectral_eigs(args: &SpectralEigsArgs) -> Result<CommandOutput> {
    let rows = input::parse_complex_matrix(&read_file(&args.matrix)?)?;
    let a = SquareMatrix::from_rows(&rows)?;
    let m = a.m();
    let poly = spectral::char_poly(&a)?;
    let spectrum = spectral::eigenvalues(&a)?;
    let eigensum: Complex64 = spectrum.eigenvalues().roots().iter().sum();
    let mut residuals = BTreeMap::new();
    residuals.insert(
        "eigensum_minus_trace".to_string(),
        (eigensum - a.trace()).norm(),
    );
    let diagnostics = if m > RECOMMENDED_EIGEN_DIM {
        vec![Diagnostic::warning(format!(
            "dimension {m} exceeds the recommended spectral cap of {RECOMMENDED_EIGEN_DIM}; \
             characteristic-polynomial root finding degrades at this size"
        ))]
    } else {
        vec![]
    };
    let results = SpectralEigsResults {
        m,
        eigenvalues: complex_vec(spectrum.eigenvalues().roots()),
        dominant: complex_pair(spectrum.dominant()),
        rho: spectrum.rho(),
        all_simple: spectrum.all_simple(),
        all_nonzero: spectrum.all_nonzero(),
        char_poly: complex_vec(poly.coeffs()),
    };
    Ok(emit(
        &Report {
            command: "spectral eigs".into(),
            inputs_echo: json!({ "matrix": complex_grid(&rows) }),
            results,
            diagnostics,
            residuals,
        },
        0,
    ))
}

// ---------------------------------------------------------------------------
// human rendering

/// Indented key/value view of a report for terminals. The JSON remains the
/// primary interface.
fn render_human(value: &serde_json::Value) -> String {
    let mut out = String::new();
    render_value(value, 0, &mut out);
    out.trim_end().to_string()
}

fn is_scalar(v: &serde_json::Value) -> bool {
    !matches!(
        v,
        serde_json::Value::Object(_) | serde_json::Value::Array(_)
    )
}

fn scalar_text(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Null => "-".to_string(),
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_value(value: &serde_json::Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        serde_json::Value::Object(map) => {
            for (key, val) in map {
                if is_scalar(val) {
                    let _ = writeln!(out, "{pad}{key}: {}", scalar_text(val));
                } else if val.as_array().is_some_and(|a| a.iter().all(is_scalar)) {
                    let items: Vec<String> =
                        val.as_array().unwrap().iter().map(scalar_text).collect();
                    let _ = writeln!(out, "{pad}{key}: [{}]", items.join(", "));
                } else {
                    let _ = writeln!(out, "{pad}{key}:");
                    render_value(val, indent + 1, out);
                }
            }
        }
        serde_json::Value::Array(items) => {
            for item in items {
                if is_scalar(item) {
                    let _ = writeln!(out, "{pad}- {}", scalar_text(item));
                } else if item.as_array().is_some_and(|a| a.iter().all(is_scalar)) {
                    let inner: Vec<String> =
                        item.as_array().unwrap().iter().map(scalar_text).collect();
                    let _ = writeln!(out, "{pad}- [{}]", inner.join(", "));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render_value(item, indent + 1, out);
                }
            }
        }
        scalar => {
            let _ = writeln!(out, "{pad}{}", scalar_text(scalar));
        }
    }
}

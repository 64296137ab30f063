//! The checked-in fuzz corpus seeds must stay parseable (or at least never
//! panic) so they keep exercising the intended paths.

use std::fs;
use std::path::PathBuf;

fn corpus_dir(target: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target)
}

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = corpus_dir(target);
    let mut out = Vec::new();
    for entry in fs::read_dir(&dir).unwrap_or_else(|e| panic!("missing corpus {dir:?}: {e}")) {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        out.push((name, fs::read_to_string(&path).unwrap()));
    }
    assert!(!out.is_empty(), "no seeds for {target}");
    out.sort();
    out
}

#[test]
fn matrix_file_seeds_parse() {
    for (name, text) in seeds("matrix_file") {
        let rows = rhomix::io::parse_matrix(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let _ = rhomix::markov::TransitionMatrix::validate(rows);
    }
}

#[test]
fn complex_matrix_file_seeds_parse() {
    for (name, text) in seeds("complex_matrix_file") {
        let rows =
            rhomix::io::parse_complex_matrix(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        rhomix::spectral::SquareMatrix::from_rows(&rows).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn nodes_file_seeds_parse() {
    for (name, text) in seeds("nodes_file") {
        let nodes = rhomix::io::parse_complex_list(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        rhomix::numkernel::RootSet::new(nodes).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn edges_file_seeds_parse() {
    for (name, text) in seeds("edges_file") {
        let edges = rhomix::io::parse_edges(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        rhomix::graphs::Digraph::from_edges(&edges).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn scalar_list_seeds_parse() {
    for (name, text) in seeds("scalar_list") {
        rhomix::io::parse_complex_csv(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

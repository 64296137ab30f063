//! Parsers for the file and flag formats the CLI accepts: real matrices as
//! JSON 2-D arrays or CSV, complex values as numbers or [re, im] pairs,
//! scalar lists like `1.5,-2i,3+4i`, and edge lists as `i j` lines or JSON
//! pairs. All of these handle untrusted input and are fuzzed.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graphs::MAX_VERTICES;

fn finite(v: f64, what: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Input(format!("{what} is not finite")))
    }
}

fn json_number(v: &serde_json::Value, what: &str) -> Result<f64> {
    v.as_f64()
        .ok_or_else(|| Error::Input(format!("{what}: expected a number, got {v}")))
        .and_then(|x| finite(x, what))
}

/// One JSON value that is either a real number or a two-element [re, im]
/// array.
fn json_complex(v: &serde_json::Value, what: &str) -> Result<Complex64> {
    match v {
        serde_json::Value::Array(pair) => {
            if pair.len() != 2 {
                return Err(Error::Input(format!(
                    "{what}: a complex entry must be a [re, im] pair"
                )));
            }
            Ok(Complex64::new(
                json_number(&pair[0], what)?,
                json_number(&pair[1], what)?,
            ))
        }
        other => Ok(Complex64::new(json_number(other, what)?, 0.0)),
    }
}

fn parse_json(text: &str) -> Result<serde_json::Value> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('[')
}

/// Real matrix from a JSON 2-D array or CSV rows.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<f64>>> {
    let rows = if looks_like_json(text) {
        let value = parse_json(text)?;
        let outer = value
            .as_array()
            .ok_or_else(|| Error::input("matrix: expected a JSON array of rows"))?;
        let mut rows = Vec::with_capacity(outer.len());
        for (i, row) in outer.iter().enumerate() {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::Input(format!("matrix row {i}: expected an array")))?;
            let mut parsed = Vec::with_capacity(cells.len());
            for (j, cell) in cells.iter().enumerate() {
                parsed.push(json_number(cell, &format!("matrix entry ({i}, {j})"))?);
            }
            rows.push(parsed);
        }
        rows
    } else {
        parse_csv_rows(text)?
    };
    if rows.is_empty() {
        return Err(Error::input("matrix has no rows"));
    }
    Ok(rows)
}

fn parse_csv_rows(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for cell in line.split(',') {
            let cell = cell.trim();
            let v: f64 = cell.parse().map_err(|_| {
                Error::Input(format!(
                    "line {}: cannot parse '{cell}' as a number",
                    lineno + 1
                ))
            })?;
            row.push(finite(v, &format!("line {} entry", lineno + 1))?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Square complex matrix: JSON rows whose entries are numbers or [re, im]
/// pairs, or real CSV.
pub fn parse_complex_matrix(text: &str) -> Result<Vec<Vec<Complex64>>> {
    if !looks_like_json(text) {
        return Ok(parse_csv_rows(text)?
            .into_iter()
            .map(|row| row.into_iter().map(|v| Complex64::new(v, 0.0)).collect())
            .collect());
    }
    let value = parse_json(text)?;
    let outer = value
        .as_array()
        .ok_or_else(|| Error::input("matrix: expected a JSON array of rows"))?;
    if outer.is_empty() {
        return Err(Error::input("matrix has no rows"));
    }
    let mut rows = Vec::with_capacity(outer.len());
    for (i, row) in outer.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| Error::Input(format!("matrix row {i}: expected an array")))?;
        let mut parsed = Vec::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            parsed.push(json_complex(cell, &format!("matrix entry ({i}, {j})"))?);
        }
        rows.push(parsed);
    }
    Ok(rows)
}

/// Complex node list: a JSON array whose elements are numbers or [re, im]
/// pairs.
pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>> {
    let value = parse_json(text)?;
    let items = value
        .as_array()
        .ok_or_else(|| Error::input("nodes: expected a JSON array"))?;
    items
        .iter()
        .enumerate()
        .map(|(k, item)| json_complex(item, &format!("node {k}")))
        .collect()
}

/// One scalar in the forms `1.5`, `-2i`, `3+4i`, `i`, `-i`, `1e-3+0.5i`.
pub fn parse_complex_scalar(s: &str) -> Result<Complex64> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::input("empty scalar"));
    }
    if !t.is_ascii() {
        return Err(Error::Input(format!("cannot parse '{t}' as a scalar")));
    }
    let parse_real = |txt: &str| -> Result<f64> {
        // Reject forms like "inf"/"nan" that f64::parse would accept.
        if !txt
            .bytes()
            .all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E'))
        {
            return Err(Error::Input(format!("cannot parse '{txt}' as a number")));
        }
        txt.parse::<f64>()
            .map_err(|_| Error::Input(format!("cannot parse '{txt}' as a number")))
            .and_then(|v| finite(v, "scalar"))
    };
    if !(t.ends_with('i') || t.ends_with('I')) {
        return Ok(Complex64::new(parse_real(t)?, 0.0));
    }
    let body = &t[..t.len() - 1];
    let parse_imag = |txt: &str| -> Result<f64> {
        match txt {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            other => parse_real(other),
        }
    };
    // Split at the sign that separates real and imaginary parts: the last
    // '+'/'-' that is not leading and not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(
            parse_real(&body[..k])?,
            parse_imag(&body[k..])?,
        )),
        None => Ok(Complex64::new(0.0, parse_imag(body)?)),
    }
}

/// Comma-separated complex scalars, as used by `--coeffs`/`--initial`.
pub fn parse_complex_csv(text: &str) -> Result<Vec<Complex64>> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::input("empty value list"));
    }
    t.split(',').map(parse_complex_scalar).collect()
}

/// Edge list: lines of `i j` (with `#` comments allowed), or a JSON array
/// of [i, j] pairs. Endpoints are capped to keep downstream allocation
/// bounded.
pub fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>> {
    let parse_endpoint = |v: u64, what: &str| -> Result<usize> {
        if v as usize >= MAX_VERTICES {
            return Err(Error::Input(format!(
                "{what}: vertex {v} exceeds the supported cap of {MAX_VERTICES}"
            )));
        }
        Ok(v as usize)
    };
    if looks_like_json(text) {
        let value = parse_json(text)?;
        let items = value
            .as_array()
            .ok_or_else(|| Error::input("edges: expected a JSON array of pairs"))?;
        let mut edges = Vec::with_capacity(items.len());
        for (k, item) in items.iter().enumerate() {
            let pair = item
                .as_array()
                .ok_or_else(|| Error::Input(format!("edge {k}: expected an [i, j] pair")))?;
            if pair.len() != 2 {
                return Err(Error::Input(format!(
                    "edge {k}: expected exactly two endpoints"
                )));
            }
            let u = pair[0].as_u64().ok_or_else(|| {
                Error::Input(format!("edge {k}: endpoints must be non-negative integers"))
            })?;
            let v = pair[1].as_u64().ok_or_else(|| {
                Error::Input(format!("edge {k}: endpoints must be non-negative integers"))
            })?;
            edges.push((
                parse_endpoint(u, &format!("edge {k}"))?,
                parse_endpoint(v, &format!("edge {k}"))?,
            ));
        }
        return Ok(edges);
    }
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::Input(format!(
                    "line {}: expected 'i j', got '{line}'",
                    lineno + 1
                )))
            }
        };
        let u: u64 = u
            .parse()
            .map_err(|_| Error::Input(format!("line {}: bad endpoint '{u}'", lineno + 1)))?;
        let v: u64 = v
            .parse()
            .map_err(|_| Error::Input(format!("line {}: bad endpoint '{v}'", lineno + 1)))?;
        edges.push((
            parse_endpoint(u, &format!("line {}", lineno + 1))?,
            parse_endpoint(v, &format!("line {}", lineno + 1))?,
        ));
    }
    Ok(edges)
}

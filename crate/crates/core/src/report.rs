//! Machine-readable report envelope. Reports serialize to compact JSON with
//! struct fields in declaration order, map keys sorted, and every floating
//! value written with 17 significant digits so identical inputs produce
//! byte-identical output that round-trips exactly.

use std::collections::BTreeMap;
use std::io;

use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostic {
    pub level: String,
    pub message: String,
}

impl Diagnostic {
    pub fn warning(message: impl Into<String>) -> Self {
        Diagnostic {
            level: "warning".into(),
            message: message.into(),
        }
    }

    pub fn info(message: impl Into<String>) -> Self {
        Diagnostic {
            level: "info".into(),
            message: message.into(),
        }
    }
}

/// The envelope every subcommand emits.
#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub command: String,
    pub inputs_echo: serde_json::Value,
    pub results: T,
    pub diagnostics: Vec<Diagnostic>,
    pub residuals: BTreeMap<String, f64>,
}

struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        // 1 leading digit + 16 fractional digits = 17 significant digits,
        // enough to round-trip any f64 exactly.
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize any value with the report float convention.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

/// [re, im] wire form for a complex value.
pub fn complex_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn complex_vec(zs: &[Complex64]) -> Vec<[f64; 2]> {
    zs.iter().map(|&z| complex_pair(z)).collect()
}

pub fn complex_grid(rows: &[Vec<Complex64>]) -> Vec<Vec<[f64; 2]>> {
    rows.iter().map(|r| complex_vec(r)).collect()
}

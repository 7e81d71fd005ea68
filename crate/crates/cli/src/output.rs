use std::fmt;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Structured,
}

/// What a command produces: the plain-text rendering and a JSON tree of
/// strings, integers, arrays and objects. Rationals are always strings.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputDocument {
    pub plain: String,
    pub structured: Value,
}

impl OutputDocument {
    pub fn new(plain: impl Into<String>, structured: Value) -> Self {
        Self {
            plain: plain.into(),
            structured,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => {
                let mut text = self.plain.clone();
                if !text.ends_with('\n') {
                    text.push('\n');
                }
                text
            }
            Format::Structured => {
                let mut text =
                    serde_json::to_string_pretty(&self.structured).expect("json tree serializes");
                text.push('\n');
                text
            }
        }
    }

    pub fn parse_structured(text: &str) -> serde_json::Result<Value> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for OutputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain)
    }
}

/// True when the tree holds no floating-point numbers.
pub fn is_exact(value: &Value) -> bool {
    match value {
        Value::Number(n) => n.is_i64() || n.is_u64(),
        Value::Array(items) => items.iter().all(is_exact),
        Value::Object(map) => map.values().all(is_exact),
        Value::Null | Value::Bool(_) | Value::String(_) => true,
    }
}

/// Left-aligned table with two spaces between columns.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.extend(
        rows.iter()
            .map(|r| line(r.iter().map(String::as_str).collect())),
    );
    out.join("\n")
}

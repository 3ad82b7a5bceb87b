//! Rendering of command results as JSON, CSV or aligned tables.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// What a command produced: one record or a list of records.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Record(Value),
    Records(Vec<Value>),
}

impl Output {
    pub fn record<T: Serialize>(value: &T) -> Output {
        Output::Record(serde_json::to_value(value).expect("serializable"))
    }

    fn rows(&self) -> Vec<&Value> {
        match self {
            Output::Record(v) => vec![v],
            Output::Records(vs) => vs.iter().collect(),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Output::Record(v) => v.to_string(),
            Output::Records(vs) => Value::Array(vs.clone()).to_string(),
        }
    }

    /// Header and cells, one row per record, nested objects as dotted columns.
    pub fn to_grid(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let mut header = Vec::new();
        let mut rows = Vec::new();
        for v in self.rows() {
            let mut cells = Vec::new();
            flatten("", v, &mut cells);
            if header.is_empty() {
                header = cells.iter().map(|(k, _)| k.clone()).collect();
            }
            rows.push(cells.into_iter().map(|(_, c)| c).collect());
        }
        (header, rows)
    }

    pub fn write<W: Write>(&self, format: Format, mut out: W) -> io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", self.to_json()),
            Format::Csv => {
                let (header, rows) = self.to_grid();
                let mut w = csv::Writer::from_writer(out);
                if !header.is_empty() {
                    w.write_record(&header)?;
                }
                for r in rows {
                    w.write_record(&r)?;
                }
                w.flush()
            }
            Format::Table => {
                let (header, rows) = self.to_grid();
                let mut widths: Vec<usize> = header.iter().map(String::len).collect();
                for r in &rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.len());
                    }
                }
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(&header))?;
                for r in &rows {
                    writeln!(out, "{}", line(r))?;
                }
                Ok(())
            }
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, child) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, child, out);
            }
        }
        _ => out.push((prefix.to_string(), cell(v))),
    }
}

/// A scalar as plain text; arrays and objects as compact JSON.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        _ => v.to_string(),
    }
}

/// Builds a JSON object from ordered key/value pairs.
pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

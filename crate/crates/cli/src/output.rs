//! Record output in JSON lines, CSV or aligned text.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Flattens nested objects into dotted keys. Arrays of scalars are joined
/// with spaces; anything else nested is kept as compact JSON.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), joined.join(" ")));
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flat(record: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    flatten("", record, &mut out);
    out
}

pub fn render(records: &[Value], format: Format) -> io::Result<Vec<u8>> {
    let mut buf = Vec::new();
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut buf, r)?;
                buf.push(b'\n');
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut buf);
            let rows: Vec<_> = records.iter().map(flat).collect();
            if let Some(first) = rows.first() {
                w.write_record(first.iter().map(|(k, _)| k))?;
            }
            for row in &rows {
                w.write_record(row.iter().map(|(_, v)| v))?;
            }
            w.flush()?;
        }
        Format::Text => {
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    buf.push(b'\n');
                }
                let row = flat(r);
                let width = row.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in row {
                    writeln!(buf, "{k:<width$}  {v}")?;
                }
            }
        }
    }
    Ok(buf)
}

pub fn to_value<T: serde::Serialize>(record: &T) -> Value {
    serde_json::to_value(record).expect("report types serialize infallibly")
}

/// Joins several records into one object, one key per part.
pub fn combine(parts: Vec<(&str, Value)>) -> Value {
    Value::Object(
        parts
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect::<Map<_, _>>(),
    )
}

pub fn emit(bytes: &[u8], out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(bytes)?;
            w.flush()
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()
        }
    }
}

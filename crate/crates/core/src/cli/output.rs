use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// What a subcommand produced: structured records plus their table rendering.
#[derive(Debug, Default)]
pub struct Report {
    pub records: Vec<Map<String, Value>>,
    /// Flat rows used for CSV instead of `records` when nonempty.
    pub csv_rows: Vec<Map<String, Value>>,
    pub table: Vec<String>,
    /// Printed on the error stream whatever the format.
    pub warnings: Vec<String>,
}

impl Report {
    pub fn push_record<T: Serialize>(&mut self, record: &T) -> Result<()> {
        self.records.push(object(record)?);
        Ok(())
    }

    pub fn push_csv_row<T: Serialize>(&mut self, row: &T) -> Result<()> {
        self.csv_rows.push(object(row)?);
        Ok(())
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.table.push(s.into());
    }

    pub fn write(&self, format: OutputFormat, out: &mut dyn Write) -> Result<()> {
        match format {
            OutputFormat::Table => {
                for l in &self.table {
                    writeln!(out, "{l}")?;
                }
            }
            OutputFormat::Json => {
                for r in &self.records {
                    writeln!(out, "{}", Value::Object(r.clone()))?;
                }
            }
            OutputFormat::Csv => self.write_csv(out)?,
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        let rows = if self.csv_rows.is_empty() {
            &self.records
        } else {
            &self.csv_rows
        };
        let Some(first) = rows.first() else {
            return Ok(());
        };
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(first.keys()).map_err(io)?;
        for r in rows {
            w.write_record(first.keys().map(|k| r.get(k).map_or(String::new(), cell)))
                .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn object<T: Serialize>(record: &T) -> Result<Map<String, Value>> {
    match serde_json::to_value(record).map_err(|e| Error::Invariant(e.to_string()))? {
        Value::Object(m) => Ok(m),
        other => Err(Error::Invariant(format!(
            "record is not an object: {other}"
        ))),
    }
}

/// An arbitrary-size integer as a JSON number.
pub fn number(x: &impl ToString) -> Value {
    let s = x.to_string();
    s.parse::<serde_json::Number>()
        .map(Value::Number)
        .unwrap_or(Value::String(s))
}

/// Scalars print bare, arrays as space-separated items, objects as JSON.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// `[4,9,10]`
pub fn bracket<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

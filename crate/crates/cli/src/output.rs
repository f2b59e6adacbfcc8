//! Column-oriented result tables and their CSV / JSON encodings.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::config::OutputFormat;
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Values {
    Numbers(Vec<f64>),
    /// Missing entries encode as an empty CSV field and JSON `null`.
    Optional(Vec<Option<f64>>),
    Labels(Vec<String>),
    Flags(Vec<bool>),
}

impl Values {
    fn len(&self) -> usize {
        match self {
            Values::Numbers(v) => v.len(),
            Values::Optional(v) => v.len(),
            Values::Labels(v) => v.len(),
            Values::Flags(v) => v.len(),
        }
    }

    fn csv_field(&self, row: usize) -> String {
        match self {
            // `{:?}` is the shortest representation that parses back exactly
            Values::Numbers(v) => format!("{:?}", v[row]),
            Values::Optional(v) => v[row].map(|x| format!("{x:?}")).unwrap_or_default(),
            Values::Labels(v) => v[row].clone(),
            Values::Flags(v) => v[row].to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Values::Numbers(v) => json!(v),
            Values::Optional(v) => json!(v),
            Values::Labels(v) => json!(v),
            Values::Flags(v) => json!(v),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: &'static str,
    pub unit: &'static str,
    pub values: Values,
}

impl Column {
    pub fn numbers(name: &'static str, unit: &'static str, values: Vec<f64>) -> Self {
        Self {
            name,
            unit,
            values: Values::Numbers(values),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<Column>,
}

impl Table {
    pub fn push(&mut self, column: Column) {
        debug_assert!(self
            .columns
            .first()
            .is_none_or(|c| c.values.len() == column.values.len()));
        self.columns.push(column);
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, |c| c.values.len())
    }

    pub fn write_csv(&self, out: impl Write) -> io::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(self.columns.iter().map(|c| format!("{} [{}]", c.name, c.unit)))?;
        for row in 0..self.rows() {
            writer.write_record(self.columns.iter().map(|c| c.values.csv_field(row)))?;
        }
        writer.flush()
    }

    /// `{"meta": ..., "data": {column: [...]}}`; column order and units are
    /// listed in `meta`.
    pub fn to_json(&self, mut meta: Value) -> Value {
        let mut data = Map::new();
        let mut units = Map::new();
        for c in &self.columns {
            data.insert(c.name.to_string(), c.values.to_json());
            units.insert(c.name.to_string(), json!(c.unit));
        }
        if let Value::Object(m) = &mut meta {
            m.insert(
                "columns".into(),
                json!(self.columns.iter().map(|c| c.name).collect::<Vec<_>>()),
            );
            m.insert("units".into(), Value::Object(units));
        }
        json!({ "meta": meta, "data": data })
    }
}

/// Metadata common to every output file. Carries no timestamps so that
/// identical runs produce identical bytes.
pub fn meta(command: &str, config: Value) -> Value {
    json!({
        "command": command,
        "config": config,
        "versions": {
            "vibronic": env!("CARGO_PKG_VERSION"),
            "schema": 1,
        },
    })
}

fn encode(table: &Table, meta: Value, format: OutputFormat, mut out: impl Write) -> io::Result<()> {
    match format {
        OutputFormat::Csv => table.write_csv(&mut out)?,
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &table.to_json(meta))?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()
}

/// Writes `table` to `path`, or to stdout when no path is given.
pub fn emit(table: &Table, meta: Value, format: OutputFormat, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(path) => {
            let io_error = |source| CliError::Io {
                path: path.to_path_buf(),
                source,
            };
            let file = File::create(path).map_err(io_error)?;
            encode(table, meta, format, BufWriter::new(file)).map_err(io_error)
        }
        None => encode(table, meta, format, io::stdout().lock()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

//! Rendering of command results as JSON or CSV.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::{FFElt, FieldCtx};
use crate::scattered::ScatterVerdict;
use crate::text::format_elt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// A command result: the JSON document plus a fixed-column table for CSV.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(json: Value, columns: Vec<&'static str>) -> Self {
        Report { json, columns, rows: Vec::new() }
    }

    pub fn row(mut self, row: Vec<String>) -> Self {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
        self
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| Error::Parse(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::Parse(e.to_string());
                w.write_record(&self.columns).map_err(io)?;
                for r in &self.rows {
                    w.write_record(r).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
            }
        }
    }
}

pub fn elt(ctx: &FieldCtx, x: FFElt) -> Value {
    Value::String(format_elt(ctx, x))
}

pub fn witness(ctx: &FieldCtx, w: Option<(FFElt, FFElt)>) -> Value {
    match w {
        Some((x, y)) => json!([format_elt(ctx, x), format_elt(ctx, y)]),
        None => Value::Null,
    }
}

/// The two witness cells of a CSV row, empty when absent.
pub fn witness_cells(ctx: &FieldCtx, w: Option<(FFElt, FFElt)>) -> [String; 2] {
    match w {
        Some((x, y)) => [format_elt(ctx, x), format_elt(ctx, y)],
        None => [String::new(), String::new()],
    }
}

pub fn verdict(ctx: &FieldCtx, v: &ScatterVerdict) -> Value {
    json!({ "scattered": v.scattered, "witness": witness(ctx, v.witness) })
}

/// Fixed three-decimal rendering for the one floating-point field.
pub fn real(x: f64) -> String {
    format!("{x:.3}")
}

//! Rendering reports as JSON or CSV.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{LabError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(LabError::Config(format!("unknown format {s:?}, expected json or csv"))),
        }
    }
}

/// A machine-readable experiment result.
pub trait Report: Serialize {
    /// Whether every check in the report passed.
    fn passed(&self) -> bool {
        true
    }

    /// Header and rows of the CSV rendering.
    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>);
}

pub fn render<R: Report>(report: &R, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
            text.push('\n');
            Ok(text)
        }
        Format::Csv => {
            let (header, rows) = report.table();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).and_then(|_| rows.iter().try_for_each(|r| w.write_record(r))).map_err(csv_error)?;
            let bytes = w.into_inner().map_err(|e| LabError::Config(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
        }
    }
}

fn csv_error(e: csv::Error) -> LabError {
    LabError::Config(format!("csv: {e}"))
}

/// `Some(x)` as `x`, `None` as the empty field.
pub fn opt_field<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

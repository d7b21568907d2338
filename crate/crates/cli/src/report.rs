use std::io::{self, Write};

use qhurwitz_core::{BigRational, Error, QSeries};
use serde_json::{Map, Value};

use crate::OutputFormat;

pub const SCHEMA_VERSION: u64 = 1;

/// One command's output, ready to print in either format.
#[derive(Debug)]
pub struct Report {
    pub json: Value,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub passed: bool,
}

impl Report {
    /// Wraps `body` (a JSON object) with the schema version and command name.
    pub fn new(command: &str, body: Value, csv_header: Vec<&'static str>) -> Self {
        let mut doc = Map::new();
        doc.insert("schema_version".into(), SCHEMA_VERSION.into());
        doc.insert("command".into(), command.into());
        if let Value::Object(fields) = body {
            doc.extend(fields);
        }
        Report { json: Value::Object(doc), csv_header, csv_rows: Vec::new(), passed: true }
    }

    pub fn emit(&self, format: OutputFormat) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            OutputFormat::Json => {
                serde_json::to_writer_pretty(&mut out, &self.json)?;
                writeln!(out)?;
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.csv_header)?;
                for row in &self.csv_rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

pub fn rational_cells(value: &BigRational) -> [String; 2] {
    [value.numer().to_string(), value.denom().to_string()]
}

/// Rows `(prefix…, power, numerator, denominator)` for the nonzero
/// coefficients of a series.
pub fn series_rows(prefix: &[String], series: &QSeries) -> Vec<Vec<String>> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(power, c)| {
            let mut row = prefix.to_vec();
            row.push(power.to_string());
            row.extend(rational_cells(c));
            row
        })
        .collect()
}

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or violated preconditions: exit 2.
    Invalid(String),
    /// Verification or I/O failure: exit 1.
    Runtime(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Runtime(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Runtime(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification { .. } | Error::Io { .. } | Error::Cache { .. } => Failure::Runtime(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cli::args::{Format, RunConfig};
use crate::quad::QuadratureResult;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValueOut {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ValueOut {
    fn from(z: Complex64) -> Self {
        ValueOut { re: z.re, im: z.im }
    }
}

/// One JSON output record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub input: serde_json::Value,
    pub value: ValueOut,
    pub err_estimate: f64,
    pub warnings: Vec<String>,
    pub timestamp: String,
    /// Command-specific fields (zero data, suite verdicts).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
    /// Fields for the CSV view.
    #[serde(skip)]
    pub csv: CsvRow,
}

/// One CSV output row.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub alpha_re: f64,
    pub alpha_im: f64,
    pub value_re: f64,
    pub value_im: f64,
    pub err_estimate: f64,
    pub method: String,
    pub norm: String,
}

pub const CSV_HEADER: [&str; 7] = ["alpha_re", "alpha_im", "value_re", "value_im", "err_estimate", "method", "norm"];

impl Record {
    pub fn new(
        input: serde_json::Value,
        alpha: Complex64,
        value: Complex64,
        err_estimate: f64,
        warnings: Vec<String>,
        method: &str,
        norm: &str,
    ) -> Self {
        Record {
            input,
            value: value.into(),
            err_estimate,
            warnings,
            timestamp: timestamp(),
            details: None,
            csv: CsvRow {
                alpha_re: alpha.re,
                alpha_im: alpha.im,
                value_re: value.re,
                value_im: value.im,
                err_estimate,
                method: method.into(),
                norm: norm.into(),
            },
        }
    }

    pub fn from_quadrature(input: serde_json::Value, alpha: Complex64, q: QuadratureResult, method: &str, norm: &str) -> Self {
        Record::new(input, alpha, q.value, q.err_estimate, q.warnings, method, norm)
    }

    pub fn with_details(mut self, details: serde_json::Value) -> Self {
        self.details = Some(details);
        self
    }

    /// Structural checks beyond what deserialization enforces.
    pub fn validate(&self) -> Result<(), String> {
        if !self.input.is_object() {
            return Err("input must be an object".into());
        }
        if !(self.value.re.is_finite() && self.value.im.is_finite()) {
            return Err("value must be finite".into());
        }
        if self.err_estimate.is_nan() || self.err_estimate < 0.0 {
            return Err("err_estimate must be a non-negative number".into());
        }
        if humantime::parse_rfc3339(&self.timestamp).is_err() {
            return Err(format!("bad timestamp '{}'", self.timestamp));
        }
        if let Some(d) = &self.details {
            if !d.is_object() {
                return Err("details must be an object".into());
            }
        }
        Ok(())
    }
}

pub fn timestamp() -> String {
    humantime::format_rfc3339_seconds(std::time::SystemTime::now()).to_string()
}

/// The echoed configuration, argv included.
pub fn input_echo(config: &RunConfig) -> serde_json::Value {
    serde_json::to_value(config).unwrap_or(serde_json::Value::Null)
}

/// Serialize records; a single record is written as an object, several as
/// an array.
pub fn render(records: &[Record], format: Format, single: bool) -> Result<Vec<u8>, String> {
    match format {
        Format::Json => {
            let mut buf = if single && records.len() == 1 {
                serde_json::to_vec_pretty(&records[0])
            } else {
                serde_json::to_vec_pretty(records)
            }
            .map_err(|e| e.to_string())?;
            buf.push(b'\n');
            Ok(buf)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if records.is_empty() {
                w.write_record(CSV_HEADER).map_err(|e| e.to_string())?;
            }
            for r in records {
                w.serialize(&r.csv).map_err(|e| e.to_string())?;
            }
            w.into_inner().map_err(|e| e.to_string())
        }
    }
}

/// Machine-readable error object printed on computation failure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorObject {
    pub error_kind: String,
    pub message: String,
    pub context: serde_json::Value,
}

impl ErrorObject {
    pub fn write_to(&self, out: &mut dyn Write) {
        let _ = serde_json::to_writer_pretty(&mut *out, self);
        let _ = writeln!(out);
    }
}

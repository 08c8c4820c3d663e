//! Flat records and their CSV and JSON encodings.
//!
//! CSV floats carry 17 significant digits; JSON floats use the shortest
//! representation that parses back to the same bits. Both keep field order.

use serde_json::{json, Map, Value as Json};

use crate::error::Result;
use crate::exact::{DetQReport, IdentityCheck};
use crate::lab::{FitReport, GapReport, MomentReport, QuantFamilyReport, RadiusReport, SplitReport};
use crate::linalg::{Matrix, SpectrumSet};
use crate::trace::{DifferenceCheck, TraceReport};
use crate::zeta::{SpecialValue, TrigammaReport, ZeroIdentityReport, ZeroSum};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(String),
    Floats(Vec<f64>),
    Null,
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Null, Into::into)
    }
}

impl From<Vec<f64>> for Value {
    fn from(v: Vec<f64>) -> Self {
        Value::Floats(v)
    }
}

/// `{:.16e}` prints 17 significant digits.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

impl Value {
    fn csv_cell(&self) -> String {
        match self {
            Value::Int(i) => i.to_string(),
            Value::Float(x) => format_float(*x),
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.clone(),
            Value::Floats(xs) => xs.iter().map(|x| format_float(*x)).collect::<Vec<_>>().join(";"),
            Value::Null => String::new(),
        }
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Int(i) => json!(i),
            Value::Float(x) => json!(x),
            Value::Bool(b) => json!(b),
            Value::Text(s) => json!(s),
            Value::Floats(xs) => Json::Array(xs.iter().map(|x| json!(x)).collect()),
            Value::Null => Json::Null,
        }
    }
}

pub type Row = Vec<(&'static str, Value)>;

/// A report type that serializes as one flat row with snake_case columns.
pub trait Record {
    fn fields(&self) -> Row;
}

/// Rows of one command plus the metadata written with them.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub command: String,
    pub params: Map<String, Json>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    pub failures: usize,
}

impl Table {
    pub fn new(command: &str, params: Map<String, Json>, columns: &[&'static str]) -> Self {
        Self { command: command.to_string(), params, columns: columns.to_vec(), ..Self::default() }
    }

    pub fn push<R: Record + ?Sized>(&mut self, record: &R) {
        self.push_row(record.fields());
    }

    /// Appends a row; its columns must match the table's.
    pub fn push_row(&mut self, row: Row) {
        if self.columns.is_empty() && self.rows.is_empty() {
            self.columns = row.iter().map(|(k, _)| *k).collect();
        }
        debug_assert_eq!(self.columns, row.iter().map(|(k, _)| *k).collect::<Vec<_>>());
        if row.iter().any(|(k, v)| *k == "pass" && *v == Value::Bool(false)) {
            self.failures += 1;
        }
        self.rows.push(row.into_iter().map(|(_, v)| v).collect());
    }

    pub fn to_csv(&self) -> Result<Vec<u8>> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
        w.write_record(&self.columns).map_err(csv_error)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Value::csv_cell)).map_err(csv_error)?;
        }
        w.into_inner().map_err(|e| crate::Error::Io(e.to_string()))
    }

    pub fn to_json(&self) -> Result<Vec<u8>> {
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Json> =
                    self.columns.iter().zip(row).map(|(k, v)| (k.to_string(), v.to_json())).collect();
                Json::Object(obj)
            })
            .collect();
        let doc = json!({
            "meta": {
                "command": self.command,
                "params": Json::Object(self.params.clone()),
                "version": env!("CARGO_PKG_VERSION"),
            },
            "rows": rows,
        });
        let mut out = serde_json::to_vec_pretty(&doc).map_err(|e| crate::Error::Io(e.to_string()))?;
        out.push(b'\n');
        Ok(out)
    }
}

fn csv_error(e: csv::Error) -> crate::Error {
    crate::Error::Io(e.to_string())
}

fn complex_cell(re: f64, im: f64) -> String {
    if im == 0.0 {
        format_float(re)
    } else {
        let sign = if im.is_sign_negative() { '-' } else { '+' };
        format!("{}{sign}{}j", format_float(re), format_float(im.abs()))
    }
}

/// One CSV row per matrix row; entries are `re`, or `re+imj` when complex.
pub fn matrix_csv(m: &Matrix<f64>) -> Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    for i in 0..m.dim() {
        w.write_record(m.row(i).iter().map(|z| complex_cell(z.re, z.im))).map_err(csv_error)?;
    }
    w.into_inner().map_err(|e| crate::Error::Io(e.to_string()))
}

/// `{"n", "kind", "entries"}`; entries are numbers, or `[re, im]` pairs
/// when any entry is complex.
pub fn matrix_json(m: &Matrix<f64>, kind: &str) -> Result<Vec<u8>> {
    let complex = m.max_imag() > 0.0;
    let entries: Vec<Json> = (0..m.dim())
        .map(|i| {
            Json::Array(m.row(i).iter().map(|z| if complex { json!([z.re, z.im]) } else { json!(z.re) }).collect())
        })
        .collect();
    let doc = json!({ "n": m.dim(), "kind": kind, "entries": entries });
    let mut out = serde_json::to_vec_pretty(&doc).map_err(|e| crate::Error::Io(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

/// One row per eigenvalue, in the spectrum's order.
pub fn spectrum_rows(s: &SpectrumSet<f64>) -> Vec<Row> {
    s.eigenvalues
        .iter()
        .enumerate()
        .map(|(k, z)| vec![("index", Value::from(k + 1)), ("re", z.re.into()), ("im", z.im.into())])
        .collect()
}

impl Record for TraceReport<f64> {
    fn fields(&self) -> Row {
        vec![
            ("n", self.n.into()),
            ("family", self.family.kind.slug().into()),
            ("trace_sq_matrix", self.trace_sq_matrix.into()),
            ("trace_sq_closed", self.trace_sq_closed.into()),
            ("limit_value", self.limit_value.into()),
            ("normalized", self.normalized.into()),
        ]
    }
}

impl Record for DifferenceCheck<f64> {
    fn fields(&self) -> Row {
        vec![
            ("n", self.n.into()),
            ("theta", self.theta.into()),
            ("left", self.left.into()),
            ("right", self.right.into()),
            ("gap", self.gap.into()),
        ]
    }
}

impl Record for FitReport {
    fn fields(&self) -> Row {
        vec![
            ("n", self.n.into()),
            ("model", self.model.as_str().into()),
            ("deviations", self.deviations.clone().into()),
            ("max_abs", self.max_abs.into()),
            ("rms", self.rms.into()),
            ("zero_present", self.zero_present.into()),
            ("interior_first", self.interior_first.into()),
            ("interior_last", self.interior_last.into()),
            ("interior_max_abs", self.interior_max_abs.into()),
            ("interior_rms", self.interior_rms.into()),
            ("interior_rms_relative", self.interior_rms_relative.into()),
        ]
    }
}

impl Record for GapReport {
    fn fields(&self) -> Row {
        vec![
            ("n", self.n.into()),
            ("max_eigenvalue_gap", self.max_eigenvalue_gap.into()),
            ("pass", self.pass.into()),
        ]
    }
}

impl Record for QuantFamilyReport {
    fn fields(&self) -> Row {
        vec![
            ("n", self.n.into()),
            ("symmetric_gap", self.symmetric_gap.into()),
            ("c_gap", self.c_gap.into()),
            ("p_residual", self.p_residual.into()),
            ("q_residual", self.q_residual.into()),
            ("pass", self.pass.into()),
        ]
    }
}

impl Record for SplitReport {
    fn fields(&self) -> Row {
        vec![
            ("n", self.n.into()),
            ("theta", self.theta.into()),
            ("minor_count", self.minor_count.into()),
            ("major_count", self.major_count.into()),
            ("zero_count", self.zero_count.into()),
            ("predicted_minor", self.predicted_minor.into()),
            ("predicted_major", self.predicted_major.into()),
            ("expected_minor_region", self.expected_minor_region.into()),
            ("ks_distance", self.ks_distance.into()),
        ]
    }
}

impl Record for MomentReport {
    fn fields(&self) -> Row {
        vec![
            ("n", self.n.into()),
            ("theta", self.theta.into()),
            ("case", self.case.as_str().into()),
            ("function", self.function.to_string().into()),
            ("empirical", self.empirical.into()),
            ("predicted", self.predicted.into()),
            ("gap", self.gap.into()),
        ]
    }
}

impl Record for RadiusReport {
    fn fields(&self) -> Row {
        vec![
            ("n", self.n.into()),
            ("family", self.family.slug().into()),
            ("radius", self.radius.into()),
            ("pass", self.pass.into()),
        ]
    }
}

impl Record for DetQReport {
    fn fields(&self) -> Row {
        vec![
            ("n", self.n.into()),
            ("sign", i64::from(self.sign).into()),
            ("log_abs", self.log_abs.into()),
            ("predicted_sign", i64::from(self.predicted_sign).into()),
            ("predicted_log_abs", self.predicted_log_abs.into()),
            ("pass", self.pass.into()),
        ]
    }
}

impl Record for IdentityCheck {
    fn fields(&self) -> Row {
        vec![
            ("identity", self.identity.into()),
            ("n", self.n.into()),
            ("k", self.k.into()),
            ("value", self.value.into()),
            ("predicted", self.predicted.into()),
            ("gap", self.gap.into()),
            ("pass", self.pass.into()),
        ]
    }
}

impl Record for SpecialValue {
    fn fields(&self) -> Row {
        vec![
            ("name", self.name.as_str().into()),
            ("value", self.value.into()),
            ("series_terms", self.series_terms.into()),
            ("error_bound", self.error_bound.into()),
        ]
    }
}

impl Record for TrigammaReport {
    fn fields(&self) -> Row {
        vec![
            ("series_value", self.series_value.into()),
            ("identity_value", self.identity_value.into()),
            ("gap", self.gap.into()),
            ("terms", self.terms.into()),
        ]
    }
}

impl Record for ZeroSum {
    fn fields(&self) -> Row {
        vec![("partial", self.partial.into()), ("used", self.used.into())]
    }
}

impl Record for ZeroIdentityReport {
    fn fields(&self) -> Row {
        vec![
            ("partial", self.partial.into()),
            ("used", self.used.into()),
            ("log_deriv2", self.log_deriv2.into()),
            ("rhs", self.rhs.into()),
            ("gap", self.gap.into()),
            ("truncation_error", self.truncation_error.into()),
            ("pass", self.pass.into()),
        ]
    }
}

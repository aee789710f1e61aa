//! Tabular experiment reports with CSV and JSON renderings.

use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// A single report cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    UInt(u64),
    Float(f64),
    Bool(bool),
    Text(String),
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::UInt(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::UInt(v as u64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::UInt(v as u64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::UInt(v) => json!(v),
            // serde_json maps non-finite floats to null
            Cell::Float(v) => json!(v),
            Cell::Bool(v) => json!(v),
            Cell::Text(v) => json!(v),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::UInt(v) => v.to_string(),
            Cell::Float(v) => format_sig(*v, 12),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => csv_quote(v),
        }
    }
}

/// `v` rounded to `digits` significant digits, fixed notation for moderate exponents.
pub fn format_sig(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return if v.is_nan() { "nan".into() } else if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Cell>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: BTreeMap<String, Cell>,
    pub schema_version: u32,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            summary: BTreeMap::new(),
            schema_version: SCHEMA_VERSION,
        }
    }

    pub fn param(&mut self, key: &str, v: impl Into<Cell>) -> &mut Self {
        self.parameters.insert(key.to_string(), v.into());
        self
    }

    pub fn summarize(&mut self, key: &str, v: impl Into<Cell>) -> &mut Self {
        self.summary.insert(key.to_string(), v.into());
        self
    }

    /// Appends a row; panics if its width differs from the column set.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width for {}", self.command);
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::to_csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        let map = |m: &BTreeMap<String, Cell>| -> Value {
            Value::Object(m.iter().map(|(k, v)| (k.clone(), v.to_json())).collect::<Map<_, _>>())
        };
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(self.columns.iter().cloned().zip(row.iter().map(Cell::to_json)).collect::<Map<_, _>>())
            })
            .collect();
        json!({
            "command": self.command,
            "parameters": map(&self.parameters),
            "rows": rows,
            "summary": map(&self.summary),
            "schema_version": self.schema_version,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("serializable");
        s.push('\n');
        s
    }
}

/// Structural check of a JSON report: the five top-level keys with their types.
pub fn validate_json(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("report is not an object")?;
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    if keys != ["command", "parameters", "rows", "schema_version", "summary"] {
        return Err(format!("unexpected keys {keys:?}"));
    }
    if !obj["command"].is_string() {
        return Err("command is not a string".into());
    }
    if obj["schema_version"].as_u64() != Some(SCHEMA_VERSION as u64) {
        return Err("schema_version is not 1".into());
    }
    for key in ["parameters", "summary"] {
        let m = obj[key].as_object().ok_or(format!("{key} is not an object"))?;
        if m.values().any(|x| x.is_array() || x.is_object()) {
            return Err(format!("{key} has a nested value"));
        }
    }
    let rows = obj["rows"].as_array().ok_or("rows is not an array")?;
    let mut columns: Option<Vec<&String>> = None;
    for row in rows {
        let r = row.as_object().ok_or("row is not an object")?;
        let cols: Vec<&String> = r.keys().collect();
        match &columns {
            None => columns = Some(cols),
            Some(c) if *c != cols => return Err("rows have differing columns".into()),
            _ => {}
        }
        if r.values().any(|x| x.is_array() || x.is_object()) {
            return Err("row has a nested value".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(26.74123456789012, 12), "26.7412345679");
        assert_eq!(format_sig(1.0, 12), "1");
        assert_eq!(format_sig(-0.000123, 12), "-0.000123");
        assert_eq!(format_sig(1.5e-9, 12), "1.5e-9");
        assert_eq!(format_sig(123456789012345.0, 12), "1.23456789012e14");
        assert_eq!(format_sig(999999999999.7, 12), "1e12");
        assert_eq!(format_sig(0.0, 12), "0");
    }

    #[test]
    fn csv_and_json_shapes() {
        let mut r = Report::new("demo", &["a", "b"]);
        r.param("x", 5u64).summarize("ok", true);
        r.push(vec![Cell::from(1i64), Cell::from("p,q")]);
        assert_eq!(r.to_csv(), "a,b\n1,\"p,q\"\n");
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        validate_json(&v).unwrap();
        assert_eq!(v["rows"][0]["b"], "p,q");
        assert_eq!(v["schema_version"], 1);
    }
}

use std::io::{self, Write};

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One JSON line of output.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Value>,
    /// Human-readable lines for `--format text`.
    #[serde(skip)]
    pub text: Vec<String>,
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        Value::Null => Map::new(),
        other => Map::from_iter([("value".to_string(), other)]),
    }
}

impl RunReport {
    pub fn pass(command: &str, inputs: Value, results: Value) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: object(inputs),
            results: object(results),
            status: Status::Pass,
            witnesses: Vec::new(),
            text: Vec::new(),
        }
    }

    /// Pass when `witnesses` is empty, Fail otherwise.
    pub fn check(command: &str, inputs: Value, results: Value, witnesses: Vec<Value>) -> Self {
        let mut r = RunReport::pass(command, inputs, results);
        if !witnesses.is_empty() {
            r.status = Status::Fail;
            r.witnesses = witnesses;
        }
        r
    }

    pub fn error(command: &str, inputs: Value, message: String) -> Self {
        let mut r = RunReport::pass(command, inputs, serde_json::json!({ "error": message }));
        r.status = Status::Error;
        r
    }

    pub fn with_text(mut self, lines: impl IntoIterator<Item = String>) -> Self {
        self.text = lines.into_iter().collect();
        self
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Pass
    }

    fn text_lines(&self) -> Vec<String> {
        if !self.text.is_empty() && self.status != Status::Error {
            let mut lines = self.text.clone();
            if self.status == Status::Fail {
                lines.push(format!("FAIL {}", self.witness_summary()));
            }
            return lines;
        }
        let label = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let fields: Vec<String> = self.results.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        let mut line = format!("{label} {} {}", self.command, fields.join(" "));
        if self.status == Status::Fail {
            line.push(' ');
            line.push_str(&self.witness_summary());
        }
        vec![line.trim_end().to_string()]
    }

    fn witness_summary(&self) -> String {
        let first = self.witnesses.first().map(plain).unwrap_or_default();
        format!("witnesses={} first={first}", self.witnesses.len())
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn emit(out: &mut impl Write, report: &RunReport, format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            let line = serde_json::to_string(report).map_err(io::Error::other)?;
            writeln!(out, "{line}")
        }
        Format::Text => report.text_lines().iter().try_for_each(|l| writeln!(out, "{l}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fail_carries_witnesses() {
        let r = RunReport::check("x", json!({}), json!({}), vec![json!({"a": 1})]);
        assert_eq!(r.status, Status::Fail);
        let r = RunReport::check("x", json!({}), json!({}), vec![]);
        assert!(r.is_ok());
    }

    #[test]
    fn json_shape() {
        let r = RunReport::pass("map", json!({"path": "ud"}), json!({"word": "ud"})).with_text(["ud".into()]);
        let mut buf = Vec::new();
        emit(&mut buf, &r, Format::Json).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"command\":\"map\",\"inputs\":{\"path\":\"ud\"},\"results\":{\"word\":\"ud\"},\"status\":\"pass\"}\n"
        );
        let mut buf = Vec::new();
        emit(&mut buf, &r, Format::Text).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "ud\n");
    }
}

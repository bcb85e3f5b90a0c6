//! Report plumbing shared by every subcommand.
//!
//! A run produces either a [`Report`] (schema 1) listing each asserted
//! identity with its status, or a [`CliError`] carrying a machine-readable
//! code. Exit codes: 0 when every check passes, 1 when any check fails,
//! 2 on configuration errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One asserted identity.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of a subcommand: configuration echo, per-identity checks, and
/// command-specific computed values. Key order inside maps is alphabetical,
/// check order is the order of insertion; both are deterministic.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub config: Map<String, Value>,
    pub checks: Vec<Check>,
    pub values: Map<String, Value>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            schema: SCHEMA,
            command: command.to_owned(),
            config: Map::new(),
            checks: Vec::new(),
            values: Map::new(),
            status: Status::Pass,
        }
    }

    pub fn config(&mut self, key: &str, value: impl Into<Value>) {
        self.config.insert(key.to_owned(), value.into());
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.push_check(name.into(), ok, None);
    }

    pub fn check_with(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push_check(name.into(), ok, Some(detail.into()));
    }

    fn push_check(&mut self, name: String, ok: bool, detail: Option<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        if !ok {
            self.status = Status::Fail;
        }
        self.checks.push(Check { name, status, detail });
    }

    pub fn value(&mut self, key: &str, value: impl Into<Value>) {
        self.values.insert(key.to_owned(), value.into());
    }

    pub fn all_passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "bozec-klr {}", self.command);
        for (key, value) in &self.config {
            let _ = writeln!(out, "  {key} = {}", render_value_inline(value));
        }
        for check in &self.checks {
            let status = match check.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            match &check.detail {
                Some(detail) => {
                    let _ = writeln!(out, "check {:<40} {status}  ({detail})", check.name);
                }
                None => {
                    let _ = writeln!(out, "check {:<40} {status}", check.name);
                }
            }
        }
        for (key, value) in &self.values {
            render_value_block(&mut out, key, value, 0);
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(out, "status: {status}");
        out
    }
}

/// Inline rendering for scalars and flat lists; longer structures fall back
/// to block form via `render_value_block`.
fn render_value_inline(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|v| !matches!(v, Value::Array(_) | Value::Object(_))) => {
            let parts: Vec<String> = items.iter().map(render_value_inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn render_value_block(out: &mut String, key: &str, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Array(rows)
            if rows.iter().any(|v| matches!(v, Value::Array(_) | Value::Object(_))) =>
        {
            let _ = writeln!(out, "{pad}{key}:");
            for row in rows {
                let _ = writeln!(out, "{pad}  {}", render_value_inline(row));
            }
        }
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, v) in map {
                render_value_block(out, k, v, indent + 1);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{key} = {}", render_value_inline(other));
        }
    }
}

/// A configuration or environment failure. Reported with exit code 2; the
/// `code` field is stable and machine-readable.
#[derive(Debug, Serialize)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn new(code: &'static str, message: impl Into<String>) -> CliError {
        CliError { code, message: message.into() }
    }

    pub fn flag(message: impl Into<String>) -> CliError {
        CliError::new("config.flag", message)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let payload = json!({
                    "schema": SCHEMA,
                    "error": { "code": self.code, "message": self.message },
                });
                let mut s = serde_json::to_string_pretty(&payload).expect("error serializes");
                s.push('\n');
                s
            }
            Format::Text => format!("error[{}]: {}\n", self.code, self.message),
        }
    }
}

impl From<bozec_klr::cartan::CartanError> for CliError {
    fn from(err: bozec_klr::cartan::CartanError) -> CliError {
        CliError::new("config.datum", err.to_string())
    }
}

impl From<bozec_klr::uminus::UminusError> for CliError {
    fn from(err: bozec_klr::uminus::UminusError) -> CliError {
        CliError::new("config.domain", err.to_string())
    }
}

impl From<bozec_klr::klr::KlrError> for CliError {
    fn from(err: bozec_klr::klr::KlrError) -> CliError {
        CliError::new("config.domain", err.to_string())
    }
}

impl From<bozec_klr::cyclotomic::CycloError> for CliError {
    fn from(err: bozec_klr::cyclotomic::CycloError) -> CliError {
        let code = match err {
            bozec_klr::cyclotomic::CycloError::Bound { .. } => "config.bound",
            _ => "config.domain",
        };
        CliError::new(code, err.to_string())
    }
}

impl From<bozec_klr::symgrp::SymgrpError> for CliError {
    fn from(err: bozec_klr::symgrp::SymgrpError) -> CliError {
        CliError::new("config.domain", err.to_string())
    }
}

/// Writes the rendered payload to the given path or stdout.
pub fn emit(rendered: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, rendered),
        None => io::stdout().write_all(rendered.as_bytes()),
    }
}

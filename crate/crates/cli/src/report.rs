use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub summary: String,
    pub details: Value,
}

impl CheckResult {
    pub fn new(name: &str, status: CheckStatus, summary: impl Into<String>, details: Value) -> Self {
        CheckResult { name: name.into(), status, summary: summary.into(), details }
    }

    pub fn verdict(name: &str, ok: bool, summary: impl Into<String>, details: Value) -> Self {
        Self::new(name, if ok { CheckStatus::Pass } else { CheckStatus::Fail }, summary, details)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Partial,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Vec<CheckResult>,
    pub status: Status,
    pub timing_ms: u128,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, results: Vec<CheckResult>, timing_ms: u128) -> Self {
        let status = if results.iter().any(|r| r.status == CheckStatus::Fail) {
            Status::Fail
        } else if results.iter().any(|r| r.status == CheckStatus::Inconclusive) {
            Status::Partial
        } else {
            Status::Pass
        };
        RunReport { command: command.into(), inputs, results, status, timing_ms }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Pass | Status::Partial => 0,
            Status::Fail => 1,
        }
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Partial => "PARTIAL",
        };
        let mut out = format!("{}: {status} ({} ms)\n", self.command, self.timing_ms);
        for r in &self.results {
            let tag = match r.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Inconclusive => "inconclusive",
                CheckStatus::Skipped => "skipped",
            };
            out.push_str(&format!("  [{tag}] {}: {}\n", r.name, r.summary));
        }
        out
    }
}

/// Structured input error, reported with exit code 2.
#[derive(Clone, Debug)]
pub struct InputError {
    pub code: String,
    pub message: String,
}

impl InputError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        InputError { code: code.into(), message: message.into() }
    }

    pub fn to_json(&self, command: &str) -> Value {
        json!({"command": command, "status": "error", "error": {"code": self.code, "message": self.message}})
    }
}

impl From<eadhm_core::CoreError> for InputError {
    fn from(e: eadhm_core::CoreError) -> Self {
        InputError::new(e.code(), e.to_string())
    }
}

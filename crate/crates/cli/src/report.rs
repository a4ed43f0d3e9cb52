//! Verdict-carrying run reports.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// A measured disagreement with a published claim; does not fail the run.
    #[serde(rename = "FINDING")]
    Finding,
    /// Not evaluated in this run.
    #[serde(rename = "SKIP")]
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub verdicts: Vec<Verdict>,
    pub results: Map<String, Value>,
    pub artifacts: Vec<String>,
    /// Wall time; only recorded on request so that reports stay byte-stable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> RunReport {
        RunReport {
            command: command.into(),
            inputs,
            verdicts: Vec::new(),
            results: Map::new(),
            artifacts: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>, witness: Option<Value>) {
        self.verdicts.push(Verdict { name: name.into(), status, detail: detail.into(), witness });
    }

    /// PASS if `ok`, FAIL with `witness` otherwise.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>, witness: impl FnOnce() -> Value) {
        let w = (!ok).then(witness);
        self.push(name, if ok { Status::Pass } else { Status::Fail }, detail, w);
    }

    /// PASS if `ok`, FINDING with `witness` otherwise.
    pub fn claim(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>, witness: impl FnOnce() -> Value) {
        let w = (!ok).then(witness);
        self.push(name, if ok { Status::Pass } else { Status::Finding }, detail, w);
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.into(), value);
    }

    pub fn absorb(&mut self, prefix: &str, other: RunReport) {
        for mut v in other.verdicts {
            v.name = format!("{prefix}/{}", v.name);
            self.verdicts.push(v);
        }
        self.results.insert(prefix.into(), Value::Object(other.results));
    }

    pub fn count(&self, status: Status) -> usize {
        self.verdicts.iter().filter(|v| v.status == status).count()
    }

    pub fn has_fail(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_fail())
    }

    /// One line per verdict, for the terminal.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            let tag = match v.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Finding => "FINDING",
                Status::Skip => "SKIP",
            };
            out.push_str(&format!("{tag:<8} {}: {}\n", v.name, v.detail));
        }
        out.push_str(&format!(
            "{}: {} pass, {} fail, {} finding, {} skip\n",
            self.command,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Finding),
            self.count(Status::Skip)
        ));
        out
    }
}

use std::process::ExitCode;

use lrb::analysis::Verdict;
use lrb::LrbError;
use serde::Serialize;
use serde_json::{json, Value};

use crate::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lrb(#[from] LrbError),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Lrb(LrbError::Inconsistent(_)) => 3,
            _ => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Lrb(LrbError::Inconsistent(_)) => "inconsistent",
            CliError::Lrb(LrbError::Precondition(_)) => "precondition",
            CliError::Lrb(LrbError::Parse(_)) => "parse",
            CliError::Lrb(_) => "invalid",
        }
    }
}

/// One command's output on one instance.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub instance: String,
    pub field: String,
    pub result: Value,
    pub failures: Vec<Value>,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &str, instance: &str, field: &str) -> Report {
        Report {
            command: command.into(),
            instance: instance.into(),
            field: field.into(),
            result: Value::Null,
            failures: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn fail(&mut self, claim: &str, detail: Value) {
        self.failures.push(json!({"instance": self.instance, "command": self.command, "claim": claim, "detail": detail}));
    }

    /// Record verdicts: text lines, the JSON list, and failures.
    pub fn verdicts(&mut self, vs: &[Verdict]) {
        for v in vs {
            self.line(format!("{} {}", if v.pass { "PASS" } else { "FAIL" }, v.claim));
            if !v.pass {
                self.fail(&v.claim, json!({"lhs": v.lhs_character, "rhs": v.rhs_character}));
            }
        }
        self.result = serde_json::to_value(vs).expect("serialisable");
    }
}

pub fn emit(command: &str, reports: &[Report], format: Format) -> ExitCode {
    let failures: Vec<&Value> = reports.iter().flat_map(|r| &r.failures).collect();
    let pass = failures.is_empty();
    match format {
        Format::Json => {
            let out = if reports.len() == 1 && command != "verify-all" {
                let mut v = serde_json::to_value(&reports[0]).expect("serialisable");
                v["pass"] = json!(pass);
                v
            } else {
                json!({"command": command, "reports": reports, "failures": failures, "pass": pass})
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serialisable"));
        }
        Format::Text => {
            for r in reports {
                println!("== {} {} (field {})", r.command, r.instance, r.field);
                for l in &r.text {
                    println!("{l}");
                }
            }
            if pass {
                println!("all checks passed");
            } else {
                println!("{} check(s) failed:", failures.len());
                println!("{}", serde_json::to_string(&failures).expect("serialisable"));
            }
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

pub fn emit_error(command: &str, e: &CliError, format: Format) -> ExitCode {
    match format {
        Format::Json => {
            let v = json!({"command": command, "error": {"kind": e.kind(), "message": e.to_string()}, "pass": false});
            println!("{}", serde_json::to_string_pretty(&v).expect("serialisable"));
        }
        Format::Text => eprintln!("error ({}): {e}", e.kind()),
    }
    ExitCode::from(e.code())
}

use serde::Serialize;

use crate::group::classfn::ClassFunction;

/// One checked identity between two independently computed characters.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub instance: String,
    pub lhs_character: serde_json::Value,
    pub rhs_character: serde_json::Value,
    pub pass: bool,
}

impl Verdict {
    pub fn compare(claim: impl Into<String>, instance: &str, lhs: &ClassFunction, rhs: &ClassFunction) -> Verdict {
        Verdict {
            claim: claim.into(),
            instance: instance.to_string(),
            lhs_character: lhs.to_json(),
            rhs_character: rhs.to_json(),
            pass: lhs == rhs,
        }
    }

    /// A verdict on integers (dimensions, counts).
    pub fn numbers(claim: impl Into<String>, instance: &str, lhs: i64, rhs: i64) -> Verdict {
        Verdict {
            claim: claim.into(),
            instance: instance.to_string(),
            lhs_character: lhs.into(),
            rhs_character: rhs.into(),
            pass: lhs == rhs,
        }
    }
}

pub fn all_pass(vs: &[Verdict]) -> bool {
    vs.iter().all(|v| v.pass)
}

pub fn failures(vs: &[Verdict]) -> Vec<&Verdict> {
    vs.iter().filter(|v| !v.pass).collect()
}

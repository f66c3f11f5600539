use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// Outcome of one check, with enough data to re-verify it by hand.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub id: String,
    pub status: Status,
    pub witness: Value,
}

impl Verdict {
    pub fn new(id: &str, ok: bool, witness: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Verdict { id: id.to_string(), status, witness }
    }

    pub fn not_applicable(id: &str, reason: impl Into<String>) -> Self {
        Verdict {
            id: id.to_string(),
            status: Status::NotApplicable,
            witness: Value::String(reason.into()),
        }
    }

    /// A check that could not be evaluated because some computation errored.
    pub fn error(id: &str, err: &crate::Error) -> Self {
        Verdict {
            id: id.to_string(),
            status: Status::Fail,
            witness: serde_json::json!({ "error": err.to_string() }),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Render a class function's values as their canonical strings.
pub fn strings<T: ToString>(values: &[T]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

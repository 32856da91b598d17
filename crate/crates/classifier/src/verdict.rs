use serde::{Deserialize, Serialize};

use crate::error::TraceError;
use crate::spec::SpecRecord;
use crate::trace::TraceEntry;

/// Version of the verdict JSON layout.
pub const VERDICT_SCHEMA: u32 = 1;

/// The unique maximal overgroup named by a fired row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OvergroupDesc {
    /// Row identifier, resolvable through [`crate::rows::row_doc`].
    pub row: String,
    /// Structure of `H`, e.g. `GL_1(q) wr S_2`.
    #[serde(rename = "type")]
    pub type_string: String,
    /// `|H|` as a decimal string, when the row determines it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Unique,
    NotUnique,
    OutOfScope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub schema: u32,
    pub spec: SpecRecord,
    pub name: String,
    pub r: u64,
    pub outcome: Outcome,
    pub overgroup: Option<OvergroupDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub trace: Vec<TraceEntry>,
}

impl Verdict {
    pub fn is_unique(&self) -> bool {
        self.outcome == Outcome::Unique
    }

    /// Whether every trace entry reproduces its recorded value.
    pub fn replay(&self) -> Result<bool, TraceError> {
        for entry in &self.trace {
            if !entry.replay()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdicts serialize")
    }
}

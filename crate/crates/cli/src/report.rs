//! Report assembly: a canonical JSON document plus a human-readable summary.
//!
//! The JSON report is deterministic for a fixed instance file (task order
//! follows the file, all collections are ordered); timings appear only in
//! the text summary so reports stay byte-identical across runs.

use std::time::Duration;

use serde::Serialize;

use crate::tasks::{TaskResult, Verdict};

#[derive(Debug, Serialize)]
pub struct Report {
    pub file: String,
    pub tasks: Vec<TaskResult>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(file: String, tasks: Vec<TaskResult>) -> Self {
        let verdict = if tasks.iter().any(|t| t.verdict == Verdict::Fail) {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        Report {
            file,
            tasks,
            verdict,
        }
    }

    pub fn all_passing(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Text summary with per-task timings.
    pub fn summary(&self, timings: &[Duration]) -> String {
        let mut out = String::new();
        out.push_str(&format!("instance: {}\n", self.file));
        for (task, time) in self.tasks.iter().zip(timings) {
            let verdict = match task.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::NotApplicable => "n/a ",
            };
            out.push_str(&format!(
                "  [{verdict}] {:<14} {:<12} ({:.1?})\n",
                task.task, task.target, time
            ));
            if let Some(detail) = &task.detail {
                out.push_str(&format!("         {detail}\n"));
            }
        }
        let overall = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "n/a",
        };
        out.push_str(&format!("verdict: {overall}\n"));
        out
    }
}

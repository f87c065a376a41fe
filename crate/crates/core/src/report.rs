//! Structured outcome of a verification run, serialized as versioned JSON.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub operation: String,
    pub parameters: BTreeMap<String, i64>,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub status: Status,
}

impl Case {
    /// A comparison case; passes iff the rendered values are equal.
    pub fn compare(
        operation: impl Into<String>,
        parameters: &[(&str, i64)],
        expected: impl Display,
        actual: impl Display,
    ) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        Case {
            operation: operation.into(),
            parameters: params(parameters),
            expected,
            actual,
            pass,
            status: if pass { Status::Pass } else { Status::Fail },
        }
    }

    pub fn skipped(operation: impl Into<String>, parameters: &[(&str, i64)], why: &str) -> Self {
        Case {
            operation: operation.into(),
            parameters: params(parameters),
            expected: String::new(),
            actual: why.to_string(),
            pass: false,
            status: Status::Skip,
        }
    }

    /// Sort key: operation then parameters.
    fn key(&self) -> (&str, Vec<(&str, i64)>) {
        (
            &self.operation,
            self.parameters.iter().map(|(k, v)| (k.as_str(), *v)).collect(),
        )
    }
}

fn params(p: &[(&str, i64)]) -> BTreeMap<String, i64> {
    p.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.into(),
            cases: Vec::new(),
            summary: Summary::default(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, case: Case) {
        match case.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Skip => self.summary.skip += 1,
        }
        self.cases.push(case);
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = Case>) {
        for c in cases {
            self.push(c);
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Recomputes the summary from the cases.
    pub fn tally(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.cases {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skip => s.skip += 1,
            }
        }
        s
    }

    /// Stable sort of the cases by operation and parameters.
    pub fn sort_cases(&mut self) {
        self.cases.sort_by(|a, b| a.key().cmp(&b.key()));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// `0` when nothing failed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_tracks_cases() {
        let mut r = CheckReport::new("t");
        r.push(Case::compare("op", &[("n", 1)], 3, 3));
        r.push(Case::compare("op", &[("n", 2)], 3, 4));
        r.push(Case::skipped("op", &[("n", 3)], "offline"));
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skip: 1 });
        assert_eq!(r.summary, r.tally());
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn json_schema_fields() {
        let mut r = CheckReport::new("identities");
        r.push(Case::compare("idd1", &[("u", 2), ("v", 1), ("w", 1)], 2, 2));
        r.note("hello");
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["suite"], "identities");
        assert_eq!(v["summary"]["pass"], 1);
        assert_eq!(v["cases"][0]["status"], "pass");
        assert_eq!(v["cases"][0]["parameters"]["u"], 2);
        assert_eq!(v["notes"][0], "hello");
        assert_eq!(r.exit_code(), 0);
        let back: CheckReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}

//! Check reports shared by the CLI and the verification suites.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub status: Status,
    pub value: Value,
    /// The claim this entry checks.
    pub anchor: String,
}

impl Entry {
    pub fn new(
        name: impl Into<String>,
        status: Status,
        value: impl Serialize,
        anchor: impl Into<String>,
    ) -> Self {
        Entry {
            name: name.into(),
            status,
            value: serde_json::to_value(value).unwrap_or(Value::Null),
            anchor: anchor.into(),
        }
    }

    pub fn check(
        name: impl Into<String>,
        ok: bool,
        value: impl Serialize,
        anchor: impl Into<String>,
    ) -> Self {
        Self::new(name, Status::from_bool(ok), value, anchor)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl Report {
    /// Entries are sorted by name so output is stable for fixed inputs.
    pub fn new(command: impl Into<String>, mut entries: Vec<Entry>) -> Self {
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary::default();
        for e in &entries {
            match e.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Inconclusive => summary.inconclusive += 1,
            }
        }
        Report {
            command: command.into(),
            entries,
            summary,
        }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let tag = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            };
            let _ = writeln!(s, "{tag:<12} {:<40} {}", e.name, compact(&e.value));
        }
        let _ = writeln!(
            s,
            "{}: {} passed, {} failed, {} inconclusive",
            self.command, self.summary.pass, self.summary.fail, self.summary.inconclusive
        );
        s
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_counted() {
        let r = Report::new(
            "verify",
            vec![
                Entry::check("b", true, 1, "x"),
                Entry::check("a", false, "no", "y"),
                Entry::new("c", Status::Inconclusive, Value::Null, "z"),
            ],
        );
        assert_eq!(r.entries[0].name, "a");
        assert_eq!(
            r.summary,
            Summary {
                pass: 1,
                fail: 1,
                inconclusive: 1
            }
        );
        assert!(r.failed());
        assert_eq!(
            r.to_json(),
            Report::new("verify", r.entries.clone()).to_json()
        );
        assert!(r.to_text().contains("FAIL         a"));
    }
}

//! Claim records and their JSON rendering.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One checked statement.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub status: Status,
    /// What was checked, in words.
    pub statement: String,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ClaimRecord {
    pub fn check(id: impl Into<String>, statement: impl Into<String>, pass: bool, witness: Value) -> Self {
        ClaimRecord {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            statement: statement.into(),
            witness,
            reason: None,
            elapsed_ms: None,
        }
    }

    pub fn skipped(id: impl Into<String>, statement: impl Into<String>, reason: impl Into<String>) -> Self {
        ClaimRecord {
            id: id.into(),
            status: Status::Skipped,
            statement: statement.into(),
            witness: Value::Null,
            reason: Some(reason.into()),
            elapsed_ms: None,
        }
    }

    /// A failure caused by an error rather than a counterexample.
    pub fn error(id: impl Into<String>, statement: impl Into<String>, err: impl std::fmt::Display) -> Self {
        let mut r = ClaimRecord::check(id, statement, false, Value::Null);
        r.reason = Some(err.to_string());
        r
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<ClaimRecord>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: ClaimRecord) {
        debug_assert!(self.claims.iter().all(|d| d.id != c.id), "duplicate claim id {}", c.id);
        self.claims.push(c);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.claims {
            self.push(c);
        }
    }

    /// Runs `f`, stamping its elapsed time on every record it produced.
    pub fn timed(&mut self, f: impl FnOnce() -> Vec<ClaimRecord>) {
        let t = Instant::now();
        let recs = f();
        let ms = t.elapsed().as_millis() as u64;
        for mut r in recs {
            r.elapsed_ms = Some(ms);
            self.push(r);
        }
    }

    pub fn get(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(ClaimRecord::passed)
    }

    pub fn failures(&self) -> Vec<&ClaimRecord> {
        self.claims.iter().filter(|c| !c.passed()).collect()
    }

    pub fn count(&self, s: Status) -> usize {
        self.claims.iter().filter(|c| c.status == s).count()
    }

    /// Pretty JSON; keys within records keep declaration order, witness maps are sorted.
    pub fn to_json(&self, with_timing: bool) -> String {
        let mut copy = self.clone();
        if !with_timing {
            for c in &mut copy.claims {
                c.elapsed_ms = None;
            }
        }
        let mut s = serde_json::to_string_pretty(&copy).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per claim.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("{tag} {}: {}\n", c.id, c.statement));
            if let Some(r) = &c.reason {
                out.push_str(&format!("     {r}\n"));
            }
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_is_stable_and_timing_is_optional() {
        let mut r = VerificationReport::new();
        r.timed(|| vec![ClaimRecord::check("a", "one", true, json!({"z": 1, "a": 2}))]);
        r.push(ClaimRecord::skipped("b", "two", "not checked"));
        let plain = r.to_json(false);
        assert!(!plain.contains("elapsed_ms"));
        assert!(r.to_json(true).contains("elapsed_ms"));
        assert!(plain.find("\"a\": 2").unwrap() < plain.find("\"z\": 1").unwrap());
        assert!(plain.find("\"id\"").unwrap() < plain.find("\"status\"").unwrap());
        assert!(r.all_pass());
        r.push(ClaimRecord::check("c", "three", false, Value::Null));
        assert_eq!(r.failures().len(), 1);
    }
}

//! Report records for verification runs. One record per check; the document
//! wraps them with the invocation that produced them and a pass/fail tally.

use qaw_core::{Check, ParamPoint};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub check_name: String,
    pub anchor: String,
    pub seed: u64,
    /// SHA-256 of the parameter point's canonical serialization, so a
    /// failing point can be reproduced exactly from its seed and profile.
    pub point_digest: String,
    pub status: Status,
    /// Empty on pass; leading terms of the nonzero residual on fail.
    pub residual_summary: String,
    /// Wall time of the verification call that produced this check.
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn from_check(
        suite: &str,
        name_prefix: &str,
        seed: u64,
        digest: &str,
        elapsed_ms: u64,
        check: &Check,
    ) -> Self {
        VerificationReport {
            suite: suite.to_owned(),
            check_name: format!("{name_prefix}{}", check.name),
            anchor: check.anchor.to_owned(),
            seed,
            point_digest: digest.to_owned(),
            status: if check.pass {
                Status::Pass
            } else {
                Status::Fail
            },
            residual_summary: check.residual.clone(),
            elapsed_ms,
        }
    }
}

pub fn point_digest(p: &ParamPoint) -> String {
    let mut hasher = Sha256::new();
    hasher.update(p.canonical_string().as_bytes());
    hex::encode(hasher.finalize())
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Document {
    pub tool_version: String,
    pub invocation: serde_json::Value,
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

impl Document {
    pub fn new(invocation: serde_json::Value, mut reports: Vec<VerificationReport>) -> Self {
        reports.sort_by(|a, b| {
            (&a.suite, &a.check_name, a.seed).cmp(&(&b.suite, &b.check_name, b.seed))
        });
        let total = reports.len();
        let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
        Document {
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            invocation,
            reports,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(suite: &str, name: &str, seed: u64, pass: bool) -> VerificationReport {
        let check = if pass {
            Check::pass("x", "anchor")
        } else {
            Check::fail("x", "anchor", "z^0 T^0: 1".to_owned())
        };
        let mut r = VerificationReport::from_check(suite, "", seed, "ab", 3, &check);
        r.check_name = name.to_owned();
        r
    }

    #[test]
    fn from_check_applies_prefix_and_status() {
        let r =
            VerificationReport::from_check("aw", "little/", 7, "cafe", 12, &Check::pass("w", "a"));
        assert_eq!(r.check_name, "little/w");
        assert_eq!(r.status, Status::Pass);
        assert!(r.residual_summary.is_empty());
        assert_eq!((r.seed, r.elapsed_ms), (7, 12));
    }

    #[test]
    fn document_sorts_and_tallies() {
        let doc = Document::new(
            serde_json::json!({}),
            vec![
                report("big", "b", 2, true),
                report("aw", "z", 1, false),
                report("aw", "a", 2, true),
                report("aw", "a", 1, true),
            ],
        );
        let keys: Vec<_> = doc
            .reports
            .iter()
            .map(|r| (r.suite.as_str(), r.check_name.as_str(), r.seed))
            .collect();
        assert_eq!(
            keys,
            [
                ("aw", "a", 1),
                ("aw", "a", 2),
                ("aw", "z", 1),
                ("big", "b", 2)
            ]
        );
        assert_eq!(doc.summary.total, 4);
        assert_eq!(doc.summary.failed, 1);
        assert!(!doc.all_pass());
    }

    #[test]
    fn status_serializes_lowercase() {
        assert_eq!(serde_json::to_string(&Status::Pass).unwrap(), "\"pass\"");
        assert_eq!(serde_json::to_string(&Status::Fail).unwrap(), "\"fail\"");
    }
}

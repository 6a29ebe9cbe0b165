use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome of one check. A failing report always carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed_ms: f64,
}

impl CheckReport {
    pub(crate) fn start(check: &str) -> ReportBuilder {
        ReportBuilder {
            check: check.to_string(),
            params: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    /// Same check, parameters, status and witness; timing ignored.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.check == other.check
            && self.params == other.params
            && self.status == other.status
            && self.witness == other.witness
    }

    /// Key for the canonical report order: check name, then parameters.
    pub fn sort_key(&self) -> (String, String) {
        (
            self.check.clone(),
            serde_json::to_string(&self.params).expect("params serialize"),
        )
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "[{}] {} {}", self.status.to_string().to_uppercase(), self.check, params.join(" "))?;
        write!(f, " ({:.1} ms)", self.elapsed_ms)?;
        if let Some(w) = &self.witness {
            for line in w.lines() {
                write!(f, "\n    {line}")?;
            }
        }
        Ok(())
    }
}

pub(crate) struct ReportBuilder {
    check: String,
    params: BTreeMap<String, Value>,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub(crate) fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    fn finish(self, status: Status, witness: Option<String>) -> CheckReport {
        let micros = self.started.elapsed().as_micros() as f64;
        CheckReport {
            check: self.check,
            params: self.params,
            status,
            witness,
            elapsed_ms: micros / 1000.0,
        }
    }

    pub(crate) fn pass(self) -> CheckReport {
        self.finish(Status::Pass, None)
    }

    pub(crate) fn fail(self, witness: impl Into<String>) -> CheckReport {
        self.finish(Status::Fail, Some(witness.into()))
    }

    /// Skipped reports record the reason under the `skip_reason` parameter.
    pub(crate) fn skipped(mut self, reason: impl Into<String>) -> CheckReport {
        self.set("skip_reason", reason.into());
        self.finish(Status::Skipped, None)
    }

    /// Pass when `failures` is empty, otherwise fail with them joined line by line.
    pub(crate) fn conclude(self, failures: Vec<String>) -> CheckReport {
        if failures.is_empty() {
            self.pass()
        } else {
            self.fail(failures.join("\n"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = CheckReport::start("cmn").param("p", 2).param("t", 1).fail("x1.x2");
        let v = serde_json::to_value(&r).unwrap();
        let obj = v.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
        assert_eq!(keys.len(), 5);
        for k in ["check", "params", "status", "witness", "elapsed_ms"] {
            assert!(obj.contains_key(k), "{k}");
        }
        assert_eq!(obj["status"], "fail");
        assert_eq!(obj["witness"], "x1.x2");
        assert!(obj["elapsed_ms"].is_number());
        let p = CheckReport::start("cmn").pass();
        assert_eq!(serde_json::to_value(&p).unwrap()["witness"], Value::Null);
    }

    #[test]
    fn failures_carry_witnesses() {
        let r = CheckReport::start("x").conclude(vec!["a".into(), "b".into()]);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness.as_deref(), Some("a\nb"));
        assert_eq!(CheckReport::start("x").conclude(vec![]).status, Status::Pass);
    }
}

//! Structured pass/fail results for law checks.
//!
//! A [`LawReport`] groups the [`LawCheck`]s performed on one subject. Every
//! failing check carries at least one [`Witness`]; passing and skipped checks
//! carry none.

use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

/// Maximum number of witnesses stored per check. Further failures are only counted.
pub const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    Sampled { seed: u64, count: usize },
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Exhaustive => write!(f, "exhaustive"),
            Method::Sampled { seed, count } => write!(f, "sampled(seed={seed}, count={count})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Not evaluated because a prerequisite check failed.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

/// A counterexample: named values in the order they were recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    bindings: Vec<(String, String)>,
}

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: impl Into<String>, value: impl fmt::Display) -> Self {
        self.bindings.push((name.into(), value.to_string()));
        self
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.bindings
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    pub fn bindings(&self) -> &[(String, String)] {
        &self.bindings
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.bindings.len()))?;
        for (k, v) in &self.bindings {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// The outcome of checking one law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub check: String,
    pub method: Method,
    pub cases: u64,
    pub failures: u64,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        LawCheck {
            check: name.into(),
            method: Method::Exhaustive,
            cases: 0,
            failures: 0,
            status: Status::Skipped,
            witnesses: Vec::new(),
            note: Some(reason.into()),
        }
    }
}

/// Accumulates cases for a single law.
#[derive(Debug)]
pub struct CheckBuilder {
    check: String,
    method: Method,
    cases: u64,
    failures: u64,
    witnesses: Vec<Witness>,
    note: Option<String>,
}

impl CheckBuilder {
    pub fn new(check: impl Into<String>) -> Self {
        CheckBuilder {
            check: check.into(),
            method: Method::Exhaustive,
            cases: 0,
            failures: 0,
            witnesses: Vec::new(),
            note: None,
        }
    }

    pub fn method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Records one case; `witness` is only built when the case fails.
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> Witness) -> bool {
        self.cases += 1;
        if !ok {
            self.fail_with(witness());
        }
        ok
    }

    pub fn fail_with(&mut self, witness: Witness) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn failures(&self) -> u64 {
        self.failures
    }

    pub fn finish(self) -> LawCheck {
        let status = if self.failures > 0 {
            Status::Fail
        } else {
            Status::Pass
        };
        LawCheck {
            check: self.check,
            method: self.method,
            cases: self.cases,
            failures: self.failures,
            status,
            witnesses: self.witnesses,
            note: self.note,
        }
    }
}

/// All checks performed on one subject, in the order they were run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub subject: String,
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn new(subject: impl Into<String>) -> Self {
        LawReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: LawCheck) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: LawReport) {
        self.checks.extend(other.checks);
    }

    /// Appends the checks of `other` with their names prefixed.
    pub fn extend_prefixed(&mut self, prefix: &str, other: LawReport) {
        for mut c in other.checks {
            c.check = format!("{prefix}.{}", c.check);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn get(&self, check: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.check == check)
    }

    /// Status of the named check; `None` if it was never run.
    pub fn status(&self, check: &str) -> Option<Status> {
        self.get(check).map(|c| c.status)
    }

    pub fn failing(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Checks sorted by name, stable within equal names.
    pub fn sorted(&self) -> LawReport {
        let mut checks = self.checks.clone();
        checks.sort_by(|a, b| a.check.cmp(&b.check));
        LawReport {
            subject: self.subject.clone(),
            checks,
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.subject)?;
        for c in &self.checks {
            writeln!(
                f,
                "{}  {:<48} {:<34} cases={}",
                c.status,
                c.check,
                c.method.to_string(),
                c.cases
            )?;
            if let Some(note) = &c.note {
                writeln!(f, "      note: {note}")?;
            }
            for w in &c.witnesses {
                writeln!(f, "      witness: {w}")?;
            }
            if c.failures > c.witnesses.len() as u64 {
                writeln!(
                    f,
                    "      ... {} more failures",
                    c.failures - c.witnesses.len() as u64
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_iff_witness() {
        let mut b = CheckBuilder::new("x");
        b.case(true, Witness::new);
        let c = b.finish();
        assert_eq!(c.status, Status::Pass);
        assert!(c.witnesses.is_empty());

        let mut b = CheckBuilder::new("y");
        for i in 0..20 {
            b.case(false, || Witness::new().with("i", i));
        }
        let c = b.finish();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.failures, 20);
        assert_eq!(c.witnesses.len(), MAX_WITNESSES);
        assert_eq!(c.witnesses[0].get("i"), Some("0"));
    }

    #[test]
    fn skipped_counts_as_passed() {
        let mut r = LawReport::new("s");
        r.push(LawCheck::skipped("a", "prerequisite failed"));
        assert!(r.passed());
        assert_eq!(r.status("a"), Some(Status::Skipped));
    }
}

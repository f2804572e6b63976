//! Check records, JSON-lines output and the summary table.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Recorded, not judged.
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    /// Acceptance criterion the check belongs to, 0 for none.
    pub criterion: u8,
    pub about: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    /// Wall time; excluded from comparisons between runs.
    pub millis: u128,
}

impl Check {
    pub fn new(id: impl Into<String>, criterion: u8, about: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            criterion,
            about: about.into(),
            expected: String::new(),
            computed: String::new(),
            verdict: Verdict::Info,
            millis: 0,
        }
    }

    /// Passes iff `computed == expected`.
    pub fn eq<T: PartialEq + std::fmt::Debug>(mut self, expected: T, computed: T) -> Self {
        self.verdict = if expected == computed { Verdict::Pass } else { Verdict::Fail };
        self.expected = fmt_value(&expected);
        self.computed = fmt_value(&computed);
        self
    }

    pub fn holds(mut self, ok: bool, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        self.verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        self.expected = expected.into();
        self.computed = computed.into();
        self
    }

    pub fn info(mut self, computed: impl Into<String>) -> Self {
        self.verdict = Verdict::Info;
        self.computed = computed.into();
        self
    }

    pub fn timed(mut self, since: Instant) -> Self {
        self.millis = since.elapsed().as_millis();
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

fn fmt_value<T: std::fmt::Debug>(v: &T) -> String {
    let s = format!("{v:?}");
    s.trim_matches('"').to_string()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    /// Checks of one criterion.
    pub fn criterion(&self, k: u8) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.criterion == k).collect()
    }

    pub fn criterion_passed(&self, k: u8) -> bool {
        let cs = self.criterion(k);
        !cs.is_empty() && cs.iter().all(|c| c.passed())
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).unwrap());
            out.push('\n');
        }
        out
    }

    pub fn summary_table(&self) -> String {
        let w = self.checks.iter().map(|c| c.id.chars().count()).max().unwrap_or(2).max(5);
        let mut out = String::new();
        writeln!(out, "{:<w$}  {:>4}  {:<7}  {:>8}  result", "check", "crit", "verdict", "ms").unwrap();
        for c in &self.checks {
            let verdict = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Info => "info",
            };
            let mut result = c.computed.clone();
            if c.verdict == Verdict::Fail {
                write!(result, " (expected {})", c.expected).unwrap();
            }
            if result.chars().count() > 80 {
                result = result.chars().take(77).collect::<String>() + "...";
            }
            writeln!(out, "{:<w$}  {:>4}  {:<7}  {:>8}  {}", c.id, c.criterion, verdict, c.millis, result).unwrap();
        }
        let judged = self.checks.iter().filter(|c| c.verdict != Verdict::Info).count();
        let failed = self.failures().len();
        writeln!(out, "{} checks judged, {} passed, {} failed", judged, judged - failed, failed).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let mut r = SuiteReport::default();
        r.push(Check::new("a", 1, "x").eq(2, 2));
        r.push(Check::new("b", 1, "x").info("note"));
        assert!(r.passed() && r.criterion_passed(1) && !r.criterion_passed(2));
        r.push(Check::new("c", 2, "x").eq("p", "q"));
        assert!(!r.passed());
        assert_eq!(r.to_jsonl().lines().count(), 3);
        assert!(r.summary_table().contains("FAIL"));
    }
}

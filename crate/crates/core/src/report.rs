//! Pass/fail reports for identity and conjecture checks.

use std::fmt;

/// One checked case with both sides rendered.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Case {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl Case {
    pub fn compare<T: PartialEq + fmt::Display>(label: impl Into<String>, expected: &T, actual: &T) -> Self {
        Self {
            label: label.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed: expected == actual,
        }
    }

    /// A case that holds or fails with a free-form explanation.
    pub fn check(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        Self { label: label.into(), expected: detail.clone(), actual: detail, passed }
    }
}

/// Verdicts for a batch of cases. A failing report always has a
/// counterexample: the first failing case, with both sides rendered.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureReport {
    pub name: String,
    pub ranges: String,
    pub cases: Vec<Case>,
    /// Cases left out, with the reason.
    pub skipped: Vec<String>,
}

impl ConjectureReport {
    pub fn new(name: impl Into<String>, ranges: impl Into<String>) -> Self {
        Self { name: name.into(), ranges: ranges.into(), cases: Vec::new(), skipped: Vec::new() }
    }

    pub fn with_cases(name: impl Into<String>, ranges: impl Into<String>, cases: Vec<Case>) -> Self {
        Self { name: name.into(), ranges: ranges.into(), cases, skipped: Vec::new() }
    }

    pub fn push(&mut self, case: Case) {
        self.cases.push(case);
    }

    pub fn compare<T: PartialEq + fmt::Display>(&mut self, label: impl Into<String>, expected: &T, actual: &T) -> bool {
        let case = Case::compare(label, expected, actual);
        let ok = case.passed;
        self.cases.push(case);
        ok
    }

    pub fn extend(&mut self, other: ConjectureReport) {
        self.cases.extend(other.cases);
        self.skipped.extend(other.skipped);
    }

    pub fn passed(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.passed)
    }

    pub fn num_cases(&self) -> usize {
        self.cases.len()
    }

    pub fn num_passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn counterexample(&self) -> Option<&Case> {
        self.cases.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} [{}] {}/{} cases", self.name, self.ranges, self.num_passed(), self.num_cases())?;
        if !self.skipped.is_empty() {
            write!(f, ", {} skipped", self.skipped.len())?;
        }
        if let Some(c) = self.counterexample() {
            write!(f, "; counterexample {}: expected {}, got {}", c.label, c.expected, c.actual)?;
        }
        Ok(())
    }
}

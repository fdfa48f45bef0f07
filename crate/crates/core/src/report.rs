//! Verification reports: one record per checked instance.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub params: Vec<(String, String)>,
    pub records: Vec<Record>,
    pub version: String,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            params: Vec::new(),
            records: Vec::new(),
            version: crate::ENGINE_VERSION.to_string(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    /// Records a comparison; it passes when the renderings agree.
    pub fn compare(&mut self, input: impl ToString, expected: impl ToString, actual: impl ToString) -> bool {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.records.push(Record { input: input.to_string(), expected, actual, pass });
        pass
    }

    /// Records an instance with an explicit verdict.
    pub fn record(&mut self, input: impl ToString, expected: impl ToString, actual: impl ToString, pass: bool) {
        self.records.push(Record {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
    }

    pub fn pass_count(&self) -> usize {
        self.records.iter().filter(|r| r.pass).count()
    }

    pub fn fail_count(&self) -> usize {
        self.records.len() - self.pass_count()
    }

    /// True when nothing failed.
    pub fn passed(&self) -> bool {
        self.fail_count() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> + '_ {
        self.records.iter().filter(|r| !r.pass)
    }
}

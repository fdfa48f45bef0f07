//! JSON rendering of reports with a fixed field order.

use fd_core::VerificationReport;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[derive(Serialize)]
struct Report<'a> {
    check: &'a str,
    params: Params<'a>,
    records: Vec<Record<'a>>,
    summary: Summary,
    version: &'a str,
}

/// Parameters as an object, in insertion order.
struct Params<'a>(&'a [(String, String)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct Record<'a> {
    input: &'a str,
    expected: &'a str,
    actual: &'a str,
    pass: bool,
}

#[derive(Serialize)]
struct Summary {
    pass: usize,
    fail: usize,
}

/// `{check, params, records, summary: {pass, fail}, version}`, newline
/// terminated.
pub fn emit_json(report: &VerificationReport) -> String {
    let out = Report {
        check: &report.check,
        params: Params(&report.params),
        records: report
            .records
            .iter()
            .map(|r| Record { input: &r.input, expected: &r.expected, actual: &r.actual, pass: r.pass })
            .collect(),
        summary: Summary { pass: report.pass_count(), fail: report.fail_count() },
        version: &report.version,
    };
    let mut s = serde_json::to_string(&out).expect("reports serialize");
    s.push('\n');
    s
}

/// Any serializable value as one line of JSON.
pub fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("value serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = VerificationReport::new("x");
        let s = emit_json(&r);
        assert!(s.starts_with(r#"{"check":"x","params":{},"records":[],"summary":{"pass":0,"fail":0},"version":"#));
        assert!(s.ends_with("}\n"));
    }

    #[test]
    fn counts() {
        let mut r = VerificationReport::new("x");
        r.compare("a", "1", "1");
        assert!(emit_json(&r).contains(r#""summary":{"pass":1,"fail":0}"#));
        r.compare("b", "1", "2");
        r.compare("c", "1", "3");
        assert!(emit_json(&r).contains(r#""summary":{"pass":1,"fail":2}"#));
    }
}

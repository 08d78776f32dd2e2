//! Record serialization for check reports.
//!
//! One line per report, six tab-separated fields in fixed order: id, status,
//! cases_checked, counterexample-count, counterexamples (semicolon-joined
//! tuples, `-` when empty), elapsed-ms. Everything except elapsed-ms is
//! deterministic for a fixed configuration.

use super::{CheckReport, Status};
use std::time::Duration;

pub fn to_record_line(r: &CheckReport) -> String {
    let cx = if r.counterexamples.is_empty() {
        "-".to_string()
    } else {
        r.counterexamples.join(";")
    };
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}",
        r.check_id,
        r.status.as_str(),
        r.cases_checked,
        r.counterexamples.len(),
        cx,
        r.elapsed.as_millis()
    )
}

/// Parse a record line back into a report.
///
/// The record format carries six fields; domain_description is not among
/// them and is reconstructed empty.
pub fn parse_record_line(line: &str) -> Result<CheckReport, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 6 {
        return Err(format!(
            "expected 6 tab-separated fields, got {}",
            fields.len()
        ));
    }
    let status = match fields[1] {
        "pass" => Status::Pass,
        "fail" => Status::Fail,
        "degenerate-cases-present" => Status::DegenerateCasesPresent,
        other => return Err(format!("unknown status `{other}`")),
    };
    let cases_checked: u64 = fields[2].parse().map_err(|e| format!("bad cases: {e}"))?;
    let cx_count: usize = fields[3].parse().map_err(|e| format!("bad count: {e}"))?;
    let counterexamples: Vec<String> = if fields[4] == "-" {
        Vec::new()
    } else {
        fields[4].split(';').map(|s| s.to_string()).collect()
    };
    if counterexamples.len() != cx_count {
        return Err(format!(
            "counterexample count {} does not match list length {}",
            cx_count,
            counterexamples.len()
        ));
    }
    let ms: u64 = fields[5].parse().map_err(|e| format!("bad elapsed: {e}"))?;
    Ok(CheckReport {
        check_id: fields[0].to_string(),
        domain_description: String::new(),
        cases_checked,
        status,
        counterexamples,
        elapsed: Duration::from_millis(ms),
    })
}

/// Human-readable table: one aligned row per report.
pub fn render_human(reports: &[CheckReport]) -> String {
    let id_w = reports
        .iter()
        .map(|r| r.check_id.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let mut out = String::new();
    out.push_str(&format!(
        "{:<id_w$}  {:<24}  {:>10}  {:>8}  {}\n",
        "check", "status", "cases", "time", "domain"
    ));
    for r in reports {
        out.push_str(&format!(
            "{:<id_w$}  {:<24}  {:>10}  {:>6}ms  {}\n",
            r.check_id,
            r.status.as_str(),
            r.cases_checked,
            r.elapsed.as_millis(),
            r.domain_description
        ));
        for cx in &r.counterexamples {
            out.push_str(&format!("{:id_w$}    counterexample {}\n", "", cx));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip() {
        let r = CheckReport {
            check_id: "demo".to_string(),
            domain_description: String::new(),
            cases_checked: 42,
            status: Status::Fail,
            counterexamples: vec!["(a=9,got=20)".to_string(), "(a=11,got=3)".to_string()],
            elapsed: Duration::from_millis(17),
        };
        let line = to_record_line(&r);
        assert_eq!(parse_record_line(&line).unwrap(), r);

        let clean = CheckReport {
            check_id: "empty".to_string(),
            domain_description: String::new(),
            cases_checked: 7,
            status: Status::Pass,
            counterexamples: Vec::new(),
            elapsed: Duration::from_millis(0),
        };
        let line = to_record_line(&clean);
        assert!(line.contains("\t-\t"));
        assert_eq!(parse_record_line(&line).unwrap(), clean);
    }

    #[test]
    fn malformed_records_rejected() {
        assert!(parse_record_line("too\tfew").is_err());
        assert!(parse_record_line("id\tbogus\t1\t0\t-\t2").is_err());
        assert!(parse_record_line("id\tpass\t1\t2\t-\t2").is_err());
    }
}

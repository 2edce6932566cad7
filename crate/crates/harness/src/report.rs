//! Human-readable and JSON reports.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::runner::CheckRecord;

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub pairs: usize,
    pub records: usize,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub error: usize,
    pub entry_errors: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

impl Report {
    pub fn new(records: Vec<CheckRecord>, pairs: usize, entry_errors: Vec<String>) -> Report {
        let count = |v: &str| records.iter().filter(|r| r.verdict == v).count();
        let summary = Summary {
            pairs,
            records: records.len(),
            pass: count("pass"),
            fail: count("fail"),
            vacuous: count("vacuous"),
            error: count("error"),
            entry_errors,
        };
        Report { records, summary }
    }

    /// No failing check and no unusable corpus entry.
    pub fn success(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0 && self.summary.entry_errors.is_empty()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.render_human(),
            Format::Machine => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
        }
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        for e in &self.summary.entry_errors {
            let _ = writeln!(out, "corpus error: {e}");
        }
        let mut per_check: BTreeMap<&str, [usize; 4]> = BTreeMap::new();
        for r in &self.records {
            let slot = match r.verdict.as_str() {
                "pass" => 0,
                "fail" => 1,
                "vacuous" => 2,
                _ => 3,
            };
            per_check.entry(&r.check_id).or_default()[slot] += 1;
            if slot == 1 || slot == 3 {
                let _ = writeln!(
                    out,
                    "{} {} on {}: {} [{}]",
                    r.verdict.to_uppercase(),
                    r.check_id,
                    r.pair_label,
                    r.detail,
                    r.witness.join(", ")
                );
            }
        }
        for (id, [p, f, v, e]) in &per_check {
            let _ = writeln!(out, "{id}: pass {p}, fail {f}, vacuous {v}, error {e}");
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} pairs, {} results: {} pass, {} fail, {} vacuous, {} error",
            s.pairs, s.records, s.pass, s.fail, s.vacuous, s.error
        );
        out
    }
}

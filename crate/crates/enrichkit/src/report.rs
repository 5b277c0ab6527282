//! Check records and their two renderings: a human summary and a deterministic JSON document.

use indexmap::IndexMap;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ResourceCap,
}

impl Verdict {
    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::ResourceCap => "CAP ",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub check: String,
    pub instance: String,
    pub verdict: Verdict,
    pub details: IndexMap<String, Value>,
    pub witnesses: Vec<String>,
    /// Wall-clock time; shown to humans, left out of the JSON document.
    #[serde(skip)]
    pub millis: u128,
}

impl Record {
    pub fn new(check: &str, instance: &str) -> Record {
        Record {
            check: check.into(),
            instance: instance.into(),
            verdict: Verdict::Pass,
            details: IndexMap::new(),
            witnesses: Vec::new(),
            millis: 0,
        }
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Record {
        self.details.insert(key.into(), value.into());
        self
    }

    /// Adds failure witnesses; any witness turns the verdict to `Fail`.
    pub fn failures<I: IntoIterator<Item = String>>(mut self, witnesses: I) -> Record {
        self.witnesses.extend(witnesses);
        if !self.witnesses.is_empty() && self.verdict == Verdict::Pass {
            self.verdict = Verdict::Fail;
        }
        self
    }

    pub fn cap(mut self, message: String) -> Record {
        self.witnesses.push(message);
        self.verdict = Verdict::ResourceCap;
        self
    }
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub resource_cap: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: &str, seed: Option<u64>, records: Vec<Record>) -> Report {
        let mut summary = Summary {
            checks: records.len(),
            ..Default::default()
        };
        for r in &records {
            match r.verdict {
                Verdict::Pass => summary.passed += 1,
                Verdict::Fail => summary.failed += 1,
                Verdict::ResourceCap => summary.resource_cap += 1,
            }
        }
        Report {
            tool: "enrichkit",
            command: command.into(),
            seed,
            records,
            summary,
        }
    }

    /// 0 when every check passed, 3 if any hit a resource cap, otherwise 1.
    pub fn exit_code(&self) -> i32 {
        if self.summary.resource_cap > 0 {
            3
        } else if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }

    pub fn machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let details: Vec<String> = r.details.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(
                "{} {:<24} {:<24} {} ({} ms)\n",
                r.verdict.label(),
                r.check,
                r.instance,
                details.join(" "),
                r.millis
            ));
            for w in r.witnesses.iter().take(8) {
                out.push_str(&format!("       {w}\n"));
            }
            if r.witnesses.len() > 8 {
                out.push_str(&format!("       … {} more\n", r.witnesses.len() - 8));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} hit a resource cap\n",
            s.checks, s.passed, s.failed, s.resource_cap
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_drive_the_summary_and_exit_code() {
        let ok = Record::new("a", "x").detail("cells", 3);
        let bad = Record::new("b", "x").failures(["w".to_string()]);
        assert_eq!(Report::new("t", None, vec![ok.clone()]).exit_code(), 0);
        let r = Report::new("t", None, vec![ok.clone(), bad.clone()]);
        assert_eq!((r.summary.passed, r.summary.failed, r.exit_code()), (1, 1, 1));
        let capped = Record::new("c", "x").cap("too big".into());
        assert_eq!(Report::new("t", None, vec![bad, capped]).exit_code(), 3);
    }

    #[test]
    fn timing_stays_out_of_the_document() {
        let mut r = Record::new("a", "x");
        r.millis = 1234;
        let doc = Report::new("t", Some(5), vec![r]).machine();
        assert!(!doc.contains("1234"));
        assert!(doc.contains("\"seed\": 5"));
    }
}

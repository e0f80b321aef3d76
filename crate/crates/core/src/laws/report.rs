//! Law-check reports and suite configuration.

use serde::Serialize;

/// Outcome of checking one law at one registry entry.
#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instance: String,
    pub samples: usize,
    /// Seed this check ran under; a failure reproduces from it.
    pub seed: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl LawReport {
    pub fn render(&self) -> String {
        match &self.counterexample {
            None => format!(
                "PASS {:<40} @ {:<16} ({} samples, seed {})",
                self.law, self.instance, self.samples, self.seed
            ),
            Some(ce) => format!(
                "FAIL {:<40} @ {:<16} ({} samples, seed {}): {}",
                self.law, self.instance, self.samples, self.seed, ce
            ),
        }
    }

    /// One machine-readable line per report.
    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("law reports always serialize")
    }
}

/// Suite-wide knobs; the defaults are the reference configuration.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    /// Master seed; every check derives its own seed from this and its name.
    pub seed: u64,
    /// Sampled iterations per law.
    pub samples: usize,
    /// Inputs probed per observational comparison.
    pub probes: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: 1000,
            probes: 4,
        }
    }
}

/// Summarizes a batch of reports.
pub fn failures(reports: &[LawReport]) -> Vec<&LawReport> {
    reports.iter().filter(|r| !r.pass).collect()
}

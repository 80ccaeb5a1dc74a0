use serde::Serialize;

use crate::scalar::RingId;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub case: usize,
    pub message: String,
    /// The sampled inputs, loadable as a document.
    pub document: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawOutcome {
    pub name: String,
    pub passed: usize,
    /// Cases whose premises did not hold.
    pub vacuous: usize,
    pub failed: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawReport {
    pub ring: RingId,
    pub seed: u64,
    pub cases: usize,
    pub max_dim: usize,
    pub laws: Vec<LawOutcome>,
    pub total_failed: usize,
    pub elapsed_ms: u64,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.total_failed == 0
    }

    pub fn law(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.name == name)
    }

    /// The report with timing removed, for reproducibility comparisons.
    pub fn without_timing(&self) -> LawReport {
        LawReport { elapsed_ms: 0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

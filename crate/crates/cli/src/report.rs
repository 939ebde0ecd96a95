//! JSON report printed by every command.

use std::collections::BTreeMap;

use jahangir_core::enumerate::RunOptions;
use jahangir_core::extract::SweepReport;
use jahangir_core::ramsey::VerificationReport;
use jahangir_core::RamseyInstance;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub instance: Option<RamseyInstance>,
    pub order: Option<usize>,
    pub totals: BTreeMap<String, u64>,
    pub failures: u64,
    pub counterexamples: Vec<String>,
    pub subcase_tallies: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
    pub checkpoint: Option<String>,
    pub details: Value,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_owned(),
            instance: None,
            order: None,
            totals: BTreeMap::new(),
            failures: 0,
            counterexamples: Vec::new(),
            subcase_tallies: BTreeMap::new(),
            elapsed_ms: 0,
            seed: None,
            checkpoint: None,
            details: Value::Null,
        }
    }

    pub fn total(mut self, key: &str, value: u64) -> Report {
        self.totals.insert(key.to_owned(), value);
        self
    }

    pub fn with_details(mut self, details: Value) -> Report {
        self.details = details;
        self
    }

    pub fn from_verification(command: &str, r: &VerificationReport) -> Report {
        let mut out = Report::new(command)
            .total("classes", r.classes_total)
            .total("failed", r.classes_failed)
            .total("inconclusive", r.inconclusive);
        out.instance = Some(r.instance);
        out.order = Some(r.order);
        out.failures = r.classes_failed;
        out.counterexamples = r.counterexamples.clone();
        out.elapsed_ms = r.elapsed_ms;
        out.seed = r.seed;
        out.checkpoint = r.checkpoint.clone();
        out.details = serde_json::to_value(r).expect("report serializes");
        out
    }

    pub fn from_sweep(
        command: &str,
        r: &SweepReport,
        opts: &RunOptions,
        elapsed_ms: u64,
    ) -> Report {
        let mut out = Report::new(command)
            .total("classes", r.classes_total)
            .total("eligible", r.eligible)
            .total("certified", r.certified)
            .total("fallbacks", r.fallbacks);
        out.order = Some(r.order);
        out.failures = r.falsifications.len() as u64;
        out.counterexamples = r.falsifications.clone();
        out.subcase_tallies = r.subcase_tallies.clone();
        out.elapsed_ms = elapsed_ms;
        out.checkpoint = opts.checkpoint.as_ref().map(|p| p.display().to_string());
        out.details = serde_json::json!({ "complete": r.complete });
        out
    }

    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string_pretty(self).expect("report serializes")
        );
    }
}

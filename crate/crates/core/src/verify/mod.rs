//! Theorem checkers producing structured reports, plus the isomorph-free
//! exhaustive enumeration that powers the classification searches.

mod enumerate;
mod suites;

pub use enumerate::enumerate_graphs;
pub use suites::{
    check_diameter_equivalences, check_period2_structure, connectivity_check, join_along_suite,
    period3_sample, petersen_suite, search_exact_period, tree_suite,
};

use crate::graph::Graph;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

/// A replayable failure witness: the offending graph plus a human-readable
/// explanation of which pair/vertex broke the claim.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub graph: Graph,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub params: String,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    /// ordered key/value facts established while checking
    pub data: Vec<(String, String)>,
    pub graphs_scanned: u64,
    pub runtime_ms: u128,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Accumulates counterexamples and facts; verdict = fail iff any
/// counterexample was recorded.
pub(crate) struct ReportBuilder {
    id: String,
    params: String,
    counterexamples: Vec<Counterexample>,
    data: Vec<(String, String)>,
    graphs_scanned: u64,
    not_applicable: bool,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(id: &str, params: String) -> ReportBuilder {
        ReportBuilder {
            id: id.to_string(),
            params,
            counterexamples: Vec::new(),
            data: Vec::new(),
            graphs_scanned: 0,
            not_applicable: false,
            start: Instant::now(),
        }
    }

    pub fn fail(&mut self, graph: &Graph, witness: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            graph: graph.clone(),
            witness: witness.into(),
        });
    }

    pub fn check(&mut self, cond: bool, graph: &Graph, witness: impl Into<String>) {
        if !cond {
            self.fail(graph, witness);
        }
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.data.push((key.to_string(), value.to_string()));
    }

    pub fn scanned(&mut self, k: u64) {
        self.graphs_scanned += k;
    }

    pub fn not_applicable(&mut self) {
        self.not_applicable = true;
    }

    pub fn finish(self) -> TheoremReport {
        let verdict = if self.not_applicable {
            Verdict::NotApplicable
        } else if self.counterexamples.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        TheoremReport {
            id: self.id,
            params: self.params,
            verdict,
            counterexamples: self.counterexamples,
            data: self.data,
            graphs_scanned: self.graphs_scanned,
            runtime_ms: self.start.elapsed().as_millis(),
        }
    }
}

//! Structured report emitted by every subcommand.

use metamour_core::verify::{TheoremReport, Verdict};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;

use crate::graph6::encode_graph6;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub verdict: String,
    pub counterexamples: Vec<CounterexampleOut>,
    pub data: BTreeMap<String, serde_json::Value>,
    pub meta: Meta,
}

#[derive(Debug, Serialize)]
pub struct CounterexampleOut {
    /// graph6 when the graph fits the short form, else an edge-list literal
    pub graph: String,
    pub witness: String,
}

#[derive(Debug, Serialize)]
pub struct Meta {
    pub runtime_ms: u128,
    pub graphs_scanned: u64,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            params: BTreeMap::new(),
            verdict: "pass".to_string(),
            counterexamples: Vec::new(),
            data: BTreeMap::new(),
            meta: Meta {
                runtime_ms: 0,
                graphs_scanned: 0,
            },
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Report {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn datum(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.data.insert(key.to_string(), value.into());
    }

    pub fn from_theorem(command: &str, tr: &TheoremReport) -> Report {
        let mut report = Report::new(command).param("theorem", &tr.id);
        if !tr.params.is_empty() {
            report.params.insert("theorem_params".to_string(), tr.params.clone());
        }
        report.verdict = match tr.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        }
        .to_string();
        for c in &tr.counterexamples {
            let graph = encode_graph6(&c.graph)
                .unwrap_or_else(|_| format!("n={} edges={:?}", c.graph.n(), c.graph.edges()));
            report.counterexamples.push(CounterexampleOut {
                graph,
                witness: c.witness.clone(),
            });
        }
        for (k, v) in &tr.data {
            report.data.insert(k.clone(), v.clone().into());
        }
        report.meta.runtime_ms = tr.runtime_ms;
        report.meta.graphs_scanned = tr.graphs_scanned;
        report
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.verdict == "fail")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Deterministic plain-text rendering; runtime statistics are omitted so
    /// repeated runs print identical bytes.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (k, v) in &self.params {
            writeln!(out, "{k}: {v}").unwrap();
        }
        writeln!(out, "verdict: {}", self.verdict).unwrap();
        for (k, v) in &self.data {
            let rendered = match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            writeln!(out, "  {k}: {rendered}").unwrap();
        }
        if !self.counterexamples.is_empty() {
            writeln!(out, "counterexamples:").unwrap();
            for c in &self.counterexamples {
                writeln!(out, "  {}  # {}", c.graph, c.witness).unwrap();
            }
        }
        if self.meta.graphs_scanned > 0 {
            writeln!(out, "graphs scanned: {}", self.meta.graphs_scanned).unwrap();
        }
        out
    }
}

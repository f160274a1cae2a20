use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::HarnessError;
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::harness::theorem::{check_theorem, Classification, GraphVerdict, TheoremSpec};

/// One corpus record and its verdict.
#[derive(Clone, Debug, Serialize)]
pub struct SweepEntry {
    /// 1-based line number in the corpus (or index for in-memory corpora).
    pub line: usize,
    pub graph6: String,
    #[serde(flatten)]
    pub verdict: GraphVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepIssue {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub theorem: TheoremSpec,
    pub corpus: String,
    pub scanned: usize,
    pub hypotheses_met: usize,
    pub bound_met: usize,
    pub confirmed: usize,
    pub equality_cases: Vec<SweepEntry>,
    pub counterexamples: Vec<SweepEntry>,
    /// Non-extendable graphs that failed the spanning-subgraph embedding check.
    pub embedding_failures: Vec<SweepEntry>,
    pub errors: Vec<SweepIssue>,
    pub results: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn confirmed_on_corpus(&self) -> bool {
        self.counterexamples.is_empty() && self.errors.is_empty() && self.embedding_failures.is_empty()
    }

    fn assemble(spec: &TheoremSpec, corpus: &str, outcomes: Vec<(usize, Result<SweepEntry, String>)>) -> Self {
        let mut report = SweepReport {
            theorem: *spec,
            corpus: corpus.to_string(),
            scanned: 0,
            hypotheses_met: 0,
            bound_met: 0,
            confirmed: 0,
            equality_cases: Vec::new(),
            counterexamples: Vec::new(),
            embedding_failures: Vec::new(),
            errors: Vec::new(),
            results: Vec::with_capacity(outcomes.len()),
        };
        for (line, outcome) in outcomes {
            report.scanned += 1;
            let entry = match outcome {
                Ok(entry) => entry,
                Err(message) => {
                    report.errors.push(SweepIssue { line, message });
                    continue;
                }
            };
            let class = entry.verdict.classification;
            if class != Classification::HypothesesNotMet {
                report.hypotheses_met += 1;
            }
            if !matches!(class, Classification::HypothesesNotMet | Classification::BoundNotMet) {
                report.bound_met += 1;
            }
            match class {
                Classification::ConfirmedExtendable => report.confirmed += 1,
                Classification::EqualityCase => report.equality_cases.push(entry.clone()),
                Classification::Counterexample => report.counterexamples.push(entry.clone()),
                _ => {}
            }
            if entry.verdict.embeds_in_witness_extremal == Some(false) {
                report.embedding_failures.push(entry.clone());
            }
            report.results.push(entry);
        }
        report
    }
}

fn check_one(line: usize, g: &Graph, spec: &TheoremSpec) -> Result<SweepEntry, String> {
    let graph6 = emit_graph6(g).unwrap_or_default();
    check_theorem(g, spec)
        .map(|verdict| SweepEntry { line, graph6, verdict })
        .map_err(|e: HarnessError| e.to_string())
}

/// Checks every graph of an in-memory corpus; entries are numbered from 1.
pub fn sweep_graphs(graphs: &[Graph], spec: &TheoremSpec, corpus: &str) -> SweepReport {
    let outcomes = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| (i + 1, check_one(i + 1, g, spec)))
        .collect();
    SweepReport::assemble(spec, corpus, outcomes)
}

/// Checks a graph6 stream. Blank lines and `#` comments are skipped; parse
/// errors are recorded with their line number and the sweep continues.
pub fn sweep<R: BufRead>(reader: R, spec: &TheoremSpec, corpus: &str) -> std::io::Result<SweepReport> {
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        records.push((i + 1, trimmed.to_string()));
    }
    let outcomes = records
        .par_iter()
        .map(|(line, text)| {
            let outcome = parse_graph6(text.as_bytes())
                .map_err(|e| format!("line {line}: {e}"))
                .and_then(|g| check_one(*line, &g, spec));
            (*line, outcome)
        })
        .collect();
    Ok(SweepReport::assemble(spec, corpus, outcomes))
}

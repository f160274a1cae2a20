//! Random spanning subgraphs of `G₁ = K_s ∨ (K_{n₁} ∪ tK₁)` tested against
//! the distance spectral bound.
//!
//! A fixed k-matching inside the join clique is never deleted, so the join
//! clique stays a violating set and every sample is certifiably not
//! fractional k-extendable. A sample meeting the hypotheses and the bound
//! without being the extremal graph would therefore be a counterexample.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::HarnessError;
use crate::extremal::{extremal_graph, matches_extremal, ExtremalParams};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::harness::theorem::{TheoremId, TheoremSpec};
use crate::matching::is_violating_set;

#[derive(Clone, Debug, Serialize)]
pub struct SampleRecord {
    pub index: usize,
    pub graph6: String,
    pub e: usize,
    pub min_degree: usize,
    pub mu: f64,
    pub threshold: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SamplingReport {
    pub params: ExtremalParams,
    pub samples: usize,
    pub seed: u64,
    pub hypotheses_met: usize,
    pub bound_met: usize,
    pub equality_cases: usize,
    /// Samples where the join clique stopped being a violating set; must be empty.
    pub witness_failures: Vec<usize>,
    pub counterexamples: Vec<SampleRecord>,
    /// Smallest `μ(H) - μ(G₃(n, k, δ(H)))` among samples meeting the hypotheses.
    pub min_margin: Option<f64>,
}

enum Outcome {
    Hypotheses,
    Bound(f64),
    Equality,
    Counterexample(SampleRecord),
    WitnessLost,
}

/// One random connected spanning subgraph of `g` keeping `protected` edges.
fn random_spanning_subgraph(g: &Graph, protected: &[(usize, usize)], rng: &mut ChaCha8Rng) -> Graph {
    let mut candidates: Vec<(usize, usize)> = g.edges().filter(|e| !protected.contains(e)).collect();
    candidates.shuffle(rng);
    let target = rng.gen_range(1..=g.order().max(1));
    let mut h = g.clone();
    let mut removed = 0;
    for (u, v) in candidates {
        if removed == target {
            break;
        }
        h.remove_edge(u, v).expect("edge of g");
        if h.is_connected() {
            removed += 1;
        } else {
            h.add_edge(u, v).expect("vertices in range");
        }
    }
    h
}

/// Draws `samples` spanning subgraphs of the extremal graph at `p` and
/// classifies each against the distance bound. Sample `i` uses stream `i`
/// of a ChaCha generator seeded with `seed`, so results do not depend on
/// scheduling.
pub fn sample_spanning_subgraphs(p: &ExtremalParams, samples: usize, seed: u64, tol: f64) -> Result<SamplingReport, HarnessError> {
    let g1 = extremal_graph(p)?;
    let spec = TheoremSpec::new(TheoremId::Mu, p.k, tol);
    let protected: Vec<(usize, usize)> = (0..p.k).map(|i| (2 * i, 2 * i + 1)).collect();
    let join = p.join_block();

    // thresholds for every minimum degree a sample can have
    let mut thresholds = BTreeMap::new();
    for d in 0..=p.s {
        if spec.hypotheses_hold(p.n, d) {
            thresholds.insert(d, spec.threshold(p.n, d)?);
        }
    }

    let outcomes: Vec<Outcome> = (0..samples)
        .into_par_iter()
        .map(|i| -> Result<Outcome, HarnessError> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let h = random_spanning_subgraph(&g1, &protected, &mut rng);
            if !is_violating_set(&h, join, p.k) {
                return Ok(Outcome::WitnessLost);
            }
            let d = h.min_degree();
            let Some(&threshold) = thresholds.get(&d) else {
                return Ok(Outcome::Hypotheses);
            };
            let mu = spec.value(&h)?;
            if !spec.meets_bound(mu, threshold) {
                return Ok(Outcome::Bound(mu - threshold));
            }
            if matches_extremal(&h, &spec.extremal_params(p.n, d)?) {
                return Ok(Outcome::Equality);
            }
            Ok(Outcome::Counterexample(SampleRecord {
                index: i,
                graph6: emit_graph6(&h).unwrap_or_default(),
                e: h.size(),
                min_degree: d,
                mu,
                threshold,
            }))
        })
        .collect::<Result<_, _>>()?;

    let mut report = SamplingReport {
        params: *p,
        samples,
        seed,
        hypotheses_met: 0,
        bound_met: 0,
        equality_cases: 0,
        witness_failures: Vec::new(),
        counterexamples: Vec::new(),
        min_margin: None,
    };
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            Outcome::WitnessLost => report.witness_failures.push(i),
            Outcome::Hypotheses => {}
            Outcome::Bound(margin) => {
                report.hypotheses_met += 1;
                report.min_margin = Some(report.min_margin.map_or(margin, |m: f64| m.min(margin)));
            }
            Outcome::Equality => {
                report.hypotheses_met += 1;
                report.bound_met += 1;
                report.equality_cases += 1;
            }
            Outcome::Counterexample(r) => {
                report.hypotheses_met += 1;
                report.bound_met += 1;
                report.min_margin = Some(report.min_margin.map_or(r.mu - r.threshold, |m| m.min(r.mu - r.threshold)));
                report.counterexamples.push(r);
            }
        }
    }
    Ok(report)
}

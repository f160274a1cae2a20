use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::HarnessError;
use crate::extremal::{matches_extremal, ExtremalParams};
use crate::graph::{bit, Graph, VertexSet};
use crate::matching::{is_fext_lemma, Verdict};
use crate::spectral::{closed_form, largest_real_root, spectral_radius, Family, FamilyParams, MatrixKind};

/// The five sufficient conditions for fractional k-extendability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `n ≥ 2k + 9` and `e(G) ≥ C(n-1, 2) + 2k`.
    Edge1,
    /// `n ≥ 6δ`, `δ ≥ 2k + 1` and `e(G) ≥ e(G₃)`.
    Edge2,
    /// `n ≥ 2k + 6` and `q(G) ≥ q(G₂)`.
    Q1,
    /// `n ≥ 6.5δ`, `δ ≥ 2k + 1` and `q(G) ≥ q(G₃)`.
    Q2,
    /// `n ≥ 12δ - 2k + 1`, `δ ≥ 2k + 1` and `μ(G) ≤ μ(G₃)`.
    Mu,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [TheoremId::Edge1, TheoremId::Edge2, TheoremId::Q1, TheoremId::Q2, TheoremId::Mu];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Edge1 => "edge_1",
            TheoremId::Edge2 => "edge_2",
            TheoremId::Q1 => "q_1",
            TheoremId::Q2 => "q_2",
            TheoremId::Mu => "mu",
        }
    }

    /// Whether the extremal graph is `G₂` (join clique `2k`) rather than `G₃`.
    pub fn uses_g2(self) -> bool {
        matches!(self, TheoremId::Edge1 | TheoremId::Q1)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| *c != '_' && *c != '-').collect::<String>().to_ascii_lowercase();
        Ok(match key.as_str() {
            "edge1" | "e1" => TheoremId::Edge1,
            "edge2" | "e2" => TheoremId::Edge2,
            "q1" => TheoremId::Q1,
            "q2" => TheoremId::Q2,
            "mu" | "mu1" | "distance" => TheoremId::Mu,
            _ => return Err(HarnessError::UnknownName(s.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TheoremSpec {
    pub id: TheoremId,
    pub k: usize,
    /// Relative tolerance of the eigenvalue computations.
    pub tol: f64,
}

/// Which side of the threshold satisfies the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSide {
    AtLeast,
    AtMost,
}

impl TheoremSpec {
    pub fn new(id: TheoremId, k: usize, tol: f64) -> Self {
        TheoremSpec { id, k, tol }
    }

    pub fn side(&self) -> BoundSide {
        match self.id {
            TheoremId::Mu => BoundSide::AtMost,
            _ => BoundSide::AtLeast,
        }
    }

    /// `None` when the hypotheses hold, otherwise the first one that fails.
    pub fn failed_hypothesis(&self, n: usize, delta: usize) -> Option<&'static str> {
        let k = self.k;
        if k == 0 {
            return Some("k >= 1");
        }
        let min_delta = (!self.id.uses_g2() && delta < 2 * k + 1).then_some("delta >= 2k + 1");
        match self.id {
            TheoremId::Edge1 => (n < 2 * k + 9).then_some("n >= 2k + 9"),
            TheoremId::Q1 => (n < 2 * k + 6).then_some("n >= 2k + 6"),
            TheoremId::Edge2 => min_delta.or((n < 6 * delta).then_some("n >= 6 delta")),
            // 2n ≥ 13δ is n ≥ 6.5δ without rounding
            TheoremId::Q2 => min_delta.or((2 * n < 13 * delta).then_some("n >= 6.5 delta")),
            TheoremId::Mu => min_delta.or((n + 2 * k < 12 * delta + 1).then_some("n >= 12 delta - 2k + 1")),
        }
    }

    pub fn hypotheses_hold(&self, n: usize, delta: usize) -> bool {
        self.failed_hypothesis(n, delta).is_none()
    }

    /// Parameters of the extremal graph for order `n` and minimum degree `delta`.
    pub fn extremal_params(&self, n: usize, delta: usize) -> Result<ExtremalParams, HarnessError> {
        let s = if self.id.uses_g2() { 2 * self.k } else { delta };
        Ok(ExtremalParams::new(n, self.k, s)?)
    }

    /// The bound value of the extremal graph, from closed forms.
    pub fn threshold(&self, n: usize, delta: usize) -> Result<f64, HarnessError> {
        let p = self.extremal_params(n, delta)?;
        let k = self.k;
        let root = |family: Family, third: usize| -> Result<f64, HarnessError> {
            let c = closed_form(family, FamilyParams { n, k, third })?;
            Ok(largest_real_root(&c, self.tol))
        };
        match self.id {
            TheoremId::Edge1 | TheoremId::Edge2 => Ok(p.edge_count() as f64),
            TheoremId::Q1 => root(Family::F2, 0),
            TheoremId::Q2 => root(Family::F3Q, delta),
            TheoremId::Mu => root(Family::PhiB3Case1, delta),
        }
    }

    /// The bound value of `g` itself.
    pub fn value(&self, g: &Graph) -> Result<f64, HarnessError> {
        Ok(match self.id {
            TheoremId::Edge1 | TheoremId::Edge2 => g.size() as f64,
            TheoremId::Q1 | TheoremId::Q2 => spectral_radius(g, MatrixKind::SignlessLaplacian, self.tol)?,
            TheoremId::Mu => spectral_radius(g, MatrixKind::Distance, self.tol)?,
        })
    }

    /// Whether `value` meets the bound. Spectral comparisons allow a slack of
    /// `10·tol·threshold` so that graphs at the threshold are never missed.
    pub fn meets_bound(&self, value: f64, threshold: f64) -> bool {
        let slack = match self.id {
            TheoremId::Edge1 | TheoremId::Edge2 => 0.0,
            _ => 10.0 * self.tol * threshold.abs(),
        };
        match self.side() {
            BoundSide::AtLeast => value >= threshold - slack,
            BoundSide::AtMost => value <= threshold + slack,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    HypothesesNotMet,
    BoundNotMet,
    ConfirmedExtendable,
    EqualityCase,
    Counterexample,
}

impl Classification {
    pub fn label(self) -> &'static str {
        match self {
            Classification::HypothesesNotMet => "hypotheses-not-met",
            Classification::BoundNotMet => "bound-not-met",
            Classification::ConfirmedExtendable => "confirmed-extendable",
            Classification::EqualityCase => "equality-case",
            Classification::Counterexample => "COUNTEREXAMPLE",
        }
    }
}

/// Per-graph outcome with enough data to re-check it by hand.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphVerdict {
    pub classification: Classification,
    pub n: usize,
    pub e: usize,
    pub min_degree: usize,
    pub connected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_hypothesis: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal: Option<ExtremalParams>,
    /// For non-extendable graphs: whether the graph embeds as a spanning
    /// subgraph of the extremal graph whose join clique is the witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embeds_in_witness_extremal: Option<bool>,
}

pub fn check_theorem(g: &Graph, spec: &TheoremSpec) -> Result<GraphVerdict, HarnessError> {
    let n = g.order();
    let delta = g.min_degree();
    let connected = g.is_connected();
    let mut verdict = GraphVerdict {
        classification: Classification::HypothesesNotMet,
        n,
        e: g.size(),
        min_degree: delta,
        connected,
        failed_hypothesis: None,
        value: None,
        threshold: None,
        oracle: None,
        extremal: None,
        embeds_in_witness_extremal: None,
    };
    verdict.failed_hypothesis = if connected { spec.failed_hypothesis(n, delta) } else { Some("connected") };
    if verdict.failed_hypothesis.is_some() {
        return Ok(verdict);
    }
    let threshold = spec.threshold(n, delta)?;
    let value = spec.value(g)?;
    verdict.threshold = Some(threshold);
    verdict.value = Some(value);
    if !spec.meets_bound(value, threshold) {
        verdict.classification = Classification::BoundNotMet;
        return Ok(verdict);
    }
    let oracle = is_fext_lemma(g, spec.k)?;
    verdict.classification = if oracle.is_extendable() {
        Classification::ConfirmedExtendable
    } else {
        if let Some(s) = oracle.witness_set() {
            verdict.embeds_in_witness_extremal = Some(spanning_embedding(g, spec.k, s).is_some());
        }
        let p = spec.extremal_params(n, delta)?;
        verdict.extremal = Some(p);
        if matches_extremal(g, &p) {
            Classification::EqualityCase
        } else {
            Classification::Counterexample
        }
    };
    verdict.oracle = Some(oracle);
    Ok(verdict)
}

/// Places a graph with violating set `s` inside `K_s ∨ (K_{n₁} ∪ tK₁)`.
///
/// Returns `perm` with `g.permute(perm)` a spanning subgraph of the extremal
/// graph with join clique `|s|`: `s` goes to the join clique, `t` isolated
/// vertices of `G - s` to the independent part and the rest to the inner
/// clique. The containment is verified before returning.
pub fn spanning_embedding(g: &Graph, k: usize, s: VertexSet) -> Option<Vec<usize>> {
    let n = g.order();
    let size = s.len();
    let p = ExtremalParams::new(n, k, size).ok()?;
    let isolated: Vec<usize> = (0..n).filter(|&v| !s.contains(v) && g.row(v) & !s.0 == 0).collect();
    let t = p.independent();
    if isolated.len() < t {
        return None;
    }
    let independent: u128 = isolated[..t].iter().fold(0, |acc, &v| acc | bit(v));
    let mut perm = vec![0; n];
    let (mut next_join, mut next_inner, mut next_indep) = (0, size, size + p.inner());
    for v in 0..n {
        let slot = if s.contains(v) {
            &mut next_join
        } else if independent & bit(v) != 0 {
            &mut next_indep
        } else {
            &mut next_inner
        };
        perm[v] = *slot;
        *slot += 1;
    }
    let host = crate::extremal::extremal_graph(&p).ok()?;
    g.permute(&perm).is_spanning_subgraph_of(&host).then_some(perm)
}

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::MatchingError;
use crate::graph::{bit, Bits, Graph, VertexSet};
use crate::matching::bipartite::{deficiency_witness, double_cover_matching};

/// A set of pairwise disjoint edges, stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that every pair is an edge of `g` and no vertex repeats.
    pub fn new(g: &Graph, edges: &[(usize, usize)]) -> Result<Self, MatchingError> {
        let mut covered: Bits = 0;
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge(u, v));
            }
            for w in [u, v] {
                if covered & bit(w) != 0 {
                    return Err(MatchingError::NotAMatching(w));
                }
                covered |= bit(w);
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub(crate) fn from_sorted_unchecked(edges: Vec<(usize, usize)>) -> Self {
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The vertices covered by the matching.
    pub fn vertices(&self) -> VertexSet {
        VertexSet(self.edges.iter().fold(0, |acc, &(u, v)| acc | bit(u) | bit(v)))
    }
}

/// An edge weighting with rational values; only nonzero weights are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalMatching {
    order: usize,
    weights: BTreeMap<(usize, usize), Rational64>,
}

impl FractionalMatching {
    pub fn new(order: usize) -> Self {
        FractionalMatching { order, weights: BTreeMap::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Sets `h(uv)`; a zero value removes the edge from the support.
    pub fn set(&mut self, u: usize, v: usize, value: Rational64) {
        let key = (u.min(v), u.max(v));
        if value.is_zero() {
            self.weights.remove(&key);
        } else {
            self.weights.insert(key, value);
        }
    }

    pub fn weight(&self, u: usize, v: usize) -> Rational64 {
        self.weights.get(&(u.min(v), u.max(v))).copied().unwrap_or_else(Rational64::zero)
    }

    /// Edges with nonzero weight in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = ((usize, usize), Rational64)> + '_ {
        self.weights.iter().map(|(&e, &w)| (e, w))
    }

    pub fn vertex_sum(&self, v: usize) -> Rational64 {
        self.weights
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .fold(Rational64::zero(), |acc, (_, &w)| acc + w)
    }

    /// Every weight sits on an edge of `g`, lies in `[0, 1]`, and every
    /// vertex sum is exactly one.
    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        if self.order != g.order() {
            return false;
        }
        let mut sums = vec![Rational64::zero(); self.order];
        for (&(u, v), &w) in &self.weights {
            if !g.has_edge(u, v) || w < Rational64::zero() || w > Rational64::one() {
                return false;
            }
            sums[u] += w;
            sums[v] += w;
        }
        sums.iter().all(|s| s.is_one())
    }

    /// All weights lie in `{0, 1/2, 1}`.
    pub fn is_half_integral(&self) -> bool {
        let half = Rational64::new(1, 2);
        self.weights.values().all(|&w| w == half || w.is_one())
    }

    /// `h(e) = 1` for every edge of `m`.
    pub fn saturates(&self, m: &Matching) -> bool {
        m.edges().iter().all(|&(u, v)| self.weight(u, v).is_one())
    }
}

/// Outcome of a fractional perfect matching query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FpmOutcome {
    Exists(FractionalMatching),
    /// `isolated` is an independent set of isolated vertices of `G - s`
    /// with `|isolated| > |s|`.
    Deficient { s: VertexSet, isolated: VertexSet },
}

impl FpmOutcome {
    pub fn exists(&self) -> bool {
        matches!(self, FpmOutcome::Exists(_))
    }
}

/// Decides whether `g` has a fractional perfect matching.
///
/// A perfect matching of the bipartite double cover is a permutation of
/// `V(G)` along edges. Its 2-cycles give weight-1 edges, even cycles are
/// split into alternate weight-1 edges, and odd cycles get weight 1/2 on
/// every edge, so the result is half-integral.
pub fn fractional_pm_exists(g: &Graph) -> FpmOutcome {
    let n = g.order();
    let cover = double_cover_matching(g);
    if !cover.is_perfect() {
        let (s, isolated) = deficiency_witness(g, &cover);
        return FpmOutcome::Deficient { s, isolated };
    }
    let mut h = FractionalMatching::new(n);
    let mut seen = vec![false; n];
    let half = Rational64::new(1, 2);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut v = cover.successor(start).expect("perfect cover matching");
        while v != start {
            seen[v] = true;
            cycle.push(v);
            v = cover.successor(v).expect("perfect cover matching");
        }
        let len = cycle.len();
        match len {
            2 => h.set(cycle[0], cycle[1], Rational64::one()),
            _ if len % 2 == 0 => {
                for i in (0..len).step_by(2) {
                    h.set(cycle[i], cycle[i + 1], Rational64::one());
                }
            }
            _ => {
                for i in 0..len {
                    h.set(cycle[i], cycle[(i + 1) % len], half);
                }
            }
        }
    }
    FpmOutcome::Exists(h)
}

/// Extends `m` to a fractional perfect matching `h` of `g` with `h(e) = 1`
/// on `m`, if one exists.
///
/// Any such `h` is zero on every other edge at `V(m)`, so this is exactly a
/// fractional perfect matching of `g - V(m)`.
pub fn extend_matching(g: &Graph, m: &Matching) -> Option<FractionalMatching> {
    let covered = m.vertices();
    let rest = VertexSet(g.vertices().0 & !covered.0);
    let labels = rest.to_vec();
    let FpmOutcome::Exists(inner) = fractional_pm_exists(&g.induced(rest)) else {
        return None;
    };
    let mut h = FractionalMatching::new(g.order());
    for &(u, v) in m.edges() {
        h.set(u, v, Rational64::one());
    }
    for ((a, b), w) in inner.support() {
        h.set(labels[a], labels[b], w);
    }
    Some(h)
}

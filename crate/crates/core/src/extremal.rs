//! The family `K_s ∨ (K_{n1} ∪ t·K_1)` with `n1 = n - 2s + 2k - 1` and
//! `t = s - 2k + 1`.
//!
//! `s = 2k` gives `K_{2k} ∨ (K_{n-2k-1} ∪ K_1)`; `s = δ` gives the minimum
//! degree variant. Vertices are laid out as `[join clique | inner clique |
//! independent part]`, so the natural three-block partition is positional.

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{complete, disjoint_union, join, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExtremalParams {
    pub n: usize,
    pub k: usize,
    pub s: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, k: usize, s: usize) -> Result<Self, GraphError> {
        let err = |reason| Err(GraphError::ExtremalParams { n, k, s, reason });
        if k == 0 {
            return err("k must be at least 1");
        }
        if s < 2 * k {
            return err("s must be at least 2k");
        }
        if n + 2 * k < 2 * s + 1 {
            return err("n must be at least 2s - 2k + 1");
        }
        Ok(ExtremalParams { n, k, s })
    }

    /// `K_{2k} ∨ (K_{n-2k-1} ∪ K_1)`.
    pub fn sharp(n: usize, k: usize) -> Result<Self, GraphError> {
        Self::new(n, k, 2 * k)
    }

    /// Order of the inner clique, `n - 2s + 2k - 1`.
    pub fn inner(&self) -> usize {
        self.n + 2 * self.k - 1 - 2 * self.s
    }

    /// Size of the independent part, `s - 2k + 1`.
    pub fn independent(&self) -> usize {
        self.s + 1 - 2 * self.k
    }

    pub fn join_block(&self) -> VertexSet {
        VertexSet::range(0, self.s)
    }

    pub fn inner_block(&self) -> VertexSet {
        VertexSet::range(self.s, self.s + self.inner())
    }

    pub fn independent_block(&self) -> VertexSet {
        VertexSet::range(self.s + self.inner(), self.n)
    }

    /// Closed-form edge count `C(s,2) + C(n1,2) + s(n-s)`.
    pub fn edge_count(&self) -> u64 {
        let c2 = |m: usize| (m * m.saturating_sub(1) / 2) as u64;
        c2(self.s) + c2(self.inner()) + (self.s * (self.n - self.s)) as u64
    }
}

pub fn extremal_graph(p: &ExtremalParams) -> Result<Graph, GraphError> {
    let rest = disjoint_union(&complete(p.inner())?, &Graph::empty(p.independent())?)?;
    join(&complete(p.s)?, &rest)
}

/// Decides `g ≅ extremal_graph(p)` from the structure of the complement.
///
/// The complement of `K_s ∨ (K_{n1} ∪ t·K_1)` is `s·K_1 ∪ (K_t ∨ n1·K_1)`:
/// the join clique becomes isolated, the independent part becomes a clique
/// adjacent to everything else outside the join clique, and the inner clique
/// becomes independent. That description is a complete invariant.
pub fn matches_extremal(g: &Graph, p: &ExtremalParams) -> bool {
    if g.order() != p.n {
        return false;
    }
    let (n1, t) = (p.inner(), p.independent());
    let h = g.complement();
    if n1 == 0 && t == 1 {
        return h.size() == 0;
    }
    let isolated: Vec<usize> = (0..p.n).filter(|&v| h.degree(v) == 0).collect();
    if isolated.len() != p.s {
        return false;
    }
    let rest: Vec<usize> = (0..p.n).filter(|&v| h.degree(v) > 0).collect();
    // inside the non-isolated part, the clique side of K_t ∨ n1·K_1 is universal
    let universal: Vec<usize> = rest.iter().copied().filter(|&v| h.degree(v) == rest.len() - 1).collect();
    let others: Vec<usize> = rest.iter().copied().filter(|&v| h.degree(v) != rest.len() - 1).collect();
    let others_independent = others
        .iter()
        .all(|&u| others.iter().all(|&v| !h.has_edge(u, v)));
    if !others_independent {
        return false;
    }
    // with n1 = 1 the lone inner vertex is universal in the complement too
    (universal.len() == t && others.len() == n1)
        || (n1 == 1 && universal.len() == t + 1 && others.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;
    use crate::graph::{delete_vertices, graph_stats, isolated_count};

    #[test]
    fn constructor_examples() {
        let p = ExtremalParams::new(11, 1, 6).unwrap();
        assert_eq!((p.inner(), p.independent()), (0, 5));
        let g = extremal_graph(&p).unwrap();
        assert_eq!(g.size(), 45);
        let st = graph_stats(&g);
        assert_eq!((st.order, st.size, st.min_degree, st.connected), (11, 45, 6, true));

        let g2 = extremal_graph(&ExtremalParams::sharp(11, 1).unwrap()).unwrap();
        assert_eq!(g2.size(), 47);
        assert_eq!(g2.size(), 9 * 10 / 2 + 2);

        let small = extremal_graph(&ExtremalParams::new(4, 1, 2).unwrap()).unwrap();
        let mut k4_minus = crate::graph::complete(4).unwrap();
        k4_minus.remove_edge(2, 3).unwrap();
        assert_eq!(small, k4_minus);
    }

    #[test]
    fn invalid_params() {
        assert!(ExtremalParams::new(5, 1, 1).is_err());
        assert!(ExtremalParams::new(5, 0, 2).is_err());
        assert!(ExtremalParams::new(8, 1, 6).is_err()); // n1 would be negative
    }

    #[test]
    fn degree_spectrum_and_isolation() {
        for k in 1..=3 {
            for s in 2 * k..=2 * k + 6 {
                for n in 2 * s - 2 * k + 1..=2 * s - 2 * k + 8 {
                    let p = ExtremalParams::new(n, k, s).unwrap();
                    let g = extremal_graph(&p).unwrap();
                    assert_eq!(g.size() as u64, p.edge_count());
                    assert_eq!(g.min_degree(), s);
                    let degs = g.degrees();
                    let count = |d: usize| degs.iter().filter(|&&x| x == d).count();
                    let (full, inner_deg) = (n - 1, s + p.inner() - 1);
                    if full != inner_deg && inner_deg != s && full != s {
                        assert_eq!(count(full), s);
                        assert_eq!(count(inner_deg), p.inner());
                        assert_eq!(count(s), p.independent());
                    }
                    let rest = delete_vertices(&g, p.join_block()).unwrap();
                    let expected = p.independent() + usize::from(p.inner() == 1);
                    assert_eq!(isolated_count(&rest), expected);
                }
            }
        }
    }

    #[test]
    fn matches_extremal_agrees_with_isomorphism() {
        for k in 1..=2 {
            for s in 2 * k..=2 * k + 4 {
                for n in 2 * s - 2 * k + 1..=2 * s - 2 * k + 4 {
                    let p = ExtremalParams::new(n, k, s).unwrap();
                    let g = extremal_graph(&p).unwrap();
                    let perm: Vec<usize> = (0..n).map(|v| (v * 7 + 3) % n).collect();
                    if perm.iter().collect::<std::collections::HashSet<_>>().len() == n {
                        assert!(matches_extremal(&g.permute(&perm), &p));
                    }
                    assert!(matches_extremal(&g, &p));
                    // one more or one fewer edge breaks it
                    for (u, v) in [(n - 1, n - 2), (0, 1)] {
                        let mut h = g.clone();
                        if h.has_edge(u, v) {
                            h.remove_edge(u, v).unwrap();
                        } else {
                            h.add_edge(u, v).unwrap();
                        }
                        assert_eq!(matches_extremal(&h, &p), isomorphic(&h, &g));
                    }
                    // cross-family comparisons
                    for s2 in 2 * k..=s {
                        if let Ok(q) = ExtremalParams::new(n, k, s2) {
                            let h = extremal_graph(&q).unwrap();
                            assert_eq!(matches_extremal(&h, &p), isomorphic(&h, &g), "{p:?} vs {q:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complete_graph_is_not_extremal() {
        let p = ExtremalParams::new(9, 1, 3).unwrap();
        assert!(!matches_extremal(&crate::graph::complete(9).unwrap(), &p));
        let mut g2 = extremal_graph(&ExtremalParams::sharp(11, 1).unwrap()).unwrap();
        // the pendant vertex (10) gets an edge into the inner clique
        g2.add_edge(10, 5).unwrap();
        assert!(!matches_extremal(&g2, &ExtremalParams::sharp(11, 1).unwrap()));
    }
}

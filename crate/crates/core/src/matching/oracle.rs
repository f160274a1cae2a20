use serde::Serialize;

use crate::error::MatchingError;
use crate::graph::{bit, Bits, Graph, VertexSet};
use crate::graph::twin_classes;
use crate::matching::blossom::has_k_matching;
use crate::matching::fractional::{extend_matching, FractionalMatching, Matching};

/// Largest number of k-matchings the definitional oracle will enumerate.
pub const MAX_K_MATCHINGS: u128 = 50_000_000;

/// Largest number of candidate sets the lemma oracle will enumerate.
pub const MAX_LEMMA_CANDIDATES: u128 = 1 << 27;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A k-matching that no fractional perfect matching contains.
    Matching(Matching),
    /// A set `S` with a k-matching in `G[S]` and `i(G - S) > |S| - 2k`.
    Set(VertexSet),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Extendable,
    NotExtendable { witness: Witness },
    /// The graph has no k-matching at all.
    NoKMatching,
    /// `k = 0` or order below `2k + 2`.
    OutOfDomain { order: usize, k: usize },
}

impl Verdict {
    pub fn is_extendable(&self) -> bool {
        matches!(self, Verdict::Extendable)
    }

    pub fn reason(&self) -> &'static str {
        match self {
            Verdict::Extendable => "extendable",
            Verdict::NotExtendable { .. } => "not-extendable",
            Verdict::NoKMatching => "no-k-matching",
            Verdict::OutOfDomain { .. } => "out-of-domain",
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::NotExtendable { witness } => Some(witness),
            _ => None,
        }
    }

    /// The violating set of a lemma verdict.
    pub fn witness_set(&self) -> Option<VertexSet> {
        match self.witness() {
            Some(Witness::Set(s)) => Some(*s),
            _ => None,
        }
    }
}

fn domain(g: &Graph, k: usize) -> Option<Verdict> {
    if k == 0 || g.order() < 2 * k + 2 {
        Some(Verdict::OutOfDomain { order: g.order(), k })
    } else if !has_k_matching(g, k) {
        Some(Verdict::NoKMatching)
    } else {
        None
    }
}

/// Decides fractional k-extendability straight from the definition: every
/// k-matching must extend to a fractional perfect matching.
pub fn is_fext_definitional(g: &Graph, k: usize) -> Result<Verdict, MatchingError> {
    is_fext_definitional_with(g, k, |_, _| {})
}

/// As [`is_fext_definitional`], handing every successful extension to `inspect`.
///
/// k-matchings are enumerated once each as increasing sequences of edges in
/// lexicographic order, so the reported witness is the first failing one.
pub fn is_fext_definitional_with<F>(g: &Graph, k: usize, mut inspect: F) -> Result<Verdict, MatchingError>
where
    F: FnMut(&Matching, &FractionalMatching),
{
    if let Some(v) = domain(g, k) {
        return Ok(v);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut search = Search { g, k, edges: &edges, stack: Vec::with_capacity(k), count: 0 };
    Ok(match search.run(0, 0, &mut inspect)? {
        Some(m) => Verdict::NotExtendable { witness: Witness::Matching(m) },
        None => Verdict::Extendable,
    })
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    edges: &'a [(usize, usize)],
    stack: Vec<(usize, usize)>,
    count: u128,
}

impl Search<'_> {
    fn run<F>(&mut self, from: usize, used: Bits, inspect: &mut F) -> Result<Option<Matching>, MatchingError>
    where
        F: FnMut(&Matching, &FractionalMatching),
    {
        if self.stack.len() == self.k {
            self.count += 1;
            if self.count > MAX_K_MATCHINGS {
                return Err(MatchingError::SearchTooLarge(self.count));
            }
            let m = Matching::from_sorted_unchecked(self.stack.clone());
            return Ok(match extend_matching(self.g, &m) {
                Some(h) => {
                    inspect(&m, &h);
                    None
                }
                None => Some(m),
            });
        }
        let remaining = self.k - self.stack.len();
        for i in from..self.edges.len() {
            if self.edges.len() - i < remaining {
                break;
            }
            let (u, v) = self.edges[i];
            let mask = bit(u) | bit(v);
            if used & mask != 0 {
                continue;
            }
            self.stack.push((u, v));
            let found = self.run(i + 1, used | mask, inspect)?;
            self.stack.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

fn violates(g: &Graph, mask: Bits, k: usize) -> bool {
    let size = mask.count_ones() as usize;
    if size < 2 * k || g.order() - size + 2 * k <= size {
        return false;
    }
    if g.isolated_after_removing(mask) + 2 * k <= size {
        return false;
    }
    has_k_matching(&g.induced(VertexSet(mask)), k)
}

/// Decides fractional k-extendability through the isolated-vertex condition:
/// `i(G - S) ≤ |S| - 2k` for every `S` whose induced subgraph has a k-matching.
///
/// The witness is the numerically least violating bitmask. Twin classes are
/// interchangeable, so only sets made of the lowest members of each class are
/// examined; such a set is never larger as a bitmask than any set with the
/// same class counts, so the least violator is still found.
pub fn is_fext_lemma(g: &Graph, k: usize) -> Result<Verdict, MatchingError> {
    if let Some(v) = domain(g, k) {
        return Ok(v);
    }
    let classes = twin_classes(g);
    let space = classes
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128 + 1))
        .unwrap_or(u128::MAX);
    if space > MAX_LEMMA_CANDIDATES {
        return Err(MatchingError::SearchTooLarge(space));
    }
    let found = if classes.len() == g.order() {
        (0..1u128 << g.order()).find(|&mask| violates(g, mask, k))
    } else {
        least_over_classes(g, k, &classes)
    };
    Ok(match found {
        Some(mask) => Verdict::NotExtendable { witness: Witness::Set(VertexSet(mask)) },
        None => Verdict::Extendable,
    })
}

fn least_over_classes(g: &Graph, k: usize, classes: &[Vec<usize>]) -> Option<Bits> {
    // prefix[i][c] = bitmask of the first c members of class i
    let prefix: Vec<Vec<Bits>> = classes
        .iter()
        .map(|c| {
            let mut acc = 0;
            std::iter::once(0)
                .chain(c.iter().map(|&v| {
                    acc |= bit(v);
                    acc
                }))
                .collect()
        })
        .collect();
    let mut counts = vec![0usize; classes.len()];
    let mut best: Option<Bits> = None;
    loop {
        let mask = counts.iter().zip(&prefix).fold(0, |acc, (&c, p)| acc | p[c]);
        if best.is_none_or(|b| mask < b) && violates(g, mask, k) {
            best = Some(mask);
        }
        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == counts.len() {
                return best;
            }
            counts[i] += 1;
            if counts[i] <= classes[i].len() {
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

/// Re-checks a set witness independently of the search.
pub fn is_violating_set(g: &Graph, s: VertexSet, k: usize) -> bool {
    let size = s.len();
    size >= 2 * k
        && has_k_matching(&g.induced(s), k)
        && g.isolated_after_removing(s.0) + 2 * k > size
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{extremal_graph, ExtremalParams};
    use crate::graph::complete;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn cycles() {
        assert!(is_fext_definitional(&cycle(4), 1).unwrap().is_extendable());
        assert!(is_fext_lemma(&cycle(4), 1).unwrap().is_extendable());
        let d = is_fext_definitional(&cycle(5), 1).unwrap();
        assert_eq!(d.witness(), Some(&Witness::Matching(Matching::new(&cycle(5), &[(0, 1)]).unwrap())));
        let l = is_fext_lemma(&cycle(5), 1).unwrap();
        assert_eq!(l.witness_set(), Some(VertexSet::from_vertices([0, 1, 3])));
    }

    #[test]
    fn complete_graphs_extend() {
        for k in 1..=3 {
            let g = complete(2 * k + 2).unwrap();
            assert!(is_fext_lemma(&g, k).unwrap().is_extendable());
            assert!(is_fext_definitional(&g, k).unwrap().is_extendable());
        }
    }

    #[test]
    fn domain_and_precondition() {
        assert_eq!(
            is_fext_lemma(&cycle(3), 1).unwrap(),
            Verdict::OutOfDomain { order: 3, k: 1 }
        );
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(is_fext_lemma(&star, 2).unwrap(), Verdict::NoKMatching);
        assert_eq!(is_fext_definitional(&star, 2).unwrap(), Verdict::NoKMatching);
    }

    #[test]
    fn extremal_witness_is_join_clique() {
        for (n, k, s) in [(11, 1, 2), (11, 1, 6), (14, 2, 5), (40, 2, 7), (90, 2, 7)] {
            let p = ExtremalParams::new(n, k, s).unwrap();
            let g = extremal_graph(&p).unwrap();
            let v = is_fext_lemma(&g, k).unwrap();
            assert_eq!(v.witness_set(), Some(p.join_block()), "{p:?}");
            assert!(is_violating_set(&g, p.join_block(), k));
        }
    }

    #[test]
    fn twin_reduction_matches_plain_scan() {
        let p = ExtremalParams::new(9, 1, 3).unwrap();
        let g = extremal_graph(&p).unwrap();
        let plain = (0..1u128 << 9).find(|&m| violates(&g, m, 1));
        let classes = twin_classes(&g);
        assert_eq!(least_over_classes(&g, 1, &classes), plain);
    }

    #[test]
    fn definitional_extensions_are_half_integral() {
        let g = complete(6).unwrap();
        let mut seen = 0;
        is_fext_definitional_with(&g, 2, |m, h| {
            assert!(h.is_perfect_in(&g) && h.is_half_integral() && h.saturates(m));
            seen += 1;
        })
        .unwrap();
        assert_eq!(seen, 45);
    }
}

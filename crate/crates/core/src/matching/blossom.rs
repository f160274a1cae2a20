//! Maximum matching in general graphs (Edmonds' blossom contraction).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// A maximum matching as a mate array (`None` for exposed vertices).
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.order();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::with_capacity(n),
    };
    // greedy start
    for (u, v) in g.edges() {
        if b.mate[u] == NONE && b.mate[v] == NONE {
            b.mate[u] = v;
            b.mate[v] = u;
        }
    }
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let ppv = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = ppv;
            }
        }
    }
    b.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect()
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).iter().filter(|m| m.is_some()).count() / 2
}

pub fn has_k_matching(g: &Graph, k: usize) -> bool {
    k == 0 || (2 * k <= g.order() && matching_number(g) >= k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, disjoint_union};
    use proptest::prelude::*;

    /// Largest set of pairwise disjoint edges by exhaustive search.
    fn brute_force(g: &Graph) -> usize {
        fn go(edges: &[(usize, usize)], used: u128, from: usize) -> usize {
            let mut best = 0;
            for i in from..edges.len() {
                let (u, v) = edges[i];
                let mask = (1u128 << u) | (1u128 << v);
                if used & mask == 0 {
                    best = best.max(1 + go(edges, used | mask, i + 1));
                }
            }
            best
        }
        let edges: Vec<_> = g.edges().collect();
        go(&edges, 0, 0)
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(matching_number(&complete(4).unwrap()), 2);
        let c5 = Graph::from_edges(5, &(0..5).map(|i| (i, (i + 1) % 5)).collect::<Vec<_>>()).unwrap();
        assert_eq!(matching_number(&c5), 2);
        assert_eq!(brute_force(&petersen()), 5);
        assert_eq!(matching_number(&petersen()), 5);
    }

    #[test]
    fn k_matching_queries() {
        for k in 1..5 {
            assert!(has_k_matching(&complete(2 * k).unwrap(), k));
        }
        for k in 2..5 {
            let g = disjoint_union(&Graph::empty(2 * k - 1).unwrap(), &complete(2).unwrap()).unwrap();
            assert!(!has_k_matching(&g, k));
        }
        assert!(has_k_matching(&Graph::empty(1).unwrap(), 0));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]
        #[test]
        fn agrees_with_brute_force(n in 1usize..=11, p in 0.05f64..0.7, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n).unwrap();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(p) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let mate = maximum_matching(&g);
            for (v, m) in mate.iter().enumerate() {
                if let Some(u) = *m {
                    prop_assert!(g.has_edge(u, v));
                    prop_assert_eq!(mate[u], Some(v));
                }
            }
            prop_assert_eq!(matching_number(&g), brute_force(&g));
        }
    }
}

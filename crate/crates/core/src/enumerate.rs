//! Corpus generators: isomorphism classes of small graphs and random
//! connected graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{bit, Graph};

fn dedupe(candidates: Vec<Graph>) -> Vec<Graph> {
    let forms: BTreeSet<CanonicalForm> = candidates.par_iter().map(canonical_form).collect();
    forms.into_iter().map(|f| f.to_graph()).collect()
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// built by vertex augmentation. Output order is canonical (sorted by form).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("order 0")];
    for m in 0..n {
        let candidates: Vec<Graph> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0..1u128 << m).map(move |nbrs| {
                    let mut rows = g.rows().to_vec();
                    for (v, row) in rows.iter_mut().enumerate() {
                        if nbrs & bit(v) != 0 {
                            *row |= bit(m);
                        }
                    }
                    rows.push(nbrs);
                    Graph::from_rows(rows).expect("augmented graph is simple")
                })
            })
            .collect();
        level = dedupe(candidates);
    }
    level
}

/// Connected isomorphism classes on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Isomorphism classes of graphs on `n` vertices with at most `max_edges` edges,
/// built edge by edge.
pub fn graphs_with_at_most_edges(n: usize, max_edges: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    let mut level = vec![Graph::empty(n).expect("order within capacity")];
    for _ in 0..max_edges {
        let candidates: Vec<Graph> = level
            .par_iter()
            .flat_map_iter(|g| {
                let mut out = Vec::new();
                for v in 1..n {
                    for u in 0..v {
                        if !g.has_edge(u, v) {
                            let mut h = g.clone();
                            h.add_edge(u, v).expect("vertices in range");
                            out.push(h);
                        }
                    }
                }
                out
            })
            .collect();
        all.append(&mut level);
        level = dedupe(candidates);
        if level.is_empty() {
            break;
        }
    }
    all.append(&mut level);
    all
}

/// Connected graphs on `n` vertices whose complement has at most
/// `missing_edges` edges, one per isomorphism class.
pub fn dense_connected_graphs(n: usize, missing_edges: usize) -> Vec<Graph> {
    graphs_with_at_most_edges(n, missing_edges)
        .iter()
        .map(Graph::complement)
        .filter(Graph::is_connected)
        .collect()
}

/// A random spanning tree (random attachment order) plus each remaining pair
/// independently with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n).expect("order within capacity");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(order[i], parent).expect("vertices in range");
    }
    for v in 1..n {
        for u in 0..v {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("vertices in range");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        // OEIS A000088 and A001349
        let all = [1, 1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 1, 2, 6, 21, 112];
        for n in 0..all.len() {
            assert_eq!(all_graphs(n).len(), all[n], "all graphs on {n}");
            assert_eq!(connected_graphs(n).len(), connected[n], "connected graphs on {n}");
        }
    }

    #[test]
    fn edge_bounded_counts() {
        // graphs on 5 vertices by edge count: 1,1,2,4,6,6,6,4,2,1,1
        let by_edges = [1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1];
        for m in 0..=10 {
            let expected: usize = by_edges[..=m].iter().sum();
            assert_eq!(graphs_with_at_most_edges(5, m).len(), expected);
        }
    }

    #[test]
    fn random_graphs_are_connected() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let n = rng.gen_range(1..=30);
            assert!(random_connected_graph(n, 0.1, &mut rng).is_connected());
        }
    }
}

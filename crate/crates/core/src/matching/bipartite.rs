//! Hopcroft–Karp on the bipartite double cover of a graph.
//!
//! The double cover has vertices `v⁺` (left) and `v⁻` (right) and edges
//! `u⁺v⁻`, `v⁺u⁻` for every edge `uv`.

use std::collections::VecDeque;

use crate::graph::{Bits, Graph, VertexSet};

const NONE: usize = usize::MAX;

pub(crate) struct CoverMatching {
    /// `left[u] = v` iff `u⁺v⁻` is matched.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub size: usize,
}

impl CoverMatching {
    pub fn is_perfect(&self) -> bool {
        self.size == self.left.len()
    }

    pub fn successor(&self, u: usize) -> Option<usize> {
        (self.left[u] != NONE).then_some(self.left[u])
    }
}

pub(crate) fn double_cover_matching(g: &Graph) -> CoverMatching {
    let n = g.order();
    let mut left = vec![NONE; n];
    let mut right = vec![NONE; n];
    let mut dist = vec![0usize; n];
    let mut size = 0;
    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for u in 0..n {
            if left[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).iter() {
                match right[v] {
                    NONE => found = true,
                    w if dist[w] == usize::MAX => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..n {
            if left[u] == NONE && augment(g, u, &mut left, &mut right, &mut dist) {
                size += 1;
            }
        }
    }
    CoverMatching { left, right, size }
}

fn augment(g: &Graph, u: usize, left: &mut [usize], right: &mut [usize], dist: &mut [usize]) -> bool {
    for v in g.neighbors(u).iter() {
        let w = right[v];
        let ok = if w == NONE {
            true
        } else if dist[w] == dist[u].wrapping_add(1) {
            augment(g, w, left, right, dist)
        } else {
            false
        };
        if ok {
            left[u] = v;
            right[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Deficiency certificate read off a maximum matching of the double cover.
///
/// `x` is the set of left vertices reachable from exposed left vertices by
/// alternating paths, `s` the set of right vertices reached (`= N(x)`). By
/// the cover's side-swapping symmetry `x` and `s` are disjoint, so `x` is
/// independent and isolated in `G - s`, with `|x| - |s|` equal to the number
/// of exposed left vertices.
pub(crate) fn deficiency_witness(g: &Graph, m: &CoverMatching) -> (VertexSet, VertexSet) {
    let n = g.order();
    let mut x: Bits = 0;
    let mut s: Bits = 0;
    let mut queue = VecDeque::new();
    for u in 0..n {
        if m.left[u] == NONE {
            x |= 1 << u;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u).iter() {
            if s & (1 << v) != 0 {
                continue;
            }
            s |= 1 << v;
            let w = m.right[v];
            if w != NONE && x & (1 << w) == 0 {
                x |= 1 << w;
                queue.push_back(w);
            }
        }
    }
    (VertexSet(s), VertexSet(x))
}

//! Simple undirected graphs stored as adjacency bit rows.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// One adjacency row. Bit `v` of row `u` is set iff `uv` is an edge.
pub type Bits = u128;

/// Largest supported order (one [`Bits`] word per row).
pub const MAX_ORDER: usize = Bits::BITS as usize;

#[inline]
pub(crate) const fn bit(v: usize) -> Bits {
    1 << v
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> Bits {
    if n >= MAX_ORDER {
        Bits::MAX
    } else {
        (1 << n) - 1
    }
}

/// A set of vertices, as a bitmask over `0..n`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub Bits);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn range(start: usize, end: usize) -> Self {
        VertexSet(low_bits(end) & !low_bits(start))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0, |acc, v| acc | bit(v)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterates the set bits of a word in increasing order.
pub struct BitIter(Bits);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::Capacity {
                order: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<Bits>) -> Result<Self, GraphError> {
        let n = rows.len();
        let g = Graph { n, adj: rows };
        if n > MAX_ORDER {
            return Err(GraphError::Capacity {
                order: n,
                max: MAX_ORDER,
            });
        }
        for u in 0..n {
            if g.adj[u] & !low_bits(n) != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (MAX_ORDER - 1) - g.adj[u].leading_zeros() as usize,
                    order: n,
                });
            }
            if g.adj[u] & bit(u) != 0 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in BitIter(g.adj[u]) {
                if g.adj[v] & bit(u) == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn row(&self, v: usize) -> Bits {
        self.adj[v]
    }

    pub fn rows(&self) -> &[Bits] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet(low_bits(self.n))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| BitIter(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = low_bits(self.n);
        let mut seen: Bits = 1;
        let mut frontier: Bits = 1;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & all == all
    }

    pub fn complement(&self) -> Graph {
        let all = low_bits(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let kept: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut adj = vec![0; kept.len()];
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    adj[i] |= bit(j);
                }
            }
        }
        Graph { n: kept.len(), adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut adj = vec![0; self.n];
        for u in 0..self.n {
            for v in BitIter(self.adj[u]) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// True iff every edge of `self` is an edge of `other` (same order).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && (0..self.n).all(|v| self.adj[v] & !other.adj[v] == 0)
    }

    /// Number of vertices outside `removed` whose neighbours all lie in `removed`.
    #[inline]
    pub fn isolated_after_removing(&self, removed: Bits) -> usize {
        BitIter(low_bits(self.n) & !removed)
            .filter(|&v| self.adj[v] & !removed == 0)
            .count()
    }
}

/// The complete graph `K_m`.
pub fn complete(m: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(m)?;
    let all = low_bits(m);
    for v in 0..m {
        g.adj[v] = all & !bit(v);
    }
    Ok(g)
}

/// Disjoint union; vertices of `g2` are shifted by `g1.order()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let n = g1.n + g2.n;
    let mut g = Graph::empty(n)?;
    g.adj[..g1.n].copy_from_slice(&g1.adj);
    for v in 0..g2.n {
        g.adj[g1.n + v] = g2.adj[v] << g1.n;
    }
    Ok(g)
}

/// Join: disjoint union plus every edge between the two parts.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let mut g = disjoint_union(g1, g2)?;
    let left = low_bits(g1.n);
    let right = VertexSet::range(g1.n, g.n).0;
    for v in 0..g1.n {
        g.adj[v] |= right;
    }
    for v in g1.n..g.n {
        g.adj[v] |= left;
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct GraphStats {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub connected: bool,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    GraphStats {
        order: g.order(),
        size: g.size(),
        min_degree: g.min_degree(),
        connected: g.is_connected(),
    }
}

/// `g - S`: the subgraph induced on the vertices outside `s`.
pub fn delete_vertices(g: &Graph, s: VertexSet) -> Result<Graph, GraphError> {
    if s.0 & !low_bits(g.order()) != 0 {
        return Err(GraphError::NotSubset { order: g.order() });
    }
    Ok(g.induced(VertexSet(low_bits(g.order()) & !s.0)))
}

/// Number of degree-0 vertices.
pub fn isolated_count(g: &Graph) -> usize {
    g.isolated_after_removing(0)
}

/// All-pairs shortest-path distances by breadth-first search.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<u32>>, GraphError> {
    let n = g.order();
    let mut dist = vec![vec![u32::MAX; n]; n];
    let mut queue = VecDeque::with_capacity(n);
    for (src, row) in dist.iter_mut().enumerate() {
        row[src] = 0;
        queue.clear();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).iter() {
                if row[v] == u32::MAX {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.contains(&u32::MAX) {
            return Err(GraphError::Disconnected);
        }
    }
    Ok(dist)
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64, GraphError> {
    let dist = distance_matrix(g)?;
    Ok(dist
        .iter()
        .enumerate()
        .map(|(i, row)| row[i + 1..].iter().map(|&d| d as u64).sum::<u64>())
        .sum())
}

/// Partitions the vertices into twin classes: `u ~ v` iff `N(u) \ {v} == N(v) \ {u}`.
///
/// Any permutation inside a class is an automorphism. Classes are listed by
/// their smallest vertex, and each class is sorted.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for v in 0..g.order() {
        for class in classes.iter_mut() {
            let r = class[0];
            if g.row(v) & !bit(r) == g.row(r) & !bit(v) {
                class.push(v);
                continue 'outer;
            }
        }
        classes.push(vec![v]);
    }
    classes
}

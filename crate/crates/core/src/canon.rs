//! Canonical labelling by colour refinement and individualisation.
//!
//! Small graphs only: the search tree is explored exhaustively, pruned solely
//! by twin classes (swapping two twins is an automorphism, so only one
//! representative per twin class needs individualising).

use crate::graph::{bit, twin_classes, Bits, Graph};

/// The adjacency rows of the canonically relabelled graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<Bits>);

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::from_rows(self.0.clone()).expect("canonical rows form a simple graph")
    }
}

struct Search<'a> {
    g: &'a Graph,
    twin_of: Vec<usize>,
    best: Option<(Vec<Bits>, Vec<usize>)>,
}

/// Refines `colors` (values are cell indices `0..cells`) to the coarsest
/// equitable colouring finer than it. Returns the number of cells.
fn refine(g: &Graph, colors: &mut [usize]) -> usize {
    let n = g.order();
    let mut cells = colors.iter().copied().max().map_or(0, |c| c + 1);
    loop {
        let mut sigs: Vec<(usize, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0u32; cells];
                for w in g.neighbors(v).iter() {
                    counts[colors[w]] += 1;
                }
                (colors[v], counts, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        let new_cells = if n == 0 { 0 } else { next + 1 };
        if new_cells == cells {
            return cells;
        }
        cells = new_cells;
    }
}

impl Search<'_> {
    fn run(&mut self, mut colors: Vec<usize>) {
        let n = self.g.order();
        let cells = refine(self.g, &mut colors);
        if cells == n {
            let mut code = vec![0; n];
            for u in 0..n {
                for v in self.g.neighbors(u).iter() {
                    code[colors[u]] |= bit(colors[v]);
                }
            }
            match &self.best {
                Some((best, _)) if *best <= code => {}
                _ => self.best = Some((code, colors)),
            }
            return;
        }
        // first non-singleton cell
        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..cells).find(|&c| sizes[c] > 1).expect("non-discrete colouring");
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried_classes = Vec::new();
        for &v in &members {
            if tried_classes.contains(&self.twin_of[v]) {
                continue;
            }
            tried_classes.push(self.twin_of[v]);
            let child: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| match c {
                    c if c > target => c + 1,
                    c if c == target && w != v => c + 1,
                    c => c,
                })
                .collect();
            self.run(child);
        }
    }
}

/// Returns the canonical form and the labelling `v -> perm[v]` that produces it.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let mut twin_of = vec![0; g.order()];
    for (i, class) in twin_classes(g).iter().enumerate() {
        for &v in class {
            twin_of[v] = i;
        }
    }
    let mut search = Search {
        g,
        twin_of,
        best: None,
    };
    search.run(vec![0; g.order()]);
    let (code, perm) = search.best.unwrap_or_default();
    (CanonicalForm(code), perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn labeling_reproduces_form() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let g = random_graph(rng.gen_range(1..10), 0.4, &mut rng);
            let (form, perm) = canonical_labeling(&g);
            assert_eq!(g.permute(&perm).rows(), &form.0[..]);
        }
    }

    #[test]
    fn distinguishes_cospectral_pair() {
        // K_{1,4} and C_4 ∪ K_1 share the adjacency spectrum {±2, 0, 0, 0}
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c4k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!isomorphic(&star, &c4k1));
        assert!(isomorphic(&complete(6).unwrap(), &complete(6).unwrap()));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn invariant_under_relabelling(n in 1usize..=12, p in 0.0f64..1.0, seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(n, p, &mut rng);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            prop_assert_eq!(canonical_form(&g), canonical_form(&g.permute(&perm)));
        }
    }
}

use fext_core::canon::isomorphic;
use fext_core::graph::{delete_vertices, distance_matrix, isolated_count, wiener_index};
use fext_core::harness::spanning_embedding;
use fext_core::matching::{
    extend_matching, fractional_pm_exists, is_fext_definitional, is_fext_lemma, is_violating_set, Verdict, Witness,
};
use fext_core::spectral::{build_matrix, quotient, spectral_radius, MatrixKind, Partition, DEFAULT_TOL};
use fext_core::{emit_graph6, extremal_graph, matches_extremal, parse_graph6, ExtremalParams, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn extremal_params() -> impl Strategy<Value = ExtremalParams> {
    (1usize..=3, 0usize..=6, 0usize..=20).prop_map(|(k, extra_s, extra_n)| {
        let s = 2 * k + extra_s;
        let n = 2 * s - 2 * k + 1 + extra_n;
        ExtremalParams::new(n, k, s).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn oracles_agree_on_random_graphs(n in 4usize..=10, p in 0.2f64..0.95, seed in any::<u64>(), k in 1usize..=2) {
        let g = random_graph(n, p, seed);
        let d = is_fext_definitional(&g, k).unwrap();
        let l = is_fext_lemma(&g, k).unwrap();
        prop_assert_eq!(d.is_extendable(), l.is_extendable());
        prop_assert_eq!(d.reason(), l.reason());
        if let Some(Witness::Set(s)) = l.witness() {
            prop_assert!(is_violating_set(&g, *s, k));
            let perm = spanning_embedding(&g, k, *s);
            prop_assert!(perm.is_some());
        }
        if let Some(Witness::Matching(m)) = d.witness() {
            prop_assert!(extend_matching(&g, m).is_none());
        }
    }

    #[test]
    fn fpm_witness_is_sound(n in 1usize..=20, p in 0.0f64..0.6, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        match fractional_pm_exists(&g) {
            fext_core::matching::FpmOutcome::Exists(h) => prop_assert!(h.is_perfect_in(&g) && h.is_half_integral()),
            fext_core::matching::FpmOutcome::Deficient { s, isolated } => {
                prop_assert!(isolated.len() > s.len());
                let rest = delete_vertices(&g, s).unwrap();
                prop_assert!(isolated_count(&rest) >= isolated.len());
            }
        }
    }

    #[test]
    fn extremal_structure(p in extremal_params()) {
        let g = extremal_graph(&p).unwrap();
        prop_assert_eq!(g.size() as u64, p.edge_count());
        prop_assert_eq!(g.min_degree(), p.s);
        let rest = delete_vertices(&g, p.join_block()).unwrap();
        prop_assert_eq!(isolated_count(&rest), p.independent() + usize::from(p.inner() == 1));
        let v = is_fext_lemma(&g, p.k).unwrap();
        if p.n >= 2 * p.k + 2 {
            prop_assert_eq!(v.witness_set(), Some(p.join_block()));
        } else {
            prop_assert_eq!(v, Verdict::OutOfDomain { order: p.n, k: p.k });
        }
    }

    #[test]
    fn extremal_recognition_is_label_free(p in extremal_params(), seed in any::<u64>()) {
        let g = extremal_graph(&p).unwrap();
        let mut perm: Vec<usize> = (0..p.n).collect();
        use rand::seq::SliceRandom;
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.permute(&perm);
        prop_assert!(matches_extremal(&h, &p));
        prop_assert!(isomorphic(&g, &h));
        if let Ok(other) = ExtremalParams::new(p.n, p.k, p.s + 1) {
            prop_assert!(!matches_extremal(&h, &other));
        }
    }

    #[test]
    fn extremal_partitions_are_equitable(p in extremal_params()) {
        let g = extremal_graph(&p).unwrap();
        let sizes: Vec<usize> = [p.s, p.inner(), p.independent()].into_iter().filter(|&x| x > 0).collect();
        let pi = Partition::positional(&sizes).unwrap();
        for kind in [MatrixKind::Adjacency, MatrixKind::SignlessLaplacian, MatrixKind::Distance] {
            let b = quotient(&build_matrix(&g, kind).unwrap(), &pi).unwrap();
            prop_assert!(b.is_equitable());
        }
    }

    #[test]
    fn wiener_matches_distance_sum(n in 1usize..=25, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        prop_assume!(g.is_connected());
        let d = distance_matrix(&g).unwrap();
        let sum: u64 = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| d[i][j] as u64).sum();
        prop_assert_eq!(wiener_index(&g).unwrap(), sum);
        let mu = spectral_radius(&g, MatrixKind::Distance, DEFAULT_TOL).unwrap();
        prop_assert!(mu >= 2.0 * sum as f64 / n as f64 * (1.0 - 1e-9));
    }

    #[test]
    fn graph6_round_trip_large(n in 33usize..=62, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        prop_assert_eq!(parse_graph6(emit_graph6(&g).unwrap().as_bytes()).unwrap(), g);
    }
}

#[test]
fn spec_examples_for_oracles() {
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    let l = is_fext_lemma(&c5, 1).unwrap();
    let s = l.witness_set().unwrap();
    assert_eq!(s.to_vec(), vec![0, 1, 3]);
    assert_eq!(c5.isolated_after_removing(s.0), 2);
    let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!(is_fext_lemma(&k4, 1).unwrap(), Verdict::Extendable);
    let g2 = extremal_graph(&ExtremalParams::sharp(12, 2).unwrap()).unwrap();
    assert!(!is_fext_definitional(&g2, 2).unwrap().is_extendable());
}

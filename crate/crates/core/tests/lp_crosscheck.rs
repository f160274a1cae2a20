mod common;

use common::lp_fpm;
use fext_core::enumerate::connected_graphs;
use fext_core::matching::{extend_matching, fractional_pm_exists, FpmOutcome, Matching};
use fext_core::Graph;

#[test]
fn simplex_sanity() {
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    assert!(lp_fpm(&c5, &[]));
    assert!(!lp_fpm(&c5, &[(0, 1)]));
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(!lp_fpm(&star, &[]));
}

#[test]
fn double_cover_agrees_with_lp() {
    for n in 1..=7 {
        for g in connected_graphs(n) {
            let outcome = fractional_pm_exists(&g);
            assert_eq!(outcome.exists(), lp_fpm(&g, &[]), "{g:?}");
            match outcome {
                FpmOutcome::Exists(h) => assert!(h.is_perfect_in(&g) && h.is_half_integral()),
                FpmOutcome::Deficient { s, isolated } => {
                    assert_eq!(s.0 & isolated.0, 0);
                    assert!(isolated.len() > s.len());
                    assert!(isolated.iter().all(|v| g.row(v) & !s.0 == 0));
                }
            }
        }
    }
}

#[test]
fn extension_agrees_with_constrained_lp() {
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let edges: Vec<_> = g.edges().collect();
            for (i, &e) in edges.iter().enumerate() {
                let mut sets = vec![vec![e]];
                for &f in &edges[i + 1..] {
                    if f.0 != e.0 && f.0 != e.1 && f.1 != e.0 && f.1 != e.1 {
                        sets.push(vec![e, f]);
                    }
                }
                for m in sets {
                    let matching = Matching::new(&g, &m).unwrap();
                    let ext = extend_matching(&g, &matching);
                    assert_eq!(ext.is_some(), lp_fpm(&g, &m), "{g:?} {m:?}");
                    if let Some(h) = ext {
                        assert!(h.is_perfect_in(&g) && h.saturates(&matching) && h.is_half_integral());
                    }
                }
            }
        }
    }
}

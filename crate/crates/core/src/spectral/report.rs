use serde::Serialize;

use crate::error::SpectralError;
use crate::graph::{wiener_index, Graph};
use crate::spectral::eigen::largest_eigenvalue;
use crate::spectral::matrix::{build_matrix, MatrixKind};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralReport {
    pub n: usize,
    pub e: usize,
    pub min_degree: usize,
    pub connected: bool,
    /// Wiener index; absent for disconnected graphs.
    pub wiener: Option<u64>,
    /// Adjacency spectral radius.
    pub rho: f64,
    /// Signless Laplacian spectral radius.
    pub q: f64,
    /// Distance spectral radius; absent for disconnected graphs.
    pub mu: Option<f64>,
}

pub fn spectral_radius(g: &Graph, kind: MatrixKind, tol: f64) -> Result<f64, SpectralError> {
    largest_eigenvalue(&build_matrix(g, kind)?, tol)
}

pub fn spectral_report(g: &Graph, tol: f64) -> Result<SpectralReport, SpectralError> {
    let connected = g.is_connected();
    let (wiener, mu) = if connected {
        (
            Some(wiener_index(g)?),
            Some(spectral_radius(g, MatrixKind::Distance, tol)?),
        )
    } else {
        (None, None)
    };
    Ok(SpectralReport {
        n: g.order(),
        e: g.size(),
        min_degree: g.min_degree(),
        connected,
        wiener,
        rho: spectral_radius(g, MatrixKind::Adjacency, tol)?,
        q: spectral_radius(g, MatrixKind::SignlessLaplacian, tol)?,
        mu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{extremal_graph, ExtremalParams};
    use crate::graph::complete;
    use crate::spectral::DEFAULT_TOL;

    #[test]
    fn k4_report() {
        let r = spectral_report(&complete(4).unwrap(), DEFAULT_TOL).unwrap();
        assert!((r.rho - 3.0).abs() < 1e-9);
        assert!((r.q - 6.0).abs() < 1e-9);
        assert!((r.mu.unwrap() - 3.0).abs() < 1e-9);
        assert_eq!(r.wiener, Some(6));
    }

    #[test]
    fn p3_report_respects_wiener_bound() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r = spectral_report(&p3, DEFAULT_TOL).unwrap();
        let mu = r.mu.unwrap();
        assert!((mu - (1.0 + 3f64.sqrt())).abs() < 1e-9);
        assert_eq!(r.wiener, Some(4));
        assert!(mu >= 8.0 / 3.0);
        assert!(r.q >= r.rho && r.rho >= 0.0);
    }

    #[test]
    fn distance_radius_of_g3_exceeds_wiener_chain_bound() {
        // n >= 6δ, δ >= 2k + 1: μ(G₃) >= n - δ + 2k + 3
        for (n, k, d) in [(36usize, 1usize, 3usize), (30, 1, 5), (42, 2, 7)] {
            let g = extremal_graph(&ExtremalParams::new(n, k, d).unwrap()).unwrap();
            let r = spectral_report(&g, DEFAULT_TOL).unwrap();
            assert!(r.mu.unwrap() >= (n - d + 2 * k + 3) as f64);
        }
    }

    #[test]
    fn disconnected_report() {
        let g = crate::graph::disjoint_union(&complete(2).unwrap(), &complete(2).unwrap()).unwrap();
        let r = spectral_report(&g, DEFAULT_TOL).unwrap();
        assert!(!r.connected && r.mu.is_none() && r.wiener.is_none());
        assert!((r.q - 2.0).abs() < 1e-9);
    }
}

use serde::Serialize;

use crate::error::HarnessError;
use crate::extremal::{extremal_graph, ExtremalParams};
use crate::graph::VertexSet;
use crate::harness::grid::{wiener_chain, WienerPoint};
use crate::harness::theorem::{TheoremId, TheoremSpec};
use crate::matching::{is_fext_lemma, is_violating_set};

/// What the construction alone guarantees about `K_s ∨ (K_{n₁} ∪ tK₁)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalCertificate {
    pub params: ExtremalParams,
    pub not_extendable: bool,
    pub witness: Option<VertexSet>,
    pub witness_is_join_clique: bool,
    /// `i(G - S)` for the join clique `S`.
    pub isolated_after_join: usize,
    pub connected: bool,
    pub min_degree: usize,
    pub certified: bool,
}

/// The lemma oracle rejects the extremal graph with the join clique as its
/// least violating set; the graph is connected with minimum degree `s`.
pub fn extremal_certificate(p: &ExtremalParams) -> Result<ExtremalCertificate, HarnessError> {
    let g = extremal_graph(p)?;
    let verdict = is_fext_lemma(&g, p.k)?;
    let witness = verdict.witness_set();
    let join = p.join_block();
    let isolated_after_join = g.isolated_after_removing(join.0);
    let connected = g.is_connected();
    let min_degree = g.min_degree();
    let witness_is_join_clique = witness == Some(join);
    let certified = !verdict.is_extendable()
        && witness_is_join_clique
        && is_violating_set(&g, join, p.k)
        && isolated_after_join == p.independent() + usize::from(p.inner() == 1)
        && connected
        && min_degree == p.s;
    Ok(ExtremalCertificate {
        params: *p,
        not_extendable: !verdict.is_extendable(),
        witness,
        witness_is_join_clique,
        isolated_after_join,
        connected,
        min_degree,
        certified,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SharpnessReport {
    pub theorem: TheoremId,
    pub certificate: ExtremalCertificate,
    pub value: f64,
    pub threshold: f64,
    pub meets_bound: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wiener: Option<WienerPoint>,
    pub certified: bool,
}

/// Certifies that the extremal graph of `spec` at `p` is a genuine
/// exception: the construction certificate holds and the graph meets the
/// theorem's bound against itself.
pub fn sharpness(p: &ExtremalParams, spec: &TheoremSpec) -> Result<SharpnessReport, HarnessError> {
    if p.k != spec.k {
        return Err(HarnessError::OutsideRegion(format!("k = {} but theorem uses k = {}", p.k, spec.k)));
    }
    if spec.id.uses_g2() && p.s != 2 * p.k {
        return Err(HarnessError::OutsideRegion(format!("{} needs s = 2k", spec.id)));
    }
    if let Some(h) = spec.failed_hypothesis(p.n, p.s) {
        return Err(HarnessError::OutsideRegion(format!("{} at {:?}: {h}", spec.id, p)));
    }
    let certificate = extremal_certificate(p)?;
    let g = extremal_graph(p)?;
    let value = spec.value(&g)?;
    let threshold = spec.threshold(p.n, p.s)?;
    let meets_bound = spec.meets_bound(value, threshold);
    let wiener = match spec.id {
        TheoremId::Mu => Some(wiener_chain(p.n, p.k, p.s, spec.tol)?),
        _ => None,
    };
    let certified = certificate.certified && meets_bound && wiener.as_ref().is_none_or(|w| w.holds);
    Ok(SharpnessReport {
        theorem: spec.id,
        certificate,
        value,
        threshold,
        meets_bound,
        wiener,
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::DEFAULT_TOL;

    #[test]
    fn g2_under_edge_bound() {
        let spec = TheoremSpec::new(TheoremId::Edge1, 1, DEFAULT_TOL);
        let r = sharpness(&ExtremalParams::sharp(11, 1).unwrap(), &spec).unwrap();
        assert!(r.certified, "{r:?}");
        assert_eq!(r.certificate.witness, Some(VertexSet::from_vertices([0, 1])));
        assert_eq!(r.certificate.isolated_after_join, 1);
    }

    #[test]
    fn g3_under_distance_bound() {
        let spec = TheoremSpec::new(TheoremId::Mu, 1, DEFAULT_TOL);
        let r = sharpness(&ExtremalParams::new(36, 1, 3).unwrap(), &spec).unwrap();
        assert!(r.certified, "{r:?}");
        assert!(r.value >= 38.0);
    }

    #[test]
    fn construction_alone() {
        let c = extremal_certificate(&ExtremalParams::new(12, 1, 4).unwrap()).unwrap();
        assert!(c.certified);
        assert_eq!(c.witness, Some(VertexSet::from_vertices([0, 1, 2, 3])));
        assert_eq!(c.isolated_after_join, 3);
    }

    #[test]
    fn outside_region_is_rejected() {
        let spec = TheoremSpec::new(TheoremId::Mu, 1, DEFAULT_TOL);
        assert!(sharpness(&ExtremalParams::new(12, 1, 4).unwrap(), &spec).is_err());
    }
}

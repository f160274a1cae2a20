//! Parameter-grid comparisons of spectral radii of the extremal family.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::HarnessError;
use crate::extremal::{extremal_graph, matches_extremal, ExtremalParams};
use crate::graph::wiener_index;
use crate::spectral::{
    closed_form, largest_real_root, spectral_radius, Family, FamilyParams, Instance, MatrixKind,
};

/// Largest allowed gap between a closed-form root and the full-matrix eigenvalue.
pub const CROSSCHECK_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GridLemma {
    /// `q(G₁) ≤ q(G₂)`, equality iff `s = 2k`.
    Q1Q2,
    /// `q(G₁) ≤ q(G₃)`, equality iff `s = δ`.
    Q1Q3,
    /// `μ(G₁) ≥ μ(G₃)`, equality iff `s = δ`.
    MuCompare,
}

impl GridLemma {
    pub fn name(self) -> &'static str {
        match self {
            GridLemma::Q1Q2 => "q1q2",
            GridLemma::Q1Q3 => "q1q3",
            GridLemma::MuCompare => "mu_compare",
        }
    }
}

impl fmt::Display for GridLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GridLemma {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| *c != '_' && *c != '-').collect::<String>().to_ascii_lowercase();
        Ok(match key.as_str() {
            "q1q2" => GridLemma::Q1Q2,
            "q1q3" => GridLemma::Q1Q3,
            "mucompare" | "mu" => GridLemma::MuCompare,
            _ => return Err(HarnessError::UnknownName(s.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GridBounds {
    pub k_min: usize,
    pub k_max: usize,
    pub n_max: usize,
    /// Largest `δ` for the `G₃` comparisons; ignored by [`GridLemma::Q1Q2`].
    pub delta_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Strict,
    Equal,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridPoint {
    pub k: usize,
    pub n: usize,
    pub s: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    /// Spectral radius of `G₁` from its full matrix.
    pub g1: f64,
    /// Spectral radius of the comparison graph from its full matrix.
    pub other: f64,
    pub g1_closed: f64,
    pub other_closed: f64,
    pub crosscheck_error: f64,
    pub expected: Expected,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapProbe {
    /// Range probed: `6δ ≤ n < 6.5δ`.
    pub points: usize,
    pub strict_holds: usize,
    pub exceptions: Vec<GridPoint>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WienerPoint {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub wiener: u64,
    pub mu: f64,
    pub two_w_over_n: f64,
    /// `n - δ + 2k + 3`.
    pub bound: usize,
    /// `μ ≥ 2W/n ≥ n - δ + 2k + 3`, the second comparison in exact integers.
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WienerReport {
    /// Points with `n ≥ 12δ - 2k + 1`; every one must hold.
    pub region_checked: usize,
    pub region_failures: Vec<WienerPoint>,
    /// Points with `6δ ≤ n < 12δ - 2k + 1`; reported only.
    pub probe_checked: usize,
    pub probe_failures: Vec<WienerPoint>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GridReport {
    pub lemma: GridLemma,
    pub bounds: GridBounds,
    pub tol: f64,
    pub strict_points: usize,
    pub equality_points: usize,
    pub max_crosscheck_error: f64,
    pub violations: Vec<GridPoint>,
    pub crosscheck_failures: Vec<GridPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap_probe: Option<GapProbe>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wiener: Option<WienerReport>,
    pub points: Vec<GridPoint>,
}

impl GridReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.crosscheck_failures.is_empty()
            && self.wiener.as_ref().is_none_or(|w| w.region_failures.is_empty())
    }
}

fn full_radius(p: &ExtremalParams, kind: MatrixKind, tol: f64) -> Result<f64, HarnessError> {
    Ok(spectral_radius(&extremal_graph(p)?, kind, tol)?)
}

fn closed_root(family: Family, n: usize, k: usize, third: usize, tol: f64) -> Result<f64, HarnessError> {
    Ok(largest_real_root(&closed_form(family, FamilyParams { n, k, third })?, tol))
}

/// `(kind, family of G₁)` for the closed-form cross-check.
fn g1_family(p: &ExtremalParams, kind: MatrixKind) -> Family {
    match (kind, p.inner() == 0) {
        (MatrixKind::Distance, false) => Family::PhiB1,
        (MatrixKind::Distance, true) => Family::PhiB1Case2,
        (_, false) => Family::FPi1,
        (_, true) => Family::FPiPrime1,
    }
}

/// The comparison graph's closed-form root. At `n = 2s - 2k + 1` the
/// distance comparison also evaluates the second `G₃` form and keeps the
/// larger deviation.
fn other_closed(lemma: GridLemma, n: usize, k: usize, s: usize, delta: usize, full: f64, tol: f64) -> Result<f64, HarnessError> {
    Ok(match lemma {
        GridLemma::Q1Q2 => closed_root(Family::F2, n, k, 0, tol)?,
        GridLemma::Q1Q3 => closed_root(Family::F3Q, n, k, delta, tol)?,
        GridLemma::MuCompare => {
            let a = closed_root(Family::PhiB3Case1, n, k, delta, tol)?;
            if n + 2 * k == 2 * s + 1 && s > delta {
                let b = largest_real_root(&Instance::phi_b3_case2(s, k, delta)?.cubic(), tol);
                if (b - full).abs() > (a - full).abs() {
                    return Ok(b);
                }
            }
            a
        }
    })
}

fn evaluate(lemma: GridLemma, k: usize, n: usize, s: usize, delta: usize, tol: f64) -> Result<GridPoint, HarnessError> {
    let kind = match lemma {
        GridLemma::MuCompare => MatrixKind::Distance,
        _ => MatrixKind::SignlessLaplacian,
    };
    let p1 = ExtremalParams::new(n, k, s)?;
    let p_other = ExtremalParams::new(n, k, delta)?;
    let g1 = full_radius(&p1, kind, tol)?;
    let other = full_radius(&p_other, kind, tol)?;
    let g1_closed = closed_root(g1_family(&p1, kind), n, k, s, tol)?;
    let other_closed = other_closed(lemma, n, k, s, delta, other, tol)?;
    let crosscheck_error = (g1 - g1_closed).abs().max((other - other_closed).abs());
    let margin = 10.0 * tol * g1.abs().max(other.abs());
    let expected = if s == delta { Expected::Equal } else { Expected::Strict };
    let ok = match expected {
        Expected::Equal => {
            (g1 - other).abs() <= margin && matches_extremal(&extremal_graph(&p1)?, &p_other)
        }
        Expected::Strict => match lemma {
            GridLemma::MuCompare => g1 - other > margin,
            _ => other - g1 > margin,
        },
    };
    Ok(GridPoint {
        k,
        n,
        s,
        delta: (lemma != GridLemma::Q1Q2).then_some(delta),
        g1,
        other,
        g1_closed,
        other_closed,
        crosscheck_error,
        expected,
        ok,
    })
}

/// `(k, n, s, δ)` points of a lemma's hypothesis region within the bounds.
/// For [`GridLemma::Q1Q2`], `δ` is set to `2k` (the comparison graph `G₂`).
pub fn grid_points(lemma: GridLemma, b: &GridBounds) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for k in b.k_min.max(1)..=b.k_max {
        match lemma {
            GridLemma::Q1Q2 => {
                for n in 2 * k + 6..=b.n_max {
                    for s in 2 * k..=(n + 2 * k - 1) / 2 {
                        out.push((k, n, s, 2 * k));
                    }
                }
            }
            GridLemma::Q1Q3 | GridLemma::MuCompare => {
                for delta in 2 * k + 1..=b.delta_max {
                    let n_min = match lemma {
                        GridLemma::Q1Q3 => (13 * delta).div_ceil(2),
                        _ => 12 * delta + 1 - 2 * k,
                    };
                    for n in n_min..=b.n_max {
                        for s in delta..=(n + 2 * k - 1) / 2 {
                            out.push((k, n, s, delta));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Evaluates a lemma on its whole grid. Every point gets both radii from the
/// full matrices and from the closed-form polynomials.
pub fn lemma_grid(lemma: GridLemma, bounds: GridBounds, tol: f64) -> Result<GridReport, HarnessError> {
    let points: Vec<GridPoint> = grid_points(lemma, &bounds)
        .into_par_iter()
        .map(|(k, n, s, d)| evaluate(lemma, k, n, s, d, tol))
        .collect::<Result<_, _>>()?;
    let mut report = GridReport {
        lemma,
        bounds,
        tol,
        strict_points: points.iter().filter(|p| p.expected == Expected::Strict).count(),
        equality_points: points.iter().filter(|p| p.expected == Expected::Equal).count(),
        max_crosscheck_error: points.iter().map(|p| p.crosscheck_error).fold(0.0, f64::max),
        violations: points.iter().filter(|p| !p.ok).cloned().collect(),
        crosscheck_failures: points.iter().filter(|p| p.crosscheck_error > CROSSCHECK_TOL).cloned().collect(),
        gap_probe: None,
        wiener: None,
        points,
    };
    match lemma {
        GridLemma::Q1Q3 => report.gap_probe = Some(gap_probe(&bounds, tol)?),
        GridLemma::MuCompare => report.wiener = Some(wiener_grid(&bounds, tol)?),
        GridLemma::Q1Q2 => {}
    }
    Ok(report)
}

/// The `q(G₁) < q(G₃)` comparison on `6δ ≤ n < 6.5δ`, outside the proven region.
fn gap_probe(b: &GridBounds, tol: f64) -> Result<GapProbe, HarnessError> {
    let mut params = Vec::new();
    for k in b.k_min.max(1)..=b.k_max {
        for delta in 2 * k + 1..=b.delta_max {
            for n in 6 * delta..(13 * delta).div_ceil(2) {
                for s in delta + 1..=(n + 2 * k - 1) / 2 {
                    params.push((k, n, s, delta));
                }
            }
        }
    }
    let points: Vec<GridPoint> = params
        .into_par_iter()
        .filter(|&(_, n, _, _)| n <= b.n_max)
        .map(|(k, n, s, d)| evaluate(GridLemma::Q1Q3, k, n, s, d, tol))
        .collect::<Result<_, _>>()?;
    Ok(GapProbe {
        points: points.len(),
        strict_holds: points.iter().filter(|p| p.ok).count(),
        exceptions: points.into_iter().filter(|p| !p.ok).collect(),
    })
}

/// Checks `μ(G₃) ≥ 2W(G₃)/n ≥ n - δ + 2k + 3` for one `G₃`.
pub fn wiener_chain(n: usize, k: usize, delta: usize, tol: f64) -> Result<WienerPoint, HarnessError> {
    let g = extremal_graph(&ExtremalParams::new(n, k, delta)?)?;
    let wiener = wiener_index(&g)?;
    let mu = spectral_radius(&g, MatrixKind::Distance, tol)?;
    let two_w_over_n = 2.0 * wiener as f64 / n as f64;
    let bound = n + 2 * k + 3 - delta;
    let holds = 2 * wiener >= (n * bound) as u64 && mu >= two_w_over_n * (1.0 - 10.0 * tol);
    Ok(WienerPoint { n, k, delta, wiener, mu, two_w_over_n, bound, holds })
}

fn wiener_grid(b: &GridBounds, tol: f64) -> Result<WienerReport, HarnessError> {
    let mut params = Vec::new();
    for k in b.k_min.max(1)..=b.k_max {
        for delta in 2 * k + 1..=b.delta_max {
            for n in 6 * delta..=b.n_max {
                params.push((k, n, delta));
            }
        }
    }
    let points: Vec<WienerPoint> = params
        .into_par_iter()
        .map(|(k, n, d)| wiener_chain(n, k, d, tol))
        .collect::<Result<_, _>>()?;
    let (region, probe): (Vec<_>, Vec<_>) = points.into_iter().partition(|p| p.n + 2 * p.k > 12 * p.delta);
    Ok(WienerReport {
        region_checked: region.len(),
        region_failures: region.into_iter().filter(|p| !p.holds).collect(),
        probe_checked: probe.len(),
        probe_failures: probe.into_iter().filter(|p| !p.holds).collect(),
    })
}

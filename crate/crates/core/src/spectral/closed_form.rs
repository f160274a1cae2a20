//! Closed-form characteristic polynomials of the equitable quotient matrices
//! of the extremal family, for `Q` and for the distance matrix.
//!
//! Every family carries the graph, matrix kind and partition it was derived
//! from, so [`Instance::identity_check`] can compare the formula against an
//! independent exact expansion of the built quotient matrix.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::SpectralError;
use crate::extremal::{extremal_graph, ExtremalParams};
use crate::graph::Graph;
use crate::spectral::matrix::{build_matrix, MatrixKind};
use crate::spectral::quotient::{charpoly3, quotient, Cubic, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `Q(K_{2k} ∨ (K_{n-2k-1} ∪ K_1))`, parameters `(n, k)`.
    F2,
    /// `Q(G₁)` with `n ≥ 2s - 2k + 2`, parameters `(n, k, s)`.
    FPi1,
    /// `Q(G₁)` with `n = 2s - 2k + 1`, partition `(K_s, (s-2k)K_1, K_1)`.
    FPiPrime1,
    /// `Q(G₃)`, parameters `(n, k, δ)`, `n ≥ 2δ - 2k + 2`.
    F3Q,
    /// `𝒟(G₁)` with `n ≥ 2s - 2k + 2`.
    PhiB1,
    /// `𝒟(G₁)` with `n = 2s - 2k + 1`, partition `(K_s, (s-2k)K_1, K_1)`.
    PhiB1Case2,
    /// `𝒟(G₃)`, parameters `(n, k, δ)`, `n ≥ 2δ - 2k + 2`.
    PhiB3Case1,
    /// `𝒟(G₃)` at `n = 2s - 2k + 1`, parameters `(s, k, δ)`, `s ≥ δ + 1`.
    PhiB3Case2,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::F2,
        Family::FPi1,
        Family::FPiPrime1,
        Family::F3Q,
        Family::PhiB1,
        Family::PhiB1Case2,
        Family::PhiB3Case1,
        Family::PhiB3Case2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::F2 => "f2",
            Family::FPi1 => "f_pi_1",
            Family::FPiPrime1 => "f_pi_prime_1",
            Family::F3Q => "f3_q",
            Family::PhiB1 => "phi_B1",
            Family::PhiB1Case2 => "phi_B1_case2",
            Family::PhiB3Case1 => "phi_B3_case1",
            Family::PhiB3Case2 => "phi_B3_case2",
        }
    }

    pub fn kind(self) -> MatrixKind {
        match self {
            Family::F2 | Family::FPi1 | Family::FPiPrime1 | Family::F3Q => MatrixKind::SignlessLaplacian,
            _ => MatrixKind::Distance,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// Parameters of a family instance. `third` is `s` for the `G₁` families and
/// `δ` for the `G₃` families; `F2` ignores it. For [`Family::PhiB3Case2`],
/// `n` must be odd and `s` is recovered as `(n + 2k - 1) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: usize,
    pub k: usize,
    pub third: usize,
}

/// A validated family instance: the polynomial and the structure it
/// describes.
#[derive(Debug, Clone)]
pub struct Instance {
    pub family: Family,
    pub params: FamilyParams,
    pub extremal: ExtremalParams,
    pub partition_sizes: [usize; 3],
}

const PARAM_CAP: usize = 100_000;

fn domain(family: Family, reason: impl Into<String>) -> SpectralError {
    SpectralError::Domain {
        family: family.name(),
        reason: reason.into(),
    }
}

impl Instance {
    pub fn new(family: Family, params: FamilyParams) -> Result<Self, SpectralError> {
        let FamilyParams { n, k, third } = params;
        if n > PARAM_CAP || third > PARAM_CAP || k > PARAM_CAP {
            return Err(domain(family, "parameters too large"));
        }
        if k == 0 {
            return Err(domain(family, "k must be at least 1"));
        }
        let s = match family {
            Family::F2 => 2 * k,
            _ => third,
        };
        let ext = ExtremalParams::new(n, k, s).map_err(|e| domain(family, e.to_string()))?;
        let (inner, indep) = (ext.inner(), ext.independent());
        let sizes = match family {
            Family::FPiPrime1 | Family::PhiB1Case2 => {
                if inner != 0 {
                    return Err(domain(family, "requires n = 2s - 2k + 1"));
                }
                if indep < 2 {
                    return Err(domain(family, "requires s >= 2k + 1"));
                }
                [s, indep - 1, 1]
            }
            _ => {
                if inner == 0 {
                    return Err(domain(family, "requires a non-empty inner clique (n >= 2s - 2k + 2)"));
                }
                [s, inner, indep]
            }
        };
        Ok(Instance {
            family,
            params,
            extremal: ext,
            partition_sizes: sizes,
        })
    }

    /// `G₃` at `n = 2s - 2k + 1`.
    pub fn phi_b3_case2(s: usize, k: usize, delta: usize) -> Result<Self, SpectralError> {
        if s <= delta {
            return Err(domain(Family::PhiB3Case2, "requires s >= delta + 1"));
        }
        let n = (2 * s + 1)
            .checked_sub(2 * k)
            .ok_or_else(|| domain(Family::PhiB3Case2, "requires s >= k"))?;
        Self::new(Family::PhiB3Case2, FamilyParams { n, k, third: delta })
    }

    pub fn graph(&self) -> Result<Graph, SpectralError> {
        Ok(extremal_graph(&self.extremal)?)
    }

    pub fn partition(&self) -> Partition {
        Partition::positional(&self.partition_sizes).expect("non-empty positional blocks")
    }

    /// The polynomial from the closed-form expressions.
    pub fn cubic(&self) -> Cubic {
        let n = self.params.n as i128;
        let k = self.params.k as i128;
        let t = self.params.third as i128;
        let (c2, c1, c0) = match self.family {
            Family::F2 => (
                6 - 2 * k - 3 * n,
                6 * n * k - 16 * k + 2 * n * n - 8 * n + 8,
                (-4 * n * n + 20 * n - 24) * k,
            ),
            Family::FPi1 | Family::F3Q => {
                let s = t;
                (
                    s - 3 * n - 4 * k + 6,
                    -4 * s * s + (8 * k + n - 4) * s + 4 * k * n - 8 * n - 8 * k + 2 * n * n + 8,
                    -2 * s * s * s + (8 * k + 4 * n - 10) * s * s
                        + (-8 * k * k - 8 * k * n + 20 * k - 2 * n * n + 10 * n - 12) * s,
                )
            }
            Family::FPiPrime1 => {
                let s = t;
                (2 * k - 5 * s + 1, 6 * s * s - 2 * k * s - 3 * s, -2 * s * s * s + 2 * s * s)
            }
            Family::PhiB1 | Family::PhiB3Case1 => {
                let s = t;
                (
                    2 * k - n - s + 3,
                    5 * s * s - 14 * k * s - 2 * n * s + 8 * k * k + 4 * k * n + 6 * s - 6 * k - 5 * n + 6,
                    -2 * s * s * s + 6 * k * s * s + n * s * s + 2 * s * s - 4 * k * k * s - 2 * k * n * s
                        - 10 * k * s
                        - n * s
                        + 6 * s
                        + 8 * k * k
                        + 4 * k * n
                        - 8 * k
                        - 4 * n
                        + 4,
                )
            }
            Family::PhiB1Case2 => {
                let s = t;
                (
                    4 * k - 3 * s + 3,
                    12 * k - 9 * s - 2 * k * s + s * s + 2,
                    8 * k - 6 * s - 4 * k * s + 2 * s * s,
                )
            }
            Family::PhiB3Case2 => {
                let d = t;
                // n = 2s - 2k + 1
                let s = (n + 2 * k - 1) / 2;
                (
                    4 * k - d - 2 * s + 2,
                    4 * d + 8 * k - 10 * s - 10 * d * k - 4 * d * s + 8 * k * s + 5 * d * d + 1,
                    5 * d + 4 * k - 8 * s - 10 * d * k - 2 * d * s + 8 * k * s + 4 * d * d * k + 2 * d * d * s
                        + 3 * d * d
                        - 2 * d * d * d
                        - 4 * d * k * s,
                )
            }
        };
        Cubic::from_integers(c2, c1, c0)
    }

    /// Expands `det(xI − B)` for the quotient of the built matrix. Returns the
    /// polynomial and whether the partition was equitable.
    pub fn built_charpoly(&self) -> Result<(Cubic, bool), SpectralError> {
        let m = build_matrix(&self.graph()?, self.family.kind())?;
        let b = quotient(&m, &self.partition())?;
        Ok((charpoly3(&b)?, b.is_equitable()))
    }

    /// True iff the closed form equals the built quotient's polynomial
    /// coefficient for coefficient, and the partition is equitable.
    pub fn identity_check(&self) -> Result<bool, SpectralError> {
        let (built, equitable) = self.built_charpoly()?;
        Ok(equitable && built == self.cubic())
    }
}

/// Closed-form polynomial of `family` at `params`.
pub fn closed_form(family: Family, params: FamilyParams) -> Result<Cubic, SpectralError> {
    if family == Family::PhiB3Case2 && params.n.is_multiple_of(2) {
        return Err(domain(family, "n must equal 2s - 2k + 1 (odd)"));
    }
    Ok(Instance::new(family, params)?.cubic())
}

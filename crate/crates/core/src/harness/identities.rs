//! Edge-count comparisons between `G₁ = K_s ∨ (K_{n₁} ∪ tK₁)`, `G₂` and `G₃`.
//!
//! Half-integer quantities are carried doubled so everything stays in `i128`.

use serde::Serialize;

use crate::error::HarnessError;
use crate::extremal::{extremal_graph, ExtremalParams};

/// Doubled `w(n) = (s-2k)n + 4ks - 2k² + 5k - 3s²/2 - 5s/2`.
pub fn w_doubled(n: i128, k: i128, s: i128) -> i128 {
    2 * (s - 2 * k) * n + 8 * k * s - 4 * k * k + 10 * k - 3 * s * s - 5 * s
}

/// Doubled `w` at `n = 2s - 2k + 1`: `s² - (4k + 3)s + 4k² + 6k`.
pub fn h_tight_doubled(k: i128, s: i128) -> i128 {
    s * s - (4 * k + 3) * s + 4 * k * k + 6 * k
}

/// Doubled `w` at `n = 2s - 2k + 2`: `s² - (4k + 1)s + 4k² + 2k`.
pub fn h_loose_doubled(k: i128, s: i128) -> i128 {
    s * s - (4 * k + 1) * s + 4 * k * k + 2 * k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeCase {
    /// `s = 2k`: `G₁ = G₂`.
    Equal,
    /// `n = 2s - 2k + 1`, bounded below by the value at `s = 2k + 4`.
    Tight,
    /// `n ≥ 2s - 2k + 2` with `s = 2k + 1`: `w = n - 2k - 4`.
    NextToSharp,
    /// `n ≥ 2s - 2k + 2` with `s ≥ 2k + 2`, bounded below by the value at `s = 2k + 2`.
    Loose,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeIdentityReport {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub delta: Option<usize>,
    pub e1: u64,
    pub e2: u64,
    pub e3: Option<u64>,
    /// `e(G₂) - e(G₁)` from the constructed graphs.
    pub diff_21: i128,
    /// `w(n)`, doubled.
    pub w_doubled: i128,
    pub case: EdgeCase,
    /// The case lower bound, doubled (`None` for [`EdgeCase::Equal`]).
    pub case_bound_doubled: Option<i128>,
    /// `e(G₃) - e(G₁)` from the constructed graphs.
    pub diff_31: Option<i128>,
    /// `(s - δ)(2n + 8k - 3δ - 3s - 5)`, i.e. the doubled closed form.
    pub diff_31_doubled_closed: Option<i128>,
    pub holds: bool,
}

/// Compares the combinatorial edge counts of the constructed graphs with the
/// closed forms, and checks the case lower bounds. `delta` adds the `G₃`
/// comparison and must satisfy `2k ≤ δ ≤ s`.
pub fn edge_count_identities(n: usize, k: usize, s: usize, delta: Option<usize>) -> Result<EdgeIdentityReport, HarnessError> {
    let p1 = ExtremalParams::new(n, k, s)?;
    let p2 = ExtremalParams::sharp(n, k)?;
    let e1 = extremal_graph(&p1)?.size() as u64;
    let e2 = extremal_graph(&p2)?.size() as u64;
    let (ni, ki, si) = (n as i128, k as i128, s as i128);
    let diff_21 = e2 as i128 - e1 as i128;
    let w2 = w_doubled(ni, ki, si);
    let mut holds = 2 * diff_21 == w2;

    let (case, bound) = if s == 2 * k {
        holds &= diff_21 == 0;
        (EdgeCase::Equal, None)
    } else if p1.inner() == 0 {
        let bound = h_tight_doubled(ki, 2 * ki + 4);
        holds &= w2 == h_tight_doubled(ki, si) && bound == 4;
        // only the hypothesis region n ≥ 2k + 9 forces s ≥ 2k + 4
        if s >= 2 * k + 4 {
            holds &= w2 >= bound;
        }
        (EdgeCase::Tight, Some(bound))
    } else if s == 2 * k + 1 {
        let bound = 2 * (ni - 2 * ki - 4);
        holds &= w2 == bound;
        (EdgeCase::NextToSharp, Some(bound))
    } else {
        let bound = h_loose_doubled(ki, 2 * ki + 2);
        holds &= bound == 2 && w_doubled(2 * si - 2 * ki + 2, ki, si) == h_loose_doubled(ki, si);
        holds &= w2 >= h_loose_doubled(ki, si) && h_loose_doubled(ki, si) >= bound;
        (EdgeCase::Loose, Some(bound))
    };

    let (mut e3, mut diff_31, mut closed_31) = (None, None, None);
    if let Some(d) = delta {
        if d < 2 * k || d > s {
            return Err(HarnessError::OutsideRegion(format!("delta = {d} needs 2k <= delta <= s = {s}")));
        }
        let p3 = ExtremalParams::new(n, k, d)?;
        let e = extremal_graph(&p3)?.size() as u64;
        let di = d as i128;
        let diff = e as i128 - e1 as i128;
        let closed = (si - di) * (2 * ni + 8 * ki - 3 * di - 3 * si - 5);
        holds &= 2 * diff == closed;
        e3 = Some(e);
        diff_31 = Some(diff);
        closed_31 = Some(closed);
    }

    Ok(EdgeIdentityReport {
        n,
        k,
        s,
        delta,
        e1,
        e2,
        e3,
        diff_21,
        w_doubled: w2,
        case,
        case_bound_doubled: bound,
        diff_31,
        diff_31_doubled_closed: closed_31,
        holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeIdentityGrid {
    pub checked: usize,
    pub failures: Vec<EdgeIdentityReport>,
    /// Points with `n ≥ 2k + 9` and `s > 2k` where `e(G₁) ≥ e(G₂)`.
    pub g2_order_violations: Vec<EdgeIdentityReport>,
    /// Points with `n ≥ 6δ`, `δ ≥ 2k + 1` and `s > δ` where `e(G₁) ≥ e(G₃)`.
    pub g3_order_violations: Vec<EdgeIdentityReport>,
}

/// Runs [`edge_count_identities`] over every valid `(n, k, s, δ)` with
/// `k ≤ max_k` and `n ≤ max_n`.
pub fn edge_identity_grid(max_k: usize, max_n: usize) -> Result<EdgeIdentityGrid, HarnessError> {
    let mut grid = EdgeIdentityGrid {
        checked: 0,
        failures: Vec::new(),
        g2_order_violations: Vec::new(),
        g3_order_violations: Vec::new(),
    };
    for k in 1..=max_k {
        for n in 2 * k + 1..=max_n {
            for s in 2 * k..=(n + 2 * k - 1) / 2 {
                for d in std::iter::once(None).chain((2 * k..=s).map(Some)) {
                    let r = edge_count_identities(n, k, s, d)?;
                    grid.checked += 1;
                    if !r.holds {
                        grid.failures.push(r.clone());
                    }
                    if d.is_none() && n >= 2 * k + 9 && s > 2 * k && r.diff_21 <= 0 {
                        grid.g2_order_violations.push(r.clone());
                    }
                    if let Some(d) = d {
                        if n >= 6 * d && d > 2 * k && s > d && r.diff_31 <= Some(0) {
                            grid.g3_order_violations.push(r);
                        }
                    }
                }
            }
        }
    }
    Ok(grid)
}

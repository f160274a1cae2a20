//! Exact rational feasibility for fractional perfect matchings, used as an
//! independent check of the combinatorial decision procedure.

#![allow(dead_code)]

use fext_core::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Feasibility of `{x ≥ 0 : A x = b}` (with `b ≥ 0`) by phase-one simplex
/// with Bland's rule, in exact arithmetic.
pub fn feasible(a: &[Vec<i64>], b: &[i64]) -> bool {
    let m = a.len();
    let nv = a.first().map_or(0, Vec::len);
    let cols = nv + m;
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    // rows: [A | I | b]
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = a[i].iter().map(|&v| q(v)).collect();
            row.extend((0..m).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row.push(q(b[i]));
            row
        })
        .collect();
    let mut basis: Vec<usize> = (nv..cols).collect();
    // reduced costs of minimising the artificial sum
    let mut cost: Vec<BigRational> = vec![BigRational::zero(); cols + 1];
    for row in &t {
        for j in 0..=cols {
            if j < nv || j == cols {
                cost[j] -= &row[j];
            }
        }
    }
    loop {
        let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][cols] / &t[i][enter];
                leave = match leave {
                    None => Some(i),
                    Some(l) => {
                        let best = &t[l][cols] / &t[l][enter];
                        if ratio < best || (ratio == best && basis[i] < basis[l]) {
                            Some(i)
                        } else {
                            Some(l)
                        }
                    }
                };
            }
        }
        let Some(r) = leave else {
            // unbounded below cannot happen for a sum of artificials
            unreachable!("phase one is bounded");
        };
        let pivot = t[r][enter].clone();
        for v in t[r].iter_mut() {
            *v /= &pivot;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
        basis[r] = enter;
    }
    cost[cols].is_zero()
}

/// LP: every vertex sum equals one, and `h(e) = 1` on `fixed`.
pub fn lp_fpm(g: &Graph, fixed: &[(usize, usize)]) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for v in 0..g.order() {
        a.push(edges.iter().map(|&(x, y)| i64::from(x == v || y == v)).collect());
        b.push(1);
    }
    for f in fixed {
        a.push(edges.iter().map(|e| i64::from(e == f)).collect());
        b.push(1);
    }
    feasible(&a, &b)
}

//! Quotient matrices of a vertex partition and their characteristic
//! polynomials, in exact rational arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::SpectralError;
use crate::spectral::matrix::SymMatrix;

/// Ordered blocks of indices, disjoint and covering `0..m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>, m: usize) -> Result<Self, SpectralError> {
        let mut seen = vec![false; m];
        for block in &blocks {
            if block.is_empty() {
                return Err(SpectralError::Partition("empty block"));
            }
            for &v in block {
                if v >= m {
                    return Err(SpectralError::Partition("index out of range"));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(SpectralError::Partition("blocks overlap"));
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(SpectralError::Partition("blocks do not cover every index"));
        }
        Ok(Partition { blocks })
    }

    /// Consecutive index ranges of the given sizes.
    pub fn positional(sizes: &[usize]) -> Result<Self, SpectralError> {
        let mut start = 0;
        let blocks = sizes
            .iter()
            .map(|&len| {
                let block = (start..start + len).collect();
                start += len;
                block
            })
            .collect();
        Self::new(blocks, start)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<BigRational>,
    equitable: bool,
}

impl QuotientMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>, equitable: bool) -> Self {
        let order = rows.len();
        assert!(rows.iter().all(|r| r.len() == order), "quotient matrix must be square");
        QuotientMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
            equitable,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    /// Entries as integers, when every entry is integral.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| {
                        let x = self.get(i, j);
                        x.is_integer().then(|| x.to_integer().to_i64()).flatten()
                    })
                    .collect()
            })
            .collect()
    }
}

/// `b_ij` = (sum of block `M_ij`) / (rows in block `i`). The partition is
/// flagged equitable iff every row of every block has the same sum.
pub fn quotient(m: &SymMatrix, pi: &Partition) -> Result<QuotientMatrix, SpectralError> {
    let covered: usize = pi.blocks().iter().map(Vec::len).sum();
    if covered != m.order() {
        return Err(SpectralError::Partition("partition does not match the matrix order"));
    }
    let r = pi.len();
    let mut entries = Vec::with_capacity(r * r);
    let mut equitable = true;
    for bi in pi.blocks() {
        for bj in pi.blocks() {
            let row_sums: Vec<i64> = bi.iter().map(|&u| bj.iter().map(|&v| m.get(u, v)).sum()).collect();
            equitable &= row_sums.windows(2).all(|w| w[0] == w[1]);
            let total: i64 = row_sums.iter().sum();
            entries.push(BigRational::new(BigInt::from(total), BigInt::from(bi.len())));
        }
    }
    Ok(QuotientMatrix {
        order: r,
        entries,
        equitable,
    })
}

/// Monic cubic `x³ + c2·x² + c1·x + c0` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cubic {
    /// `[c3, c2, c1, c0]`, with `c3 = 1`.
    pub coeffs: [BigRational; 4],
}

impl Cubic {
    pub fn monic(c2: BigRational, c1: BigRational, c0: BigRational) -> Self {
        Cubic {
            coeffs: [BigRational::one(), c2, c1, c0],
        }
    }

    pub fn from_integers(c2: i128, c1: i128, c0: i128) -> Self {
        let r = |x: i128| BigRational::from_integer(BigInt::from(x));
        Self::monic(r(c2), r(c1), r(c0))
    }

    /// Expands `(x - r1)(x - r2)(x - r3)`.
    pub fn from_roots(r1: i128, r2: i128, r3: i128) -> Self {
        Self::from_integers(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3))
    }

    pub fn to_f64(&self) -> [f64; 4] {
        self.coeffs.clone().map(|c| c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval(&self, x: f64) -> f64 {
        let [a, b, c, d] = self.to_f64();
        ((a * x + b) * x + c) * x + d
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.to_integer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cubic {
    /// Comma-separated coefficients, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            fmt_rational(c, f)?;
        }
        Ok(())
    }
}

/// `det(xI − B)` for a 3×3 quotient matrix.
pub fn charpoly3(b: &QuotientMatrix) -> Result<Cubic, SpectralError> {
    if b.order() != 3 {
        return Err(SpectralError::WrongOrder {
            expected: 3,
            found: b.order(),
        });
    }
    let e = |i: usize, j: usize| b.get(i, j);
    let trace = e(0, 0) + e(1, 1) + e(2, 2);
    let minor = |i: usize, j: usize| e(i, i) * e(j, j) - e(i, j) * e(j, i);
    let minors = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    Ok(Cubic::monic(-trace, minors, -det))
}

/// Largest real root of a monic cubic.
///
/// The root is isolated on an interval where the cubic is increasing (right
/// of the larger critical point if the local minimum there is non-positive,
/// else left of the smaller one), bracketed within the Cauchy bound
/// `1 + max|c_i|`, then bisected down to `tol` relative width and polished
/// with Newton steps that stay inside the bracket.
pub fn largest_real_root(c: &Cubic, tol: f64) -> f64 {
    let [_, b, cc, d] = c.to_f64();
    let bound = 1.0 + b.abs().max(cc.abs()).max(d.abs());
    let f = |x: f64| c.eval(x);
    // f'(x) = 3x² + 2bx + cc
    let disc = b * b - 3.0 * cc;
    let (mut lo, mut hi) = if disc > 0.0 {
        let r1 = (-b - disc.sqrt()) / 3.0;
        let r2 = (-b + disc.sqrt()) / 3.0;
        if f(r2) <= 0.0 {
            (r2, bound)
        } else {
            (-bound, r1)
        }
    } else {
        (-bound, bound)
    };
    if f(lo) > 0.0 {
        lo = -bound;
    }
    if f(hi) < 0.0 {
        hi = bound;
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol * mid.abs().max(1.0) * 1e-3 || mid == lo || mid == hi {
            break;
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..4 {
        let fp = (3.0 * x + 2.0 * b) * x + cc;
        if fp.abs() < f64::EPSILON {
            break;
        }
        let next = x - f(x) / fp;
        if !(lo..=hi).contains(&next) {
            break;
        }
        x = next;
    }
    x
}

/// Largest root of the exact characteristic polynomial, as a float.
pub fn quotient_radius(b: &QuotientMatrix, tol: f64) -> Result<f64, SpectralError> {
    Ok(largest_real_root(&charpoly3(b)?, tol))
}

/// Sign of the cubic at an exact rational point.
pub fn sign_at(c: &Cubic, x: &BigRational) -> i8 {
    let v = c.coeffs.iter().fold(BigRational::zero(), |acc, coef| acc * x + coef);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{extremal_graph, ExtremalParams};
    use crate::spectral::matrix::{build_matrix, MatrixKind};

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn b2_quotient_of_sharp_graph() {
        for (n, k) in [(11usize, 1usize), (14, 2), (20, 3)] {
            let p = ExtremalParams::sharp(n, k).unwrap();
            let g = extremal_graph(&p).unwrap();
            let m = build_matrix(&g, MatrixKind::SignlessLaplacian).unwrap();
            let pi = Partition::positional(&[p.s, p.inner(), p.independent()]).unwrap();
            let b = quotient(&m, &pi).unwrap();
            assert!(b.is_equitable());
            let (n, k) = (n as i64, k as i64);
            let expected = [
                [n + 2 * k - 2, n - 2 * k - 1, 1],
                [2 * k, 2 * n - 2 * k - 4, 0],
                [2 * k, 0, 2 * k],
            ];
            let rows = b.to_integer_rows().unwrap();
            assert_eq!(rows, expected.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn single_block() {
        let k4 = crate::graph::complete(4).unwrap();
        let m = build_matrix(&k4, MatrixKind::Adjacency).unwrap();
        let b = quotient(&m, &Partition::positional(&[4]).unwrap()).unwrap();
        assert!(b.is_equitable());
        assert_eq!(b.get(0, 0), &q(3));

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let m = build_matrix(&p3, MatrixKind::Adjacency).unwrap();
        let b = quotient(&m, &Partition::positional(&[3]).unwrap()).unwrap();
        assert!(!b.is_equitable());
        assert_eq!(b.get(0, 0), &BigRational::new(BigInt::from(4), BigInt::from(3)));
    }

    use crate::graph::Graph;

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0], vec![]], 1).is_err());
        assert!(Partition::new(vec![vec![0, 1], vec![1]], 2).is_err());
        assert!(Partition::new(vec![vec![0]], 2).is_err());
        assert!(Partition::new(vec![vec![1], vec![0]], 2).is_ok());
    }

    #[test]
    fn identity_charpoly() {
        let one = || BigRational::one();
        let zero = || BigRational::zero();
        let id = QuotientMatrix::from_rows(
            vec![vec![one(), zero(), zero()], vec![zero(), one(), zero()], vec![zero(), zero(), one()]],
            true,
        );
        assert_eq!(charpoly3(&id).unwrap(), Cubic::from_roots(1, 1, 1));
        let two = QuotientMatrix::from_rows(vec![vec![one(), zero()], vec![zero(), one()]], true);
        assert!(matches!(charpoly3(&two), Err(SpectralError::WrongOrder { expected: 3, found: 2 })));
    }

    #[test]
    fn root_finding() {
        assert!((largest_real_root(&Cubic::from_roots(2, 1, -5), 1e-12) - 2.0).abs() < 1e-12);
        assert!(largest_real_root(&Cubic::from_roots(0, 0, 0), 1e-12).abs() < 1e-6);
        // triple root at 7 and a widely separated pair
        assert!((largest_real_root(&Cubic::from_roots(7, 7, 7), 1e-12) - 7.0).abs() < 1e-4);
        assert!((largest_real_root(&Cubic::from_roots(-100, 3, 180), 1e-12) - 180.0).abs() < 1e-9);
        // one real root: (x - 3)(x² + 1)
        let c = Cubic::from_integers(-3, 1, -3);
        assert!((largest_real_root(&c, 1e-12) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn display_format() {
        assert_eq!(Cubic::from_integers(-29, 212, -288).to_string(), "1, -29, 212, -288");
    }
}

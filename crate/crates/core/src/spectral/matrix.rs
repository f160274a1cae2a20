use serde::{Deserialize, Serialize};

use crate::error::SpectralError;
use crate::graph::{distance_matrix, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    /// `A(G)`
    Adjacency,
    /// `Q(G) = D(G) + A(G)`
    SignlessLaplacian,
    /// All-pairs shortest-path distances.
    Distance,
}

/// Dense symmetric integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl SymMatrix {
    /// Builds an `m x m` matrix from `f(i, j)`; only `i <= j` is sampled.
    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut entries = vec![0; m * m];
        for i in 0..m {
            for j in i..m {
                let x = f(i, j);
                entries[i * m + j] = x;
                entries[j * m + i] = x;
            }
        }
        SymMatrix { order: m, entries }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn max_abs_row_sum(&self) -> i64 {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum())
            .max()
            .unwrap_or(0)
    }

    /// `1ᵀ M 1`.
    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }
}

pub fn build_matrix(g: &Graph, kind: MatrixKind) -> Result<SymMatrix, SpectralError> {
    let n = g.order();
    let m = match kind {
        MatrixKind::Adjacency => SymMatrix::from_fn(n, |i, j| g.has_edge(i, j) as i64),
        MatrixKind::SignlessLaplacian => SymMatrix::from_fn(n, |i, j| {
            if i == j {
                g.degree(i) as i64
            } else {
                g.has_edge(i, j) as i64
            }
        }),
        MatrixKind::Distance => {
            let d = distance_matrix(g)?;
            SymMatrix::from_fn(n, |i, j| d[i][j] as i64)
        }
    };
    Ok(m)
}

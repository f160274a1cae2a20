use crate::error::SpectralError;
use crate::spectral::matrix::SymMatrix;

/// Default relative tolerance for eigenvalue computations.
pub const DEFAULT_TOL: f64 = 1e-10;

pub const MAX_ITERATIONS: usize = 1_000_000;

/// Largest eigenvalue of a symmetric matrix by shifted power iteration.
///
/// Iterates on `M + cI` with `c` the largest absolute row sum, which bounds
/// every `|λ|`, so `λ_max + c` is the dominant eigenvalue of the shifted
/// matrix. Stops once the residual `‖Mx − λx‖∞ ≤ tol·|λ|·‖x‖∞`, where `λ` is
/// the Rayleigh quotient of the current iterate.
pub fn largest_eigenvalue(m: &SymMatrix, tol: f64) -> Result<f64, SpectralError> {
    let n = m.order();
    if n == 0 {
        return Ok(0.0);
    }
    let a: Vec<f64> = (0..n * n).map(|idx| m.get(idx / n, idx % n) as f64).collect();
    let shift = m.max_abs_row_sum() as f64;

    // deterministic start: all ones with a small index-dependent tilt
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + (i as f64 + 1.0) / (4.0 * n as f64)).collect();
    normalize(&mut x);
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = a[i * n..(i + 1) * n].iter().zip(&x).map(|(p, q)| p * q).sum();
        }
        let lambda: f64 = x.iter().zip(&y).map(|(p, q)| p * q).sum();
        residual = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - lambda * xi).abs())
            .fold(0.0, f64::max);
        let scale = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        if residual <= tol * lambda.abs() * scale || residual <= f64::MIN_POSITIVE {
            return Ok(lambda);
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi + shift * *xi;
        }
        normalize(&mut x);
    }
    Err(SpectralError::NoConvergence {
        iterations: MAX_ITERATIONS,
        residual,
    })
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
}

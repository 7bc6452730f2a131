//! Dense symmetric eigensolver (row-cyclic Jacobi) and a Sturm-bisection
//! routine for symmetric tridiagonal matrices.

use crate::error::{domain, Error, Result};
use crate::matrix::SymmetricMatrix;

/// Stopping rule for [`solve_symmetric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Sweeps stop once `off(A) ≤ tol · ‖A₀‖_F`.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_sweeps: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    /// Ascending.
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`.
    pub vectors: Vec<Vec<f64>>,
    /// `max_i ‖A vᵢ − Eᵢ vᵢ‖₂` against the input matrix.
    pub residual_norm: f64,
    pub sweeps_used: usize,
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes `a` by cyclic Jacobi rotations.
///
/// Pivots are visited row by row, `(0,1), (0,2), …, (n−2,n−1)`, so the
/// result is fully deterministic. Eigenpairs are returned in ascending order
/// (stable for ties).
pub fn solve_symmetric(a: &SymmetricMatrix, opts: SolverOptions) -> Result<EigenDecomposition> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {}", opts.tol)));
    }
    if opts.max_sweeps == 0 {
        return Err(domain("max_sweeps must be at least 1"));
    }
    if let Some((row, col)) = a.first_asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }

    let n = a.dim();
    let mut w = a.entries().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let threshold = opts.tol * a.frobenius_norm();
    let mut sweeps = 0;
    loop {
        let off = off_norm(&w, n);
        if off <= threshold {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut w, &mut v, n, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| w[i * n + i].total_cmp(&w[j * n + j]));
    let values: Vec<f64> = order.iter().map(|&i| w[i * n + i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&c| (0..n).map(|r| v[r * n + c]).collect())
        .collect();

    let residual_norm = values
        .iter()
        .zip(&vectors)
        .map(|(&e, x)| {
            a.mul_vec(x)
                .iter()
                .zip(x)
                .map(|(ax, xi)| (ax - e * xi).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);

    Ok(EigenDecomposition {
        values,
        vectors,
        residual_norm,
        sweeps_used: sweeps,
    })
}

/// One Jacobi rotation annihilating `w[p][q]`; accumulates into the columns of `v`.
fn rotate(w: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = w[p * n + q];
    if apq.abs() <= 1e-300 {
        return;
    }
    let app = w[p * n + p];
    let aqq = w[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // Smaller root of t² + 2θt − 1 = 0; hypot keeps θ² from overflowing.
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    w[p * n + p] = app - t * apq;
    w[q * n + q] = aqq + t * apq;
    w[p * n + q] = 0.0;
    w[q * n + p] = 0.0;
    for k in 0..n {
        if k != p && k != q {
            let akp = w[k * n + p];
            let akq = w[k * n + q];
            let new_p = c * akp - s * akq;
            let new_q = s * akp + c * akq;
            w[k * n + p] = new_p;
            w[p * n + k] = new_p;
            w[k * n + q] = new_q;
            w[q * n + k] = new_q;
        }
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}

/// Ascending eigenvalues with the default tolerance (1e−12) and sweep cap (100).
pub fn eigenvalues_sorted(a: &SymmetricMatrix) -> Result<Vec<f64>> {
    Ok(solve_symmetric(a, SolverOptions::default())?.values)
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `x`
/// (negative pivots of the LDLᵀ factorization of `T − x I`).
fn sturm_count(diag: &[f64], off_sq: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut d = 1.0;
    for i in 0..diag.len() {
        let coupling = if i == 0 { 0.0 } else { off_sq[i - 1] / d };
        d = diag[i] - x - coupling;
        if d == 0.0 {
            d = -f64::EPSILON * (diag[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `count` eigenvalues of the symmetric tridiagonal matrix with
/// diagonal `diag` and sub-diagonal `off` (`off.len() == diag.len() − 1`),
/// by bisection on Sturm counts. Converged to a few ulps of the spectral
/// radius.
pub fn tridiagonal_lowest(diag: &[f64], off: &[f64], count: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 || off.len() + 1 != n {
        return Err(domain(format!(
            "tridiagonal needs {} off-diagonal entries, got {}",
            n.saturating_sub(1),
            off.len()
        )));
    }
    if count > n {
        return Err(domain(format!("requested {count} eigenvalues of a {n}x{n} matrix")));
    }
    let off_sq: Vec<f64> = off.iter().map(|e| e * e).collect();
    // Gershgorin bounds.
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    let eps = 2.0 * f64::EPSILON * scale;

    let mut values = Vec::with_capacity(count);
    let mut left = lo - eps;
    for k in 0..count {
        // Smallest x with sturm_count(x) > k.
        let (mut a, mut b) = (left, hi + eps);
        while b - a > eps {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(diag, &off_sq, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
        }
        let e = 0.5 * (a + b);
        values.push(e);
        left = a;
    }
    Ok(values)
}

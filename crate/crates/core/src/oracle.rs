//! Finite-difference reference spectrum on `[−L, L]` with Dirichlet walls.
//!
//! Second-order central differences turn `−ψ''/2 + Vψ = Eψ` into a
//! symmetric tridiagonal eigenproblem. The error model (O(h²), box
//! truncation) has nothing in common with the ladder-basis truncation, so
//! agreement between the two is a genuine cross-check.

use serde::Serialize;

use crate::eigensolver::tridiagonal_lowest;
use crate::error::{domain, Result};
use crate::operator_algebra::OscillatorParams;
use crate::wkb::wkb_energy;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    half_width: f64,
    points: usize,
}

impl GridSpec {
    pub fn new(half_width: f64, points: usize) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(domain(format!("half width must be positive, got {half_width}")));
        }
        if points < 3 {
            return Err(domain(format!("need at least 3 interior points, got {points}")));
        }
        Ok(Self { half_width, points })
    }

    /// Box wide enough that `V(L)` exceeds three times a rough estimate of
    /// the highest requested level: `L = (12 E_max / λ)^{1/4}` for the
    /// quartic, `√(6 E_max / k)` for a pure harmonic well, rounded up.
    pub fn default_for(params: &OscillatorParams, levels: usize, points: usize) -> Result<Self> {
        let top = levels.max(1) - 1;
        let mut e_max = 0.0f64;
        if params.lambda() > 0.0 {
            e_max += wkb_energy(top, params.lambda())?;
        }
        if params.k() > 0.0 {
            e_max += (top as f64 + 0.5) * params.k().sqrt();
        }
        let half_width = if params.lambda() > 0.0 {
            (12.0 * e_max / params.lambda()).powf(0.25)
        } else {
            (6.0 * e_max / params.k()).sqrt()
        };
        Self::new(half_width.ceil().max(1.0), points)
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// `h = 2L / (M + 1)`.
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points as f64 + 1.0)
    }

    /// Same box with exactly half the spacing (`2M + 1` interior points).
    pub fn refined(&self) -> Self {
        Self {
            half_width: self.half_width,
            points: 2 * self.points + 1,
        }
    }
}

/// Lowest `count` eigenvalues of the discretized Hamiltonian.
pub fn fd_spectrum(params: &OscillatorParams, grid: &GridSpec, count: usize) -> Result<Vec<f64>> {
    if count == 0 || count > grid.points {
        return Err(domain(format!(
            "count must be in 1..={}, got {count}",
            grid.points
        )));
    }
    let h = grid.spacing();
    let kinetic = 1.0 / (h * h);
    let diag: Vec<f64> = (1..=grid.points)
        .map(|i| kinetic + params.potential(-grid.half_width + h * i as f64))
        .collect();
    let off = vec![-0.5 * kinetic; grid.points - 1];
    tridiagonal_lowest(&diag, &off, count)
}

/// `(4 E_{h/2} − E_h) / 3` per level, cancelling the O(h²) error.
pub fn richardson_pair(params: &OscillatorParams, grid: &GridSpec, count: usize) -> Result<Vec<f64>> {
    let coarse = fd_spectrum(params, grid, count)?;
    let fine = fd_spectrum(params, &grid.refined(), count)?;
    Ok(coarse
        .iter()
        .zip(&fine)
        .map(|(c, f)| (4.0 * f - c) / 3.0)
        .collect())
}

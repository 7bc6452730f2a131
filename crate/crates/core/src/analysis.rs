//! Spectra, λ-scaling, ω optimization and basis-size convergence.

use serde::Serialize;

use crate::eigensolver::{solve_symmetric, SolverOptions};
use crate::error::{domain, Result};
use crate::operator_algebra::{build_hamiltonian, parity_blocks, BasisSpec, OscillatorParams};

/// Lowest Rayleigh–Ritz values of a truncated Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Ascending; `min(count_requested, n_basis)` entries.
    pub levels: Vec<f64>,
    pub params: OscillatorParams,
    pub basis: BasisSpec,
    pub solver_tol: f64,
    pub count_requested: usize,
    /// Jacobi sweeps summed over both parity blocks.
    pub sweeps: usize,
}

pub fn compute_spectrum(params: &OscillatorParams, basis: &BasisSpec, count: usize) -> Result<Spectrum> {
    compute_spectrum_with(params, basis, count, SolverOptions::default())
}

/// Builds the Hamiltonian, diagonalizes the even and odd blocks separately
/// and merges their eigenvalues.
pub fn compute_spectrum_with(
    params: &OscillatorParams,
    basis: &BasisSpec,
    count: usize,
    opts: SolverOptions,
) -> Result<Spectrum> {
    if count == 0 {
        return Err(domain("count must be at least 1"));
    }
    let h = build_hamiltonian(params, basis)?;
    let (even, odd) = parity_blocks(&h)?;
    let even = solve_symmetric(&even, opts)?;
    let odd = solve_symmetric(&odd, opts)?;
    let mut levels = merge_sorted(&even.values, &odd.values);
    levels.truncate(count);
    Ok(Spectrum {
        levels,
        params: *params,
        basis: *basis,
        solver_tol: opts.tol,
        count_requested: count,
        sweeps: even.sweeps_used + odd.sweeps_used,
    })
}

fn merge_sorted(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Maps a pure-quartic spectrum at λ = 1 to another λ.
///
/// Levels are multiplied by `λ^{1/3}` and the reported ω by the same factor:
/// `H(λ, λ^{1/3}ω) = λ^{1/3} H(1, ω)` holds entry by entry, so the returned
/// triple (params, basis, levels) is what [`compute_spectrum`] would produce.
pub fn scale_spectrum(base: &Spectrum, lambda_target: f64) -> Result<Spectrum> {
    if base.params.k() != 0.0 || base.params.lambda() != 1.0 {
        return Err(domain(format!(
            "scaling needs a pure quartic base at lambda = 1, got k={}, lambda={}",
            base.params.k(),
            base.params.lambda()
        )));
    }
    let params = OscillatorParams::pure_quartic(lambda_target)?;
    let factor = lambda_target.cbrt();
    Ok(Spectrum {
        levels: base.levels.iter().map(|e| e * factor).collect(),
        params,
        basis: BasisSpec::new(base.basis.n_basis(), factor * base.basis.omega())?,
        ..base.clone()
    })
}

/// Bracket and tolerance for [`optimize_omega`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OmegaSearch {
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
}

impl Default for OmegaSearch {
    fn default() -> Self {
        Self {
            lo: 0.5,
            hi: 6.0,
            tol: 1e-4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimizedOmega {
    pub omega: f64,
    pub e0: f64,
    pub evaluations: usize,
}

fn ground_energy(params: &OscillatorParams, n_basis: usize, omega: f64) -> Result<f64> {
    let basis = BasisSpec::new(n_basis, omega)?;
    Ok(compute_spectrum(params, &basis, 1)?.levels[0])
}

/// Golden-section minimization of the truncated ground-state energy over ω.
///
/// Assumes `E₀(ω)` is unimodal on the bracket; a multi-modal landscape
/// yields some local minimum without warning.
pub fn optimize_omega(params: &OscillatorParams, n_basis: usize, search: OmegaSearch) -> Result<OptimizedOmega> {
    let OmegaSearch { lo, hi, tol } = search;
    if !(lo > 0.0 && lo < hi && hi.is_finite()) {
        return Err(domain(format!("need 0 < lo < hi, got [{lo}, {hi}]")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let f = |w: f64| ground_energy(params, n_basis, w);

    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let mut evaluations = 2;
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
        evaluations += 1;
    }
    let (omega, e0) = if fc <= fd { (c, fc) } else { (d, fd) };
    Ok(OptimizedOmega {
        omega,
        e0,
        evaluations,
    })
}

/// Threshold on the last ground-state change for [`ConvergenceReport::converged`].
pub const CONVERGENCE_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub omega: f64,
    pub sizes: Vec<usize>,
    pub ground_energies: Vec<f64>,
    /// `|E₀(N_{i+1}) − E₀(N_i)|`.
    pub deltas: Vec<f64>,
    pub converged: bool,
}

/// Ground-state energy for each basis size at fixed ω. Bases are nested, so
/// the sequence is non-increasing up to rounding.
pub fn convergence_study(params: &OscillatorParams, omega: f64, sizes: &[usize]) -> Result<ConvergenceReport> {
    if sizes.is_empty() {
        return Err(domain("need at least one basis size"));
    }
    if sizes[0] == 0 || sizes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(domain(format!("sizes must be strictly increasing and >= 1, got {sizes:?}")));
    }
    let ground_energies = sizes
        .iter()
        .map(|&n| ground_energy(params, n, omega))
        .collect::<Result<Vec<_>>>()?;
    let deltas: Vec<f64> = ground_energies.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let converged = deltas.last().is_some_and(|&d| d < CONVERGENCE_THRESHOLD);
    Ok(ConvergenceReport {
        omega,
        sizes: sizes.to_vec(),
        ground_energies,
        deltas,
        converged,
    })
}

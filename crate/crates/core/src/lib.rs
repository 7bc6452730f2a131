//! Eigenvalues of the quartic oscillator `H = p²/2 + (k/2)x² + (λ/4)x⁴`.
//!
//! The Hamiltonian is assembled in the number basis of a harmonic oscillator
//! with adjustable frequency ω, truncated to `N` kets and diagonalized with a
//! cyclic Jacobi solver. Semiclassical (WKB) energies and a finite-difference
//! discretization of the Schrödinger equation provide independent checks.
//!
//! Units: μ = ħ = 1.

pub mod analysis;
pub mod eigensolver;
mod error;
pub mod matrix;
pub mod operator_algebra;
pub mod oracle;
pub mod wkb;

pub use analysis::{
    compute_spectrum, compute_spectrum_with, convergence_study, optimize_omega, scale_spectrum,
    ConvergenceReport, OmegaSearch, OptimizedOmega, Spectrum,
};
pub use eigensolver::{
    eigenvalues_sorted, solve_symmetric, tridiagonal_lowest, EigenDecomposition, SolverOptions,
};
pub use error::{Error, Result};
pub use matrix::SymmetricMatrix;
pub use operator_algebra::{
    build_hamiltonian, hamiltonian_element, parity_blocks, BasisSpec, OscillatorParams,
};
pub use oracle::{fd_spectrum, richardson_pair, GridSpec};
pub use wkb::{wkb_action, wkb_energy, wkb_table, WkbConstants, WkbLevel};

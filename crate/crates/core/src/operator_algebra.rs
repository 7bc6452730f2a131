//! Ladder-operator matrix elements and the truncated Hamiltonian.
//!
//! With `a = √(ω/2) x + i p/√(2ω)` the number kets `|n⟩` of a harmonic
//! oscillator of frequency ω form the basis. `x` and `p` connect `n` to
//! `n ± 1`, so `x²`, `p²` connect `n` to `n, n ± 2` and `x⁴` reaches `n ± 4`.
//! The Hamiltonian is therefore a symmetric band matrix with offsets
//! {0, 2, 4}, and even and odd kets never mix.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::matrix::SymmetricMatrix;

/// Nonzero diagonals of the Hamiltonian in the number basis.
pub const HAMILTONIAN_BANDS: [usize; 3] = [0, 2, 4];

/// Constants of `H = p²/2 + (k/2)x² + (λ/4)x⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    k: f64,
    lambda: f64,
}

impl OscillatorParams {
    /// `lambda` must be non-negative, and `k` positive when `lambda` is zero.
    pub fn new(k: f64, lambda: f64) -> Result<Self> {
        if !k.is_finite() || !lambda.is_finite() {
            return Err(domain(format!("non-finite parameters k={k}, lambda={lambda}")));
        }
        if lambda < 0.0 {
            return Err(domain(format!("lambda must be >= 0, got {lambda}")));
        }
        if lambda == 0.0 && k <= 0.0 {
            return Err(domain(format!(
                "lambda = 0 requires k > 0 for a bound spectrum, got k={k}"
            )));
        }
        Ok(Self { k, lambda })
    }

    /// `p²/2 + (λ/4)x⁴`.
    pub fn pure_quartic(lambda: f64) -> Result<Self> {
        if lambda <= 0.0 {
            return Err(domain(format!("pure quartic needs lambda > 0, got {lambda}")));
        }
        Self::new(0.0, lambda)
    }

    /// `p²/2 + (k/2)x²`.
    pub fn harmonic(k: f64) -> Result<Self> {
        Self::new(k, 0.0)
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn is_pure_quartic(&self) -> bool {
        self.k == 0.0 && self.lambda > 0.0
    }

    /// `V(x) = (k/2)x² + (λ/4)x⁴`.
    pub fn potential(&self, x: f64) -> f64 {
        let x2 = x * x;
        0.5 * self.k * x2 + 0.25 * self.lambda * x2 * x2
    }

    /// Outermost classical turning point, the largest `x ≥ 0` with `V(x) = E`.
    /// `None` when `E` lies below the potential everywhere.
    pub fn turning_point(&self, energy: f64) -> Option<f64> {
        let x2 = if self.lambda > 0.0 {
            // (λ/4)u² + (k/2)u − E = 0 for u = x².
            let half_k = 0.5 * self.k;
            let disc = half_k * half_k + self.lambda * energy;
            if disc < 0.0 {
                return None;
            }
            (disc.sqrt() - half_k) / (0.5 * self.lambda)
        } else {
            2.0 * energy / self.k
        };
        (x2 >= 0.0).then(|| x2.sqrt())
    }
}

/// Truncation size and ladder frequency of the number basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisSpec {
    n_basis: usize,
    omega: f64,
}

impl BasisSpec {
    pub fn new(n_basis: usize, omega: f64) -> Result<Self> {
        if n_basis == 0 {
            return Err(domain("basis needs at least one ket"));
        }
        check_omega(omega)?;
        Ok(Self { n_basis, omega })
    }

    pub fn n_basis(&self) -> usize {
        self.n_basis
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }
}

fn check_omega(omega: f64) -> Result<()> {
    if omega > 0.0 && omega.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("omega must be positive and finite, got {omega}")))
    }
}

/// `⟨m|x|n⟩ = (√n δ_{m,n−1} + √(n+1) δ_{m,n+1}) / √(2ω)`.
pub fn position_element(m: usize, n: usize, omega: f64) -> f64 {
    let s = (0.5 / omega).sqrt();
    if m + 1 == n {
        s * (n as f64).sqrt()
    } else if m == n + 1 {
        s * (m as f64).sqrt()
    } else {
        0.0
    }
}

/// Coefficient `c` in `⟨m|p|n⟩ = i·c`.
pub fn momentum_element(m: usize, n: usize, omega: f64) -> f64 {
    let s = (0.5 * omega).sqrt();
    if m + 1 == n {
        -s * (n as f64).sqrt()
    } else if m == n + 1 {
        s * (m as f64).sqrt()
    } else {
        0.0
    }
}

/// `⟨m|x²|n⟩`.
pub fn position_squared_element(m: usize, n: usize, omega: f64) -> f64 {
    let lo = m.min(n) as f64;
    let v = match m.abs_diff(n) {
        0 => 2.0 * lo + 1.0,
        2 => ((lo + 1.0) * (lo + 2.0)).sqrt(),
        _ => return 0.0,
    };
    v / (2.0 * omega)
}

/// `⟨m|p²|n⟩`, real because `p²` is a real symmetric operator here.
pub fn momentum_squared_element(m: usize, n: usize, omega: f64) -> f64 {
    let lo = m.min(n) as f64;
    let v = match m.abs_diff(n) {
        0 => 2.0 * lo + 1.0,
        2 => -((lo + 1.0) * (lo + 2.0)).sqrt(),
        _ => return 0.0,
    };
    0.5 * omega * v
}

/// `⟨m|x⁴|n⟩`.
pub fn position_fourth_element(m: usize, n: usize, omega: f64) -> f64 {
    let lo = m.min(n) as f64;
    let v = match m.abs_diff(n) {
        0 => 6.0 * lo * lo + 6.0 * lo + 3.0,
        2 => 2.0 * ((lo + 1.0) * (lo + 2.0)).sqrt() * (2.0 * lo + 3.0),
        4 => ((lo + 1.0) * (lo + 2.0) * (lo + 3.0) * (lo + 4.0)).sqrt(),
        _ => return 0.0,
    };
    v / (4.0 * omega * omega)
}

/// `⟨n|H|m⟩` for `H = p²/2 + (k/2)x² + (λ/4)x⁴` in the basis of frequency ω.
///
/// Symmetric in `n` and `m`; zero unless `|n − m| ∈ {0, 2, 4}`. For `k = 0`,
/// `λ = 1` the harmonic part is evaluated in the same grouping as the
/// pure-quartic closed form, so that case is reproduced bit for bit.
pub fn hamiltonian_element(n: usize, m: usize, params: &OscillatorParams, omega: f64) -> Result<f64> {
    check_omega(omega)?;
    let (k, lambda) = (params.k, params.lambda);
    let lo = n.min(m) as f64;
    let w2 = omega * omega;
    let h = match n.abs_diff(m) {
        0 => {
            (2.0 * lo + 1.0) * (omega + k / omega) / 4.0
                + lambda / (16.0 * w2) * (6.0 * lo * lo + 6.0 * lo + 3.0)
        }
        2 => {
            let s = ((lo + 1.0) * (lo + 2.0)).sqrt();
            (k / omega - omega) * s / 4.0 + lambda / (8.0 * w2) * s * (2.0 * lo + 3.0)
        }
        4 => {
            lambda / (16.0 * w2) * ((lo + 1.0) * (lo + 2.0) * (lo + 3.0) * (lo + 4.0)).sqrt()
        }
        _ => 0.0,
    };
    Ok(h)
}

/// Truncated Hamiltonian on kets `|0⟩ … |N−1⟩`, upper triangle mirrored.
pub fn build_hamiltonian(params: &OscillatorParams, basis: &BasisSpec) -> Result<SymmetricMatrix> {
    SymmetricMatrix::try_from_upper_fn(basis.n_basis, &HAMILTONIAN_BANDS, |i, j| {
        hamiltonian_element(i, j, params, basis.omega)
    })
}

/// Splits a matrix with even-offset couplings into its even-index and
/// odd-index principal blocks. Offsets `{0, 2, 4}` become `{0, 1, 2}`.
pub fn parity_blocks(h: &SymmetricMatrix) -> Result<(SymmetricMatrix, SymmetricMatrix)> {
    let n = h.dim();
    for i in 0..n {
        for j in (i + 1..n).step_by(2) {
            if h.get(i, j) != 0.0 {
                return Err(Error::OddCoupling { row: i, col: j });
            }
        }
    }
    let offsets: Vec<usize> = h
        .band_offsets()
        .iter()
        .filter(|d| *d % 2 == 0)
        .map(|d| d / 2)
        .collect();
    let even: Vec<usize> = (0..n).step_by(2).collect();
    let odd: Vec<usize> = (1..n).step_by(2).collect();
    Ok((
        h.principal_submatrix(&even, &offsets),
        h.principal_submatrix(&odd, &offsets),
    ))
}

//! Semiclassical energies of the pure quartic oscillator `p²/2 + (λ/4)x⁴`.
//!
//! Quantization `∮ p dx = (n + ½)·2π` gives the closed form
//! `E_n = C (n + ½)^{4/3} λ^{1/3}` with
//! `C = 3^{4/3} π² / (2^{2/3} Γ(¼)^{8/3})`. [`wkb_action`] evaluates the
//! left-hand side by quadrature, independently of the closed form.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Gauss–Legendre order used by [`wkb_action`].
pub const ACTION_QUADRATURE_NODES: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WkbLevel {
    pub n: usize,
    pub energy: f64,
}

/// Constants entering the closed-form energies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WkbConstants {
    /// `3^{4/3} π² / (2^{2/3} Γ(¼)^{8/3})`.
    pub coefficient: f64,
    /// Complete elliptic integral of the first kind at parameter `m = −1`.
    pub elliptic_k_minus_1: f64,
}

impl WkbConstants {
    pub fn get() -> &'static WkbConstants {
        static CONSTANTS: OnceLock<WkbConstants> = OnceLock::new();
        CONSTANTS.get_or_init(|| {
            let g = gamma(0.25);
            let coefficient = 3f64.powf(4.0 / 3.0) * PI * PI / (2f64.powf(2.0 / 3.0) * g.powf(8.0 / 3.0));
            // (16/3) K(−1) E^{3/4} = (n + ½) 2π and E = C (n + ½)^{4/3} give
            // K(−1) = 3π / (8 C^{3/4}).
            let elliptic_k_minus_1 = 3.0 * PI / (8.0 * coefficient.powf(0.75));
            WkbConstants {
                coefficient,
                elliptic_k_minus_1,
            }
        })
    }
}

/// Γ(x) for `x > 0` by the Lanczos approximation (g = 7, 9 terms), with
/// the reflection formula below ½. Relative error is around 1e−15.
pub fn gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

/// `C (n + ½)^{4/3} λ^{1/3}`.
pub fn wkb_energy(n: usize, lambda: f64) -> Result<f64> {
    if lambda <= 0.0 || !lambda.is_finite() {
        return Err(domain(format!("lambda must be positive and finite, got {lambda}")));
    }
    let c = WkbConstants::get().coefficient;
    let base = c * (n as f64 + 0.5).powf(4.0 / 3.0);
    Ok(base * lambda.cbrt())
}

pub fn wkb_table(count: usize, lambda: f64) -> Result<Vec<WkbLevel>> {
    if count == 0 {
        return Err(domain("WKB table needs at least one level"));
    }
    (0..count)
        .map(|n| Ok(WkbLevel { n, energy: wkb_energy(n, lambda)? }))
        .collect()
}

/// Closed-loop action `2√2 ∫_{−x_t}^{x_t} √(E − λx⁴/4) dx`, `x_t = (4E/λ)^{1/4}`.
///
/// With `x = x_t sin θ` the integrand becomes
/// `√E x_t cos²θ √(1 + sin²θ)` on `[−π/2, π/2]`, which is smooth, so a
/// fixed Gauss–Legendre rule is accurate to ~1e−14.
pub fn wkb_action(energy: f64, lambda: f64) -> Result<f64> {
    if energy <= 0.0 || !energy.is_finite() {
        return Err(domain(format!("energy must be positive and finite, got {energy}")));
    }
    if lambda <= 0.0 || !lambda.is_finite() {
        return Err(domain(format!("lambda must be positive and finite, got {lambda}")));
    }
    let x_t = (4.0 * energy / lambda).powf(0.25);
    let rule = gauss_legendre_rule();
    let half = 0.5 * PI;
    let integral: f64 = rule
        .iter()
        .map(|&(node, weight)| {
            let theta = half * node;
            let (s, c) = theta.sin_cos();
            weight * c * c * (1.0 + s * s).sqrt()
        })
        .sum::<f64>()
        * half;
    Ok(2.0 * 2f64.sqrt() * energy.sqrt() * x_t * integral)
}

fn gauss_legendre_rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ACTION_QUADRATURE_NODES))
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[−1, 1]`,
/// by Newton iteration on `P_n` from Chebyshev-like initial guesses.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = vec![(0.0, 0.0); n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule[i] = (-x, w);
        rule[n - 1 - i] = (x, w);
    }
    rule
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

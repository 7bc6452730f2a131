#![allow(dead_code)]

use std::process::{Command, Output};

use quartic_core::SymmetricMatrix;
use rand::Rng;

pub fn quartic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic"))
        .args(args)
        .output()
        .expect("failed to launch quartic")
}

pub fn stdout_of(args: &[&str]) -> String {
    let out = quartic(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

pub fn json_levels(v: &serde_json::Value) -> Vec<f64> {
    v["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["energy"].as_f64().unwrap())
        .collect()
}

pub fn csv_levels(text: &str) -> Vec<f64> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,energy"));
    lines
        .enumerate()
        .map(|(i, l)| {
            let (n, e) = l.split_once(',').unwrap();
            assert_eq!(n.parse::<usize>().unwrap(), i);
            e.parse().unwrap()
        })
        .collect()
}

pub fn random_symmetric(rng: &mut impl Rng, dim: usize) -> SymmetricMatrix {
    let mut e = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in i..dim {
            let v = rng.gen_range(-1.0..1.0);
            e[i * dim + j] = v;
            e[j * dim + i] = v;
        }
    }
    SymmetricMatrix::from_row_major(dim, e).unwrap()
}

/// Eigenvalues by bisection on the number of sign changes in the leading
/// principal minors of `A − xI` (negative pivots of unpivoted elimination).
pub fn sturm_oracle(a: &SymmetricMatrix) -> Vec<f64> {
    let n = a.dim();
    let below = |x: f64| -> usize {
        let mut m = a.entries().to_vec();
        for i in 0..n {
            m[i * n + i] -= x;
        }
        let mut neg = 0;
        for k in 0..n {
            let piv = if m[k * n + k] == 0.0 { -1e-300 } else { m[k * n + k] };
            if piv < 0.0 {
                neg += 1;
            }
            for i in k + 1..n {
                let f = m[i * n + k] / piv;
                for j in k + 1..n {
                    m[i * n + j] -= f * m[k * n + j];
                }
            }
        }
        neg
    };
    let r = (0..n)
        .map(|i| a.row(i).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    (0..n)
        .map(|k| {
            let (mut lo, mut hi) = (-r - 1.0, r + 1.0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if below(mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

//! Dense symmetric storage with declared band structure.

use crate::error::{Error, Result};

/// Dense, row-major, exactly symmetric real matrix.
///
/// `band_offsets` lists the non-negative diagonal offsets that may hold
/// nonzero entries. It is metadata, not a packed format: every entry is
/// stored, and every entry outside the declared bands is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    dim: usize,
    entries: Vec<f64>,
    band_offsets: Vec<usize>,
}

impl SymmetricMatrix {
    /// Builds a matrix by evaluating `f(i, j)` for `i <= j` on the declared
    /// bands and mirroring. Entries off the bands are zero and `f` is never
    /// called for them.
    pub fn from_upper_fn<F>(dim: usize, band_offsets: &[usize], mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> f64,
    {
        let mut offsets = band_offsets.to_vec();
        offsets.sort_unstable();
        offsets.dedup();
        let mut entries = vec![0.0; dim * dim];
        for &d in &offsets {
            for i in 0..dim.saturating_sub(d) {
                let j = i + d;
                let v = f(i, j);
                entries[i * dim + j] = v;
                entries[j * dim + i] = v;
            }
        }
        Self {
            dim,
            entries,
            band_offsets: offsets,
        }
    }

    /// Same as [`from_upper_fn`](Self::from_upper_fn) over a fallible closure.
    pub fn try_from_upper_fn<F>(dim: usize, band_offsets: &[usize], mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<f64>,
    {
        let mut err = None;
        let m = Self::from_upper_fn(dim, band_offsets, |i, j| match f(i, j) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                0.0
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(m),
        }
    }

    /// Wraps a row-major buffer, checking exact symmetry. The band offsets are
    /// inferred from the nonzero pattern.
    pub fn from_row_major(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(crate::error::domain(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        let mut present = vec![false; dim];
        for i in 0..dim {
            for j in i..dim {
                let (a, b) = (entries[i * dim + j], entries[j * dim + i]);
                if a != b && !(a.is_nan() && b.is_nan()) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
                if a != 0.0 {
                    present[j - i] = true;
                }
            }
        }
        let band_offsets = (0..dim).filter(|&d| present[d]).collect();
        Ok(Self {
            dim,
            entries,
            band_offsets,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(crate::error::domain("rows must form a square matrix"));
        }
        Self::from_row_major(dim, rows.concat())
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        Self::from_upper_fn(diag.len(), &[0], |i, _| diag[i])
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_upper_fn(dim, &[0], |_, _| 1.0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Declared nonzero diagonal offsets (non-negative; ±d is implied).
    pub fn band_offsets(&self) -> &[usize] {
        &self.band_offsets
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Whether the matrix is exactly symmetric. Always true for values built
    /// through this type's constructors.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.entries[i * n + j].to_bits() != self.entries[j * n + i].to_bits())
    }

    /// Submatrix on the given (ordered) index set with the given declared offsets.
    pub(crate) fn principal_submatrix(&self, idx: &[usize], band_offsets: &[usize]) -> Self {
        let dim = idx.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j));
            }
        }
        Self {
            dim,
            entries,
            band_offsets: band_offsets.to_vec(),
        }
    }

    /// `y = A x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Entrywise product with a scalar, keeping the band metadata.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|v| v * factor).collect(),
            band_offsets: self.band_offsets.clone(),
        }
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is not symmetric: entry ({row}, {col}) differs from its mirror")]
    NotSymmetric { row: usize, col: usize },

    #[error("nonzero coupling at odd offset, entry ({row}, {col}); parity split needs even offsets only")]
    OddCoupling { row: usize, col: usize },

    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

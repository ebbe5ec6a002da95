//! Dense-tensor substrate with reverse-mode automatic differentiation.
//!
//! Everything the denoiser and the trainer need and nothing more: row-major
//! f32 tensors, a tape-based [`Graph`] recording forward ops so gradients can
//! be replayed in reverse, and an Adam optimizer step. Tensors are immutable
//! values; every op validates shapes up front and checks its output for
//! NaN/Inf so non-finite values surface as errors instead of propagating.
//!
//! Graph evaluation is single-threaded by design. Callers that want batch
//! parallelism run one graph per batch row and combine results in a fixed
//! order, which keeps every result bitwise independent of thread count.

mod adam;
mod graph;
mod tensor;

pub use adam::{adam_step, AdamHyper, AdamState};
pub use graph::{Graph, NodeId};
pub use tensor::Tensor;

use thiserror::Error;

/// Errors surfaced by tensor and graph operations.
#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },
    #[error("non-finite value produced by {op}")]
    NonFinite { op: &'static str },
    #[error("target index {index} out of range for vocabulary of {vocab}")]
    IndexOutOfRange { index: usize, vocab: usize },
    #[error("expected a scalar node, got shape {0:?}")]
    NotScalar(Vec<usize>),
    #[error("data length {len} does not match shape {shape:?}")]
    DataShape { len: usize, shape: Vec<usize> },
    #[error("backward called before node {0:?} received a gradient")]
    MissingGradient(NodeId),
}

pub type Result<T> = std::result::Result<T, NumericsError>;

pub(crate) fn check_finite(op: &'static str, data: &[f32]) -> Result<()> {
    if data.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(NumericsError::NonFinite { op })
    }
}

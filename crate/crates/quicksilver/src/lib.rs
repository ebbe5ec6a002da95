//! Desk-scale masked-diffusion language modeling.
//!
//! `quicksilver` trains and serves a byte-level diffusion language model:
//! a Transformer denoiser learns to recover clean token sequences from
//! partially masked ones, and generation runs the learned reverse process —
//! either step by step (ancestral) or several tokens per forward pass
//! (confidence decoding). A small serving engine batches concurrent
//! generation requests into shared forward passes and accounts for
//! throughput the way inference benchmarks do.
//!
//! The crate is organized bottom-up:
//!
//! - [`numerics`] — dense f32 tensors, reverse-mode autodiff, Adam
//! - [`corpus`] — byte tokenizer, batch assembly, fill-in-the-middle spans
//! - [`diffusion`] — the absorbing-state noise process and its reverse kernels
//! - [`denoiser`] — the Transformer that predicts clean tokens from noisy ones
//! - [`training`] — the denoising loss, optimization loop, checkpoints, NLL bound
//! - [`sampler`] — ancestral and confidence-based parallel generation, infilling
//! - [`engine`] — request queue, dynamic batching, block pool, HTTP service
//! - [`bench`] — synthetic task suites, pass@1 scoring, speed/quality sweeps
//!
//! The `book/` directory at the repository root is an mdBook walking through
//! the same material; its code snippets are compiled as doc-tests via the
//! [`guide`] module.

pub mod bench;
pub mod corpus;
pub mod denoiser;
pub mod diffusion;
pub mod engine;
pub mod guide;
pub mod numerics;
pub mod sampler;
pub mod training;

//! Worst-case latent-domain characterization and domain-invariant
//! representation learning for windowed time-series classification.
//!
//! The crate is organised around the training pipeline:
//!
//! - [`numerics`]: dense tensors, a reverse-mode tape, the small set of
//!   neural layers the backbone needs, gradient reversal, and Adam.
//! - [`dataio`]: window segmentation, min-max normalization, stratified
//!   splits, the `DVTS1` dataset format, and a synthetic generator with
//!   known latent domains.
//! - [`model`]: the shared-backbone bundle (one feature extractor, three
//!   head groups) and its checkpoint format.
//! - [`diversify`]: the iterative min-max trainer (feature update,
//!   latent-distribution characterization, invariant training), plus the
//!   ERM and DANN baselines.
//! - [`analysis`]: proxy H-divergence estimation, pairwise divergence
//!   matrices, accuracy, adjusted Rand index, and error-bound reports.
//! - [`cli`]: config parsing and the `dvfy` subcommand implementations.

pub mod analysis;
pub mod cli;
pub mod dataio;
pub mod diversify;
pub mod error;
pub mod model;
pub mod numerics;
pub mod rng;

pub use error::{Error, Result};

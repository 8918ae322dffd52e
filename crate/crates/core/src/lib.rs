//! Task-incremental continual-learning engine and benchmark harness for
//! sensor-feature classification.
//!
//! The crate is organised around the lifecycle of an incremental experiment:
//!
//! * [`numerics`] — dense matrix primitives, seeded randomness, probability
//!   transforms.
//! * [`network`] — a fully-connected classifier with manual reverse-mode
//!   gradients, SGD, step LR schedule and an expandable output layer.
//! * [`losses`] — every training objective and importance measure used by the
//!   strategies, exposed as pure `(loss, gradient)` functions.
//! * [`memory`] — fixed-budget per-class replay memory and the exemplar
//!   sampling strategies.
//! * [`strategies`] — the continual-learning strategies plus baselines behind
//!   a single task-lifecycle contract.
//! * [`benchmark`] — task-sequence generation, dataset splitting, the
//!   incremental evaluation loop and its metrics.
//! * [`data`] — dataset ingestion (feature CSV, binary sensor event streams)
//!   and synthetic dataset generation.

pub mod benchmark;
pub mod data;
pub mod error;
pub mod losses;
pub mod memory;
pub mod network;
pub mod numerics;
pub mod strategies;

pub use error::{Error, Result};

//! Constrained jet calculus on the squashed 7-manifold.
//!
//! This module verifies first-order differential identities of the frame
//! calculus symbolically: abstract generators carry finitely many tracked
//! derivative components (their *jets*), every derivative a verification
//! needs is reduced mechanically to those components through the structure
//! equations, and equality of two expressions means their polynomial
//! difference vanishes identically — no numerics, no sampling.

pub mod context;
pub mod engine;
pub mod suite;
pub mod word;

pub use context::{Arity, ContextSpec, GeneratorSpec};
pub use engine::{AtomKey, CheckOutcome, JForm, JetCtx, JetError, Tail};

//! Noncommutative operator calculus on horizontal forms.
//!
//! This module reasons about *words* in the named operators of the frame
//! calculus — `d_H`, `d_H^⋆`, `⋆_H`, the Reeb Lie derivatives, the complex
//! structures, the trace and embedding maps between scalar and
//! `ℝ³`-valued forms, the vertical Casimir, and the derived blocks built
//! from them — without ever expanding a section into coordinates.  Three
//! layers cooperate:
//!
//! * [`component`] — a complete normal form for the zeroth-order algebra
//!   generated by `ℒ_{ξ_a}` and `I_a`, which *decides* every identity that
//!   contains no horizontal derivative;
//! * [`rules`] and [`rewrite`] — an oriented rewrite system over typed
//!   operator words, with provenance tracking per rule, exhaustive
//!   normalization, and scripted replay;
//! * [`blocks`] — matrices of operator polynomials indexed by the graded
//!   slots of 3-forms and 2-forms on the total space, whose compositions
//!   reproduce the second-order comparison identities.
//!
//! Weighted (Fourier-graded) arguments live in [`weight`]; the named
//! verification entry points are collected in [`suite`].

pub mod blocks;
pub mod component;
pub mod poly;
pub mod rewrite;
pub mod rules;
pub mod suite;
pub mod symbol;
pub mod weight;

pub use component::{CompPoly, MatOp};
pub use poly::{render_word, word_cod, OpPoly};
pub use rewrite::{expect_zero, normalize, replay, Script, DEFAULT_CAP};
pub use rules::{Provenance, Rule, RuleSet};
pub use symbol::{OpSymbol, Space, POINT};

/// Errors from building or rewriting operator polynomials.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpError {
    /// A word does not parse: some symbol is applied outside its domain.
    #[error("word {word} is not defined on {dom}")]
    Signature { word: String, dom: String },
    /// Composition of polynomials with mismatched spaces.
    #[error("cannot compose: outer expects {outer_dom}, inner produces {inner_cod}")]
    Compose { outer_dom: String, inner_cod: String },
    /// A symbol without a representable adjoint at this domain.
    #[error("no adjoint for {sym} on {dom}")]
    NoAdjoint { sym: String, dom: String },
    /// Normalization exceeded its step bound.
    #[error("rewrite did not terminate within {cap} steps")]
    CapExceeded { cap: usize },
    /// A replay script step failed to fire.
    #[error("replay step {step} (`{rule}`): {reason}")]
    Replay { step: usize, rule: String, reason: String },
    /// A replay script failed to parse.
    #[error("script line {line}: {msg}")]
    Script { line: usize, msg: String },
    /// A rule identifier missing from the registry.
    #[error("unknown rule `{id}`")]
    UnknownRule { id: String },
    /// Block matrix entries or shapes out of place.
    #[error("block shape mismatch: expected {expected}, found {found}")]
    Shape { expected: String, found: String },
}

//! Exact symbolic verification engine for the frame calculus of a squashed
//! 7-dimensional 3-Sasaki geometry.
//!
//! The crate is organized as a tower of small exact-arithmetic engines:
//!
//! * [`scalar`] — exact coefficient fields: big rationals, rational functions
//!   in the squashing parameter, quadratic extensions (`sqrt5`, spectral
//!   square roots, eigenvalue quotient rings), sparse multivariate
//!   polynomials, and dense exact linear algebra.
//! * [`fiber`] — the 128-dimensional exterior algebra of a model fiber
//!   (3 vertical + 4 horizontal directions), the quaternionic 2-form triple,
//!   Hodge stars, the cross-section isomorphisms between symmetric
//!   endomorphisms and 3-forms, and the cubic contraction pipeline.
//! * [`jets`] — constrained jet calculus over the fiber: formal generators
//!   with Lie-derivative words and derivative tails, exact decomposition
//!   solving, and the structure-equation differential.
//! * [`opcalc`] — a noncommutative operator-word rewriting engine, with
//!   block matrices of operator polynomials acting on slot decompositions.
//! * [`spectral`] — eigenvalue bookkeeping: quotient rings by eigenvalue
//!   minimal polynomials, square-root towers, and the deformation table.
//! * [`obstruction`] — the cubic integral pipeline producing the exact
//!   obstruction constant.
//! * [`catalog`] — the registry of verification records and report
//!   generation.
//! * [`cli`] — expression parser and command-line entry points.

pub mod fiber;
pub mod jets;
pub mod opcalc;
pub mod scalar;

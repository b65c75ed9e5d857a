//! Exact exterior algebra on the 7-dimensional model fiber.
//!
//! The frame is `Z¹, Z², Z³` (vertical, rescaled to unit length) followed by
//! `e¹..e⁴` (horizontal); basis monomials are 7-bit masks, so a form is a
//! sparse map from 128 masks to coefficients.  On top of the raw algebra
//! ([`basis`], [`form`]) sit the validated quaternionic model ([`model`]),
//! the vertical/horizontal transfer maps ([`maps`]), the rank 1/7/27
//! decomposition of 3- and 4-forms ([`g2split`]), endomorphism transfer
//! ([`endo`]) and the pointwise cubic forms used by the deformation
//! obstruction ([`cubic`]).

pub mod basis;
pub mod cubic;
pub mod endo;
pub mod form;
pub mod g2split;
pub mod maps;
pub mod model;

pub use basis::{e_mask, z_mask, CYCLIC, HORIZONTAL_MASK, VERTICAL_MASK, VOLUME_MASK};
pub use form::{covector_product, Form};
pub use model::{model, CandidateId, Model};

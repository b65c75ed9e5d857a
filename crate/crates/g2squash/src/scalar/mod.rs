//! Exact coefficient arithmetic.
//!
//! Everything in this crate computes over explicit countable fields; no
//! floating point is ever used in a verification path.  The base field is
//! `ℚ` ([`Rat`]), extended as needed:
//!
//! * [`ParamScalar`] — rational functions `ℚ(s)` in the squashing parameter.
//! * [`RootScalar`] — the real quadratic field `ℚ(√5)`, the home of every
//!   nearly-parallel special value (the squashed Einstein parameter is
//!   `s = 1/√5 = √5/5`).
//! * [`SpectralBase`] — rational functions in a formal base-Laplacian
//!   eigenvalue `ν` over `ℚ(s)`.
//! * [`QuadExt`] — quadratic extensions `K[t]/(t² − q·t − p)`, instantiated
//!   as the spectral square-root tower (`r² = ν + s²`) and the eigenvalue
//!   quotient ring (`λ² = ν − 2sλ`).
//! * [`MPoly`] — sparse multivariate polynomials, used for atom-linear jet
//!   coefficients and generic-section coordinates.
//!
//! [`linalg`] provides dense exact linear algebra (reduced row echelon form,
//! kernels, one-sided inverses) over any [`Scalar`] field, and [`decimal`]
//! renders quadratic surds to a fixed number of significant digits using
//! big-integer square roots only.

pub mod decimal;
pub mod linalg;
pub mod mpoly;
pub mod quadext;
pub mod ratfunc;
pub mod root;
pub mod upoly;

use num::BigRational;
use thiserror::Error;

/// Exact rational numbers of unbounded size.
pub type Rat = BigRational;

/// Signed big integer re-export used by the decimal renderer.
pub type Int = num::BigInt;

/// Errors raised by exact scalar arithmetic.
///
/// These are *typed refusals*, not approximations: an operation that cannot
/// be performed exactly (division by zero, specializing at a pole, inverting
/// a non-unit polynomial) reports why and where.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// Inversion of an element that is not a unit in its ring.
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    /// A rational function was specialized at a zero of its denominator.
    #[error("specialization hits a pole: {0}")]
    Pole(String),
}

/// A commutative ring with exact equality and (attempted) inversion.
///
/// All the coefficient types in this crate implement `Scalar`.  Fields
/// (`Rat`, rational functions, quadratic extensions) never fail to invert a
/// nonzero element; rings that are not fields (multivariate polynomials)
/// return [`ScalarError::NotInvertible`] for non-units.
pub trait Scalar:
    Clone + PartialEq + Eq + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(n.into()))
    }
    /// `p/q` as a ring element; `q` must be nonzero.
    fn from_frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "from_frac denominator must be nonzero");
        Self::from_rat(&Rat::new(p.into(), q.into()))
    }
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;
    fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&rhs.inv()?))
    }
    /// Integer scaling convenience.
    fn scale_int(&self, n: i64) -> Self {
        self.mul(&Self::from_int(n))
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        if num::Zero::is_zero(self) {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(<Rat as num::One>::one() / self)
        }
    }
}

/// Shorthand for an exact rational literal.
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "rational literal with zero denominator");
    Rat::new(p.into(), q.into())
}

/// Shorthand for an exact integer literal as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub use mpoly::MPoly;
pub use quadext::{LambdaScalar, NearNuField, NuField, QuadExt, TowerScalar};
pub use ratfunc::{MParam, ParamScalar, RatFunc, SpectralBase};
pub use root::{QuadSurd, RootScalar};
pub use upoly::UPoly;

/// Fields containing the rational-function field `ℚ(s)` of the squashing
/// parameter.
///
/// `embed_param` is the canonical embedding.  For generic-parameter fields it
/// is the identity/constant embedding; for `ℚ(√5)` it *specializes* at the
/// nearly-parallel value `s = √5/5` and therefore reports a pole if the
/// rational function is not regular there.
pub trait ParamField: Scalar {
    fn embed_param(p: &ParamScalar) -> Result<Self, ScalarError>;
    /// The squashing parameter itself.
    fn s() -> Self {
        Self::embed_param(&ParamScalar::var()).expect("s embeds in every parameter field")
    }
}

impl ParamField for ParamScalar {
    fn embed_param(p: &ParamScalar) -> Result<Self, ScalarError> {
        Ok(p.clone())
    }
}

impl ParamField for RootScalar {
    fn embed_param(p: &ParamScalar) -> Result<Self, ScalarError> {
        p.specialize_nearly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_ops() {
        let a = rat(2, 3);
        let b = rat(-1, 6);
        assert_eq!(Scalar::add(&a, &b), rat(1, 2));
        assert_eq!(Scalar::mul(&a, &b), rat(-1, 9));
        assert_eq!(a.inv().unwrap(), rat(3, 2));
        assert_eq!(
            <Rat as Scalar>::zero().inv(),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(Rat::from_frac(4, -8), rat(-1, 2));
    }
}

//! Quadratic extensions `K[t]/(t² − q·t − p)`.
//!
//! Two instantiations drive the spectral bookkeeping:
//!
//! * the *square-root tower* `r² = ν + s²` used by the deformation table
//!   (eigenform first-order shifts are `−s ± r`), and
//! * the *eigenvalue quotient ring* `λ² = ν − 2sλ`, the minimal polynomial
//!   of a coexact 3-form eigenvalue over the base eigenvalue `ν`.  Working
//!   in the quotient keeps both branches of the square root honest at once:
//!   an identity proved here holds for either root.
//!
//! The extension data `(p, q)` is supplied by a zero-sized marker type, so
//! ring constants (`zero`, `one`) need no runtime context.

use std::marker::PhantomData;

use super::ratfunc::{ParamScalar, RatFunc, SpectralBase};
use super::root::RootScalar;
use super::{Rat, Scalar, ScalarError};

/// Compile-time description of a quadratic extension of `K`: `t² = p + q·t`.
pub trait ExtSpec<K: Scalar>:
    Clone + Copy + PartialEq + Eq + std::fmt::Debug + Send + Sync + 'static
{
    fn p() -> K;
    fn q() -> K;
    /// Display symbol for the adjoined root.
    fn symbol() -> &'static str;
}

/// `a + b·t` in `K[t]/(t² − q·t − p)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExt<K: Scalar, M: ExtSpec<K>> {
    a: K,
    b: K,
    _marker: PhantomData<M>,
}

impl<K: Scalar, M: ExtSpec<K>> QuadExt<K, M> {
    pub fn new(a: K, b: K) -> Self {
        QuadExt {
            a,
            b,
            _marker: PhantomData,
        }
    }

    pub fn from_base(a: K) -> Self {
        Self::new(a, K::zero())
    }

    /// The adjoined root `t`.
    pub fn root() -> Self {
        Self::new(K::zero(), K::one())
    }

    pub fn base_part(&self) -> &K {
        &self.a
    }

    pub fn root_part(&self) -> &K {
        &self.b
    }

    pub fn is_base(&self) -> bool {
        self.b.is_zero()
    }

    /// Conjugate under the Galois swap of the two roots, `t ↦ q − t`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a.add(&self.b.mul(&M::q())), self.b.neg())
    }

    /// Field norm `x · conj(x) = a² + abq − pb²` (lands in `K`).
    pub fn norm(&self) -> K {
        let ab = self.a.mul(&self.b);
        self.a
            .mul(&self.a)
            .add(&ab.mul(&M::q()))
            .sub(&M::p().mul(&self.b).mul(&self.b))
    }

    /// Evaluate at an explicit root value in a larger ring.
    pub fn eval_at_root<T: Scalar>(&self, t: &T, lift: &impl Fn(&K) -> T) -> T {
        lift(&self.a).add(&lift(&self.b).mul(t))
    }

    pub fn map_base<T: Scalar, N: ExtSpec<T>>(&self, f: impl Fn(&K) -> T) -> QuadExt<T, N> {
        QuadExt::new(f(&self.a), f(&self.b))
    }
}

impl<K: Scalar, M: ExtSpec<K>> std::fmt::Display for QuadExt<K, M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "({})*{}", self.b, M::symbol());
        }
        write!(f, "{} + ({})*{}", self.a, self.b, M::symbol())
    }
}

impl<K: Scalar, M: ExtSpec<K>> Scalar for QuadExt<K, M> {
    fn zero() -> Self {
        Self::new(K::zero(), K::zero())
    }
    fn one() -> Self {
        Self::new(K::one(), K::zero())
    }
    fn from_rat(r: &Rat) -> Self {
        Self::from_base(K::from_rat(r))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::new(self.a.add(&rhs.a), self.b.add(&rhs.b))
    }
    fn neg(&self) -> Self {
        Self::new(self.a.neg(), self.b.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        // (a + bt)(c + dt) = ac + (ad + bc)t + bd·t², t² = p + qt.
        let bd = self.b.mul(&rhs.b);
        let a = self.a.mul(&rhs.a).add(&bd.mul(&M::p()));
        let b = self
            .a
            .mul(&rhs.b)
            .add(&self.b.mul(&rhs.a))
            .add(&bd.mul(&M::q()));
        Self::new(a, b)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        if n.is_zero() {
            return Err(ScalarError::NotInvertible(format!(
                "norm of {self} vanishes in the quadratic extension"
            )));
        }
        let ninv = n.inv()?;
        Ok(self.conjugate().map_base::<K, M>(|c| c.mul(&ninv)))
    }
}

/// Fields containing `ℚ(s)(ν)`: a formal base eigenvalue over a parameter
/// field.
pub trait NuField: super::ParamField {
    fn nu() -> Self;
}

impl NuField for SpectralBase {
    fn nu() -> Self {
        SpectralBase::var()
    }
}

impl super::ParamField for SpectralBase {
    fn embed_param(p: &ParamScalar) -> Result<Self, ScalarError> {
        Ok(SpectralBase::from_param(p))
    }
}

/// `ℚ(√5)(ν)`: the nearly-parallel specialization of the spectral base.
pub type NearNuField = RatFunc<RootScalar, 'ν'>;

impl super::ParamField for NearNuField {
    fn embed_param(p: &ParamScalar) -> Result<Self, ScalarError> {
        Ok(NearNuField::constant(p.specialize_nearly()?))
    }
}

impl NuField for NearNuField {
    fn nu() -> Self {
        NearNuField::var()
    }
}

impl<K: super::ParamField, M: ExtSpec<K>> super::ParamField for QuadExt<K, M> {
    fn embed_param(p: &ParamScalar) -> Result<Self, ScalarError> {
        Ok(Self::from_base(K::embed_param(p)?))
    }
}

/// Marker for the square-root tower `r² = ν + s²`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TowerSpec;

impl<K: NuField> ExtSpec<K> for TowerSpec {
    fn p() -> K {
        let s = K::s();
        K::nu().add(&s.mul(&s))
    }
    fn q() -> K {
        K::zero()
    }
    fn symbol() -> &'static str {
        "r"
    }
}

/// Marker for the eigenvalue quotient `λ² = ν − 2sλ` (i.e. `λ² + 2sλ − ν = 0`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LambdaSpec;

impl<K: NuField> ExtSpec<K> for LambdaSpec {
    fn p() -> K {
        K::nu()
    }
    fn q() -> K {
        K::s().scale_int(-2)
    }
    fn symbol() -> &'static str {
        "λ"
    }
}

/// The square-root tower over the generic spectral base.
pub type TowerScalar = QuadExt<SpectralBase, TowerSpec>;

/// The eigenvalue quotient ring over the generic spectral base.
pub type LambdaScalar = QuadExt<SpectralBase, LambdaSpec>;

impl TowerScalar {
    /// Formal derivative in `ν`, using `r' = r / (2(ν + s²))`.
    pub fn d_nu(&self) -> Self {
        let rsq = <TowerSpec as ExtSpec<SpectralBase>>::p();
        let correction = self
            .b
            .div(&rsq.scale_int(2))
            .expect("ν + s² is a nonzero rational function");
        Self::new(self.a.derivative(), self.b.derivative().add(&correction))
    }
}

impl LambdaScalar {
    /// The eigenvalue root itself.
    pub fn lambda() -> Self {
        Self::root()
    }

    /// Substitute an explicit branch value for `λ` (e.g. `−s ± r` in the
    /// tower, or a rational function at special `ν`).
    pub fn eval_branch<T: Scalar>(&self, lam: &T, lift: &impl Fn(&SpectralBase) -> T) -> T {
        self.eval_at_root(lam, lift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ParamField;

    fn s_base() -> SpectralBase {
        SpectralBase::from_param(&ParamScalar::var())
    }

    #[test]
    fn lambda_satisfies_its_minimal_polynomial() {
        // λ² + 2sλ − ν = 0.
        let l = LambdaScalar::lambda();
        let expr = l
            .mul(&l)
            .add(&l.mul(&LambdaScalar::from_base(s_base().scale_int(2))))
            .sub(&LambdaScalar::from_base(SpectralBase::nu()));
        assert!(expr.is_zero());
    }

    #[test]
    fn lambda_inverse_and_norm() {
        // norm(λ) = λ·(−2s − λ) = −(λ² + 2sλ) = −ν.
        let l = LambdaScalar::lambda();
        assert_eq!(l.norm(), SpectralBase::nu().neg());
        let li = l.inv().unwrap();
        assert!(l.mul(&li).is_one());
        // The element support case: (2 + sλ) has norm 4 − 4s² − s²ν,
        // which vanishes only on the pole line of the eigenvalue embedding.
        let s = LambdaScalar::from_base(s_base());
        let x = LambdaScalar::from_int(2).add(&s.mul(&l));
        let s2 = s_base().mul(&s_base());
        let expect = SpectralBase::from_int(4)
            .sub(&s2.scale_int(4))
            .sub(&s2.mul(&SpectralBase::nu()));
        assert_eq!(x.norm(), expect);
        assert!(x.inv().is_ok());
    }

    #[test]
    fn tower_square_and_derivative() {
        let r = TowerScalar::root();
        let rsq = r.mul(&r);
        let s2 = s_base().mul(&s_base());
        assert_eq!(rsq, TowerScalar::from_base(SpectralBase::nu().add(&s2)));
        // d/dν (r) = r/(2(ν+s²)): check via d/dν(r²) = 1.
        let d = r.d_nu();
        // 2 r · r' should be 1.
        let twice = r.mul(&d).scale_int(2);
        assert!(twice.is_one());
    }

    #[test]
    fn conjugation_swaps_branches() {
        // conj(λ) = −2s − λ; the two branch values are −s ± r with product
        // s² − r² = −ν and sum −2s.
        let l = LambdaScalar::lambda();
        let c = l.conjugate();
        assert_eq!(l.add(&c), LambdaScalar::from_base(s_base().scale_int(-2)));
        assert_eq!(
            l.mul(&c),
            LambdaScalar::from_base(SpectralBase::nu().neg())
        );
    }

    #[test]
    fn nearly_nu_field_embeds_parameters() {
        // 12s ↦ (12/5)√5 as a constant rational function of ν.
        let x = NearNuField::embed_param(&ParamScalar::var().scale_int(12)).unwrap();
        assert!(x.is_polynomial());
        assert_eq!(
            x.as_poly().unwrap().coeff(0),
            RootScalar::new(num::Zero::zero(), crate::scalar::rat(12, 5))
        );
    }
}

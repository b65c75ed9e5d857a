//! Rational functions over an exact field, kept in canonical form.
//!
//! The canonical representative has monic denominator and coprime
//! numerator/denominator, so derived equality is mathematical equality.
//! The variable is tracked as a const-generic character: `ℚ(s)` for the
//! squashing parameter, `ℚ(s)(ν)` for a formal base eigenvalue, `ℚ(s)(m)`
//! for a formal vertical weight.

use super::root::RootScalar;
use super::upoly::UPoly;
use super::{Rat, Scalar, ScalarError};

/// `num/den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc<K: Scalar, const VAR: char = 's'> {
    num: UPoly<K>,
    den: UPoly<K>,
}

/// Rational functions `ℚ(s)` of the squashing parameter.
pub type ParamScalar = RatFunc<Rat, 's'>;

/// Rational functions in a formal base-Laplacian eigenvalue over `ℚ(s)`.
pub type SpectralBase = RatFunc<ParamScalar, 'ν'>;

/// Rational functions in a formal vertical Fourier weight over `ℚ(s)`.
pub type MParam = RatFunc<ParamScalar, 'm'>;

impl<K: Scalar, const VAR: char> RatFunc<K, VAR> {
    /// Build `num/den`, canonicalizing; `den` must be nonzero.
    pub fn new(num: UPoly<K>, den: UPoly<K>) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        } else {
            (num, den)
        };
        let lead_inv = den.leading().unwrap().inv()?;
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(num: UPoly<K>) -> Self {
        RatFunc {
            num,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_poly(UPoly::var())
    }

    /// `c · x^d`.
    pub fn monomial(c: K, d: usize) -> Self {
        Self::from_poly(UPoly::monomial(c, d))
    }

    pub fn num(&self) -> &UPoly<K> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<K> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The polynomial part, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&UPoly<K>> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Formal derivative `(n/d)' = (n'd − nd')/d²`.
    pub fn derivative(&self) -> Self {
        let n = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        Self::new(n, self.den.mul(&self.den)).expect("derivative denominator is nonzero")
    }

    /// Specialize the variable to a point of a (possibly larger) field.
    ///
    /// Because the representative is reduced, a vanishing denominator is a
    /// genuine pole and is reported as such.
    pub fn specialize<T: Scalar>(&self, x: &T, lift: &impl Fn(&K) -> T) -> Result<T, ScalarError> {
        let d = self.den.eval(x, lift);
        if d.is_zero() {
            return Err(ScalarError::Pole(format!(
                "denominator {} vanishes at specialization point",
                self.den.render(&VAR.to_string())
            )));
        }
        self.num.eval(x, lift).div(&d)
    }

    pub fn render(&self) -> String {
        let v = VAR.to_string();
        if self.den.degree() == Some(0) {
            self.num.render(&v)
        } else {
            format!("({})/({})", self.num.render(&v), self.den.render(&v))
        }
    }
}

impl<K: Scalar, const VAR: char> std::fmt::Display for RatFunc<K, VAR> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

impl<K: Scalar, const VAR: char> Scalar for RatFunc<K, VAR> {
    fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UPoly::one())
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(K::from_rat(r))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::new(num, self.den.mul(&rhs.den)).expect("sum denominator is nonzero")
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("product denominator is nonzero")
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl ParamScalar {
    /// `s^d` with rational coefficient `p/q`.
    pub fn s_monomial(p: i64, q: i64, d: usize) -> Self {
        Self::monomial(Rat::new(p.into(), q.into()), d)
    }

    /// Specialize at the nearly-parallel parameter `s = √5/5` (so `s² = 1/5`).
    ///
    /// Reduced representatives make pole detection exact: a reduced rational
    /// function is singular at `s = √5/5` iff its denominator vanishes there.
    pub fn specialize_nearly(&self) -> Result<RootScalar, ScalarError> {
        self.specialize(&RootScalar::sqrt5_over5(), &|c: &Rat| {
            RootScalar::from_rat(c)
        })
    }

    /// Specialize at a rational value of `s`.
    pub fn specialize_rat(&self, x: &Rat) -> Result<Rat, ScalarError> {
        self.specialize(x, &|c: &Rat| c.clone())
    }
}

impl SpectralBase {
    /// The formal eigenvalue `ν`.
    pub fn nu() -> Self {
        Self::var()
    }

    /// Embed a parameter scalar as a constant.
    pub fn from_param(p: &ParamScalar) -> Self {
        Self::constant(p.clone())
    }

    /// Specialize `ν` to an element of `ℚ(s)`.
    pub fn specialize_nu(&self, nu: &ParamScalar) -> Result<ParamScalar, ScalarError> {
        self.specialize(nu, &|c: &ParamScalar| c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    fn s() -> ParamScalar {
        ParamScalar::var()
    }

    #[test]
    fn canonical_form_and_field_ops() {
        // (s² − 1)/(s − 1) canonicalizes to s + 1.
        let num = UPoly::new(vec![rint(-1), rint(0), rint(1)]);
        let den = UPoly::new(vec![rint(-1), rint(1)]);
        let f = ParamScalar::new(num, den).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f, s().add(&ParamScalar::one()));

        // 1/s² · s² = 1.
        let s2 = s().mul(&s());
        assert_eq!(s2.inv().unwrap().mul(&s2), ParamScalar::one());

        // 2 + 1/s² = (2s² + 1)/s².
        let expr = ParamScalar::from_int(2).add(&s2.inv().unwrap());
        let expect = ParamScalar::new(
            UPoly::new(vec![rint(1), rint(0), rint(2)]),
            UPoly::new(vec![rint(0), rint(0), rint(1)]),
        )
        .unwrap();
        assert_eq!(expr, expect);
    }

    #[test]
    fn denominators_stay_monic() {
        // (1)/(2s + 2) -> num 1/2 /(s+1).
        let f = ParamScalar::new(
            UPoly::one(),
            UPoly::new(vec![rint(2), rint(2)]),
        )
        .unwrap();
        assert_eq!(f.den().leading().unwrap(), &rint(1));
        assert_eq!(f.num().coeff(0), rat(1, 2));
    }

    #[test]
    fn nearly_specialization() {
        // 1/s² − 5 → 0 at s² = 1/5.
        let s2 = s().mul(&s());
        let expr = s2.inv().unwrap().sub(&ParamScalar::from_int(5));
        assert!(expr.specialize_nearly().unwrap().is_zero());

        // 12s → (12/5)√5.
        let twelve_s = s().scale_int(12);
        assert_eq!(
            twelve_s.specialize_nearly().unwrap(),
            RootScalar::new(rint(0), rat(12, 5))
        );

        // 1/(5s² − 1) has a pole at the nearly value.
        let den = s2.scale_int(5).sub(&ParamScalar::one());
        let pole = den.inv().unwrap();
        assert!(matches!(
            pole.specialize_nearly(),
            Err(ScalarError::Pole(_))
        ));
        // ... but (5s² − 1)/(5s² − 1) canonicalizes to 1 first, so it is regular.
        assert!(den.div(&den).unwrap().specialize_nearly().unwrap().is_one());
    }

    #[test]
    fn spectral_base_specializes() {
        // (ν − 16)/(ν + s²) at ν = 24: 8/(24 + s²).
        let nu = SpectralBase::nu();
        let f = nu
            .sub(&SpectralBase::from_int(16))
            .div(&nu.add(&SpectralBase::from_param(&s().mul(&s()))))
            .unwrap();
        let at24 = f.specialize_nu(&ParamScalar::from_int(24)).unwrap();
        let expect = ParamScalar::from_int(8)
            .div(&ParamScalar::from_int(24).add(&s().mul(&s())))
            .unwrap();
        assert_eq!(at24, expect);
    }

    #[test]
    fn rendering_uses_variable_names() {
        let f = s().mul(&s()).sub(&ParamScalar::from_frac(1, 5));
        assert_eq!(f.render(), "s^2 + (-1/5)");
        assert_eq!(SpectralBase::nu().render(), "ν");
    }
}

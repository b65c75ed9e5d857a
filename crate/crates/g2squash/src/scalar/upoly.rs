//! Dense univariate polynomials over an exact scalar ring.
//!
//! Coefficients ascend in degree and never end in a zero, so equality is
//! structural.  Division, gcd and inversion-by-units require the coefficient
//! ring to be a field; all field-dependent methods return typed errors.

use super::{Scalar, ScalarError};

/// A univariate polynomial; `coeffs[k]` is the degree-`k` coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly<K: Scalar> {
    coeffs: Vec<K>,
}

impl<K: Scalar> UPoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn var() -> Self {
        Self::new(vec![K::zero(), K::one()])
    }

    /// `c · x^d`.
    pub fn monomial(c: K, d: usize) -> Self {
        let mut v = vec![K::zero(); d];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale_int(k as i64))
                .collect(),
        )
    }

    /// Evaluate at `x` in a (possibly larger) ring, lifting coefficients
    /// through `lift`.
    pub fn eval<T: Scalar>(&self, x: &T, lift: &impl Fn(&K) -> T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&lift(c));
        }
        acc
    }

    /// Evaluate at a point of the coefficient ring itself.
    pub fn eval_k(&self, x: &K) -> K {
        self.eval(x, &|c: &K| c.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&K) -> T) -> UPoly<T> {
        UPoly::new(self.coeffs.iter().map(|c| f(c)).collect())
    }

    /// Euclidean division `self = q·rhs + r`; requires invertible leading
    /// coefficient of `rhs` (true over a field for nonzero `rhs`).
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self), ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let lead_inv = rhs.leading().unwrap().inv()?;
        let d = rhs.degree().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![K::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let c = rem.leading().unwrap().mul(&lead_inv);
            let shift = rd - d;
            quo[shift] = quo[shift].add(&c);
            rem = rem.sub(&rhs.mul(&Self::monomial(c, shift)));
        }
        Ok((Self::new(quo), rem))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let (q, r) = self.divrem(rhs)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ScalarError::NotInvertible(format!(
                "inexact polynomial division (remainder degree {:?})",
                r.degree()
            )))
        }
    }

    /// Monic gcd over a field; `gcd(0,0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn make_monic(&self) -> Result<Self, ScalarError> {
        match self.leading() {
            None => Ok(Self::zero()),
            Some(l) => Ok(self.scale(&l.inv()?)),
        }
    }

    /// Render with an explicit variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            // Parenthesize anything that is not a plain non-negative integer,
            // so rendered terms re-parse unambiguously.
            let wrapped = if cs.chars().all(|ch| ch.is_ascii_digit()) {
                cs.clone()
            } else {
                format!("({cs})")
            };
            let part = match k {
                0 => wrapped,
                1 if c.is_one() => var.to_string(),
                1 => format!("{wrapped}*{var}"),
                _ if c.is_one() => format!("{var}^{k}"),
                _ => format!("{wrapped}*{var}^{k}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint, Rat};

    fn p(cs: &[i64]) -> UPoly<Rat> {
        UPoly::new(cs.iter().map(|&c| rint(c)).collect())
    }

    #[test]
    fn arithmetic_and_normalization() {
        assert_eq!(p(&[1, 0, 0]), p(&[1]));
        assert_eq!(p(&[0]), UPoly::zero());
        assert_eq!(p(&[1, 2]).mul(&p(&[3, 4])), p(&[3, 10, 8]));
        assert_eq!(p(&[1, 2]).sub(&p(&[1, 2])), UPoly::zero());
        assert_eq!(p(&[0, 0, 7]).degree(), Some(2));
        assert_eq!(UPoly::<Rat>::zero().degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (x² − 1) = (x + 1)(x − 1)
        let f = p(&[-1, 0, 1]);
        let g = p(&[1, 1]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        // gcd(x² − 1, x² + 2x + 1) = x + 1, monic.
        let h = p(&[1, 2, 1]);
        assert_eq!(f.gcd(&h).unwrap(), p(&[1, 1]));
        assert!(f.exact_div(&p(&[2, 2])).is_ok());
        assert!(f.exact_div(&p(&[1, 0, 0, 1])).is_err());
    }

    #[test]
    fn eval_and_derivative() {
        let f = p(&[1, -3, 2]); // 2x² − 3x + 1
        assert_eq!(f.eval_k(&rint(2)), rint(3));
        assert_eq!(f.eval_k(&rat(1, 2)), rint(0));
        assert_eq!(f.derivative(), p(&[-3, 4]));
    }

    #[test]
    fn rendering() {
        let f = p(&[1, -3, 2]);
        assert_eq!(f.render("s"), "2*s^2 + (-3)*s + 1");
        assert_eq!(UPoly::<Rat>::zero().render("s"), "0");
        assert_eq!(p(&[0, 1]).render("ν"), "ν");
    }
}

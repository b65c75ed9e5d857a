//! Exterior forms on the model fiber with exact coefficients.
//!
//! A [`Form`] is a finite map from basis monomial masks to coefficients in
//! any [`Scalar`] ring — plain rationals for the model itself, multivariate
//! polynomials for generic-section and jet computations.  All operations
//! (wedge, Hodge stars, frame contractions, inner products) are exact and
//! deterministic.

use std::collections::BTreeMap;

use super::basis;
use crate::scalar::Scalar;

/// An exterior form: monomial mask ↦ coefficient (no zero entries stored).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form<C: Scalar> {
    terms: BTreeMap<u8, C>,
}

impl<C: Scalar> Form<C> {
    pub fn zero() -> Self {
        Form {
            terms: BTreeMap::new(),
        }
    }

    /// The constant function 1 (degree-0 form).
    pub fn one() -> Self {
        Self::term(0, C::one())
    }

    pub fn term(mask: u8, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mask, c);
        }
        Form { terms }
    }

    /// Basis monomial with coefficient 1.
    pub fn monomial(mask: u8) -> Self {
        Self::term(mask, C::one())
    }

    /// ±1 basis monomial.
    pub fn signed_monomial(mask: u8, sign: i8) -> Self {
        match sign {
            0 => Self::zero(),
            s if s > 0 => Self::monomial(mask),
            _ => Self::term(mask, C::one().neg()),
        }
    }

    pub fn from_terms(entries: impl IntoIterator<Item = (u8, C)>) -> Self {
        let mut f = Self::zero();
        for (m, c) in entries {
            f.add_term(m, &c);
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u8, &C)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mask: u8) -> C {
        self.terms.get(&mask).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, mask: u8, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Form {
            terms: self.terms.iter().map(|(&m, c)| (m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, k) in self.terms() {
            out.add_term(m, &k.mul(c));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&C::from_int(n))
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&C) -> T) -> Form<T> {
        let mut out = Form::zero();
        for (m, c) in self.terms() {
            out.add_term(m, &f(c));
        }
        out
    }

    /// Exterior product.
    pub fn wedge(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                let s = basis::wedge_sign(ma, mb);
                if s == 0 {
                    continue;
                }
                let mut c = ca.mul(cb);
                if s < 0 {
                    c = c.neg();
                }
                out.add_term(ma | mb, &c);
            }
        }
        out
    }

    /// 7-dimensional Hodge star (orthonormal oriented frame).
    pub fn star7(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            let sign = basis::star7_sign(m);
            let mut v = c.clone();
            if sign < 0 {
                v = v.neg();
            }
            out.add_term(basis::VOLUME_MASK & !m, &v);
        }
        out
    }

    /// Horizontal (4-dimensional) Hodge star; requires a purely horizontal
    /// form.
    pub fn star_h(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            assert!(
                basis::is_horizontal(m),
                "horizontal star applied to a form with vertical factors"
            );
            let sign = basis::star_h_sign(m);
            let mut v = c.clone();
            if sign < 0 {
                v = v.neg();
            }
            out.add_term(basis::HORIZONTAL_MASK & !m, &v);
        }
        out
    }

    /// Interior product with a frame vector (index `0..7`).
    pub fn contract_frame(&self, i: u8) -> Self {
        let bit = 1u8 << i;
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            if m & bit == 0 {
                continue;
            }
            let sign = basis::extraction_sign(m, i);
            let mut v = c.clone();
            if sign < 0 {
                v = v.neg();
            }
            out.add_term(m & !bit, &v);
        }
        out
    }

    /// Interior product with a vector given by frame components.
    pub fn contract(&self, vector: &[C; 7]) -> Self {
        let mut out = Self::zero();
        for (i, comp) in vector.iter().enumerate() {
            if comp.is_zero() {
                continue;
            }
            out = out.add(&self.contract_frame(i as u8).scale(comp));
        }
        out
    }

    /// Frame inner product (the frame is orthonormal for the squashed
    /// metric, so this is a plain coefficient pairing).
    pub fn inner(&self, rhs: &Self) -> C {
        let mut acc = C::zero();
        for (m, c) in self.terms() {
            let d = rhs.coeff(m);
            if !d.is_zero() {
                acc = acc.add(&c.mul(&d));
            }
        }
        acc
    }

    /// Exterior degree if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut deg = None;
        for (m, _) in self.terms() {
            let d = basis::degree(m);
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Is every monomial purely horizontal?
    pub fn is_horizontal(&self) -> bool {
        self.terms().all(|(m, _)| basis::is_horizontal(m))
    }

    /// Restrict to terms whose vertical part equals `zmask`, returning the
    /// horizontal remainders (vertical factor stripped, no sign change: the
    /// vertical factor sits in front of the ascending monomial).
    pub fn z_slice(&self, zmask: u8) -> Self {
        debug_assert_eq!(zmask & !basis::VERTICAL_MASK, 0);
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            if m & basis::VERTICAL_MASK == zmask {
                out.add_term(m & basis::HORIZONTAL_MASK, c);
            }
        }
        out
    }

    /// The distinct vertical parts occurring in this form.
    pub fn z_masks(&self) -> Vec<u8> {
        let mut zs: Vec<u8> = self
            .terms()
            .map(|(m, _)| m & basis::VERTICAL_MASK)
            .collect();
        zs.sort_unstable();
        zs.dedup();
        zs
    }

    /// Coefficient-vector over an explicit monomial basis.
    pub fn to_vec(&self, masks: &[u8]) -> Vec<C> {
        masks.iter().map(|&m| self.coeff(m)).collect()
    }

    pub fn from_vec(masks: &[u8], coeffs: &[C]) -> Self {
        assert_eq!(masks.len(), coeffs.len());
        Self::from_terms(masks.iter().copied().zip(coeffs.iter().cloned()))
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .map(|(m, c)| {
                let cs = c.to_string();
                let coeff = if cs.chars().all(|ch| ch.is_ascii_digit()) {
                    cs
                } else {
                    format!("({cs})")
                };
                if m == 0 {
                    coeff
                } else if c.is_one() {
                    basis::monomial_label(m)
                } else {
                    format!("{}*{}", coeff, basis::monomial_label(m))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<C: Scalar> std::fmt::Display for Form<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Wedge a list of frame covectors in the given order (handy in tests).
pub fn covector_product<C: Scalar>(indices: &[u8]) -> Form<C> {
    let mut acc = Form::one();
    for &i in indices {
        acc = acc.wedge(&Form::monomial(1 << i));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rint, Rat};
    use basis::{e_mask, z_mask};

    type F = Form<Rat>;

    #[test]
    fn wedge_is_graded_commutative() {
        let e1 = F::monomial(e_mask(1));
        let e2 = F::monomial(e_mask(2));
        let z1 = F::monomial(z_mask(1));
        assert_eq!(e1.wedge(&e2), e2.wedge(&e1).neg());
        assert!(e1.wedge(&e1).is_zero());
        // (Z1∧e1)∧(Z2∧e2) = +Z1∧Z2∧e1∧e2 ... check associativity/sign vs
        // direct product.
        let a = z1.wedge(&e1);
        let b = F::monomial(z_mask(2)).wedge(&e2);
        let direct = covector_product::<Rat>(&[0, 3, 1, 4]);
        assert_eq!(a.wedge(&b), direct);
        // Even-degree forms commute.
        assert_eq!(a.wedge(&b), b.wedge(&a));
    }

    #[test]
    fn stars_involute() {
        let vol_h = F::monomial(basis::HORIZONTAL_MASK);
        assert_eq!(F::one().star_h(), vol_h);
        assert_eq!(vol_h.star_h(), F::one());
        let e13 = F::monomial(e_mask(1) | e_mask(3));
        // ⋆(e1∧e3) = −e2∧e4.
        assert_eq!(
            e13.star_h(),
            F::monomial(e_mask(2) | e_mask(4)).neg()
        );
        // 7d star squares to the identity.
        let sample = F::monomial(z_mask(2) | e_mask(1) | e_mask(4)).scale(&rint(3));
        assert_eq!(sample.star7().star7(), sample);
        assert_eq!(F::one().star7(), F::monomial(basis::VOLUME_MASK));
    }

    #[test]
    fn contractions() {
        // E1 ⌟ (e1∧e2) = e2; E2 ⌟ (e1∧e2) = −e1.
        let e12 = F::monomial(e_mask(1) | e_mask(2));
        assert_eq!(e12.contract_frame(3), F::monomial(e_mask(2)));
        assert_eq!(e12.contract_frame(4), F::monomial(e_mask(1)).neg());
        // Contraction is an antiderivation: X⌟(α∧β) over sample.
        let z12 = F::monomial(z_mask(1) | z_mask(2));
        let prod = z12.wedge(&e12);
        let lhs = prod.contract_frame(0);
        let rhs = z12
            .contract_frame(0)
            .wedge(&e12)
            .add(&z12.wedge(&e12.contract_frame(0)).scale(&rint(1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn slices_and_inner_products() {
        let mix = F::monomial(z_mask(1) | e_mask(2)).add(&F::monomial(e_mask(2)).scale(&rint(5)));
        assert_eq!(mix.z_slice(z_mask(1)), F::monomial(e_mask(2)));
        assert_eq!(mix.z_slice(0), F::monomial(e_mask(2)).scale(&rint(5)));
        assert_eq!(mix.z_masks(), vec![0, z_mask(1)]);
        assert_eq!(mix.inner(&mix), rint(26));
        assert_eq!(mix.degree(), None);
        assert_eq!(mix.z_slice(0).degree(), Some(1));
    }

    #[test]
    fn rendering() {
        let f = F::monomial(z_mask(1) | e_mask(1)).scale(&rint(-2));
        assert_eq!(f.render(), "(-2)*Z1^e1");
        assert_eq!(F::zero().render(), "0");
    }
}

//! Sparse multivariate polynomials over an exact scalar ring.
//!
//! Variables are opaque `u32` identifiers assigned by the caller (jet atom
//! components, generic-section coordinates, deformation parameters).
//! Monomials are sorted variable–exponent lists, terms live in a `BTreeMap`,
//! so iteration order — and hence every rendered report — is deterministic.

use std::collections::{BTreeMap, BTreeSet};

use super::{Rat, Scalar, ScalarError};

/// A monomial: sorted `(variable, exponent)` pairs, exponents ≥ 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Mono(Vec<(u32, u32)>);

impl Mono {
    pub fn unit() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Mono(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable_by_key(|&(v, _)| v);
        for w in pairs.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate variable in monomial");
        }
        Mono(pairs)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent_of(&self, v: u32) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn mul(&self, rhs: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < rhs.0.len() {
            match self.0[i].0.cmp(&rhs.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(rhs.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + rhs.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&rhs.0[j..]);
        Mono(out)
    }

    /// Split into the sub-monomial over variables satisfying `pred` and the
    /// rest.
    pub fn split(&self, pred: impl Fn(u32) -> bool) -> (Mono, Mono) {
        let (sel, rest): (Vec<_>, Vec<_>) = self.0.iter().copied().partition(|&(v, _)| pred(v));
        (Mono(sel), Mono(rest))
    }

    pub fn render(&self, namer: &impl Fn(u32) -> String) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    namer(v)
                } else {
                    format!("{}^{}", namer(v), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A sparse multivariate polynomial; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly<K: Scalar> {
    terms: BTreeMap<Mono, K>,
}

impl<K: Scalar> MPoly<K> {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_k(c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(), c);
        }
        MPoly { terms }
    }

    pub fn one() -> Self {
        Self::from_k(K::one())
    }

    pub fn var(v: u32) -> Self {
        Self::term(Mono::var(v), K::one())
    }

    pub fn term(m: Mono, c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Mono) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> K {
        self.coeff(&Mono::unit())
    }

    /// If the polynomial is a constant, return it.
    pub fn as_constant(&self) -> Option<K> {
        if self.terms.is_empty() {
            return Some(K::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::unit()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn add_term(&mut self, m: Mono, c: &K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&K) -> T) -> MPoly<T> {
        let mut out = MPoly::zero();
        for (m, c) in self.terms.iter() {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// Total degree of the highest term (None for zero).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: u32) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent_of(v))
            .max()
            .unwrap_or(0)
    }

    /// All variables that occur.
    pub fn vars(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect()
    }

    /// Maximum degree in any single variable — 1 means "atom-linear".
    pub fn max_var_degree(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(_, e)| e))
            .max()
            .unwrap_or(0)
    }

    /// Substitute a polynomial for a variable.
    pub fn substitute(&self, v: u32, value: &MPoly<K>) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms.iter() {
            let e = m.exponent_of(v);
            if e == 0 {
                out.add_term(m.clone(), c);
                continue;
            }
            let rest = Mono(
                m.pairs()
                    .iter()
                    .filter(|&&(w, _)| w != v)
                    .copied()
                    .collect(),
            );
            let mut powed = MPoly::one();
            for _ in 0..e {
                powed = powed.mul(value);
            }
            let piece = powed.mul(&MPoly::term(rest, c.clone()));
            out = out.add(&piece);
        }
        out
    }

    /// Evaluate each variable through `point`; variables not covered stay
    /// formal only if they do not occur (otherwise this panics).
    pub fn eval(&self, point: &impl Fn(u32) -> K) -> K {
        let mut acc = K::zero();
        for (m, c) in self.terms.iter() {
            let mut term = c.clone();
            for &(v, e) in m.pairs() {
                let x = point(v);
                for _ in 0..e {
                    term = term.mul(&x);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Group terms by the sub-monomial over `pred`-variables: returns the
    /// map  selected-monomial ↦ polynomial in the remaining variables.
    pub fn partition(&self, pred: impl Fn(u32) -> bool) -> BTreeMap<Mono, MPoly<K>> {
        let mut out: BTreeMap<Mono, MPoly<K>> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            let (sel, rest) = m.split(&pred);
            out.entry(sel)
                .or_insert_with(MPoly::zero)
                .add_term(rest, c);
        }
        out
    }

    /// Coefficient of `var^e` viewed as a polynomial in the other variables.
    pub fn coeff_of_power(&self, v: u32, e: u32) -> MPoly<K> {
        let mut out = MPoly::zero();
        for (m, c) in self.terms.iter() {
            if m.exponent_of(v) == e {
                let rest = Mono(
                    m.pairs()
                        .iter()
                        .filter(|&&(w, _)| w != v)
                        .copied()
                        .collect(),
                );
                out.add_term(rest, c);
            }
        }
        out
    }

    pub fn render(&self, namer: &impl Fn(u32) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                let cs = c.to_string();
                let coeff = if cs.chars().all(|ch| ch.is_ascii_digit()) {
                    cs
                } else {
                    format!("({cs})")
                };
                if m.is_unit() {
                    coeff
                } else if c.is_one() {
                    m.render(namer)
                } else {
                    format!("{}*{}", coeff, m.render(namer))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<K: Scalar> std::fmt::Display for MPoly<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render(&|v| format!("x{v}")))
    }
}

impl<K: Scalar> Scalar for MPoly<K> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn from_rat(r: &Rat) -> Self {
        MPoly::from_k(K::from_rat(r))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        MPoly::add(self, rhs)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MPoly::mul(self, rhs)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        match self.as_constant() {
            Some(c) => Ok(MPoly::from_k(c.inv()?)),
            None => Err(ScalarError::NotInvertible(
                "non-constant multivariate polynomial".to_string(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rint, Rat};

    fn x() -> MPoly<Rat> {
        MPoly::var(0)
    }
    fn y() -> MPoly<Rat> {
        MPoly::var(1)
    }

    #[test]
    fn ring_ops() {
        // (x + y)² = x² + 2xy + y².
        let s = x().add(&y());
        let sq = s.mul(&s);
        let expect = x()
            .mul(&x())
            .add(&x().mul(&y()).scale(&rint(2)))
            .add(&y().mul(&y()));
        assert_eq!(sq, expect);
        assert!(sq.sub(&expect).is_zero());
        assert_eq!(sq.total_degree(), Some(2));
        assert_eq!(sq.degree_in(0), 2);
        assert_eq!(sq.max_var_degree(), 2);
    }

    #[test]
    fn substitution_and_eval() {
        // f = x²y; substitute x ↦ y + 1: (y+1)²y = y³ + 2y² + y.
        let f = x().mul(&x()).mul(&y());
        let g = f.substitute(0, &y().add(&MPoly::one()));
        let expect = y()
            .mul(&y())
            .mul(&y())
            .add(&y().mul(&y()).scale(&rint(2)))
            .add(&y());
        assert_eq!(g, expect);
        let v = g.eval(&|var| if var == 1 { rint(2) } else { unreachable!() });
        assert_eq!(v, rint(8 + 8 + 2));
    }

    #[test]
    fn partitions() {
        // f = a·x + b·y + x, partition by {a, b} (vars ≥ 10).
        let a = MPoly::<Rat>::var(10);
        let b = MPoly::<Rat>::var(11);
        let f = a.mul(&x()).add(&b.mul(&y())).add(&x());
        let parts = f.partition(|v| v >= 10);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[&Mono::unit()], x());
        assert_eq!(parts[&Mono::var(10)], x());
        assert_eq!(parts[&Mono::var(11)], y());
        assert_eq!(f.coeff_of_power(0, 1), a.add(&MPoly::one()));
    }

    #[test]
    fn rendering_is_deterministic() {
        let f = x().mul(&y()).scale(&Rat::new(3.into(), 2.into())).add(&y());
        assert_eq!(
            f.render(&|v| ["x", "y"][v as usize].to_string()),
            "(3/2)*x*y + y"
        );
    }
}

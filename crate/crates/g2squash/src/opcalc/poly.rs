//! Formal sums of scalar-weighted operator words.
//!
//! A word is a composition `a ∘ b ∘ c` of [`OpSymbol`]s, stored outermost
//! first, so the rightmost symbol touches the argument.  An [`OpPoly`]
//! collects words with coefficients from an exact scalar field, all sharing
//! one domain and one codomain; addition and composition are space-checked.
//! The empty word is the identity.
//!
//! Polynomials are kept with like words merged and zero coefficients
//! dropped, so `is_zero` and structural equality are mathematically
//! meaningful *relative to the currently applied rules*: two presentations
//! of the same operator only compare equal after normalization against a
//! rule set (see [`crate::opcalc::rewrite`]).

use std::collections::BTreeMap;
use std::fmt;

use super::symbol::{OpSymbol, Space};
use super::OpError;
use crate::scalar::Scalar;

/// Codomain of a symbol word applied to `dom`, or `None` if some step is
/// signature-invalid.
pub fn word_cod(syms: &[OpSymbol], dom: Space) -> Option<Space> {
    let mut cur = dom;
    for sym in syms.iter().rev() {
        cur = sym.cod(cur)?;
    }
    Some(cur)
}

/// Domain seen by the symbol at position `i` (counting from the outermost
/// end), i.e. the codomain of the suffix to its right.
pub fn local_dom(syms: &[OpSymbol], dom: Space, i: usize) -> Option<Space> {
    word_cod(&syms[i + 1..], dom)
}

/// A formal sum `Σ c_w · w` of operator words `dom → cod`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpPoly<K: Scalar> {
    dom: Space,
    cod: Space,
    terms: BTreeMap<Vec<OpSymbol>, K>,
}

impl<K: Scalar> OpPoly<K> {
    pub fn zero(dom: Space, cod: Space) -> Self {
        OpPoly { dom, cod, terms: BTreeMap::new() }
    }

    /// The identity operator on `space` (the empty word).
    pub fn identity(space: Space) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), K::one());
        OpPoly { dom: space, cod: space, terms }
    }

    /// A single symbol as an operator with the given domain.
    pub fn symbol(sym: OpSymbol, dom: Space) -> Result<Self, OpError> {
        Self::word(&[sym], dom)
    }

    /// A single word with coefficient one.
    pub fn word(syms: &[OpSymbol], dom: Space) -> Result<Self, OpError> {
        Self::term(K::one(), syms, dom)
    }

    /// A single scalar-weighted word.
    pub fn term(c: K, syms: &[OpSymbol], dom: Space) -> Result<Self, OpError> {
        let cod = word_cod(syms, dom).ok_or_else(|| OpError::Signature {
            word: render_word(syms),
            dom: dom.to_string(),
        })?;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(syms.to_vec(), c);
        }
        Ok(OpPoly { dom, cod, terms })
    }

    pub fn dom(&self) -> Space {
        self.dom
    }

    pub fn cod(&self) -> Space {
        self.cod
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[OpSymbol], &K)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, word: Vec<OpSymbol>, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&word) {
            None => {
                self.terms.insert(word, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(word, sum);
                }
            }
        }
    }

    fn assert_same_spaces(&self, other: &Self) {
        assert!(
            self.dom == other.dom && self.cod == other.cod,
            "operator space mismatch: {}→{} vs {}→{}",
            self.dom,
            self.cod,
            other.dom,
            other.cod
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_spaces(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale_int(-1)
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Self::zero(self.dom, self.cod);
        if c.is_zero() {
            return out;
        }
        for (w, k) in &self.terms {
            out.insert(w.clone(), k.mul(c));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&K::from_int(n))
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self, OpError> {
        if other.cod != self.dom {
            return Err(OpError::Compose {
                outer_dom: self.dom.to_string(),
                inner_cod: other.cod.to_string(),
            });
        }
        let mut out = Self::zero(other.dom, self.cod);
        for (wl, cl) in &self.terms {
            for (wr, cr) in &other.terms {
                let mut w = wl.clone();
                w.extend_from_slice(wr);
                out.insert(w, cl.mul(cr));
            }
        }
        Ok(out)
    }

    /// Formal adjoint: words reversed, each symbol replaced by its adjoint
    /// at its local degree, signs accumulated.  Spaces swap.
    pub fn adjoint(&self) -> Result<Self, OpError> {
        let mut out = Self::zero(self.cod, self.dom);
        for (w, c) in &self.terms {
            let mut rev = Vec::with_capacity(w.len());
            let mut sign = 1i64;
            // Walk from the argument end so each symbol sees its domain.
            for (i, sym) in w.iter().enumerate().rev() {
                let dom = local_dom(w, self.dom, i).expect("stored word is signature-valid");
                let (s, adj) = sym.adjoint(dom).ok_or_else(|| OpError::NoAdjoint {
                    sym: sym.render(),
                    dom: dom.to_string(),
                })?;
                sign *= s;
                rev.push(adj);
            }
            out.insert(rev, c.scale_int(sign));
        }
        Ok(out)
    }

    /// Render a concise human-readable form for reports and errors.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            let word = if w.is_empty() { "1".into() } else { render_word(w) };
            parts.push(format!("({c})·{word}"));
        }
        parts.join(" + ")
    }
}

pub fn render_word(syms: &[OpSymbol]) -> String {
    if syms.is_empty() {
        return "1".into();
    }
    syms.iter()
        .map(OpSymbol::render)
        .collect::<Vec<_>>()
        .join("∘")
}

impl<K: Scalar> fmt::Display for OpPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use OpSymbol::*;

    fn one() -> Space {
        Space::triple(1)
    }

    #[test]
    fn identity_is_neutral_for_composition() {
        let t = OpPoly::<Rat>::symbol(TTrace, one()).unwrap();
        let id_in = OpPoly::identity(one());
        let id_out = OpPoly::identity(Space::single(1));
        assert_eq!(t.compose(&id_in).unwrap(), t);
        assert_eq!(id_out.compose(&t).unwrap(), t);
    }

    #[test]
    fn composition_checks_spaces() {
        let t = OpPoly::<Rat>::symbol(TTrace, one()).unwrap();
        assert!(t.compose(&t).is_err());
    }

    #[test]
    fn invalid_word_is_rejected() {
        assert!(OpPoly::<Rat>::word(&[DH], Space::single(4)).is_err());
        assert!(OpPoly::<Rat>::word(&[SmallP, DH], Space::single(1)).is_err());
        assert!(OpPoly::<Rat>::word(&[SmallP, DH], Space::single(0)).is_ok());
    }

    #[test]
    fn adjoint_reverses_and_signs() {
        // (𝕀 ∘ ℒ_ξ^⋆)^⋆ = ℒ_ξ ∘ (−T) on Ω¹(H,ℝ³).
        let w = OpPoly::<Rat>::word(&[IEmbed, LieXiStar], one()).unwrap();
        let adj = w.adjoint().unwrap();
        let expect = OpPoly::<Rat>::term(Rat::from_integer((-1).into()), &[LieXi, TTrace], one())
            .unwrap();
        assert_eq!(adj, expect);
        // Adjoint is an involution up to the metric signs used.
        assert_eq!(adj.adjoint().unwrap(), w);
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let a = OpPoly::<Rat>::word(&[SmallP], Space::single(1)).unwrap();
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&a), a.scale_int(2));
    }
}

//! Typed operator symbols and the bundle spaces they act between.
//!
//! Every first-order or algebraic operator appearing in the block calculus
//! is represented by a symbol with a *signature*: given the space an
//! argument lives in, [`OpSymbol::cod`] returns the space of the image, or
//! `None` when the composition is meaningless (for example a horizontal
//! exterior derivative applied to a top-degree form).  Words of symbols are
//! only ever formed along valid signatures, so space errors are caught at
//! construction time instead of surfacing as wrong identities later.
//!
//! Spaces are the horizontal form bundles `Ω^k H` and their `ℝ³`-valued
//! companions `Ω^k(H,ℝ³)`; the third-degree model space splits into slots
//! of these, which is how the block matrices in [`crate::opcalc::blocks`]
//! type their entries.

use std::fmt;

/// A horizontal form bundle: `Ω^k H` (`triple == false`) or `Ω^k(H,ℝ³)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Space {
    /// Horizontal form degree, `0 ..= 4`.
    pub k: u8,
    /// Whether the bundle carries an `ℝ³` factor acted on by `su(2)`.
    pub triple: bool,
}

impl Space {
    pub const fn single(k: u8) -> Self {
        Space { k, triple: false }
    }

    pub const fn triple(k: u8) -> Self {
        Space { k, triple: true }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.triple {
            write!(f, "Ω^{}(H,ℝ³)", self.k)
        } else {
            write!(f, "Ω^{}H", self.k)
        }
    }
}

/// A named operator on horizontal forms.
///
/// Axis arguments are `1 ..= 3` and refer to the vertical frame; `Gen` is a
/// formal section anchor used to state identities "for all sections with
/// declared properties" — rewrite rules may absorb operators into it (for
/// example an eigenvalue hypothesis `p ∘ Gen → w·Gen`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum OpSymbol {
    /// Horizontal exterior derivative `d_H`.
    DH,
    /// Horizontal codifferential `d_H^⋆`.
    DHStar,
    /// Horizontal Hodge star `⋆_H` (componentwise on triples).
    StarH,
    /// Reeb Lie derivative `ℒ_{ξ_a}` (componentwise on triples).
    Lie(u8),
    /// Complex structure `I_a` acting on forms.
    Rot(u8),
    /// Wedge multiplication `ω_a ∧ ·`.
    WedgeOm(u8),
    /// Contraction `ω_a ⌟ ·`.
    ContractOm(u8),
    /// Contracted Lie derivative `ℒ_ξ = (ℒ_{ξ_1}, ℒ_{ξ_2}, ℒ_{ξ_3})ᵀ`.
    LieXi,
    /// Its formal adjoint `ℒ_ξ^⋆ σ = −Σ_a ℒ_{ξ_a} σ_a`.
    LieXiStar,
    /// Trace map `T(σ) = ⋆_H Σ_a σ_a ∧ ω_a` on triples.
    TTrace,
    /// Rotation embedding `(𝕀α)_a = I_a α` of horizontal 1-forms.
    IEmbed,
    /// Triple-valued wedge embedding `u ↦ (u∧ω_1, u∧ω_2, u∧ω_3)`.
    OmVec,
    /// The `su(2)` matrix operator `C` on `ℝ³`-valued forms.
    CMat,
    /// Vertical Casimir `𝒞 = −Σ_a ℒ²_{ξ_a}` (componentwise on triples).
    Casimir,
    /// `p = Σ_a I_a ∘ ℒ_{ξ_a}` on horizontal 1-forms (componentwise on triples).
    SmallP,
    /// `P = 1 + 𝕀 ∘ T` on `Ω¹(H,ℝ³)`.
    BigP,
    /// Wedge operator `(L_ω f)_a = f_b ∧ ω_c − f_c ∧ ω_b` on triples.
    LOmega,
    /// Its pointwise adjoint `(L_ω^⋆ τ)_a = ω_b ⌟ τ_c − ω_c ⌟ τ_b`.
    LOmegaStar,
    /// Horizontal Laplacian `Δ_H = d_H d_H^⋆ + d_H^⋆ d_H`.
    LapH,
    /// The squashed comparison operator `𝒢^s = Δ_H + 𝒞/s² − 2p − 2(1+1/s²)(C−2)`.
    GOp,
    /// The basic comparison operator `𝒟 = Δ_H + 5𝒞 − 2p` on `Ω¹H`.
    DOp,
    /// A formal section anchor with a fixed target space.
    Gen { tag: u8, space: Space },
}

impl OpSymbol {
    /// Space of the image when this symbol is applied to a section of
    /// `dom`; `None` when the application is not defined.
    pub fn cod(&self, dom: Space) -> Option<Space> {
        use OpSymbol::*;
        let same = Some(dom);
        match *self {
            DH => (dom.k < 4).then(|| Space { k: dom.k + 1, ..dom }),
            DHStar => (dom.k > 0).then(|| Space { k: dom.k - 1, ..dom }),
            StarH => Some(Space { k: 4 - dom.k, ..dom }),
            Lie(_) | Casimir | LapH => same,
            Rot(_) => matches!(dom.k, 1 | 2).then_some(dom),
            WedgeOm(_) => (dom.k <= 2).then(|| Space { k: dom.k + 2, ..dom }),
            ContractOm(_) => (dom.k >= 2).then(|| Space { k: dom.k - 2, ..dom }),
            LieXi => (!dom.triple).then(|| Space { triple: true, ..dom }),
            LieXiStar => dom.triple.then(|| Space { triple: false, ..dom }),
            TTrace => {
                (dom.triple && dom.k <= 2).then(|| Space::single(2 - dom.k))
            }
            IEmbed => (dom == Space::single(1)).then(|| Space::triple(1)),
            OmVec => {
                (!dom.triple && dom.k <= 2).then(|| Space::triple(dom.k + 2))
            }
            CMat => dom.triple.then_some(dom),
            SmallP => (dom.k == 1).then_some(dom),
            BigP | GOp => (dom == Space::triple(1)).then_some(dom),
            LOmega => (dom.triple && dom.k <= 2).then(|| Space { k: dom.k + 2, ..dom }),
            LOmegaStar => (dom.triple && dom.k >= 2).then(|| Space { k: dom.k - 2, ..dom }),
            DOp => (dom == Space::single(1)).then_some(dom),
            Gen { space, .. } => (dom == POINT).then_some(space),
        }
    }

    /// Formal adjoint of the symbol, as `(sign, symbol)`, for a symbol
    /// whose *domain* is `dom`.  The adjoint maps `cod(dom) → dom`.
    /// Returns `None` for symbols without a representable adjoint here
    /// (section anchors, or `T`/`𝕀` away from degree one).
    pub fn adjoint(&self, dom: Space) -> Option<(i64, OpSymbol)> {
        use OpSymbol::*;
        match *self {
            DH => Some((1, DHStar)),
            DHStar => Some((1, DH)),
            // ⟨⋆α, β⟩ = (−1)^{k(4−k)} ⟨α, ⋆β⟩ on Ω^k in four dimensions.
            StarH => Some((if dom.k % 2 == 0 { 1 } else { -1 }, StarH)),
            Lie(a) => Some((-1, Lie(a))),
            Rot(a) => Some((-1, Rot(a))),
            WedgeOm(a) => Some((1, ContractOm(a))),
            ContractOm(a) => Some((1, WedgeOm(a))),
            LieXi => Some((1, LieXiStar)),
            LieXiStar => Some((1, LieXi)),
            TTrace => match dom {
                d if d == Space::triple(1) => Some((-1, IEmbed)),
                d if d == Space::triple(2) => Some((1, OmVec)),
                _ => None,
            },
            IEmbed => Some((-1, TTrace)),
            OmVec => (dom == Space::single(0)).then_some((1, TTrace)),
            CMat => Some((1, CMat)),
            Casimir => Some((1, Casimir)),
            SmallP => Some((1, SmallP)),
            BigP => Some((1, BigP)),
            LOmega => Some((1, LOmegaStar)),
            LOmegaStar => Some((1, LOmega)),
            LapH => Some((1, LapH)),
            GOp => Some((1, GOp)),
            DOp => Some((1, DOp)),
            Gen { .. } => None,
        }
    }

    pub fn render(&self) -> String {
        use OpSymbol::*;
        match *self {
            DH => "d_H".into(),
            DHStar => "d_H^⋆".into(),
            StarH => "⋆_H".into(),
            Lie(a) => format!("ℒ_{a}"),
            Rot(a) => format!("I_{a}"),
            WedgeOm(a) => format!("ω_{a}∧"),
            ContractOm(a) => format!("ω_{a}⌟"),
            LieXi => "ℒ_ξ".into(),
            LieXiStar => "ℒ_ξ^⋆".into(),
            TTrace => "T".into(),
            IEmbed => "𝕀".into(),
            OmVec => "·ω⃗".into(),
            CMat => "C".into(),
            Casimir => "𝒞".into(),
            SmallP => "p".into(),
            BigP => "P".into(),
            LOmega => "L_ω".into(),
            LOmegaStar => "L_ω^⋆".into(),
            LapH => "Δ_H".into(),
            GOp => "𝒢".into(),
            DOp => "𝒟".into(),
            Gen { tag, .. } => format!("γ{tag}"),
        }
    }
}

/// Pseudo-space serving as the domain of section anchors: a `Gen` symbol is
/// a map from the point space to its declared bundle, so anchored words
/// have domain `POINT` and compose only on the left.
pub const POINT: Space = Space { k: u8::MAX, triple: false };

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures_follow_degrees() {
        let one = Space::triple(1);
        assert_eq!(OpSymbol::DH.cod(one), Some(Space::triple(2)));
        assert_eq!(OpSymbol::TTrace.cod(one), Some(Space::single(1)));
        assert_eq!(OpSymbol::TTrace.cod(Space::triple(2)), Some(Space::single(0)));
        assert_eq!(OpSymbol::TTrace.cod(Space::triple(0)), Some(Space::single(2)));
        assert_eq!(OpSymbol::DH.cod(Space::single(4)), None);
        assert_eq!(OpSymbol::IEmbed.cod(Space::single(1)), Some(one));
        assert_eq!(OpSymbol::IEmbed.cod(Space::single(2)), None);
        assert_eq!(OpSymbol::StarH.cod(Space::single(3)), Some(Space::single(1)));
    }

    #[test]
    fn adjoints_are_involutive_on_fixed_degree() {
        // On Ω¹ the star picks up a sign; applying the adjoint rule twice
        // must return the original symbol with total sign (+1).
        let dom = Space::single(1);
        let (s1, a1) = OpSymbol::StarH.adjoint(dom).unwrap();
        let (s2, a2) = a1.adjoint(OpSymbol::StarH.cod(dom).unwrap()).unwrap();
        assert_eq!(a2, OpSymbol::StarH);
        assert_eq!(s1 * s2, 1);
    }
}

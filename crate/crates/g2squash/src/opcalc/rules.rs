//! Oriented rewrite rules for operator words, each carrying the provenance
//! of the identity it encodes.
//!
//! A rule replaces one contiguous segment of an operator word by a linear
//! combination of segments with the same signature.  Rules are *oriented*:
//! only the left-to-right direction is ever applied, and each verification
//! selects the subset of rules it is allowed to use, so that a lemma is
//! never proved from itself.  Provenance records where the right of use
//! comes from: a definition, a structure equation taken as an axiom, an
//! exhaustive check in the fiber algebra, a polynomial-jet computation, a
//! component-algebra normalization, or an earlier verified identity.

use crate::scalar::Scalar;

use super::symbol::{OpSymbol, Space};
use super::OpError;

/// Where the validity of a rewrite rule comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    /// Input structure of the model, assumed rather than derived here.
    Axiom(&'static str),
    /// Unfolding of a defined operator.
    Definition,
    /// Certified by a named check in the exhaustive fiber backend.
    Fiber(&'static str),
    /// Certified by a named check in the polynomial-jet backend.
    Jets(&'static str),
    /// Certified by a named normalization in the component algebra.
    Component(&'static str),
    /// Follows from the named earlier rules or checks.
    Derived(&'static [&'static str]),
    /// Local assumption of the surrounding verification (for example an
    /// eigenvalue or symmetry constraint on a section anchor).
    Hypothesis,
}

impl Provenance {
    /// Identifiers of checks or rules this rule depends on.
    pub fn source_ids(&self) -> &[&'static str] {
        match self {
            Provenance::Derived(ids) => ids,
            _ => &[],
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Provenance::Axiom(note) => format!("axiom: {note}"),
            Provenance::Definition => "definition".into(),
            Provenance::Fiber(id) => format!("fiber check `{id}`"),
            Provenance::Jets(id) => format!("jet check `{id}`"),
            Provenance::Component(id) => format!("component check `{id}`"),
            Provenance::Derived(ids) => format!("derived from {}", ids.join(", ")),
            Provenance::Hypothesis => "hypothesis of the surrounding statement".into(),
        }
    }
}

/// One oriented rewrite rule.
#[derive(Clone, Debug)]
pub struct Rule<K: Scalar> {
    pub id: &'static str,
    /// Domains (of the rightmost matched symbol) at which the rule may
    /// fire; `None` means any domain where the segment parses.
    pub doms: Option<Vec<Space>>,
    pub lhs: Vec<OpSymbol>,
    pub rhs: Vec<(K, Vec<OpSymbol>)>,
    pub provenance: Provenance,
}

impl<K: Scalar> Rule<K> {
    pub fn new(
        id: &'static str,
        lhs: Vec<OpSymbol>,
        rhs: Vec<(i64, Vec<OpSymbol>)>,
        provenance: Provenance,
    ) -> Self {
        let rhs = rhs
            .into_iter()
            .map(|(c, w)| (K::from_int(c), w))
            .collect();
        Rule { id, doms: None, lhs, rhs, provenance }
    }

    /// Same as [`Rule::new`] with scalar coefficients given directly.
    pub fn with_coeffs(
        id: &'static str,
        lhs: Vec<OpSymbol>,
        rhs: Vec<(K, Vec<OpSymbol>)>,
        provenance: Provenance,
    ) -> Self {
        Rule { id, doms: None, lhs, rhs, provenance }
    }

    /// Restrict the rule to the listed domains.
    pub fn on(mut self, doms: Vec<Space>) -> Self {
        self.doms = Some(doms);
        self
    }

    pub fn admits_dom(&self, dom: Space) -> bool {
        self.doms.as_ref().map_or(true, |d| d.contains(&dom))
    }
}

/// An ordered set of rules; the rewrite engine tries them in this order.
#[derive(Clone, Debug)]
pub struct RuleSet<K: Scalar> {
    rules: Vec<Rule<K>>,
}

impl<K: Scalar> RuleSet<K> {
    pub fn new(rules: Vec<Rule<K>>) -> Self {
        RuleSet { rules }
    }

    /// Select rules by identifier from the standard registry, in the
    /// order given, appending any extra (for example hypothesis) rules.
    pub fn select(ids: &[&str], extra: Vec<Rule<K>>) -> Result<Self, OpError> {
        let registry = registry::<K>();
        let mut rules = Vec::new();
        for want in ids {
            let mut found = false;
            for r in &registry {
                if r.id == *want {
                    rules.push(r.clone());
                    found = true;
                }
            }
            if !found {
                return Err(OpError::UnknownRule { id: (*want).into() });
            }
        }
        rules.extend(extra);
        Ok(RuleSet { rules })
    }

    pub fn rules(&self) -> &[Rule<K>] {
        &self.rules
    }

    pub fn get(&self, id: &str) -> Option<&Rule<K>> {
        self.rules.iter().find(|r| r.id == id)
    }
}

fn singles(ks: &[u8]) -> Vec<Space> {
    ks.iter().map(|&k| Space::single(k)).collect()
}

fn both(ks: &[u8]) -> Vec<Space> {
    let mut v = Vec::new();
    for &k in ks {
        v.push(Space::single(k));
        v.push(Space::triple(k));
    }
    v
}

/// The standard rule registry.  Axis-indexed families are emitted for all
/// axes; identifiers carry the axis pair as a suffix.
pub fn registry<K: Scalar>() -> Vec<Rule<K>> {
    use OpSymbol::*;
    let mut rules: Vec<Rule<K>> = Vec::new();

    // --- su(2) sorting of the Reeb Lie derivatives -----------------------
    // ℒ_b ∘ ℒ_a = ℒ_a ∘ ℒ_b + [ℒ_b, ℒ_a] with [ℒ_1, ℒ_2] = 2ℒ_3 cyclic.
    let su2 = Provenance::Axiom("su(2) structure constants of the Reeb frame");
    for (id, b, a, k, c) in [
        ("lie-sort-21", 2u8, 1u8, -2i64, 3u8),
        ("lie-sort-31", 3, 1, 2, 2),
        ("lie-sort-32", 3, 2, -2, 1),
    ] {
        rules.push(Rule::new(
            id,
            vec![Lie(b), Lie(a)],
            vec![(1, vec![Lie(a), Lie(b)]), (k, vec![Lie(c)])],
            su2,
        ));
    }

    // --- quaternion products of the complex structures --------------------
    // On forms I_a ∘ I_b = −I_c cyclic and I_a² = −1.
    let quat = Provenance::Fiber("rotation-quaternion-products");
    for a in 1u8..=3 {
        let id: &'static str = match a {
            1 => "rot-compose-11",
            2 => "rot-compose-22",
            _ => "rot-compose-33",
        };
        rules.push(Rule::new(id, vec![Rot(a), Rot(a)], vec![(-1, vec![])], quat));
    }
    for (id, a, b, sign, c) in [
        ("rot-compose-12", 1u8, 2u8, -1i64, 3u8),
        ("rot-compose-23", 2, 3, -1, 1),
        ("rot-compose-31", 3, 1, -1, 2),
        ("rot-compose-21", 2, 1, 1, 3),
        ("rot-compose-32", 3, 2, 1, 1),
        ("rot-compose-13", 1, 3, 1, 2),
    ] {
        rules.push(Rule::new(id, vec![Rot(a), Rot(b)], vec![(sign, vec![Rot(c)])], quat));
    }

    // --- rotation twist of the Reeb flow ----------------------------------
    // ℒ_a ∘ I_b = I_b ∘ ℒ_a + [ℒ_a, I_b], [ℒ_1, I_2] = 2I_3 cyclic.
    let twist = Provenance::Jets("lie-rotation-twist");
    for a in 1u8..=3 {
        for b in 1u8..=3 {
            let id: &'static str = match (a, b) {
                (1, 1) => "lie-rot-swap-11",
                (1, 2) => "lie-rot-swap-12",
                (1, 3) => "lie-rot-swap-13",
                (2, 1) => "lie-rot-swap-21",
                (2, 2) => "lie-rot-swap-22",
                (2, 3) => "lie-rot-swap-23",
                (3, 1) => "lie-rot-swap-31",
                (3, 2) => "lie-rot-swap-32",
                _ => "lie-rot-swap-33",
            };
            let mut rhs = vec![(1, vec![Rot(b), Lie(a)])];
            if a != b {
                let c = 6 - a - b;
                let k = if (a % 3) + 1 == b { 2 } else { -2 };
                rhs.push((k, vec![Rot(c)]));
            }
            rules.push(Rule::new(id, vec![Lie(a), Rot(b)], rhs, twist));
        }
    }
    // Reverse orientation of the same-axis commutation, for normal forms
    // that keep the Reeb derivative outermost.  Never select together with
    // the forward `lie-rot-swap-aa` rules.
    for a in 1u8..=3 {
        let id: &'static str = match a {
            1 => "rot-lie-swap-11",
            2 => "rot-lie-swap-22",
            _ => "rot-lie-swap-33",
        };
        rules.push(Rule::new(id, vec![Rot(a), Lie(a)], vec![(1, vec![Lie(a), Rot(a)])], twist));
    }

    // --- definition unfoldings --------------------------------------------
    rules.push(Rule::new(
        "p-expand",
        vec![SmallP],
        (1..=3).map(|a| (1, vec![Rot(a), Lie(a)])).collect(),
        Provenance::Definition,
    ));
    rules.push(Rule::new(
        "casimir-expand",
        vec![Casimir],
        (1..=3).map(|a| (-1, vec![Lie(a), Lie(a)])).collect(),
        Provenance::Definition,
    ));
    rules.push(Rule::new(
        "bigp-expand",
        vec![BigP],
        vec![(1, vec![]), (1, vec![IEmbed, TTrace])],
        Provenance::Definition,
    ));
    rules.push(Rule::new(
        "embed-trace-collapse",
        vec![IEmbed, TTrace],
        vec![(1, vec![BigP]), (-1, vec![])],
        Provenance::Definition,
    ));
    // Comparison operator at the nearly-parallel squashing s² = 1/5.
    rules.push(Rule::new(
        "gop-expand-nearly",
        vec![GOp],
        vec![
            (1, vec![LapH]),
            (5, vec![Casimir]),
            (-2, vec![SmallP]),
            (-12, vec![CMat]),
            (24, vec![]),
        ],
        Provenance::Definition,
    ));
    rules.push(Rule::new(
        "dop-expand",
        vec![DOp],
        vec![(1, vec![LapH]), (5, vec![Casimir]), (-2, vec![SmallP])],
        Provenance::Definition,
    ));
    rules.push(
        Rule::new(
            "laplace-expand-bottom",
            vec![LapH],
            vec![(1, vec![DHStar, DH])],
            Provenance::Definition,
        )
        .on(both(&[0])),
    );
    rules.push(
        Rule::new(
            "laplace-expand-mid",
            vec![LapH],
            vec![(1, vec![DH, DHStar]), (1, vec![DHStar, DH])],
            Provenance::Definition,
        )
        .on(both(&[1, 2, 3])),
    );
    rules.push(
        Rule::new(
            "laplace-expand-top",
            vec![LapH],
            vec![(1, vec![DH, DHStar])],
            Provenance::Definition,
        )
        .on(both(&[4])),
    );

    // --- component-certified transfers ------------------------------------
    rules.push(Rule::new(
        "p-squared-casimir",
        vec![SmallP, SmallP],
        vec![(2, vec![SmallP]), (1, vec![Casimir])],
        Provenance::Component("p-squared-casimir-relation"),
    ));
    rules.push(
        Rule::new(
            "casimir-from-p",
            vec![Casimir],
            vec![(1, vec![SmallP, SmallP]), (-2, vec![SmallP])],
            Provenance::Component("p-squared-casimir-relation"),
        )
        .on(both(&[1])),
    );
    for a in 1u8..=3 {
        let id: &'static str = match a {
            1 => "p-rot-anticommute-1",
            2 => "p-rot-anticommute-2",
            _ => "p-rot-anticommute-3",
        };
        rules.push(Rule::new(
            id,
            vec![SmallP, Rot(a)],
            vec![(-1, vec![Rot(a), SmallP]), (4, vec![Rot(a)]), (-2, vec![Lie(a)])],
            Provenance::Component("p-rotation-anticommutator"),
        ));
        let idl: &'static str = match a {
            1 => "p-lie-commute-1",
            2 => "p-lie-commute-2",
            _ => "p-lie-commute-3",
        };
        rules.push(Rule::new(
            idl,
            vec![SmallP, Lie(a)],
            vec![(1, vec![Lie(a), SmallP])],
            Provenance::Component("p-reeb-commute"),
        ));
        let idc: &'static str = match a {
            1 => "casimir-lie-commute-1",
            2 => "casimir-lie-commute-2",
            _ => "casimir-lie-commute-3",
        };
        rules.push(Rule::new(
            idc,
            vec![Casimir, Lie(a)],
            vec![(1, vec![Lie(a), Casimir])],
            Provenance::Component("casimir-central"),
        ));
    }
    rules.push(Rule::new(
        "casimir-p-commute",
        vec![Casimir, SmallP],
        vec![(1, vec![SmallP, Casimir])],
        Provenance::Component("casimir-central"),
    ));
    rules.push(Rule::new(
        "casimir-cmat-commute",
        vec![Casimir, CMat],
        vec![(1, vec![CMat, Casimir])],
        Provenance::Component("casimir-central"),
    ));
    rules.push(Rule::new(
        "trace-embed-contract",
        vec![TTrace, IEmbed],
        vec![(-3, vec![])],
        Provenance::Component("trace-section-contractions"),
    ));
    rules.push(
        Rule::new(
            "trace-lie-xi",
            vec![TTrace, LieXi],
            vec![(1, vec![SmallP])],
            Provenance::Component("trace-section-contractions"),
        )
        .on(singles(&[1])),
    );
    rules.push(Rule::new(
        "lie-xi-star-embed",
        vec![LieXiStar, IEmbed],
        vec![(-1, vec![SmallP])],
        Provenance::Component("trace-section-contractions"),
    ));
    rules.push(
        Rule::new(
            "trace-p-transfer-rule",
            vec![TTrace, SmallP],
            vec![(4, vec![TTrace]), (-1, vec![SmallP, TTrace]), (2, vec![LieXiStar])],
            Provenance::Component("trace-p-transfer"),
        )
        .on(vec![Space::triple(1)]),
    );
    rules.push(
        Rule::new(
            "trace-casimir-transfer-rule",
            vec![TTrace, Casimir],
            vec![
                (1, vec![Casimir, TTrace]),
                (8, vec![TTrace]),
                (-4, vec![SmallP, TTrace]),
                (4, vec![LieXiStar]),
            ],
            Provenance::Component("trace-casimir-transfer"),
        )
        .on(vec![Space::triple(1)]),
    );
    rules.push(
        Rule::new(
            "trace-cmat-transfer-rule",
            vec![TTrace, CMat],
            vec![(4, vec![TTrace]), (-1, vec![SmallP, TTrace]), (1, vec![LieXiStar])],
            Provenance::Component("trace-cmat-transfer"),
        )
        .on(vec![Space::triple(1)]),
    );
    rules.push(Rule::new(
        "cmat-square-rule",
        vec![CMat, CMat],
        vec![(2, vec![CMat]), (1, vec![Casimir]), (-1, vec![LieXi, LieXiStar])],
        Provenance::Component("cmat-square"),
    ));
    rules.push(Rule::new(
        "cmat-vertical-div-rule",
        vec![LieXiStar, CMat],
        vec![(2, vec![LieXiStar])],
        Provenance::Component("cmat-vertical-div"),
    ));
    rules.push(Rule::new(
        "cmat-reeb-column-rule",
        vec![CMat, LieXi],
        vec![(2, vec![LieXi])],
        Provenance::Component("cmat-reeb-column"),
    ));
    rules.push(
        Rule::new(
            "cmat-closed-form-rule",
            vec![CMat],
            vec![
                (2, vec![]),
                (-1, vec![SmallP]),
                (-1, vec![IEmbed, LieXiStar]),
                (1, vec![IEmbed, SmallP, TTrace]),
                (-2, vec![IEmbed, TTrace]),
                (1, vec![LieXi, TTrace]),
            ],
            Provenance::Component("cmat-closed-form"),
        )
        .on(vec![Space::triple(1)]),
    );
    rules.push(
        Rule::new(
            "cmat-projection-contract",
            vec![CMat, BigP],
            vec![(2, vec![BigP]), (-1, vec![SmallP]), (-1, vec![IEmbed, LieXiStar])],
            Provenance::Component("projection-divergence-contraction"),
        )
        .on(vec![Space::triple(1)]),
    );
    rules.push(Rule::new(
        "projection-quadratic-rule",
        vec![BigP, BigP],
        vec![(2, vec![]), (-1, vec![BigP])],
        Provenance::Component("projection-quadratic"),
    ));

    // --- first-order commutation and curvature flux ------------------------
    for a in 1u8..=3 {
        let (idd, idc, ids): (&'static str, &'static str, &'static str) = match a {
            1 => ("d-lie-commute-1", "codiff-lie-commute-1", "star-lie-commute-1"),
            2 => ("d-lie-commute-2", "codiff-lie-commute-2", "star-lie-commute-2"),
            _ => ("d-lie-commute-3", "codiff-lie-commute-3", "star-lie-commute-3"),
        };
        rules.push(Rule::new(
            idd,
            vec![DH, Lie(a)],
            vec![(1, vec![Lie(a), DH])],
            Provenance::Jets("d-lie-commute-mixed"),
        ));
        rules.push(Rule::new(
            idc,
            vec![DHStar, Lie(a)],
            vec![(1, vec![Lie(a), DHStar])],
            Provenance::Derived(&["d-lie-commute-mixed", "lie-star-commute"]),
        ));
        rules.push(Rule::new(
            ids,
            vec![StarH, Lie(a)],
            vec![(1, vec![Lie(a), StarH])],
            Provenance::Jets("lie-star-commute"),
        ));
    }
    rules.push(Rule::new(
        "d-squared-flux",
        vec![DH, DH],
        (1..=3).map(|a| (-2, vec![WedgeOm(a), Lie(a)])).collect(),
        Provenance::Jets("d-squared-mixed"),
    ));
    rules.push(Rule::new(
        "codiff-squared-flux",
        vec![DHStar, DHStar],
        (1..=3).map(|a| (2, vec![Lie(a), ContractOm(a)])).collect(),
        Provenance::Jets("codiff-squared-mixed"),
    ));
    for a in 1u8..=3 {
        let (idw, idc): (&'static str, &'static str) = match a {
            1 => ("codiff-wedge-om-1", "contract-om-d-1"),
            2 => ("codiff-wedge-om-2", "contract-om-d-2"),
            _ => ("codiff-wedge-om-3", "contract-om-d-3"),
        };
        // d_H^⋆(u ω_a) = −I_a d_H u on functions.
        rules.push(
            Rule::new(
                idw,
                vec![DHStar, WedgeOm(a)],
                vec![(-1, vec![Rot(a), DH])],
                Provenance::Jets("codiff-wedge-rotation"),
            )
            .on(both(&[0])),
        );
        // Adjoint orientation: ω_a ⌟ d_H α = d_H^⋆(I_a α) on 1-forms.
        rules.push(
            Rule::new(
                idc,
                vec![ContractOm(a), DH],
                vec![(1, vec![DHStar, Rot(a)])],
                Provenance::Derived(&["codiff-wedge-rotation"]),
            )
            .on(both(&[1])),
        );
        let idsw: &'static str = match a {
            1 => "star-wedge-om-1",
            2 => "star-wedge-om-2",
            _ => "star-wedge-om-3",
        };
        // ⋆_H(β ∧ ω_a) = I_a β on 1-forms.
        rules.push(
            Rule::new(
                idsw,
                vec![StarH, WedgeOm(a)],
                vec![(1, vec![Rot(a)])],
                Provenance::Fiber("rotation-hodge-wedge"),
            )
            .on(both(&[1])),
        );
    }
    // ⋆_H d_H (u ω⃗) = 𝕀 d_H u on functions, componentwise.
    rules.push(
        Rule::new(
            "stard-omvec-embed",
            vec![StarH, DH, OmVec],
            vec![(1, vec![IEmbed, DH])],
            Provenance::Jets("stard-wedge-rotation"),
        )
        .on(vec![Space::single(0)]),
    );
    rules.push(Rule::new(
        "star-d-star-codiff",
        vec![StarH, DH, StarH],
        vec![(-1, vec![DHStar])],
        Provenance::Jets("codiff-star-conjugate"),
    ));
    rules.push(
        Rule::new(
            "star-involution-even",
            vec![StarH, StarH],
            vec![(1, vec![])],
            Provenance::Fiber("hodge-star-involution"),
        )
        .on(both(&[0, 2, 4])),
    );
    rules.push(
        Rule::new(
            "star-involution-odd",
            vec![StarH, StarH],
            vec![(-1, vec![])],
            Provenance::Fiber("hodge-star-involution"),
        )
        .on(both(&[1, 3])),
    );
    rules.push(
        Rule::new(
            "codiff-star-swap-even",
            vec![DHStar, StarH],
            vec![(-1, vec![StarH, DH])],
            Provenance::Derived(&["codiff-star-conjugate", "hodge-star-involution"]),
        )
        .on(both(&[0, 2, 4])),
    );
    rules.push(
        Rule::new(
            "codiff-star-swap-odd",
            vec![DHStar, StarH],
            vec![(1, vec![StarH, DH])],
            Provenance::Derived(&["codiff-star-conjugate", "hodge-star-involution"]),
        )
        .on(both(&[1, 3])),
    );
    rules.push(Rule::new(
        "star-cmat-commute",
        vec![StarH, CMat],
        vec![(1, vec![CMat, StarH])],
        Provenance::Derived(&["lie-star-commute"]),
    ));
    rules.push(Rule::new(
        "xi-star-swap",
        vec![LieXi, StarH],
        vec![(1, vec![StarH, LieXi])],
        Provenance::Derived(&["lie-star-commute"]),
    ));
    rules.push(Rule::new(
        "xi-star-star-swap",
        vec![LieXiStar, StarH],
        vec![(1, vec![StarH, LieXiStar])],
        Provenance::Derived(&["lie-star-commute"]),
    ));
    rules.push(Rule::new(
        "d-cmat-commute",
        vec![DH, CMat],
        vec![(1, vec![CMat, DH])],
        Provenance::Derived(&["d-lie-commute-mixed"]),
    ));
    rules.push(Rule::new(
        "codiff-cmat-commute",
        vec![DHStar, CMat],
        vec![(1, vec![CMat, DHStar])],
        Provenance::Derived(&["d-lie-commute-mixed", "lie-star-commute"]),
    ));
    rules.push(Rule::new(
        "codiff-xi-star-commute",
        vec![DHStar, LieXiStar],
        vec![(1, vec![LieXiStar, DHStar])],
        Provenance::Derived(&["d-lie-commute-mixed", "lie-star-commute"]),
    ));
    rules.push(Rule::new(
        "xi-star-d-commute",
        vec![LieXiStar, DH],
        vec![(1, vec![DH, LieXiStar])],
        Provenance::Derived(&["d-lie-commute-mixed"]),
    ));
    rules.push(Rule::new(
        "d-xi-commute",
        vec![DH, LieXi],
        vec![(1, vec![LieXi, DH])],
        Provenance::Derived(&["d-lie-commute-mixed"]),
    ));
    rules.push(
        Rule::new(
            "codiff-p-symmetry-rule",
            vec![LOmegaStar, DH],
            vec![(1, vec![DHStar, BigP])],
            Provenance::Jets("codiff-p-symmetry"),
        )
        .on(vec![Space::triple(1)]),
    );
    rules.push(
        Rule::new(
            "trace-star-d-bridge",
            vec![TTrace, StarH, DH],
            vec![(1, vec![DHStar, TTrace])],
            Provenance::Jets("t-codiff-bridge"),
        )
        .on(vec![Space::triple(1)]),
    );
    rules.push(
        Rule::new(
            "l-omega-star-selfdual",
            vec![LOmegaStar, StarH],
            vec![(1, vec![LOmegaStar])],
            Provenance::Fiber("omega-forms-selfdual"),
        )
        .on(vec![Space::triple(2)]),
    );

    // --- Laplacian commutation --------------------------------------------
    for a in 1u8..=3 {
        let (idr, idl): (&'static str, &'static str) = match a {
            1 => ("laplace-rot-swap-1", "laplace-lie-commute-1"),
            2 => ("laplace-rot-swap-2", "laplace-lie-commute-2"),
            _ => ("laplace-rot-swap-3", "laplace-lie-commute-3"),
        };
        // The twisted operator Δ_H + 𝒞 commutes with each complex
        // structure; this is the one analytic input taken on trust.
        rules.push(Rule::new(
            idr,
            vec![LapH, Rot(a)],
            vec![
                (1, vec![Rot(a), LapH]),
                (1, vec![Rot(a), Casimir]),
                (-1, vec![Casimir, Rot(a)]),
            ],
            Provenance::Axiom(
                "Δ_H + 𝒞 commutes with the complex structures on horizontal forms",
            ),
        ));
        rules.push(Rule::new(
            idl,
            vec![LapH, Lie(a)],
            vec![(1, vec![Lie(a), LapH])],
            Provenance::Derived(&["d-lie-commute-mixed", "lie-star-commute"]),
        ));
    }
    rules.push(
        Rule::new(
            "laplace-trace-swap",
            vec![TTrace, LapH],
            vec![
                (1, vec![LapH, TTrace]),
                (1, vec![Casimir, TTrace]),
                (-1, vec![TTrace, Casimir]),
            ],
            Provenance::Derived(&["laplace-rot-swap-1", "laplace-rot-swap-2", "laplace-rot-swap-3"]),
        )
        .on(vec![Space::triple(1)]),
    );
    rules.push(
        Rule::new(
            "laplace-d-commute",
            vec![LapH, DH],
            vec![(1, vec![DH, LapH]), (2, vec![SmallP, DH])],
            Provenance::Derived(&["laplace-d-commutator"]),
        )
        .on(both(&[0])),
    );
    rules.push(
        Rule::new(
            "laplace-codiff-commute",
            vec![LapH, DHStar],
            vec![(1, vec![DHStar, LapH]), (-2, vec![DHStar, SmallP])],
            Provenance::Derived(&["laplace-codiff-commutator"]),
        )
        .on(both(&[1])),
    );
    rules.push(Rule::new(
        "laplace-p-commute-rule",
        vec![LapH, SmallP],
        vec![(1, vec![SmallP, LapH])],
        Provenance::Derived(&["laplace-p-commute"]),
    ));

    rules
}

/// All identifiers in the registry, for coverage checks.
pub fn registry_ids() -> Vec<&'static str> {
    registry::<crate::scalar::Rat>().iter().map(|r| r.id).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use std::collections::{BTreeMap, BTreeSet};

    #[test]
    fn registry_ids_are_unique() {
        let ids = registry_ids();
        let set: BTreeSet<_> = ids.iter().collect();
        assert_eq!(ids.len(), set.len());
    }

    #[test]
    fn derived_references_are_acyclic() {
        // Rule-to-rule references must not loop; references to external
        // backend checks are leaves here.
        let reg = registry::<Rat>();
        let ids: BTreeSet<&str> = reg.iter().map(|r| r.id).collect();
        let deps: BTreeMap<&str, Vec<&str>> = reg
            .iter()
            .map(|r| {
                let ds = r
                    .provenance
                    .source_ids()
                    .iter()
                    .copied()
                    .filter(|d| ids.contains(d))
                    .collect();
                (r.id, ds)
            })
            .collect();
        fn visit<'a>(
            node: &'a str,
            deps: &BTreeMap<&'a str, Vec<&'a str>>,
            path: &mut Vec<&'a str>,
            done: &mut BTreeSet<&'a str>,
        ) {
            if done.contains(node) {
                return;
            }
            assert!(!path.contains(&node), "cycle through rule `{node}`");
            path.push(node);
            for d in deps.get(node).into_iter().flatten() {
                visit(d, deps, path, done);
            }
            path.pop();
            done.insert(node);
        }
        let mut done = BTreeSet::new();
        for id in deps.keys() {
            visit(id, &deps, &mut Vec::new(), &mut done);
        }
    }

    #[test]
    fn selection_preserves_order_and_rejects_unknown_ids() {
        let set = RuleSet::<Rat>::select(&["p-expand", "lie-sort-21"], Vec::new()).unwrap();
        assert_eq!(set.rules()[0].id, "p-expand");
        assert_eq!(set.rules()[1].id, "lie-sort-21");
        assert!(RuleSet::<Rat>::select(&["no-such-rule"], Vec::new()).is_err());
    }
}

//! Block matrices of operator polynomials over the graded slots of
//! differential forms on the squashed total space.
//!
//! A 3-form decomposes against the vertical frame into slots
//! `[Ω⁰H, Ω¹(H,ℝ³), Ω²(H,ℝ³), Ω³H]` and a 2-form into
//! `[Ω⁰(H,ℝ³), Ω¹(H,ℝ³), Ω²H]`.  The geometric first-order operators
//! `⋆_s d`, `d`, and `d^{⋆_s}` become matrices whose entries are operator
//! words with coefficients rational in the squashing parameter `s`; these
//! exact matrices were verified slot by slot against the polynomial-jet
//! backend.  Composing them and rewriting with certified rules reproduces
//! the second-order comparison identities without touching any section.

use crate::scalar::{ParamField, Scalar};

use super::poly::OpPoly;
use super::rewrite::{normalize, replay, Script};
use super::rules::{Rule, RuleSet};
use super::symbol::{OpSymbol, Space, POINT};
use super::OpError;

/// Slot spaces of a 3-form on the total space.
pub fn v3_spaces() -> Vec<Space> {
    vec![Space::single(0), Space::triple(1), Space::triple(2), Space::single(3)]
}

/// Slot spaces of a 2-form on the total space.
pub fn v2_spaces() -> Vec<Space> {
    vec![Space::triple(0), Space::triple(1), Space::single(2)]
}

/// A matrix of operator polynomials with declared row and column spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockOp<K: Scalar> {
    rows: Vec<Space>,
    cols: Vec<Space>,
    ents: Vec<OpPoly<K>>,
}

impl<K: Scalar> BlockOp<K> {
    pub fn zero(rows: Vec<Space>, cols: Vec<Space>) -> Self {
        let ents = rows
            .iter()
            .flat_map(|r| cols.iter().map(|c| OpPoly::zero(*c, *r)))
            .collect();
        BlockOp { rows, cols, ents }
    }

    pub fn identity(spaces: Vec<Space>) -> Self {
        let mut out = Self::zero(spaces.clone(), spaces.clone());
        for (i, sp) in spaces.iter().enumerate() {
            out.ents[i * out.cols.len() + i] = OpPoly::identity(*sp);
        }
        out
    }

    pub fn rows(&self) -> &[Space] {
        &self.rows
    }

    pub fn cols(&self) -> &[Space] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &OpPoly<K> {
        &self.ents[r * self.cols.len() + c]
    }

    /// Install an entry, checking its spaces against the declared slots.
    pub fn set(&mut self, r: usize, c: usize, p: OpPoly<K>) -> Result<(), OpError> {
        if p.dom() != self.cols[c] || p.cod() != self.rows[r] {
            return Err(OpError::Shape {
                expected: format!("{} → {}", self.cols[c], self.rows[r]),
                found: format!("{} → {}", p.dom(), p.cod()),
            });
        }
        let n = self.cols.len();
        self.ents[r * n + c] = p;
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "block row spaces differ");
        assert_eq!(self.cols, other.cols, "block column spaces differ");
        let ents = self
            .ents
            .iter()
            .zip(&other.ents)
            .map(|(a, b)| a.add(b))
            .collect();
        BlockOp { rows: self.rows.clone(), cols: self.cols.clone(), ents }
    }

    pub fn scale(&self, c: &K) -> Self {
        let ents = self.ents.iter().map(|e| e.scale(c)).collect();
        BlockOp { rows: self.rows.clone(), cols: self.cols.clone(), ents }
    }

    /// Matrix product `self ∘ other`.
    pub fn mul(&self, other: &Self) -> Result<Self, OpError> {
        if self.cols != other.rows {
            return Err(OpError::Shape {
                expected: format!("{} inner slots", self.cols.len()),
                found: format!("{} inner slots", other.rows.len()),
            });
        }
        let mut out = Self::zero(self.rows.clone(), other.cols.clone());
        for i in 0..self.rows.len() {
            for j in 0..other.cols.len() {
                let mut acc = OpPoly::zero(other.cols[j], self.rows[i]);
                for k in 0..self.cols.len() {
                    acc = acc.add(&self.entry(i, k).compose(other.entry(k, j))?);
                }
                let n = out.cols.len();
                out.ents[i * n + j] = acc;
            }
        }
        Ok(out)
    }

    /// Apply to a slot vector: all entries share one domain and their
    /// codomains must match the column spaces.
    pub fn apply(&self, vec: &[OpPoly<K>]) -> Result<Vec<OpPoly<K>>, OpError> {
        if vec.len() != self.cols.len() {
            return Err(OpError::Shape {
                expected: format!("{} slots", self.cols.len()),
                found: format!("{} slots", vec.len()),
            });
        }
        for (v, c) in vec.iter().zip(&self.cols) {
            if v.cod() != *c {
                return Err(OpError::Shape {
                    expected: format!("slot of {c}"),
                    found: format!("slot of {}", v.cod()),
                });
            }
        }
        let mut out = Vec::with_capacity(self.rows.len());
        for i in 0..self.rows.len() {
            let mut acc = OpPoly::zero(vec[0].dom(), self.rows[i]);
            for j in 0..self.cols.len() {
                acc = acc.add(&self.entry(i, j).compose(&vec[j])?);
            }
            out.push(acc);
        }
        Ok(out)
    }
}

fn s_times<K: ParamField>(n: i64) -> K {
    K::s().scale_int(n)
}

fn s_inv_times<K: ParamField>(n: i64) -> K {
    K::s().inv().expect("squashing parameter is invertible").scale_int(n)
}

fn word<K: Scalar>(syms: &[OpSymbol], dom: Space) -> OpPoly<K> {
    OpPoly::word(syms, dom).expect("block entry word parses")
}

/// The operator `⋆_s d` on 3-forms, as a block matrix over the slots.
pub fn star_s_d_v3<K: ParamField>() -> BlockOp<K> {
    use OpSymbol::*;
    let v3 = v3_spaces();
    let (f, a, sg, b) = (v3[0], v3[1], v3[2], v3[3]);
    let mut m = BlockOp::zero(v3.clone(), v3.clone());
    let ok = (|| -> Result<(), OpError> {
        m.set(0, 2, word(&[TTrace], sg).scale(&s_times(2)))?;
        m.set(0, 3, word(&[StarH, DH], b))?;
        m.set(1, 1, word(&[BigP], a).scale(&s_times(-2)))?;
        m.set(1, 2, word(&[StarH, DH], sg).scale_int(-1))?;
        m.set(1, 3, word(&[StarH, LieXi], b).scale(&s_inv_times(1)))?;
        m.set(2, 0, word(&[OmVec], f).scale(&s_times(2)))?;
        m.set(2, 1, word(&[StarH, DH], a))?;
        m.set(
            2,
            2,
            word(&[StarH, CMat], sg)
                .sub(&word(&[StarH], sg).scale_int(2))
                .scale(&s_inv_times(1)),
        )?;
        m.set(3, 0, word(&[StarH, DH], f).scale_int(-1))?;
        m.set(3, 1, word(&[StarH, LieXiStar], a).scale(&s_inv_times(-1)))?;
        Ok(())
    })();
    ok.expect("star-d block entries are well-placed");
    m
}

/// The exterior derivative from 2-form slots to 3-form slots.
pub fn d_v2<K: ParamField>() -> BlockOp<K> {
    use OpSymbol::*;
    let (v2, v3) = (v2_spaces(), v3_spaces());
    let (g, a, t) = (v2[0], v2[1], v2[2]);
    let mut m = BlockOp::zero(v3, v2.clone());
    let ok = (|| -> Result<(), OpError> {
        m.set(0, 0, word(&[LieXiStar], g).scale(&s_inv_times(-1)))?;
        m.set(1, 0, word(&[DH], g))?;
        m.set(
            1,
            1,
            word(&[CMat], a)
                .sub(&OpPoly::identity(a).scale_int(2))
                .scale(&s_inv_times(1)),
        )?;
        m.set(2, 0, word(&[LOmega], g).scale(&s_times(2)))?;
        m.set(2, 1, word(&[DH], a).scale_int(-1))?;
        m.set(2, 2, word(&[LieXi], t).scale(&s_inv_times(1)))?;
        m.set(3, 1, word(&[StarH, TTrace], a).scale(&s_times(-2)))?;
        m.set(3, 2, word(&[DH], t))?;
        Ok(())
    })();
    ok.expect("d block entries are well-placed");
    m
}

/// The codifferential `d^{⋆_s}` from 3-form slots to 2-form slots.
pub fn codiff_v3<K: ParamField>() -> BlockOp<K> {
    use OpSymbol::*;
    let (v2, v3) = (v2_spaces(), v3_spaces());
    let (f, a, sg, b) = (v3[0], v3[1], v3[2], v3[3]);
    let mut m = BlockOp::zero(v2, v3);
    let ok = (|| -> Result<(), OpError> {
        m.set(0, 0, word(&[LieXi], f).scale(&s_inv_times(-1)))?;
        m.set(0, 1, word(&[DHStar], a))?;
        m.set(0, 2, word(&[LOmegaStar], sg).scale(&s_times(2)))?;
        m.set(
            1,
            1,
            word(&[CMat], a)
                .sub(&OpPoly::identity(a).scale_int(2))
                .scale(&s_inv_times(1)),
        )?;
        m.set(1, 2, word(&[DHStar], sg).scale_int(-1))?;
        m.set(1, 3, word(&[IEmbed, StarH], b).scale(&s_times(-2)))?;
        m.set(2, 2, word(&[LieXiStar], sg).scale(&s_inv_times(1)))?;
        m.set(2, 3, word(&[DHStar], b))?;
        Ok(())
    })();
    ok.expect("codiff block entries are well-placed");
    m
}

/// The Hodge Laplacian on 3-form slots, `d d^{⋆_s} + (⋆_s d)²`.
pub fn laplace_v3<K: ParamField>() -> Result<BlockOp<K>, OpError> {
    let dd = d_v2::<K>().mul(&codiff_v3::<K>())?;
    let star = star_s_d_v3::<K>();
    Ok(dd.add(&star.mul(&star)?))
}

/// Rules that push Hodge stars through a composed word: star–star
/// collapse, conjugation to the codifferential, and commutation with the
/// vertical operators.
fn star_conjugation_ids() -> Vec<&'static str> {
    vec![
        "star-d-star-codiff",
        "codiff-star-swap-even",
        "codiff-star-swap-odd",
        "star-involution-even",
        "star-involution-odd",
        "xi-star-swap",
        "xi-star-star-swap",
        "star-cmat-commute",
    ]
}

/// Both second-order columns on a pure middle-slot argument.
///
/// The `d d^{⋆_s}` column must agree with its closed form literally —
/// composition alone, zero rewrite steps — while the `(⋆_s d)²` column
/// needs only star-conjugation rules.  Returns the rewrite step count.
pub fn check_second_order_columns<K: ParamField>() -> Result<usize, String> {
    use OpSymbol::*;
    let v3 = v3_spaces();
    let (a, sg) = (v3[1], v3[2]);
    let e = |msg: OpError| msg.to_string();

    // Closed forms of the d∘d^{⋆_s} column.
    let cm2 = word::<K>(&[CMat], a).sub(&OpPoly::identity(a).scale_int(2));
    let dd = d_v2::<K>().mul(&codiff_v3::<K>()).map_err(e)?;
    let dd_targets: Vec<OpPoly<K>> = vec![
        word(&[LieXiStar, DHStar], a).scale(&s_inv_times(-1)),
        word(&[DH, DHStar], a).add(
            &cm2.compose(&cm2)
                .map_err(e)?
                .scale(&s_inv_times(1))
                .scale(&s_inv_times(1)),
        ),
        word::<K>(&[DH], a)
            .compose(&cm2)
            .map_err(e)?
            .scale(&s_inv_times(-1))
            .add(&word(&[LOmega, DHStar], a).scale(&s_times(2))),
        word(&[StarH, TTrace, CMat], a)
            .scale_int(-2)
            .add(&word(&[StarH, TTrace], a).scale_int(4)),
    ];
    for (i, t) in dd_targets.iter().enumerate() {
        if dd.entry(i, 1) != t {
            return Err(format!(
                "dd* column slot {i}: {} ≠ {}",
                dd.entry(i, 1).render(),
                t.render()
            ));
        }
    }

    // Closed forms of the (⋆_s d)² column, reached by star conjugation.
    let star = star_s_d_v3::<K>();
    let ss = star.mul(&star).map_err(e)?;
    let ss_targets: Vec<OpPoly<K>> = vec![
        word(&[TTrace, StarH, DH], a)
            .scale(&s_times(2))
            .add(&word(&[DHStar, LieXiStar], a).scale(&s_inv_times(1))),
        word(&[BigP, BigP], a)
            .scale(&s_times(4))
            .scale(&K::s())
            .add(&word(&[DHStar, DH], a))
            .add(&word(&[LieXi, LieXiStar], a).scale(&s_inv_times(1)).scale(&s_inv_times(1))),
        word::<K>(&[CMat], sg)
            .sub(&OpPoly::identity(sg).scale_int(2))
            .compose(&word(&[DH], a))
            .map_err(e)?
            .scale(&s_inv_times(1))
            .sub(&word(&[StarH, DH, BigP], a).scale(&s_times(2))),
        word(&[StarH, LieXiStar, BigP], a).scale_int(2),
    ];
    let rules = RuleSet::<K>::select(&star_conjugation_ids(), Vec::new()).map_err(e)?;
    let mut steps = 0;
    for (i, t) in ss_targets.iter().enumerate() {
        let diff = ss.entry(i, 1).sub(t);
        let (nf, n) = normalize(&diff, &rules, super::rewrite::DEFAULT_CAP).map_err(e)?;
        steps += n;
        if !nf.is_zero() {
            return Err(format!("(⋆d)² column slot {i}: residual {}", nf.render()));
        }
    }
    Ok(steps)
}

/// The three slot projections of `d^{⋆_s}(⋆_s d)` on a pure middle-slot
/// argument vanish; each row is discharged by an explicit replay script.
pub fn check_codiff_stard_projections<K: ParamField>() -> Result<usize, String> {
    let e = |msg: OpError| msg.to_string();
    let m = codiff_v3::<K>().mul(&star_s_d_v3::<K>()).map_err(e)?;
    let scripts = [
        // Slot of Ω⁰(H,ℝ³): the coclosedness bridge.
        "apply l-omega-star-selfdual\n\
         apply codiff-p-symmetry-rule\n",
        // Slot of Ω¹(H,ℝ³): curvature flux against the projection identity.
        "apply codiff-star-swap-even\n\
         apply d-squared-flux\n\
         apply star-wedge-om-1\n\
         apply star-wedge-om-2\n\
         apply star-wedge-om-3\n\
         apply star-involution-odd\n\
         apply cmat-projection-contract\n\
         apply p-expand\n",
        // Slot of Ω²H: commute the vertical divergence past the star.
        "apply xi-star-star-swap\n\
         apply codiff-star-swap-odd\n\
         apply xi-star-d-commute\n",
    ];
    let ids: Vec<&str> = [
        star_conjugation_ids(),
        vec![
            "l-omega-star-selfdual",
            "codiff-p-symmetry-rule",
            "d-squared-flux",
            "star-wedge-om-1",
            "star-wedge-om-2",
            "star-wedge-om-3",
            "cmat-projection-contract",
            "p-expand",
            "xi-star-d-commute",
        ],
    ]
    .concat();
    let rules = RuleSet::<K>::select(&ids, Vec::new()).map_err(e)?;
    let mut steps = 0;
    for (i, text) in scripts.iter().enumerate() {
        let script = Script::parse(text).map_err(e)?;
        let (out, n) = replay(m.entry(i, 1), &rules, &script).map_err(|err| {
            format!("slot {i}: {err}")
        })?;
        steps += n;
        if !out.is_zero() {
            return Err(format!("slot {i}: residual {}", out.render()));
        }
    }
    Ok(steps)
}

/// The Hodge Laplacian on a pure middle-slot argument concentrates, after
/// adding the first-order correction `2s ⋆_s d` of the paired slots, into
/// a closed second-order form on each slot.
pub fn check_laplacian_block_identity<K: ParamField>() -> Result<usize, String> {
    use OpSymbol::*;
    let e = |msg: OpError| msg.to_string();
    let v3 = v3_spaces();
    let a = v3[1];
    let lap = laplace_v3::<K>().map_err(e)?;
    let star = star_s_d_v3::<K>();

    // The paired argument (0, Pα, 0, ⋆T(α)) of the correction term.
    let paired: Vec<OpPoly<K>> = vec![
        OpPoly::zero(a, v3[0]),
        word(&[BigP], a),
        OpPoly::zero(a, v3[2]),
        word(&[StarH, TTrace], a),
    ];
    let correction = star.apply(&paired).map_err(e)?;

    let cm2 = word::<K>(&[CMat], a).sub(&OpPoly::identity(a).scale_int(2));
    let targets: Vec<OpPoly<K>> = vec![
        OpPoly::zero(a, v3[0]),
        word(&[DH, DHStar], a)
            .add(&word(&[DHStar, DH], a))
            .add(&cm2.compose(&cm2).map_err(e)?.scale(&s_inv_times(1)).scale(&s_inv_times(1)))
            .add(
                &word(&[LieXi, LieXiStar], a)
                    .scale(&s_inv_times(1))
                    .scale(&s_inv_times(1)),
            )
            .sub(&word(&[LieXi, TTrace], a).scale_int(2)),
        word(&[LOmega, DHStar], a).scale(&s_times(2)),
        word(&[StarH, TTrace, CMat], a)
            .scale_int(-2)
            .add(&word(&[StarH, TTrace], a).scale_int(4)),
    ];

    let ids: Vec<&str> = [
        star_conjugation_ids(),
        vec![
            "trace-star-d-bridge",
            "codiff-xi-star-commute",
            "d-cmat-commute",
            "xi-star-d-commute",
        ],
    ]
    .concat();
    let rules = RuleSet::<K>::select(&ids, Vec::new()).map_err(e)?;
    let mut steps = 0;
    for i in 0..4 {
        let lhs = lap
            .entry(i, 1)
            .add(&correction[i].scale(&s_times(2)));
        let diff = lhs.sub(&targets[i]);
        let (nf, n) = normalize(&diff, &rules, super::rewrite::DEFAULT_CAP).map_err(e)?;
        steps += n;
        if !nf.is_zero() {
            return Err(format!("slot {i}: residual {}", nf.render()));
        }
    }
    Ok(steps)
}

/// First-slot projection of the Laplacian on the constrained family
/// `(−T(σ), α, σ, ⋆T(α))` with `σ` pointwise symmetric: the projection
/// factors through the comparison operator
/// `𝒢^s = Δ_H + 𝒞/s² − 2p − 2(1+1/s²)(C−2)` plus first-order terms
/// carried by `⋆_s d`.
pub fn check_laplacian_first_projection<K: ParamField>() -> Result<usize, String> {
    use OpSymbol::*;
    let e = |msg: OpError| msg.to_string();
    let v3 = v3_spaces();
    let (a, sg) = (v3[1], v3[2]);
    let g_alpha = Gen { tag: 1, space: a };
    let g_sigma = Gen { tag: 2, space: sg };

    // Slot vector of the constrained family, anchored at the section level.
    let vec: Vec<OpPoly<K>> = vec![
        word(&[TTrace, g_sigma], POINT).scale_int(-1),
        word(&[g_alpha], POINT),
        word(&[g_sigma], POINT),
        word(&[StarH, TTrace, g_alpha], POINT),
    ];

    let lap = laplace_v3::<K>().map_err(e)?;
    let star = star_s_d_v3::<K>();
    let lhs = &lap.apply(&vec).map_err(e)?[1];
    let sd = star.apply(&vec).map_err(e)?;

    // 𝒢^s on the first projection.
    let one_plus = K::one().add(&K::s().inv().expect("s ≠ 0").mul(&K::s().inv().unwrap()));
    let g_op = word::<K>(&[LapH], a)
        .add(&word(&[Casimir], a).scale(&s_inv_times(1)).scale(&s_inv_times(1)))
        .sub(&word(&[SmallP], a).scale_int(2))
        .sub(
            &word::<K>(&[CMat], a)
                .sub(&OpPoly::identity(a).scale_int(2))
                .scale(&one_plus)
                .scale_int(2),
        );
    let rhs = word::<K>(&[BigP], a)
        .compose(&sd[1])
        .map_err(e)?
        .scale(&s_times(-2))
        .add(
            &word::<K>(&[IEmbed, StarH], v3[3])
                .compose(&sd[3])
                .map_err(e)?
                .scale(&s_times(-2)),
        )
        .add(&g_op.compose(&vec[1]).map_err(e)?);

    // Pointwise symmetry of σ: its wedge trace against the triple vanishes.
    let sym_hyp = Rule::<K>::with_coeffs(
        "hyp-sigma-symmetric",
        vec![LOmegaStar, g_sigma],
        Vec::new(),
        super::rules::Provenance::Hypothesis,
    );

    let ids: Vec<&str> = [
        star_conjugation_ids(),
        vec![
            "laplace-expand-mid",
            "trace-star-d-bridge",
            "codiff-p-symmetry-rule",
            "codiff-xi-star-commute",
            "xi-star-d-commute",
            "d-xi-commute",
            "d-cmat-commute",
            "codiff-cmat-commute",
            "stard-omvec-embed",
            "cmat-projection-contract",
            "cmat-square-rule",
            "embed-trace-collapse",
            "trace-lie-xi",
            "lie-xi-star-embed",
            "trace-embed-contract",
            "trace-cmat-transfer-rule",
            "trace-p-transfer-rule",
            "trace-casimir-transfer-rule",
        ],
    ]
    .concat();
    let rules = RuleSet::<K>::select(&ids, vec![sym_hyp]).map_err(e)?;
    let diff = lhs.sub(&rhs);
    let (nf, steps) = normalize(&diff, &rules, super::rewrite::DEFAULT_CAP).map_err(e)?;
    if !nf.is_zero() {
        return Err(format!("residual {}", nf.render()));
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ParamScalar;

    #[test]
    fn identity_blocks_are_neutral() {
        let star = star_s_d_v3::<ParamScalar>();
        let id3 = BlockOp::identity(v3_spaces());
        assert_eq!(id3.mul(&star).unwrap(), star);
        assert_eq!(star.mul(&id3).unwrap(), star);
    }

    #[test]
    fn shape_mismatches_are_rejected() {
        let star = star_s_d_v3::<ParamScalar>();
        let codiff = codiff_v3::<ParamScalar>();
        // d^{⋆_s} lands in 2-form slots; composing ⋆_s d after it is a
        // shape error.
        assert!(star.mul(&codiff).is_err());
        let mut z = BlockOp::<ParamScalar>::zero(v3_spaces(), v3_spaces());
        let misplaced = OpPoly::identity(Space::single(0));
        assert!(z.set(1, 1, misplaced).is_err());
    }

    #[test]
    fn second_order_columns_close() {
        let steps = check_second_order_columns::<ParamScalar>().unwrap();
        assert!(steps > 0);
    }

    #[test]
    fn codiff_stard_projections_vanish_by_replay() {
        check_codiff_stard_projections::<ParamScalar>().unwrap();
    }

    #[test]
    fn laplacian_block_identity_holds() {
        check_laplacian_block_identity::<ParamScalar>().unwrap();
    }

    #[test]
    fn laplacian_first_projection_factors() {
        check_laplacian_first_projection::<ParamScalar>().unwrap();
    }
}

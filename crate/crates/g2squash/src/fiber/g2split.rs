//! Pointwise type decomposition of 3- and 4-forms.
//!
//! The cone 3-form `φ` splits `Λ³` into three orthogonal pieces of ranks
//! 1, 7 and 27: the line `ℝφ`, the span of `⋆(b^i∧φ)` over the frame
//! covectors, and the symmetric-tensor complement characterized by
//! `γ∧φ = 0` and `γ∧⋆φ = 0`.  The 4-form projectors are the Hodge-star
//! conjugates.  All projectors are exact rational 35×35 matrices built once
//! and shared.

use once_cell::sync::Lazy;

use super::basis::{self, VOLUME_MASK};
use super::form::Form;
use super::model::model;
use crate::scalar::linalg::Mat;
use crate::scalar::{rint, Rat, Scalar};

/// The three pointwise types of a 3- or 4-form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TypeClass {
    /// The line through `φ` (resp. `⋆φ`).
    One,
    /// The frame-covector type `⋆(b^i∧φ)` (resp. `b^i∧φ`).
    Seven,
    /// The symmetric-tensor type.
    TwentySeven,
}

struct SplitData {
    d3: Vec<u8>,
    d4: Vec<u8>,
    p3: [Mat<Rat>; 3],
    p4: [Mat<Rat>; 3],
    star34: Mat<Rat>,
    star43: Mat<Rat>,
}

fn outer_over(v: &[Rat], denom: i64) -> Mat<Rat> {
    let d = rint(denom);
    Mat::from_fn(v.len(), v.len(), |i, j| {
        v[i].mul(&v[j]).div(&d).expect("nonzero denominator")
    })
}

/// Column-span projector `B(BᵀB)⁻¹Bᵀ` for a full-column-rank `B`.
fn span_projector(b: &Mat<Rat>) -> Mat<Rat> {
    let bt = b.transpose();
    let gram = bt.mul(b);
    let gi = gram
        .inverse()
        .expect("span basis must be linearly independent");
    b.mul(&gi).mul(&bt)
}

fn build() -> SplitData {
    let m = model();
    let d3 = basis::masks_of_degree(3);
    let d4 = basis::masks_of_degree(4);
    assert_eq!((d3.len(), d4.len()), (35, 35));

    let phi_vec = m.phi.to_vec(&d3);
    let psi_vec = m.psi.to_vec(&d4);
    let p1_3 = outer_over(&phi_vec, 7);
    let p1_4 = outer_over(&psi_vec, 7);

    // Vector-type bases: ⋆(b^i∧φ) in degree 3, b^i∧φ in degree 4.
    let cols3: Vec<Vec<Rat>> = (0..7)
        .map(|i| {
            Form::<Rat>::monomial(1 << i)
                .wedge(&m.phi)
                .star7()
                .to_vec(&d3)
        })
        .collect();
    let cols4: Vec<Vec<Rat>> = (0..7)
        .map(|i| Form::<Rat>::monomial(1 << i).wedge(&m.phi).to_vec(&d4))
        .collect();
    let b3 = Mat::from_fn(35, 7, |i, j| cols3[j][i].clone());
    let b4 = Mat::from_fn(35, 7, |i, j| cols4[j][i].clone());
    let p7_3 = span_projector(&b3);
    let p7_4 = span_projector(&b4);

    let id = Mat::<Rat>::identity(35);
    let p27_3 = id.sub(&p1_3).sub(&p7_3);
    let p27_4 = id.sub(&p1_4).sub(&p7_4);

    // Hodge star as a coefficient matrix in both directions.
    let star34 = Mat::from_fn(35, 35, |i, j| {
        if d4[i] == VOLUME_MASK & !d3[j] {
            rint(basis::star7_sign(d3[j]) as i64)
        } else {
            rint(0)
        }
    });
    let star43 = Mat::from_fn(35, 35, |i, j| {
        if d3[i] == VOLUME_MASK & !d4[j] {
            rint(basis::star7_sign(d4[j]) as i64)
        } else {
            rint(0)
        }
    });

    SplitData {
        d3,
        d4,
        p3: [p1_3, p7_3, p27_3],
        p4: [p1_4, p7_4, p27_4],
        star34,
        star43,
    }
}

static SPLIT: Lazy<SplitData> = Lazy::new(build);

/// The 35 degree-3 masks in canonical order.
pub fn d3_masks() -> &'static [u8] {
    &SPLIT.d3
}

/// The 35 degree-4 masks in canonical order.
pub fn d4_masks() -> &'static [u8] {
    &SPLIT.d4
}

fn index(t: TypeClass) -> usize {
    match t {
        TypeClass::One => 0,
        TypeClass::Seven => 1,
        TypeClass::TwentySeven => 2,
    }
}

/// The rational projector matrix on 3-form coefficients.
pub fn projector3(t: TypeClass) -> &'static Mat<Rat> {
    &SPLIT.p3[index(t)]
}

/// The rational projector matrix on 4-form coefficients.
pub fn projector4(t: TypeClass) -> &'static Mat<Rat> {
    &SPLIT.p4[index(t)]
}

/// The Hodge star as a coefficient matrix from degree-3 to degree-4 masks.
pub fn star_matrix_3to4() -> &'static Mat<Rat> {
    &SPLIT.star34
}

/// The Hodge star as a coefficient matrix from degree-4 to degree-3 masks.
pub fn star_matrix_4to3() -> &'static Mat<Rat> {
    &SPLIT.star43
}

/// Apply a rational matrix to a form's coefficient vector over explicit
/// bases, in any scalar ring.
pub fn apply_rat_matrix<C: Scalar>(
    m: &Mat<Rat>,
    f: &Form<C>,
    in_masks: &[u8],
    out_masks: &[u8],
) -> Form<C> {
    assert_eq!(m.cols(), in_masks.len());
    assert_eq!(m.rows(), out_masks.len());
    let coeffs = f.to_vec(in_masks);
    let mut out = Form::zero();
    for i in 0..m.rows() {
        let mut acc = C::zero();
        for (j, cj) in coeffs.iter().enumerate() {
            let e = m.get(i, j);
            if !e.is_zero() && !cj.is_zero() {
                acc = acc.add(&C::from_rat(e).mul(cj));
            }
        }
        out.add_term(out_masks[i], &acc);
    }
    out
}

/// Project a 3-form onto a type component.
pub fn project3<C: Scalar>(t: TypeClass, f: &Form<C>) -> Form<C> {
    apply_rat_matrix(projector3(t), f, &SPLIT.d3, &SPLIT.d3)
}

/// Project a 4-form onto a type component.
pub fn project4<C: Scalar>(t: TypeClass, f: &Form<C>) -> Form<C> {
    apply_rat_matrix(projector4(t), f, &SPLIT.d4, &SPLIT.d4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::MPoly;

    const TYPES: [TypeClass; 3] = [TypeClass::One, TypeClass::Seven, TypeClass::TwentySeven];

    #[test]
    fn projectors_are_an_orthogonal_resolution() {
        for (projs, expect_ranks) in [(&SPLIT.p3, [1, 7, 27]), (&SPLIT.p4, [1, 7, 27])] {
            let mut sum = Mat::<Rat>::zero(35, 35);
            for (k, p) in projs.iter().enumerate() {
                // Idempotent, symmetric, with trace = rank.
                assert_eq!(p.mul(p), *p);
                assert_eq!(p.transpose(), *p);
                assert_eq!(p.trace(), rint(expect_ranks[k]));
                assert_eq!(p.rank(), expect_ranks[k] as usize);
                sum = sum.add(p);
                for q in projs.iter().skip(k + 1) {
                    assert!(p.mul(q).is_zero());
                }
            }
            assert_eq!(sum, Mat::identity(35));
        }
    }

    #[test]
    fn degree_four_projectors_are_star_conjugates() {
        // ⋆ matrices invert each other.
        assert_eq!(SPLIT.star43.mul(&SPLIT.star34), Mat::identity(35));
        for t in TYPES {
            let conj = SPLIT
                .star34
                .mul(projector3(t))
                .mul(&SPLIT.star43);
            assert_eq!(&conj, projector4(t));
        }
    }

    #[test]
    fn symmetric_type_is_cut_out_by_wedge_conditions() {
        // Over a fully generic 3-form (one polynomial variable per basis
        // monomial): the 27-part wedges to zero against both φ and ⋆φ, the
        // 1-part is the φ-component, and γ∧⋆φ sees only the 1-part.
        let mut gamma: Form<MPoly<Rat>> = Form::zero();
        for &mask in d3_masks() {
            gamma.add_term(mask, &MPoly::var(mask as u32));
        }
        let phi = super::super::maps::lift::<MPoly<Rat>>(&model().phi);
        let psi = super::super::maps::lift::<MPoly<Rat>>(&model().psi);

        let g27 = project3(TypeClass::TwentySeven, &gamma);
        assert!(g27.wedge(&phi).is_zero());
        assert!(g27.wedge(&psi).is_zero());

        let g1 = project3(TypeClass::One, &gamma);
        assert!(g1.wedge(&phi).is_zero()); // φ∧φ = 0.
        // γ∧⋆φ = ⟨γ, φ⟩·vol depends only on the 1-part.
        assert_eq!(gamma.wedge(&psi), g1.wedge(&psi));
        let vol = Form::<MPoly<Rat>>::monomial(VOLUME_MASK);
        assert_eq!(gamma.wedge(&psi), vol.scale(&gamma.inner(&phi)));

        // The decomposition reassembles the form.
        let g7 = project3(TypeClass::Seven, &gamma);
        assert_eq!(g1.add(&g7).add(&g27), gamma);

        // The vector type pairs nontrivially with φ under wedge.
        for i in 0..7u8 {
            let b = Form::<Rat>::monomial(1 << i).wedge(&model().phi).star7();
            assert!(!b.wedge(&model().phi).is_zero());
        }
    }

    #[test]
    fn known_members() {
        let m = model();
        // φ is pure type 1; φ̃ = φ − 7Z¹²³ is pure type 27.
        assert_eq!(project3(TypeClass::One, &m.phi), m.phi);
        assert!(project3(TypeClass::Seven, &m.phi).is_zero());
        assert!(project3(TypeClass::One, &m.phitilde).is_zero());
        assert!(project3(TypeClass::Seven, &m.phitilde).is_zero());
        assert_eq!(project3(TypeClass::TwentySeven, &m.phitilde), m.phitilde);
        // b^i∧φ is pure vector type in degree 4.
        for i in 0..7u8 {
            let v = Form::<Rat>::monomial(1 << i).wedge(&m.phi);
            assert_eq!(project4(TypeClass::Seven, &v), v);
            assert!(project4(TypeClass::One, &v).is_zero());
        }
    }
}

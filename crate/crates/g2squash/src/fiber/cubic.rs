//! Pointwise quadratic moments and the cubic pairing of 3-forms.
//!
//! For 3-forms `γ` the quadratic moment is the symmetric 2-tensor
//! `p(γ,γ)(U,V) = ⟨U⌟γ, V⌟γ⟩`, polarized in the two arguments; pairing a
//! moment against the inverse symmetric embedding of a third form gives the
//! exact cubic form that controls third-order deformation obstructions:
//! `P(γ₁,γ₂,γ₃) = ⟨p(γ₁,γ₂), 𝐢⁻¹γ₃⟩`.
//!
//! Everything is generic over the coefficient ring, so the same code runs
//! on rational points and on fully generic polynomial sections.

use super::endo::{inverse_embed, pair_endo, TransferError};
use super::form::Form;
use super::maps::{i_triple, kappa, zero_triple, Triple};
use crate::scalar::linalg::Mat;
use crate::scalar::Scalar;

/// Polarized quadratic moment
/// `p(γ₁,γ₂)(E_i,E_j) = ½(⟨E_i⌟γ₁, E_j⌟γ₂⟩ + ⟨E_i⌟γ₂, E_j⌟γ₁⟩)`.
pub fn quadratic_moment<C: Scalar>(g1: &Form<C>, g2: &Form<C>) -> Mat<C> {
    let half = C::from_frac(1, 2);
    let c1: Vec<Form<C>> = (0..7u8).map(|i| g1.contract_frame(i)).collect();
    let c2: Vec<Form<C>> = (0..7u8).map(|i| g2.contract_frame(i)).collect();
    Mat::from_fn(7, 7, |i, j| {
        c1[i].inner(&c2[j]).add(&c2[i].inner(&c1[j])).mul(&half)
    })
}

/// The cubic pairing `P(γ₁,γ₂,γ₃) = ⟨p(γ₁,γ₂), 𝐢⁻¹γ₃⟩`.
///
/// The third argument must be a symmetric-tensor avatar (no vector-type
/// component).
pub fn cubic<C: Scalar>(g1: &Form<C>, g2: &Form<C>, g3: &Form<C>) -> Result<C, TransferError> {
    let moment = quadratic_moment(g1, g2);
    let h = inverse_embed(g3)?;
    Ok(pair_endo(&moment, &h))
}

/// The vector-quadratic section `γ₂ = κ(𝕀X♭, 0)` for a horizontal vector
/// with components `x`.
pub fn vector_section<C: Scalar>(x: &[C; 4]) -> Form<C> {
    let mut flat = Form::zero();
    for (i, c) in x.iter().enumerate() {
        flat.add_term(super::basis::e_mask(i as u8 + 1), c);
    }
    kappa(&i_triple(&flat), &zero_triple())
}

/// The 2-form-valued section `γ₁ = κ(0, σ)`.
pub fn two_form_section<C: Scalar>(sigma: &Triple<C>) -> Form<C> {
    kappa(&zero_triple(), sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::endo::{asd_basis, block_diag, extend_h, h34, s_endo};
    use crate::fiber::model::model;
    use crate::scalar::{rat, rint, MPoly, Rat};

    type P = MPoly<Rat>;

    #[test]
    fn rebalanced_cone_form_moment_and_cubic() {
        let m = model();
        // p(φ̃,φ̃) = 38·id_V + 3·id_H.
        let p = quadratic_moment(&m.phitilde, &m.phitilde);
        assert_eq!(p, block_diag(&rint(38), &rint(3)));
        // P(φ̃,φ̃,φ̃) = ⟨p, −½h₃₄⟩ = −210.
        assert_eq!(
            cubic(&m.phitilde, &m.phitilde, &m.phitilde).unwrap(),
            rint(-210)
        );
        // Plain cone form: p(φ,φ) = 3·id (each unit contraction has norm 3),
        // P(φ³) = ⟨3id, id/3⟩ = 7.
        let pf = quadratic_moment(&m.phi, &m.phi);
        assert_eq!(pf, block_diag(&rint(3), &rint(3)));
        assert_eq!(cubic(&m.phi, &m.phi, &m.phi).unwrap(), rint(7));
    }

    fn generic_vector() -> [P; 4] {
        [P::var(0), P::var(1), P::var(2), P::var(3)]
    }

    fn norm_sq(x: &[P; 4]) -> P {
        x.iter().fold(P::zero(), |acc, c| acc.add(&c.mul(c)))
    }

    #[test]
    fn vector_section_moment_is_block_plus_rank_one() {
        // p(γ₂,γ₂) = 2|X|²id_V + 10|X|²id_H − 10·X⊗X, fully generically.
        let x = generic_vector();
        let g2 = vector_section(&x);
        let p = quadratic_moment(&g2, &g2);
        let n = norm_sq(&x);
        let mut expect = block_diag(&n.scale(&rint(2)), &n.scale(&rint(10)));
        for i in 0..4 {
            for j in 0..4 {
                let v = expect
                    .get(3 + i, 3 + j)
                    .sub(&x[i].mul(&x[j]).scale(&rint(10)));
                expect.set(3 + i, 3 + j, v);
            }
        }
        assert_eq!(p, expect);
    }

    fn generic_asd_triple() -> Triple<P> {
        let tau = asd_basis::<P>();
        let mut sigma = zero_triple();
        for a in 0..3 {
            for (k, t) in tau.iter().enumerate() {
                sigma[a] = sigma[a].add(&t.scale(&P::var((4 + 3 * a + k) as u32)));
            }
        }
        sigma
    }

    fn triple_norm_sq(sigma: &Triple<P>) -> P {
        sigma
            .iter()
            .fold(P::zero(), |acc, s| acc.add(&s.inner(s)))
    }

    #[test]
    fn two_form_section_moment_is_gram_plus_half_norm() {
        // p(γ₁,γ₁) has V-block ⟨σ_a,σ_b⟩, H-block ½|σ|²·id, and no mixed
        // block — fully generically over anti-self-dual triples.
        let sigma = generic_asd_triple();
        let g1 = two_form_section(&sigma);
        let p = quadratic_moment(&g1, &g1);
        let half_norm = triple_norm_sq(&sigma).scale(&rat(1, 2));
        let expect = Mat::from_fn(7, 7, |i, j| {
            if i < 3 && j < 3 {
                sigma[i].inner(&sigma[j])
            } else if i >= 3 && i == j {
                half_norm.clone()
            } else {
                P::zero()
            }
        });
        assert_eq!(p, expect);
    }

    #[test]
    fn mixed_cubics_with_the_cone_form() {
        let m = model();
        let phitilde = crate::fiber::maps::lift::<P>(&m.phitilde);
        let sigma = generic_asd_triple();
        let g1 = two_form_section(&sigma);
        // P(γ₁,γ₁,φ̃) = |σ|².
        assert_eq!(
            cubic(&g1, &g1, &phitilde).unwrap(),
            triple_norm_sq(&sigma)
        );
        // P(φ̃,φ̃,γ₁) = 0 and P(γ₁,γ₁,γ₁) = 0.
        assert!(cubic(&phitilde, &phitilde, &g1).unwrap().is_zero());
        assert!(cubic(&g1, &g1, &g1).unwrap().is_zero());
    }

    #[test]
    fn vector_section_cubics() {
        let m = model();
        let phitilde = crate::fiber::maps::lift::<P>(&m.phitilde);
        let x = generic_vector();
        let g2 = vector_section(&x);
        let n = norm_sq(&x);
        // P(γ₂,γ₂,φ̃) = 33|X|².
        assert_eq!(
            cubic(&g2, &g2, &phitilde).unwrap(),
            n.scale(&rint(33))
        );
        // P(γ₂,γ₂,γ₁) = −5·𝐬(σ)(X,X) for anti-self-dual σ.
        let sigma = generic_asd_triple();
        let g1 = two_form_section(&sigma);
        let s = s_endo(&sigma);
        let mut sxx = P::zero();
        for i in 0..4 {
            for j in 0..4 {
                sxx = sxx.add(&x[i].mul(s.get(i, j)).mul(&x[j]));
            }
        }
        assert_eq!(
            cubic(&g2, &g2, &g1).unwrap(),
            sxx.scale(&rint(-5))
        );
    }

    #[test]
    fn inverse_embeddings_of_sections() {
        // 𝐢⁻¹γ₁ = ½𝐬(σ) extended by zero; 𝐢⁻¹φ̃ = −½h₃₄.
        let sigma = generic_asd_triple();
        let h = inverse_embed(&two_form_section(&sigma)).unwrap();
        assert_eq!(
            h.scale(&P::from_int(2)),
            extend_h(&s_endo(&sigma))
        );
        let m = model();
        assert_eq!(
            inverse_embed(&m.phitilde).unwrap(),
            h34::<Rat>().scale(&rat(-1, 2))
        );
        // 𝐢⁻¹γ₂: mixed vertical-horizontal entries Z^a ↔ I_aX.
        let x = generic_vector();
        let g2 = vector_section(&x);
        let h2 = inverse_embed(&g2).unwrap();
        // Purely vertical and purely horizontal blocks vanish.
        for i in 0..3 {
            for j in 0..3 {
                assert!(h2.get(i, j).is_zero());
            }
        }
        for i in 3..7 {
            for j in 3..7 {
                assert!(h2.get(i, j).is_zero());
            }
        }
        // Mixed block: h2[a][3+k] = (I_aX)_k.
        let mmod = model();
        for a in 0..3 {
            for k in 0..4 {
                let mut expect = P::zero();
                for j in 0..4 {
                    expect = expect.add(
                        &P::from_rat(mmod.v_mat[a].get(k, j)).mul(&x[j]),
                    );
                }
                assert_eq!(h2.get(a, 3 + k), &expect, "a={a} k={k}");
                assert_eq!(h2.get(3 + k, a), &expect);
            }
        }
    }
}

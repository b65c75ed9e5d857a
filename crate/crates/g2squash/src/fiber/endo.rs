//! Symmetric endomorphisms and their 3-form avatars.
//!
//! A symmetric 2-tensor `h` embeds into 3-forms by
//! `𝐢(h) = Σ_{ij} h_{ij}·b^i∧(B_j⌟φ)`; the image is exactly the type-(1+27)
//! part of `Λ³`, with `𝐢(g) = 3φ`.  The inverse transfer is computed by a
//! precomputed rational left inverse, guarded by a vector-type membership
//! check and an exact roundtrip verification.  The quaternionic square of a
//! 2-form triple, `𝐬(σ) = Σ_a σ_a^♯∘I_a`, lands in horizontal
//! endomorphisms and matches the inverse transfer of `κ(0,σ)` up to the
//! factor 2 on anti-self-dual triples.

use once_cell::sync::Lazy;

use super::basis;
use super::form::Form;
use super::g2split::{self, TypeClass};
use super::maps::Triple;
use super::model::model;
use crate::scalar::linalg::Mat;
use crate::scalar::{rint, Rat, Scalar, ScalarError};

/// Failure modes of the inverse transfer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransferError {
    /// The form has a nonzero vector-type component.
    #[error("form has a vector-type component and is not a symmetric-tensor avatar")]
    VectorComponent,
    /// The candidate tensor does not reproduce the form (inconsistent
    /// coefficients).
    #[error("form is not in the image of the symmetric embedding")]
    NotInImage,
    /// Scalar arithmetic failed (division in a non-field ring).
    #[error("scalar arithmetic: {0}")]
    Scalar(#[from] ScalarError),
}

/// `𝐢(h) = Σ_{ij} h_{ij}·b^i∧(B_j⌟φ)` for a (symmetric) 7×7 matrix.
pub fn embed_sym<C: Scalar>(h: &Mat<C>) -> Form<C> {
    assert_eq!((h.rows(), h.cols()), (7, 7));
    let phi = super::maps::lift::<C>(&model().phi);
    let mut out = Form::zero();
    for j in 0..7u8 {
        let contracted = phi.contract_frame(j);
        for i in 0..7u8 {
            let hij = h.get(i as usize, j as usize);
            if hij.is_zero() {
                continue;
            }
            let piece = Form::<C>::monomial(1 << i).wedge(&contracted).scale(hij);
            out = out.add(&piece);
        }
    }
    out
}

/// The symmetric-unit basis: pairs `(i, j)` with `i ≤ j`, 28 entries in
/// lexicographic order.
pub fn sym_basis() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..7 {
        for j in i..7 {
            out.push((i, j));
        }
    }
    out
}

struct Transfer {
    /// 35×28: coefficients of `𝐢(E_ij + E_ji)` / `𝐢(E_ii)` over 3-form
    /// masks.
    forward: Mat<Rat>,
    /// 28×35 left inverse.
    back: Mat<Rat>,
}

fn build_transfer() -> Transfer {
    let d3 = g2split::d3_masks();
    let units = sym_basis();
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(28);
    for &(i, j) in &units {
        let mut h = Mat::<Rat>::zero(7, 7);
        h.set(i, j, rint(1));
        if i != j {
            h.set(j, i, rint(1));
        }
        cols.push(embed_sym(&h).to_vec(d3));
    }
    let forward = Mat::from_fn(35, 28, |r, c| cols[c][r].clone());
    let back = forward
        .left_inverse()
        .expect("symmetric embedding must have full column rank");
    Transfer { forward, back }
}

static TRANSFER: Lazy<Transfer> = Lazy::new(build_transfer);

/// The 35×28 coefficient matrix of the symmetric embedding over the
/// canonical degree-3 masks and upper-triangular unit basis.
pub fn transfer_matrix() -> &'static Mat<Rat> {
    &TRANSFER.forward
}

/// Inverse of the symmetric embedding.
///
/// Returns the unique symmetric matrix `h` with `𝐢(h) = γ`; fails if `γ`
/// has a vector-type component or is otherwise outside the image.
pub fn inverse_embed<C: Scalar>(gamma: &Form<C>) -> Result<Mat<C>, TransferError> {
    if !g2split::project3(TypeClass::Seven, gamma).is_zero() {
        return Err(TransferError::VectorComponent);
    }
    let d3 = g2split::d3_masks();
    let coeffs = gamma.to_vec(d3);
    let t = &*TRANSFER;
    let units = sym_basis();
    let mut h = Mat::<C>::zero(7, 7);
    for (r, &(i, j)) in units.iter().enumerate() {
        let mut acc = C::zero();
        for (c, x) in coeffs.iter().enumerate() {
            let e = t.back.get(r, c);
            if !e.is_zero() && !x.is_zero() {
                acc = acc.add(&C::from_rat(e).mul(x));
            }
        }
        h.set(i, j, acc.clone());
        if i != j {
            h.set(j, i, acc);
        }
    }
    if &embed_sym(&h) != gamma {
        return Err(TransferError::NotInImage);
    }
    Ok(h)
}

/// Trace pairing `⟨A, B⟩ = tr(AᵀB)`.
pub fn pair_endo<C: Scalar>(a: &Mat<C>, b: &Mat<C>) -> C {
    a.transpose().mul(b).trace()
}

/// The horizontal quaternionic square `𝐬(σ) = Σ_a σ_a^♯∘I_a` as a 4×4
/// matrix on horizontal frame components.
pub fn s_endo<C: Scalar>(sigma: &Triple<C>) -> Mat<C> {
    let m = model();
    let mut out = Mat::<C>::zero(4, 4);
    for a in 0..3 {
        // Gram matrix Ω of σ_a: Ω_{ij} = σ(E_i, E_j).
        let gram = Mat::<C>::from_fn(4, 4, |i, j| {
            sigma[a]
                .contract_frame(3 + i as u8)
                .contract_frame(3 + j as u8)
                .coeff(0)
        });
        // σ^♯ has matrix Ωᵀ; compose with the vector action of I_a.
        let va = Mat::<C>::from_fn(4, 4, |i, j| C::from_rat(m.v_mat[a].get(i, j)));
        out = out.add(&gram.transpose().mul(&va));
    }
    out
}

/// Block-diagonal 7×7 matrix `diag(v·id₃, h·id₄)`.
pub fn block_diag<C: Scalar>(v: &C, h: &C) -> Mat<C> {
    Mat::from_fn(7, 7, |i, j| {
        if i != j {
            C::zero()
        } else if i < 3 {
            v.clone()
        } else {
            h.clone()
        }
    })
}

/// The rebalancing tensor `4·id_V − 3·id_H`.
pub fn h34<C: Scalar>() -> Mat<C> {
    block_diag(&C::from_int(4), &C::from_int(-3))
}

/// Extend a 4×4 horizontal endomorphism to 7×7 with zero vertical block.
pub fn extend_h<C: Scalar>(h: &Mat<C>) -> Mat<C> {
    assert_eq!((h.rows(), h.cols()), (4, 4));
    Mat::from_fn(7, 7, |i, j| {
        if i >= 3 && j >= 3 {
            h.get(i - 3, j - 3).clone()
        } else {
            C::zero()
        }
    })
}

/// The anti-self-dual 2-form basis `(e¹²−e³⁴, e¹³+e²⁴, e¹⁴−e²³)`, each of
/// squared norm 2.
pub fn asd_basis<C: Scalar>() -> [Form<C>; 3] {
    let e = |i: u8, j: u8| Form::<C>::monomial(basis::e_mask(i) | basis::e_mask(j));
    [
        e(1, 2).sub(&e(3, 4)),
        e(1, 3).add(&e(2, 4)),
        e(1, 4).sub(&e(2, 3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::maps::{kappa, omega_in, zero_triple};
    use crate::scalar::{rat, MPoly};

    #[test]
    fn embedding_oracles() {
        let m = model();
        // 𝐢(id) = 3φ.
        assert_eq!(
            embed_sym(&Mat::<Rat>::identity(7)),
            m.phi.scale(&rint(3))
        );
        // 𝐢(id_V) = 3Z¹²³ + Σ Z^a∧ω_a = 2Z¹²³ + φ.
        let idv = block_diag(&rint(1), &rint(0));
        assert_eq!(
            embed_sym(&idv),
            m.phi.add(&m.z123.scale(&rint(2)))
        );
        // 𝐢(id_H) = 2φ − 2Z¹²³.
        let idh = block_diag(&rint(0), &rint(1));
        assert_eq!(
            embed_sym(&idh),
            m.phi.scale(&rint(2)).sub(&m.z123.scale(&rint(2)))
        );
        // 𝐢(−½h₃₄) = φ̃.
        let h = h34::<Rat>().scale(&rat(-1, 2));
        assert_eq!(embed_sym(&h), m.phitilde);
    }

    #[test]
    fn inverse_embedding_roundtrips() {
        let m = model();
        // Generic symmetric matrix with one variable per upper-triangular
        // entry.
        let mut h = Mat::<MPoly<Rat>>::zero(7, 7);
        for (k, &(i, j)) in sym_basis().iter().enumerate() {
            h.set(i, j, MPoly::var(k as u32));
            h.set(j, i, MPoly::var(k as u32));
        }
        let gamma = embed_sym(&h);
        assert_eq!(inverse_embed(&gamma).unwrap(), h);

        // Known values.
        assert_eq!(
            inverse_embed(&m.phi).unwrap(),
            Mat::<Rat>::identity(7).scale(&rat(1, 3))
        );
        assert_eq!(
            inverse_embed(&m.phitilde).unwrap(),
            h34::<Rat>().scale(&rat(-1, 2))
        );

        // A pure vector-type form is rejected.
        let v = Form::<Rat>::monomial(1).wedge(&m.phi).star7();
        assert_eq!(inverse_embed(&v), Err(TransferError::VectorComponent));
    }

    #[test]
    fn quaternionic_square_of_omega() {
        // 𝐬(ω) = 3·id_H.
        let s = s_endo(&omega_in::<Rat>());
        assert_eq!(s, Mat::identity(4).scale(&rint(3)));
    }

    #[test]
    fn bridge_to_inverse_embedding_on_asd_triples() {
        // For σ anti-self-dual: 2·𝐢⁻¹(κ(0,σ)) = 𝐬(σ) extended by zero.
        // Checked generically: σ_a = Σ_k c_{a,k}·τ_k over 9 variables.
        let tau = asd_basis::<MPoly<Rat>>();
        let mut sigma = zero_triple();
        for a in 0..3 {
            for (k, t) in tau.iter().enumerate() {
                sigma[a] = sigma[a].add(&t.scale(&MPoly::var((3 * a + k) as u32)));
            }
        }
        let h = inverse_embed(&kappa(&zero_triple(), &sigma)).unwrap();
        let expect = extend_h(&s_endo(&sigma));
        assert_eq!(h.scale(&MPoly::from_int(2)), expect);
    }

    #[test]
    fn omega_line_bridge_has_the_rebalanced_tensor() {
        // κ(0,ω) = φ̃ transfers to −½h₃₄; its horizontal block is ³⁄₂·id_H
        // while 𝐬(ω) = 3·id_H — the factor-2 bridge holds blockwise on the
        // horizontal part.
        let h = inverse_embed(&kappa(&zero_triple(), &omega_in::<Rat>())).unwrap();
        assert_eq!(h, h34::<Rat>().scale(&rat(-1, 2)));
        let s = s_endo(&omega_in::<Rat>());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(
                    h.get(3 + i, 3 + j).scale_int(2),
                    s.get(i, j).clone()
                );
            }
        }
    }

    #[test]
    fn contraction_norm_identity_for_asd() {
        // |X⌟σ|² = ½|X|²|σ|² for anti-self-dual σ — checked generically in
        // the X components.
        let x: Vec<MPoly<Rat>> = (0..4).map(|i| MPoly::<Rat>::var(i)).collect();
        let vector = [
            MPoly::zero(),
            MPoly::zero(),
            MPoly::zero(),
            x[0].clone(),
            x[1].clone(),
            x[2].clone(),
            x[3].clone(),
        ];
        let norm_x: MPoly<Rat> = x.iter().fold(MPoly::zero(), |acc, c| acc.add(&c.mul(c)));
        for t in asd_basis::<MPoly<Rat>>() {
            let c = t.contract(&vector);
            let lhs = c.inner(&c);
            let rhs = norm_x.mul(&t.inner(&t)).scale(&rat(1, 2));
            assert_eq!(lhs, rhs);
        }
    }
}

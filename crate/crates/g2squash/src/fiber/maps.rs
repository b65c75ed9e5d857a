//! Transfer maps between vertical-slot data and mixed forms.
//!
//! A mixed 3-form on the fiber splits into four slots along its vertical
//! part,
//!
//! ```text
//!   γ = F·Z¹²³ + Σ_cyc Z^{ab}∧α_c + Σ_a Z^a∧σ_a + β,
//! ```
//!
//! with `F` a function, `α` a triple of horizontal 1-forms, `σ` a triple of
//! horizontal 2-forms and `β` a horizontal 3-form; similarly a 2-form splits
//! into `(f, α, σ)` slots.  This module implements the slot assembly/split
//! ([`Slot3`], [`Slot2`]), the quaternionic trace map `T`, the triple
//! embedding `𝕀`, the wedge operators `L_ω` and their contraction adjoints,
//! the reflection `P = 1 + 𝕀∘T`, and the distinguished section
//! `κ(α,σ) = ι(−T(σ), α, σ, ⋆T(α))` whose image is the pointwise model of
//! the 27-dimensional symmetric-tensor type.

use super::basis::{self, z_mask, CYCLIC, VERTICAL_MASK};
use super::form::Form;
use super::model::model;
use crate::scalar::linalg::Mat;
use crate::scalar::{Rat, Scalar};

/// An `ℝ³`-valued form, indexed by the quaternionic direction.
pub type Triple<C> = [Form<C>; 3];

/// Embed a rational-coefficient form into any scalar ring.
pub fn lift<C: Scalar>(f: &Form<Rat>) -> Form<C> {
    f.map_coeffs(C::from_rat)
}

/// The model 2-form triple `ω_a` with coefficients in `C`.
pub fn omega_in<C: Scalar>() -> Triple<C> {
    let m = model();
    [lift(&m.omega[0]), lift(&m.omega[1]), lift(&m.omega[2])]
}

/// The zero triple.
pub fn zero_triple<C: Scalar>() -> Triple<C> {
    [Form::zero(), Form::zero(), Form::zero()]
}

/// The signed vertical monomial `Z^a∧Z^b` with `(a,b,k)` cyclic
/// (`k=1 ↦ Z²∧Z³`, `k=2 ↦ Z³∧Z¹`, `k=3 ↦ Z¹∧Z²`).
pub fn z_pair<C: Scalar>(k: u8) -> Form<C> {
    let (_, a, b) = CYCLIC[(k - 1) as usize];
    Form::<C>::monomial(z_mask(a)).wedge(&Form::monomial(z_mask(b)))
}

/// Apply a rational coefficient matrix to a horizontal 1-form over `C`.
pub fn apply_rat_h_matrix<C: Scalar>(m: &Mat<Rat>, alpha: &Form<C>) -> Form<C> {
    let mut out = Form::zero();
    for j in 0..4u8 {
        let aj = alpha.coeff(basis::e_mask(j + 1));
        if aj.is_zero() {
            continue;
        }
        for i in 0..4u8 {
            let entry = m.get(i as usize, j as usize);
            if entry.is_zero() {
                continue;
            }
            out.add_term(basis::e_mask(i + 1), &C::from_rat(entry).mul(&aj));
        }
    }
    out
}

/// `I_a` on horizontal 1-forms over any scalar ring (precomposition
/// convention, `a ∈ 0..3`).
pub fn i_oneform<C: Scalar>(a: usize, alpha: &Form<C>) -> Form<C> {
    apply_rat_h_matrix(&model().f_mat[a], alpha)
}

/// The triple embedding `𝕀α = (I₁α, I₂α, I₃α)`.
pub fn i_triple<C: Scalar>(alpha: &Form<C>) -> Triple<C> {
    [
        i_oneform(0, alpha),
        i_oneform(1, alpha),
        i_oneform(2, alpha),
    ]
}

/// The quaternionic trace `T(σ) = ⋆_H(Σ_a σ_a∧ω_a)`.
///
/// On 1-form triples this equals `Σ_a I_a α_a`; on 2-form triples it is a
/// function; on the 2-form triple `ω` itself it is the constant 6.
pub fn t_map<C: Scalar>(sigma: &Triple<C>) -> Form<C> {
    let omega = omega_in::<C>();
    let mut acc = Form::zero();
    for a in 0..3 {
        acc = acc.add(&sigma[a].wedge(&omega[a]));
    }
    acc.star_h()
}

/// The wedge operator `(L_ωσ)_a = σ_b∧ω_c − σ_c∧ω_b` (cyclic).
pub fn l_omega<C: Scalar>(sigma: &Triple<C>) -> Triple<C> {
    let omega = omega_in::<C>();
    let mut out = zero_triple();
    for &(a, b, c) in &CYCLIC {
        let (a, b, c) = (a as usize - 1, b as usize - 1, c as usize - 1);
        out[a] = sigma[b].wedge(&omega[c]).sub(&sigma[c].wedge(&omega[b]));
    }
    out
}

/// Bivector contraction `ω⌟γ`, the inner-product adjoint of `ω∧·`: for each
/// monomial `c·e^i∧e^j` (`i<j`) of `ω`, contract `γ` with `E_i` first and
/// then with `E_j`.
pub fn contract_two<C: Scalar>(omega: &Form<Rat>, gamma: &Form<C>) -> Form<C> {
    let mut out = Form::zero();
    for (mask, coeff) in omega.terms() {
        debug_assert_eq!(basis::degree(mask), 2);
        let i = mask.trailing_zeros() as u8;
        let j = (mask & !(1 << i)).trailing_zeros() as u8;
        let piece = gamma
            .contract_frame(i)
            .contract_frame(j)
            .scale(&C::from_rat(coeff));
        out = out.add(&piece);
    }
    out
}

/// The contraction adjoint `(L_ω^*τ)_a = ω_b⌟τ_c − ω_c⌟τ_b` (cyclic).
pub fn l_omega_star<C: Scalar>(tau: &Triple<C>) -> Triple<C> {
    let m = model();
    let mut out = zero_triple();
    for &(a, b, c) in &CYCLIC {
        let (a, b, c) = (a as usize - 1, b as usize - 1, c as usize - 1);
        out[a] = contract_two(&m.omega[b], &tau[c]).sub(&contract_two(&m.omega[c], &tau[b]));
    }
    out
}

/// The reflection `P = 1 + 𝕀∘T` on 1-form triples
/// (`(Pα)_a = Σ_{b≠a} I_aI_bα_b`).
pub fn p_map<C: Scalar>(alpha: &Triple<C>) -> Triple<C> {
    let t = t_map(alpha);
    let it = i_triple(&t);
    [
        alpha[0].add(&it[0]),
        alpha[1].add(&it[1]),
        alpha[2].add(&it[2]),
    ]
}

/// Split a horizontal 2-form into its self-dual and anti-self-dual halves.
pub fn sd_split<C: Scalar>(sigma: &Form<C>) -> (Form<C>, Form<C>) {
    let half = C::from_frac(1, 2);
    let star = sigma.star_h();
    (
        sigma.add(&star).scale(&half),
        sigma.sub(&star).scale(&half),
    )
}

/// Triple inner product `Σ_a ⟨x_a, y_a⟩`.
pub fn triple_inner<C: Scalar>(x: &Triple<C>, y: &Triple<C>) -> C {
    let mut acc = C::zero();
    for a in 0..3 {
        acc = acc.add(&x[a].inner(&y[a]));
    }
    acc
}

/// Scale every component of a triple.
pub fn triple_scale<C: Scalar>(x: &Triple<C>, c: &C) -> Triple<C> {
    [x[0].scale(c), x[1].scale(c), x[2].scale(c)]
}

/// Add triples componentwise.
pub fn triple_add<C: Scalar>(x: &Triple<C>, y: &Triple<C>) -> Triple<C> {
    [x[0].add(&y[0]), x[1].add(&y[1]), x[2].add(&y[2])]
}

/// Subtract triples componentwise.
pub fn triple_sub<C: Scalar>(x: &Triple<C>, y: &Triple<C>) -> Triple<C> {
    [x[0].sub(&y[0]), x[1].sub(&y[1]), x[2].sub(&y[2])]
}

/// Slot data of a mixed 3-form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Slot3<C: Scalar> {
    /// Coefficient of `Z¹²³` (a degree-0 horizontal form).
    pub f: Form<C>,
    /// Coefficients of `Z^{ab}` (horizontal 1-forms, indexed by the cyclic
    /// complement `c`).
    pub alpha: Triple<C>,
    /// Coefficients of `Z^a` (horizontal 2-forms).
    pub sigma: Triple<C>,
    /// The purely horizontal part (a 3-form).
    pub beta: Form<C>,
}

impl<C: Scalar> Slot3<C> {
    pub fn zero() -> Self {
        Slot3 {
            f: Form::zero(),
            alpha: zero_triple(),
            sigma: zero_triple(),
            beta: Form::zero(),
        }
    }

    /// Assemble the mixed 3-form `F·Z¹²³ + Σ Z^{ab}∧α_c + Σ Z^a∧σ_a + β`.
    pub fn assemble(&self) -> Form<C> {
        let mut out = Form::<C>::monomial(VERTICAL_MASK).wedge(&self.f);
        for c in 1..=3u8 {
            out = out.add(&z_pair::<C>(c).wedge(&self.alpha[(c - 1) as usize]));
        }
        for a in 1..=3u8 {
            out = out.add(
                &Form::<C>::monomial(z_mask(a)).wedge(&self.sigma[(a - 1) as usize]),
            );
        }
        out.add(&self.beta)
    }

    /// Decompose a mixed 3-form into its slots.
    pub fn split(gamma: &Form<C>) -> Self {
        debug_assert!(gamma.is_zero() || gamma.degree() == Some(3));
        let mut alpha = zero_triple();
        for &(a, b, c) in &CYCLIC {
            // The stored coefficient of mask Z^a|Z^b carries the sign of
            // reordering Z^{ab} ascending.
            let sign = basis::wedge_sign(z_mask(a), z_mask(b));
            let slice = gamma.z_slice(z_mask(a) | z_mask(b));
            alpha[(c - 1) as usize] = if sign < 0 { slice.neg() } else { slice };
        }
        Slot3 {
            f: gamma.z_slice(VERTICAL_MASK),
            alpha,
            sigma: [
                gamma.z_slice(z_mask(1)),
                gamma.z_slice(z_mask(2)),
                gamma.z_slice(z_mask(3)),
            ],
            beta: gamma.z_slice(0),
        }
    }
}

/// Slot data of a mixed 2-form
/// `ι₂(f, α, σ) = Σ f_c·Z^{ab} + Σ Z^a∧α_a + σ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Slot2<C: Scalar> {
    /// Coefficients of `Z^{ab}` (functions, indexed by the cyclic
    /// complement).
    pub f: Triple<C>,
    /// Coefficients of `Z^a` (horizontal 1-forms).
    pub alpha: Triple<C>,
    /// The purely horizontal part (a 2-form).
    pub sigma: Form<C>,
}

impl<C: Scalar> Slot2<C> {
    pub fn zero() -> Self {
        Slot2 {
            f: zero_triple(),
            alpha: zero_triple(),
            sigma: Form::zero(),
        }
    }

    pub fn assemble(&self) -> Form<C> {
        let mut out = Form::zero();
        for c in 1..=3u8 {
            out = out.add(&z_pair::<C>(c).wedge(&self.f[(c - 1) as usize]));
        }
        for a in 1..=3u8 {
            out = out.add(
                &Form::<C>::monomial(z_mask(a)).wedge(&self.alpha[(a - 1) as usize]),
            );
        }
        out.add(&self.sigma)
    }

    pub fn split(gamma: &Form<C>) -> Self {
        debug_assert!(gamma.is_zero() || gamma.degree() == Some(2));
        let mut f = zero_triple();
        for &(a, b, c) in &CYCLIC {
            let sign = basis::wedge_sign(z_mask(a), z_mask(b));
            let slice = gamma.z_slice(z_mask(a) | z_mask(b));
            f[(c - 1) as usize] = if sign < 0 { slice.neg() } else { slice };
        }
        Slot2 {
            f,
            alpha: [
                gamma.z_slice(z_mask(1)),
                gamma.z_slice(z_mask(2)),
                gamma.z_slice(z_mask(3)),
            ],
            sigma: gamma.z_slice(0),
        }
    }
}

/// The distinguished 3-form `κ(α, σ) = ι(−T(σ), α, σ, ⋆_H T(α))`.
///
/// For `σ` in the kernel of `L_ω` this lands in the pointwise model of the
/// 27-dimensional symmetric type; `κ(0, ω) = φ − 7Z¹²³`.
pub fn kappa<C: Scalar>(alpha: &Triple<C>, sigma: &Triple<C>) -> Form<C> {
    Slot3 {
        f: t_map(sigma).neg(),
        alpha: alpha.clone(),
        sigma: sigma.clone(),
        beta: t_map(alpha).star_h(),
    }
    .assemble()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rint, MPoly};

    type F = Form<Rat>;
    type PF = Form<MPoly<Rat>>;

    fn covector(i: u8) -> F {
        F::monomial(1 << i)
    }

    /// Basis of 1-form triples: (slot, covector index).
    fn one_form_triples() -> Vec<Triple<Rat>> {
        let mut out = Vec::new();
        for slot in 0..3 {
            for i in 3..7u8 {
                let mut t = zero_triple();
                t[slot] = covector(i);
                out.push(t);
            }
        }
        out
    }

    #[test]
    fn trace_map_basics() {
        // T(ω) = 6.
        let omega = omega_in::<Rat>();
        assert_eq!(t_map(&omega), F::one().scale(&rint(6)));
        // T(𝕀α) = −3α for every covector.
        for i in 3..7u8 {
            let alpha = covector(i);
            assert_eq!(t_map(&i_triple(&alpha)), alpha.scale(&rint(-3)));
        }
        // On 1-form triples T equals Σ I_a α_a.
        for t in one_form_triples() {
            let direct = i_oneform(0, &t[0])
                .add(&i_oneform(1, &t[1]))
                .add(&i_oneform(2, &t[2]));
            assert_eq!(t_map(&t), direct);
        }
    }

    #[test]
    fn reflection_structure() {
        for t in one_form_triples() {
            let p = p_map(&t);
            // Componentwise: (Pα)_a = Σ_{b≠a} I_aI_bα_b — in particular the
            // diagonal block vanishes.
            for a in 0..3 {
                let mut expect = Form::zero();
                for b in 0..3 {
                    if b != a {
                        expect = expect.add(&i_oneform(a, &i_oneform(b, &t[b])));
                    }
                }
                assert_eq!(p[a], expect);
            }
            // P = −⋆_H ∘ L_ω on 1-form triples.
            let lw = l_omega(&t);
            for a in 0..3 {
                assert_eq!(p[a], lw[a].star_h().neg());
            }
            // P² = 2 − P.
            let pp = p_map(&p);
            for a in 0..3 {
                assert_eq!(pp[a], t[a].scale(&rint(2)).sub(&p[a]));
            }
        }
    }

    /// Basis of 2-form triples: (slot, 2-form mask).
    fn two_form_triples() -> Vec<Triple<Rat>> {
        let mut out = Vec::new();
        for slot in 0..3 {
            for m in basis::horizontal_masks_of_degree(2) {
                let mut t = zero_triple();
                t[slot] = F::monomial(m);
                out.push(t);
            }
        }
        out
    }

    #[test]
    fn symmetric_kernel_has_rank_15() {
        let basis18 = two_form_triples();
        assert_eq!(basis18.len(), 18);
        // Matrix of L_ω: ℝ¹⁸ → ℝ³ (each component is a 4-form coefficient).
        let mw = Mat::from_fn(3, 18, |r, c| {
            l_omega(&basis18[c])[r].coeff(basis::HORIZONTAL_MASK)
        });
        // Matrix of L_ω*: ℝ¹⁸ → ℝ³ (each component is a function).
        let ms = Mat::from_fn(3, 18, |r, c| l_omega_star(&basis18[c])[r].coeff(0));
        assert_eq!(mw.rank(), 3);
        assert_eq!(ms.rank(), 3);
        let kw = mw.nullspace();
        let ks = ms.nullspace();
        assert_eq!(kw.len(), 15);
        assert_eq!(ks.len(), 15);
        // The kernels agree: each kernel vector of one operator is killed by
        // the other.
        for v in &kw {
            assert!(ms.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        for v in &ks {
            assert!(mw.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn anti_self_dual_triples_are_symmetric() {
        // Every triple with anti-self-dual components lies in ker L_ω; the
        // self-dual symmetric part is 6-dimensional, split by T into a
        // 5-dimensional kernel plus the ω-line.
        let mut asd_count = 0;
        for slot in 0..3 {
            for m in basis::horizontal_masks_of_degree(2) {
                let (_, asd) = sd_split(&F::monomial(m));
                if asd.is_zero() {
                    continue;
                }
                let mut t = zero_triple();
                t[slot] = asd;
                assert!(l_omega(&t).iter().all(|x| x.is_zero()));
                assert!(t_map(&t).is_zero());
                asd_count += 1;
            }
        }
        assert_eq!(asd_count, 3 * 6); // 6 spanning (rank 3) ASD forms per slot.

        // Symmetric self-dual triples σ_a = Σ_b M_{ab} ω_b, M symmetric.
        let omega = omega_in::<Rat>();
        for i in 0..3 {
            for j in 0..3 {
                let mut t = zero_triple();
                t[i] = t[i].add(&omega[j]);
                t[j] = t[j].add(&omega[i]);
                assert!(l_omega(&t).iter().all(|x| x.is_zero()));
                // T picks out 2·(trace of M): here M = E_ij + E_ji.
                let expect = if i == j { rint(4) } else { rint(0) };
                assert_eq!(t_map(&t), F::one().scale(&expect));
            }
        }
        // Antisymmetric M is *not* in the kernel.
        let mut t = zero_triple();
        t[0] = omega[1].clone();
        t[1] = omega[0].neg();
        assert!(!l_omega(&t).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn kappa_on_omega_is_the_rebalanced_cone_form() {
        let omega = omega_in::<Rat>();
        assert_eq!(kappa(&zero_triple(), &omega), model().phitilde);
        assert_eq!(model().phitilde, model().phi.sub(&model().z123.scale(&rint(7))));
    }

    fn generic_form(degree: u32) -> PF {
        let mut out = PF::zero();
        for m in basis::masks_of_degree(degree) {
            out.add_term(m, &MPoly::var(m as u32));
        }
        out
    }

    #[test]
    fn slot_roundtrips_are_exact() {
        let g3 = generic_form(3);
        assert_eq!(g3.num_terms(), 35);
        assert_eq!(Slot3::split(&g3).assemble(), g3);
        let g2 = generic_form(2);
        assert_eq!(g2.num_terms(), 21);
        assert_eq!(Slot2::split(&g2).assemble(), g2);
    }

    #[test]
    fn wedge_identities_for_generic_three_forms() {
        // For γ = ι(F, α, σ, β):
        //   γ∧φ = Z¹²³∧(⋆_HT(α) − β) + Σ_cyc Z^{ab}∧(L_ωσ)_c,
        //   γ∧⋆φ = (F + T(σ))·vol.
        let g3 = generic_form(3);
        let s = Slot3::split(&g3);
        let phi = lift::<MPoly<Rat>>(&model().phi);
        let psi = lift::<MPoly<Rat>>(&model().psi);

        let lhs6 = g3.wedge(&phi);
        let mut rhs6 = PF::monomial(VERTICAL_MASK)
            .wedge(&t_map(&s.alpha).star_h().sub(&s.beta));
        let lw = l_omega(&s.sigma);
        for c in 1..=3u8 {
            rhs6 = rhs6.add(&z_pair::<MPoly<Rat>>(c).wedge(&lw[(c - 1) as usize]));
        }
        assert_eq!(lhs6, rhs6);

        let lhs7 = g3.wedge(&psi);
        let rhs7 = s
            .f
            .add(&t_map(&s.sigma))
            .wedge(&PF::monomial(basis::VOLUME_MASK));
        assert_eq!(lhs7, rhs7);
    }

    #[test]
    fn contraction_is_adjoint_to_wedging() {
        let m = model();
        // ⟨ω_a∧β, γ⟩ = ⟨β, ω_a⌟γ⟩ over the 1-form/3-form bases.
        for a in 0..3 {
            for i in 3..7u8 {
                let beta = covector(i);
                for gm in basis::horizontal_masks_of_degree(3) {
                    let gamma = F::monomial(gm);
                    let lhs = m.omega[a].wedge(&beta).inner(&gamma);
                    let rhs = beta.inner(&contract_two(&m.omega[a], &gamma));
                    assert_eq!(lhs, rhs, "a={a} i={i} mask={gm:#09b}");
                }
            }
        }
        // Σ⟨(L_ωσ)_a, τ_a⟩ = Σ⟨σ_a, (L_ω*τ)_a⟩ over triple bases.
        let vol = F::monomial(basis::HORIZONTAL_MASK);
        for sigma in two_form_triples() {
            for slot in 0..3 {
                let mut tau = zero_triple();
                tau[slot] = vol.clone();
                let lhs = triple_inner(&l_omega(&sigma), &tau);
                let rhs = triple_inner(&sigma, &l_omega_star(&tau));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn mixed_form_rebalancing_identity() {
        // For every horizontal 1-form α: Σ_a Z^a∧(I_aα) = −⋆(Z¹²³∧... ) is
        // not needed; instead check the concrete assembled form used by the
        // eigenform embedding: κ(𝕀df, 0) = Σ Z^{ab}∧I_c(df) + ⋆T(𝕀df) with
        // ⋆T(𝕀df) = −3⋆df.
        for i in 3..7u8 {
            let df = covector(i);
            let k = kappa(&i_triple(&df), &zero_triple());
            let s = Slot3::split(&k);
            assert!(s.f.is_zero());
            assert!(s.sigma.iter().all(|x| x.is_zero()));
            assert_eq!(s.beta, df.star_h().scale(&rint(-3)));
            for a in 0..3 {
                assert_eq!(s.alpha[a], i_oneform(a, &df));
            }
        }
    }
}

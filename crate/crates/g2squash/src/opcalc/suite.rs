//! The operator-identity suite.
//!
//! Each named check verifies one operator identity through the mode that
//! decides it:
//!
//! * `component` — matrix identities over the vertical component algebra,
//!   decided by exhaustive normalization (no rule curation involved);
//! * `normalize` — curated-rule rewriting of an operator polynomial down
//!   to zero;
//! * `normalize+component` — rewriting that eliminates every derivative
//!   symbol, with the purely vertical residual absorbed into the
//!   component algebra and decided there;
//! * `replay` — scripted rewriting with recorded rule applications;
//! * `blocks` — identities between compositions of the geometric block
//!   matrices of the squashed metric;
//! * `weight` — identities on a formal vertical-weight eigenspace, with
//!   the weight carried as a rational-function coefficient.

use crate::scalar::{ParamScalar, Rat};

use super::blocks;
use super::component::{
    a_rep, big_p, c_mat, casimir_entry, diag3, i_col, lxi_col, lxi_star_row, p_entry, t_row,
    CompPoly, MatOp,
};
use super::poly::OpPoly;
use super::rewrite::{normalize, DEFAULT_CAP};
use super::rules::RuleSet;
use super::symbol::{OpSymbol, Space};
use super::weight;

/// A named operator check.
pub struct OpCheck {
    pub id: &'static str,
    pub mode: &'static str,
    pub run: fn() -> Result<usize, String>,
}

/// All registered checks, in catalog order.
pub fn checks() -> Vec<OpCheck> {
    macro_rules! reg {
        ($($id:literal / $mode:literal => $f:ident),* $(,)?) => {
            vec![$(OpCheck { id: $id, mode: $mode, run: $f }),*]
        };
    }
    reg![
        "cmat-square" / "component" => cmat_square,
        "cmat-vertical-div" / "component" => cmat_vertical_div,
        "cmat-reeb-column" / "component" => cmat_reeb_column,
        "casimir-tensor-product" / "component" => casimir_tensor_product,
        "p-rotation-anticommutator" / "component" => p_rotation_anticommutator,
        "p-squared-casimir-relation" / "component" => p_squared_casimir_relation,
        "shifted-casimir-rotation-commute" / "component" => shifted_casimir_rotation_commute,
        "p-reeb-commute" / "component" => p_reeb_commute,
        "casimir-central" / "component" => casimir_central,
        "trace-section-contractions" / "component" => trace_section_contractions,
        "projection-quadratic" / "component" => projection_quadratic,
        "projection-divergence-contraction" / "component" => projection_divergence_contraction,
        "cmat-closed-form" / "component" => cmat_closed_form,
        "trace-p-transfer" / "component" => trace_p_transfer,
        "trace-casimir-transfer" / "component" => trace_casimir_transfer,
        "trace-cmat-transfer" / "component" => trace_cmat_transfer,
        "laplace-d-commutator" / "normalize" => laplace_d_commutator,
        "laplace-codiff-commutator" / "normalize" => laplace_codiff_commutator,
        "laplace-p-commute" / "normalize+component" => laplace_p_commute,
        "trace-g-operator-transfer" / "normalize" => trace_g_operator_transfer,
        "half-laplacian-columns" / "blocks" => half_laplacian_columns,
        "codiff-stard-projections" / "replay" => codiff_stard_projections,
        "laplacian-block-identity" / "blocks" => laplacian_block_identity,
        "laplacian-first-projection" / "blocks" => laplacian_first_projection,
        "fourier-weight-split" / "weight" => fourier_weight_split,
        "fourier-weight-projection" / "weight" => fourier_weight_projection,
        "fourier-weight-three" / "weight" => fourier_weight_three,
        "fourier-eigenvalue-shift" / "weight" => fourier_eigenvalue_shift,
    ]
}

/// Runs one check by name.
pub fn run_check(id: &str) -> Option<Result<usize, String>> {
    checks().into_iter().find(|c| c.id == id).map(|c| (c.run)())
}

// ----- helpers --------------------------------------------------------------

fn mat_zero(m: &MatOp<Rat>) -> Result<usize, String> {
    match m.first_residual() {
        None => Ok(0),
        Some(r) => Err(r),
    }
}

fn comp_zero(p: &CompPoly<Rat>) -> Result<usize, String> {
    if p.is_zero() {
        Ok(0)
    } else {
        Err(format!("residual {}", p.render()))
    }
}

fn scalar_block(e: CompPoly<Rat>) -> MatOp<Rat> {
    MatOp::from_fn(1, 1, |_, _| e.clone())
}

fn two() -> CompPoly<Rat> {
    CompPoly::one().scale_int(2)
}

fn word(syms: &[OpSymbol], dom: Space) -> Result<OpPoly<Rat>, String> {
    OpPoly::word(syms, dom).map_err(|e| e.to_string())
}

fn select(ids: &[&str]) -> Result<RuleSet<Rat>, String> {
    RuleSet::select(ids, vec![]).map_err(|e| e.to_string())
}

fn expect_zero_nf(expr: &OpPoly<Rat>, rules: &RuleSet<Rat>) -> Result<usize, String> {
    let (nf, steps) = normalize(expr, rules, DEFAULT_CAP).map_err(|e| e.to_string())?;
    if nf.is_zero() {
        Ok(steps)
    } else {
        Err(format!("residual {}", nf.render()))
    }
}

/// Interprets a word of purely vertical symbols in the component algebra.
fn absorb_vertical(nf: &OpPoly<Rat>) -> Result<CompPoly<Rat>, String> {
    let mut acc = CompPoly::zero();
    for (syms, c) in nf.terms() {
        let mut w = CompPoly::one();
        for sym in syms {
            let f = match sym {
                OpSymbol::Rot(a) => CompPoly::rot(*a),
                OpSymbol::Lie(a) => CompPoly::lie(*a),
                OpSymbol::SmallP => p_entry(),
                OpSymbol::Casimir => casimir_entry(),
                other => {
                    return Err(format!("derivative symbol {other} survived normalization"))
                }
            };
            w = w.mul(&f);
        }
        acc = acc.add(&w.scale(c));
    }
    Ok(acc)
}

// ----- component-algebra matrix identities ----------------------------------

/// `C² = 2C + 𝒞 − ℒ_ξ ℒ_ξ^⋆` on `ℝ³`-valued forms.
fn cmat_square() -> Result<usize, String> {
    let c = c_mat::<Rat>();
    let expr = c
        .mul(&c)
        .sub(&c.scale_int(2))
        .sub(&diag3(&casimir_entry()))
        .add(&lxi_col().mul(&lxi_star_row()));
    mat_zero(&expr)
}

/// `ℒ_ξ^⋆ (C − 2) = 0`: the vertical divergence kills the shifted `C`.
fn cmat_vertical_div() -> Result<usize, String> {
    let shifted = c_mat::<Rat>().sub(&MatOp::identity(3).scale_int(2));
    mat_zero(&lxi_star_row().mul(&shifted))
}

/// `(C − 2) ℒ_ξ = 0`: the Reeb column spans the eigenvalue-2 space.
fn cmat_reeb_column() -> Result<usize, String> {
    let shifted = c_mat::<Rat>().sub(&MatOp::identity(3).scale_int(2));
    mat_zero(&shifted.mul(&lxi_col()))
}

/// The Casimir of the tensor-product action is `𝒞 − 4C + 8`.
fn casimir_tensor_product() -> Result<usize, String> {
    let mut acc = MatOp::<Rat>::zero(3, 3);
    for a in 1..=3 {
        let gen = diag3(&CompPoly::lie(a)).add(&a_rep(a));
        acc = acc.sub(&gen.mul(&gen));
    }
    let rhs = diag3(&casimir_entry())
        .sub(&c_mat().scale_int(4))
        .add(&MatOp::identity(3).scale_int(8));
    mat_zero(&acc.sub(&rhs))
}

/// `(p − 2) I_a + I_a (p − 2) = −2 ℒ_{ξ_a}` on `Ω¹H`.
fn p_rotation_anticommutator() -> Result<usize, String> {
    let pm2 = p_entry::<Rat>().sub(&two());
    let mut steps = 0;
    for a in 1..=3 {
        let ia = CompPoly::rot(a);
        let expr = pm2
            .mul(&ia)
            .add(&ia.mul(&pm2))
            .add(&CompPoly::lie(a).scale_int(2));
        steps += comp_zero(&expr)?;
    }
    Ok(steps)
}

/// `p² − 2p = 𝒞` on `Ω¹H`.
fn p_squared_casimir_relation() -> Result<usize, String> {
    let p = p_entry::<Rat>();
    comp_zero(&p.mul(&p).sub(&p.scale_int(2)).sub(&casimir_entry()))
}

/// `𝒞 − 2p` commutes with each complex structure.
fn shifted_casimir_rotation_commute() -> Result<usize, String> {
    let shifted = casimir_entry::<Rat>().sub(&p_entry().scale_int(2));
    let mut steps = 0;
    for a in 1..=3 {
        let ia = CompPoly::rot(a);
        steps += comp_zero(&shifted.mul(&ia).sub(&ia.mul(&shifted)))?;
    }
    Ok(steps)
}

/// `p` commutes with each vertical Lie derivative.
fn p_reeb_commute() -> Result<usize, String> {
    let p = p_entry::<Rat>();
    let mut steps = 0;
    for a in 1..=3 {
        let la = CompPoly::lie(a);
        steps += comp_zero(&p.mul(&la).sub(&la.mul(&p)))?;
    }
    Ok(steps)
}

/// The vertical Casimir is central: it commutes with the Lie derivatives,
/// with `p`, and (componentwise) with the matrix `C`.
fn casimir_central() -> Result<usize, String> {
    let cas = casimir_entry::<Rat>();
    for a in 1..=3 {
        let la = CompPoly::lie(a);
        comp_zero(&cas.mul(&la).sub(&la.mul(&cas)))?;
    }
    let p = p_entry();
    comp_zero(&cas.mul(&p).sub(&p.mul(&cas)))?;
    let cd = diag3(&cas);
    let c = c_mat();
    mat_zero(&cd.mul(&c).sub(&c.mul(&cd)))
}

/// Row–column contractions: `T𝕀 = −3`, `Tℒ_ξ = p`, `−ℒ_ξ^⋆𝕀 = p`.
fn trace_section_contractions() -> Result<usize, String> {
    let p = scalar_block(p_entry());
    mat_zero(
        &t_row::<Rat>()
            .mul(&i_col())
            .add(&scalar_block(CompPoly::one().scale_int(3))),
    )?;
    mat_zero(&t_row::<Rat>().mul(&lxi_col()).sub(&p))?;
    mat_zero(&lxi_star_row::<Rat>().mul(&i_col()).add(&p))
}

/// `P² = 2 − P` for the symmetrized projection `P = 1 + 𝕀T`.
fn projection_quadratic() -> Result<usize, String> {
    let p = big_p::<Rat>();
    let expr = p
        .mul(&p)
        .add(&p)
        .sub(&MatOp::identity(3).scale_int(2));
    mat_zero(&expr)
}

/// `(C − 2) P + p = −𝕀 ℒ_ξ^⋆` on `ℝ³`-valued 1-forms.
fn projection_divergence_contraction() -> Result<usize, String> {
    let shifted = c_mat::<Rat>().sub(&MatOp::identity(3).scale_int(2));
    let expr = shifted
        .mul(&big_p())
        .add(&diag3(&p_entry()))
        .add(&i_col().mul(&lxi_star_row()));
    mat_zero(&expr)
}

/// Closed form of `C` through `p`, the trace, and the Reeb row/column:
/// `C = 2 − p + 𝕀(−ℒ_ξ^⋆ + pT − 2T) + ℒ_ξ T`.
fn cmat_closed_form() -> Result<usize, String> {
    let rhs = MatOp::identity(3)
        .scale_int(2)
        .sub(&diag3(&p_entry()))
        .sub(&i_col().mul(&lxi_star_row()))
        .add(&i_col().mul(&scalar_block(p_entry())).mul(&t_row()))
        .sub(&i_col().mul(&t_row()).scale_int(2))
        .add(&lxi_col().mul(&t_row()));
    mat_zero(&c_mat::<Rat>().sub(&rhs))
}

/// `T p = (4 − p) T + 2 ℒ_ξ^⋆` transfers `p` across the trace.
fn trace_p_transfer() -> Result<usize, String> {
    let lhs = t_row::<Rat>().mul(&diag3(&p_entry()));
    let rhs = scalar_block(CompPoly::one().scale_int(4).sub(&p_entry()))
        .mul(&t_row())
        .add(&lxi_star_row().scale_int(2));
    mat_zero(&lhs.sub(&rhs))
}

/// `T 𝒞 = (𝒞 + 8 − 4p) T + 4 ℒ_ξ^⋆`.
fn trace_casimir_transfer() -> Result<usize, String> {
    let lhs = t_row::<Rat>().mul(&diag3(&casimir_entry()));
    let mid = casimir_entry::<Rat>()
        .add(&CompPoly::one().scale_int(8))
        .sub(&p_entry().scale_int(4));
    let rhs = scalar_block(mid)
        .mul(&t_row())
        .add(&lxi_star_row().scale_int(4));
    mat_zero(&lhs.sub(&rhs))
}

/// `T C = (4 − p) T + ℒ_ξ^⋆`.
fn trace_cmat_transfer() -> Result<usize, String> {
    let lhs = t_row::<Rat>().mul(&c_mat());
    let rhs = scalar_block(CompPoly::one().scale_int(4).sub(&p_entry()))
        .mul(&t_row())
        .add(&lxi_star_row());
    mat_zero(&lhs.sub(&rhs))
}

// ----- curated-rule normalizations ------------------------------------------

/// `[Δ_H, d_H] = 2 p d_H` on functions.
fn laplace_d_commutator() -> Result<usize, String> {
    use OpSymbol::*;
    let dom = Space::single(0);
    let rules = select(&[
        "laplace-expand-bottom",
        "laplace-expand-mid",
        "d-squared-flux",
        "codiff-wedge-om-1",
        "codiff-wedge-om-2",
        "codiff-wedge-om-3",
        "d-lie-commute-1",
        "d-lie-commute-2",
        "d-lie-commute-3",
        "p-expand",
    ])?;
    let expr = word(&[LapH, DH], dom)?
        .sub(&word(&[DH, LapH], dom)?)
        .sub(&word(&[SmallP, DH], dom)?.scale_int(2));
    expect_zero_nf(&expr, &rules)
}

/// `[Δ_H, d_H^⋆] = −2 d_H^⋆ p` on 1-forms.
fn laplace_codiff_commutator() -> Result<usize, String> {
    use OpSymbol::*;
    let dom = Space::single(1);
    let rules = select(&[
        "laplace-expand-bottom",
        "laplace-expand-mid",
        "codiff-squared-flux",
        "contract-om-d-1",
        "contract-om-d-2",
        "contract-om-d-3",
        "codiff-lie-commute-1",
        "codiff-lie-commute-2",
        "codiff-lie-commute-3",
        "rot-lie-swap-11",
        "rot-lie-swap-22",
        "rot-lie-swap-33",
        "p-expand",
    ])?;
    let expr = word(&[LapH, DHStar], dom)?
        .sub(&word(&[DHStar, LapH], dom)?)
        .add(&word(&[DHStar, SmallP], dom)?.scale_int(2));
    expect_zero_nf(&expr, &rules)
}

/// `[Δ_H, p] = 0` on 1-forms.  Rewriting eliminates the Laplacian through
/// the twisted-commutation axiom; the purely vertical residual is decided
/// in the component algebra.
fn laplace_p_commute() -> Result<usize, String> {
    use OpSymbol::*;
    let dom = Space::single(1);
    let rules = select(&[
        "p-expand",
        "laplace-rot-swap-1",
        "laplace-rot-swap-2",
        "laplace-rot-swap-3",
        "laplace-lie-commute-1",
        "laplace-lie-commute-2",
        "laplace-lie-commute-3",
        "casimir-from-p",
    ])?;
    let expr = word(&[LapH, SmallP], dom)?.sub(&word(&[SmallP, LapH], dom)?);
    let (nf, steps) = normalize(&expr, &rules, DEFAULT_CAP).map_err(|e| e.to_string())?;
    comp_zero(&absorb_vertical(&nf)?)?;
    Ok(steps)
}

/// `T 𝒢 = 𝒟 T`: the trace intertwines the comparison operator on
/// `ℝ³`-valued 1-forms with its scalar counterpart.
fn trace_g_operator_transfer() -> Result<usize, String> {
    use OpSymbol::*;
    let dom = Space::triple(1);
    let rules = select(&[
        "gop-expand-nearly",
        "dop-expand",
        "laplace-trace-swap",
        "trace-p-transfer-rule",
        "trace-casimir-transfer-rule",
        "trace-cmat-transfer-rule",
    ])?;
    let expr = word(&[TTrace, GOp], dom)?.sub(&word(&[DOp, TTrace], dom)?);
    expect_zero_nf(&expr, &rules)
}

// ----- block-matrix identities ----------------------------------------------

fn half_laplacian_columns() -> Result<usize, String> {
    blocks::check_second_order_columns::<ParamScalar>()
}

fn codiff_stard_projections() -> Result<usize, String> {
    blocks::check_codiff_stard_projections::<ParamScalar>()
}

fn laplacian_block_identity() -> Result<usize, String> {
    blocks::check_laplacian_block_identity::<ParamScalar>()
}

fn laplacian_first_projection() -> Result<usize, String> {
    blocks::check_laplacian_first_projection::<ParamScalar>()
}

// ----- Fourier-weight identities --------------------------------------------

fn fourier_weight_split() -> Result<usize, String> {
    weight::check_weight_split()
}

fn fourier_weight_projection() -> Result<usize, String> {
    weight::check_weight_projection()
}

fn fourier_weight_three() -> Result<usize, String> {
    weight::check_weight_three()
}

fn fourier_eigenvalue_shift() -> Result<usize, String> {
    weight::check_eigenvalue_shift()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_registered_check_verifies() {
        for check in checks() {
            if let Err(m) = (check.run)() {
                panic!("{} [{}]: {m}", check.id, check.mode);
            }
        }
    }

    #[test]
    fn check_ids_are_unique_and_lookup_works() {
        let all = checks();
        let mut ids: Vec<_> = all.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
        assert!(run_check("cmat-square").is_some());
        assert!(run_check("no-such-check").is_none());
    }
}

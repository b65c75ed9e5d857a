//! The zeroth-order component algebra: words in the Reeb Lie derivatives
//! `ℒ_{ξ_a}` and the complex structures `I_a`, normalized against the
//! `su(2)` bracket relations, the quaternion products, and the rotation
//! twists `[ℒ_{ξ_a}, I_b] = 2I_c` (cyclic).
//!
//! Every operator identity that contains no horizontal derivative — the
//! characteristic polynomial of the matrix operator `C`, the tensor-product
//! Casimir decomposition, the `p`-rotation anticommutator, the trace
//! transfer identities, the closed form of `C` — lives in the algebra
//! generated by these six symbols acting on `Ω¹H` and its `ℝ³`-valued
//! companion.  Normalization here is *complete*: the canonical form is a
//! quaternion unit (1 or a single `I_a`) followed by a nondecreasing
//! `ℒ`-word, a Poincaré–Birkhoff–Witt basis for the mixed algebra, so an
//! identity holds exactly when its difference normalizes to the zero
//! polynomial.  This gives a decision procedure, used both to settle such
//! identities directly and to certify the rewrite rules that the word-level
//! engine in [`crate::opcalc::rewrite`] then applies to first-order
//! statements.
//!
//! Termination of the normalization is by a two-level measure: each rewrite
//! either shortens the word (quaternion collapse) or keeps the length and
//! strictly reduces the number of out-of-order adjacent pairs, with any
//! bracket correction terms strictly shorter.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// A generator of the component algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CGen {
    /// Complex structure `I_a`, `a ∈ 1..=3`.
    Q(u8),
    /// Reeb Lie derivative `ℒ_{ξ_a}`.
    L(u8),
}

/// Product of quaternion units (`0` denotes `1`, `a ∈ 1..=3` denotes
/// `I_a`): returns `(sign, unit)` with `I_a I_b = −I_c` cyclic and
/// `I_a² = −1` in the action on forms.
fn unit_mul(a: u8, b: u8) -> (i64, u8) {
    match (a, b) {
        (0, x) => (1, x),
        (x, 0) => (1, x),
        (x, y) if x == y => (-1, 0),
        (1, 2) => (-1, 3),
        (2, 3) => (-1, 1),
        (3, 1) => (-1, 2),
        (2, 1) => (1, 3),
        (3, 2) => (1, 1),
        (1, 3) => (1, 2),
        _ => unreachable!("quaternion axes are 0..=3"),
    }
}

/// `[ℒ_a, ℒ_b] = ±2ℒ_c` from `[ξ_1, ξ_2] = 2ξ_3` (cyclic).
fn lie_bracket(a: u8, b: u8) -> Option<(i64, u8)> {
    match (a, b) {
        (1, 2) => Some((2, 3)),
        (2, 3) => Some((2, 1)),
        (3, 1) => Some((2, 2)),
        (2, 1) => Some((-2, 3)),
        (3, 2) => Some((-2, 1)),
        (1, 3) => Some((-2, 2)),
        _ => None,
    }
}

/// `[ℒ_{ξ_a}, I_b] = 2I_c` (cyclic), `[ℒ_{ξ_a}, I_a] = 0`.
fn lie_rot_bracket(a: u8, b: u8) -> Option<(i64, u8)> {
    match (a, b) {
        (1, 2) => Some((2, 3)),
        (2, 3) => Some((2, 1)),
        (3, 1) => Some((2, 2)),
        (2, 1) => Some((-2, 3)),
        (3, 2) => Some((-2, 1)),
        (1, 3) => Some((-2, 2)),
        _ => None,
    }
}

/// A polynomial in the component algebra, stored on the canonical basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompPoly<K: Scalar> {
    terms: BTreeMap<Vec<CGen>, K>,
}

impl<K: Scalar> CompPoly<K> {
    pub fn zero() -> Self {
        CompPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        let mut out = Self::zero();
        out.insert(Vec::new(), c);
        out
    }

    pub fn gen(g: CGen) -> Self {
        let mut out = Self::zero();
        out.insert(vec![g], K::one());
        out
    }

    pub fn lie(a: u8) -> Self {
        Self::gen(CGen::L(a))
    }

    pub fn rot(a: u8) -> Self {
        Self::gen(CGen::Q(a))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, word: Vec<CGen>, c: K) {
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

    pub fn add(&self, other: &Self) -> Self {
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
        let mut out = Self::zero();
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

    /// Composition `self ∘ other`, normalized.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wl, cl) in &self.terms {
            for (wr, cr) in &other.terms {
                let mut w = wl.clone();
                w.extend_from_slice(wr);
                norm_into(w, cl.mul(cr), &mut out);
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|g| match g {
                        CGen::Q(a) => format!("I_{a}"),
                        CGen::L(a) => format!("ℒ_{a}"),
                    })
                    .collect::<Vec<_>>()
                    .join("∘")
            };
            parts.push(format!("({c})·{word}"));
        }
        parts.join(" + ")
    }
}

/// Normalize one raw word into the accumulator: find the first reducible
/// adjacent pair (composition order, outermost first) and branch.
fn norm_into<K: Scalar>(word: Vec<CGen>, c: K, out: &mut CompPoly<K>) {
    if c.is_zero() {
        return;
    }
    for i in 0..word.len().saturating_sub(1) {
        match (word[i], word[i + 1]) {
            // Two quaternion units compose to one.
            (CGen::Q(a), CGen::Q(b)) => {
                let (sign, u) = unit_mul(a, b);
                let mut w = word[..i].to_vec();
                if u != 0 {
                    w.push(CGen::Q(u));
                }
                w.extend_from_slice(&word[i + 2..]);
                norm_into(w, c.scale_int(sign), out);
                return;
            }
            // ℒ_a ∘ I_b = I_b ∘ ℒ_a + [ℒ_a, I_b]: move rotations outward.
            (CGen::L(a), CGen::Q(b)) => {
                let mut sw = word.clone();
                sw.swap(i, i + 1);
                norm_into(sw, c.clone(), out);
                if let Some((k, cc)) = lie_rot_bracket(a, b) {
                    let mut w = word[..i].to_vec();
                    w.push(CGen::Q(cc));
                    w.extend_from_slice(&word[i + 2..]);
                    norm_into(w, c.scale_int(k), out);
                }
                return;
            }
            // Sort the ℒ-word: ℒ_b ∘ ℒ_a = ℒ_a ∘ ℒ_b + [ℒ_b, ℒ_a] for b > a.
            (CGen::L(b), CGen::L(a)) if b > a => {
                let mut sw = word.clone();
                sw.swap(i, i + 1);
                norm_into(sw, c.clone(), out);
                if let Some((k, cc)) = lie_bracket(b, a) {
                    let mut w = word[..i].to_vec();
                    w.push(CGen::L(cc));
                    w.extend_from_slice(&word[i + 2..]);
                    norm_into(w, c.scale_int(k), out);
                }
                return;
            }
            _ => {}
        }
    }
    out.insert(word, c);
}

/// A matrix over the component algebra; sizes 1 and 3 model operators
/// between `Ω^k H` and `Ω^k(H,ℝ³)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatOp<K: Scalar> {
    rows: usize,
    cols: usize,
    ents: Vec<CompPoly<K>>,
}

impl<K: Scalar> MatOp<K> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> CompPoly<K>) -> Self {
        let mut ents = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                ents.push(f(r, c));
            }
        }
        MatOp { rows, cols, ents }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| CompPoly::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { CompPoly::one() } else { CompPoly::zero() })
    }

    pub fn entry(&self, r: usize, c: usize) -> &CompPoly<K> {
        &self.ents[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.ents.iter().all(CompPoly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        Self::from_fn(self.rows, self.cols, |r, c| self.entry(r, c).add(other.entry(r, c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale_int(-1)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.entry(r, c).scale_int(n))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch in product");
        Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = CompPoly::zero();
            for j in 0..self.cols {
                acc = acc.add(&self.entry(r, j).mul(other.entry(j, c)));
            }
            acc
        })
    }

    /// First nonzero entry rendered with its position, for residual reports.
    pub fn first_residual(&self) -> Option<String> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.entry(r, c);
                if !e.is_zero() {
                    return Some(format!("entry ({r},{c}): {}", e.render()));
                }
            }
        }
        None
    }
}

/// Cyclic complement of two distinct axes in `{1,2,3}`.
fn third(a: u8, b: u8) -> u8 {
    6 - a - b
}

/// The `su(2)` matrix operator `C`: `(Cσ)_a = ℒ_{ξ_b}σ_c − ℒ_{ξ_c}σ_b`.
pub fn c_mat<K: Scalar>() -> MatOp<K> {
    MatOp::from_fn(3, 3, |r, c| {
        if r == c {
            return CompPoly::zero();
        }
        let (a, b) = (r as u8 + 1, c as u8 + 1);
        let t = third(a, b);
        // Row a, column b: coefficient of σ_b in (Cσ)_a.
        if (a % 3) + 1 == b {
            // b follows a cyclically, so σ_b enters as −ℒ_{ξ_c}σ_b.
            CompPoly::lie(t).neg()
        } else {
            CompPoly::lie(t)
        }
    })
}

/// Vertical Casimir `𝒞 = −Σ_a ℒ²_{ξ_a}` as a 1×1 block.
pub fn casimir_entry<K: Scalar>() -> CompPoly<K> {
    let mut acc = CompPoly::zero();
    for a in 1..=3 {
        acc = acc.sub(&CompPoly::lie(a).mul(&CompPoly::lie(a)));
    }
    acc
}

/// `p = Σ_a I_a ∘ ℒ_{ξ_a}` on `Ω¹H` as a 1×1 block.
pub fn p_entry<K: Scalar>() -> CompPoly<K> {
    let mut acc = CompPoly::zero();
    for a in 1..=3 {
        acc = acc.add(&CompPoly::rot(a).mul(&CompPoly::lie(a)));
    }
    acc
}

/// Trace map `T(α) = Σ_a I_a α_a` as a row.
pub fn t_row<K: Scalar>() -> MatOp<K> {
    MatOp::from_fn(1, 3, |_, c| CompPoly::rot(c as u8 + 1))
}

/// Rotation embedding `(𝕀α)_a = I_a α` as a column.
pub fn i_col<K: Scalar>() -> MatOp<K> {
    MatOp::from_fn(3, 1, |r, _| CompPoly::rot(r as u8 + 1))
}

/// Contracted Lie derivative `ℒ_ξ` as a column.
pub fn lxi_col<K: Scalar>() -> MatOp<K> {
    MatOp::from_fn(3, 1, |r, _| CompPoly::lie(r as u8 + 1))
}

/// Its adjoint `ℒ_ξ^⋆ σ = −Σ_a ℒ_{ξ_a} σ_a` as a row.
pub fn lxi_star_row<K: Scalar>() -> MatOp<K> {
    MatOp::from_fn(1, 3, |_, c| CompPoly::lie(c as u8 + 1).neg())
}

/// The symmetrized projection `P = 1 + 𝕀 ∘ T`.
pub fn big_p<K: Scalar>() -> MatOp<K> {
    MatOp::identity(3).add(&i_col().mul(&t_row()))
}

/// Componentwise extension of a scalar block to `ℝ³`-valued forms.
pub fn diag3<K: Scalar>(e: &CompPoly<K>) -> MatOp<K> {
    MatOp::from_fn(3, 3, |r, c| if r == c { e.clone() } else { CompPoly::zero() })
}

/// The numeric `su(2)` basis matrix `A_a` of the `ℝ³` factor action; the
/// tensor-product representation acts by `ℒ_{ξ_a} + A_a`.
pub fn a_rep<K: Scalar>(a: u8) -> MatOp<K> {
    MatOp::from_fn(3, 3, |r, c| {
        let (r, c) = (r as u8 + 1, c as u8 + 1);
        if r == c || r == a || c == a {
            return CompPoly::zero();
        }
        // The nonzero entries are ±2 in the plane complementary to a.
        let sign = if (a % 3) + 1 == r { -2 } else { 2 };
        CompPoly::constant(K::from_int(sign))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    type P = CompPoly<Rat>;

    #[test]
    fn quaternion_and_bracket_tables() {
        // I₂∘I₁ = I₃ and I₁∘I₂ = −I₃ in the action on forms.
        assert_eq!(P::rot(2).mul(&P::rot(1)), P::rot(3));
        assert_eq!(P::rot(1).mul(&P::rot(2)), P::rot(3).neg());
        assert_eq!(P::rot(1).mul(&P::rot(1)), P::one().neg());
        // ℒ₂∘ℒ₁ = ℒ₁∘ℒ₂ − 2ℒ₃.
        let lhs = P::lie(2).mul(&P::lie(1));
        let rhs = P::lie(1).mul(&P::lie(2)).sub(&P::lie(3).scale_int(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_associative() {
        let samples = [
            P::lie(3).add(&P::rot(1)),
            P::rot(2).mul(&P::lie(1)).sub(&P::one()),
            P::lie(2).mul(&P::lie(3)).add(&P::rot(3).scale_int(2)),
        ];
        for a in &samples {
            for b in &samples {
                for c in &samples {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn casimir_is_central_for_the_lie_part() {
        let cas = casimir_entry::<Rat>();
        for a in 1..=3 {
            assert!(cas.mul(&P::lie(a)).sub(&P::lie(a).mul(&cas)).is_zero());
        }
        // 𝒞 also commutes with p.
        let p = p_entry::<Rat>();
        assert!(cas.mul(&p).sub(&p.mul(&cas)).is_zero());
    }

    #[test]
    fn tensor_product_action_matches_matrix_c() {
        // Σ_a A_a ∘ ℒ_{ξ_a} = 2C, the coupling half of the tensor Casimir.
        let mut acc = MatOp::<Rat>::zero(3, 3);
        for a in 1..=3 {
            acc = acc.add(&a_rep(a).mul(&diag3(&P::lie(a))));
        }
        assert!(acc.sub(&c_mat().scale_int(2)).is_zero());
    }

    #[test]
    fn row_column_contractions() {
        // T ∘ 𝕀 = Σ_a I_a² = −3.
        let ti = t_row::<Rat>().mul(&i_col());
        assert!(ti.sub(&MatOp::from_fn(1, 1, |_, _| P::constant(Rat::from_integer((-3).into())))).is_zero());
        // T ∘ ℒ_ξ = p and −ℒ_ξ^⋆ ∘ 𝕀 = p.
        let p = MatOp::from_fn(1, 1, |_, _| p_entry::<Rat>());
        assert!(t_row::<Rat>().mul(&lxi_col()).sub(&p).is_zero());
        assert!(lxi_star_row::<Rat>().mul(&i_col()).neg().sub(&p).is_zero());
    }

    #[test]
    fn symmetrized_projection_is_quadratic() {
        // P² = 2 − P, hence P⁻¹ = (P+1)/2.
        let p = big_p::<Rat>();
        let two = MatOp::identity(3).scale_int(2);
        assert!(p.mul(&p).sub(&two.sub(&p)).is_zero());
        let half_inv = p.add(&MatOp::identity(3));
        assert!(p.mul(&half_inv).sub(&two).is_zero());
    }
}

//! Symbolic jet engine over the model fiber.
//!
//! Forms are [`Form`]s whose coefficients are multivariate polynomials in
//! *jet variables*: frame components of the tracked derivatives of abstract
//! generators.  The engine knows four derivative tails per generator atom
//! `A` (a generator component under a sorted vertical word):
//!
//! * `Plain` — the value of `A`;
//! * `D` — the horizontal differential `d_H A`;
//! * `SD` — `d_H (⋆_H A)`;
//! * `SDD` — `d_H (⋆_H d_H A)`.
//!
//! To differentiate an arbitrary polynomial form, the engine first expresses
//! it exactly in the *dictionary*: wedges `c ∧ A` and `c ∧ ⋆_H A` of tracked
//! tails with the invariant constant forms `c ∈ {1, ω₁, ω₂, ω₃, vol_H}`.
//! The structure rules then differentiate each dictionary entry:
//! `d_H` moves one tail deeper, `d_H² = −2 Σ_b ω_b ∧ ℒ_b` reduces second
//! differentials to vertical Lie derivatives, and `ℒ_a` acts by the
//! straightened word calculus together with `ℒ_a ω_b = ±2 ω_c`.
//!
//! Rotated-gradient generators (`I_a d_H f`) are materialized pointwise from
//! the scalar jet of `f`; their `D`-tail has its self-dual part computed
//! exactly from the wedge pairings `d_H(I_a d_H f) ∧ ω_b`, while the
//! anti-self-dual part is a fresh second-order unknown.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::fiber::basis::{self, HORIZONTAL_MASK};
use crate::fiber::endo::asd_basis;
use crate::fiber::form::Form;
use crate::fiber::maps::{self, Triple};
use crate::fiber::model::model;
use crate::scalar::linalg::Mat;
use crate::scalar::mpoly::Mono;
use crate::scalar::{MPoly, ParamField, Rat, Scalar};

use super::context::{Arity, ContextSpec, GeneratorSpec};
use super::word::{self, prepend, Word};

/// A horizontal form with polynomial jet coefficients.
pub type JForm<K> = Form<MPoly<K>>;

/// Derivative tails tracked per atom.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Tail {
    Plain,
    D,
    SD,
    SDD,
}

impl Tail {
    fn suffix(self) -> &'static str {
        match self {
            Tail::Plain => "",
            Tail::D => ".d",
            Tail::SD => ".sd",
            Tail::SDD => ".sdd",
        }
    }

    /// Horizontal degree of the tail of a degree-`d0` generator (may exceed
    /// 4, in which case the value is zero).
    fn degree(self, d0: u8) -> u8 {
        match self {
            Tail::Plain => d0,
            Tail::D => d0 + 1,
            Tail::SD => 5 - d0,
            Tail::SDD => 4 - d0,
        }
    }
}

/// A generator component under a sorted vertical word, with a tail.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AtomKey {
    pub gen: usize,
    pub comp: u8,
    pub word: Word,
    pub tail: Tail,
}

/// What a jet variable stands for within its atom.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VarLabel {
    /// Frame component of the materialized form at this monomial mask.
    Mask(u8),
    /// Coefficient of the k-th anti-self-dual basis 2-form.
    Asd(u8),
}

/// Invariant constant forms closing under wedge: `1, ω₁, ω₂, ω₃, vol_H`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
enum CForm {
    One,
    Om(u8), // 0..=2
    Vol,
}

impl CForm {
    const ALL: [CForm; 5] = [
        CForm::One,
        CForm::Om(0),
        CForm::Om(1),
        CForm::Om(2),
        CForm::Vol,
    ];

    fn degree(self) -> u8 {
        match self {
            CForm::One => 0,
            CForm::Om(_) => 2,
            CForm::Vol => 4,
        }
    }

    fn form_rat(self) -> Form<Rat> {
        match self {
            CForm::One => Form::one(),
            CForm::Om(a) => model().omega[a as usize].clone(),
            CForm::Vol => Form::monomial(HORIZONTAL_MASK),
        }
    }

    /// Vertical Lie derivative: `ℒ_a ω_b = 2 ω_c`, `ℒ_a ω_c = −2 ω_b` for a
    /// cyclic triple `(a, b, c)`; scalars and the volume are invariant.
    fn lie_rat(self, a: usize) -> Form<Rat> {
        match self {
            CForm::Om(b) if b as usize != a => {
                let c = 3 - a - b as usize;
                // (a, b, c) cyclic iff b ≡ a+1 (mod 3).
                let sign = if (a + 1) % 3 == b as usize { 2 } else { -2 };
                model().omega[c].clone().scale_int(sign)
            }
            _ => Form::zero(),
        }
    }
}

/// How a dictionary entry combines its constant with its atom.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
enum Mode {
    /// `c ∧ A`.
    Plain,
    /// `c ∧ ⋆_H A`.
    StarIn,
    /// `⋆_H (c ∧ A)` — covers the pointwise rotations `I_a α = ⋆(ω_a ∧ α)`.
    /// Differentiable by `ℒ` but not by `d_H`.
    StarOut,
}

/// One dictionary entry; `atom == None` is the constant entry `c` itself.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct Entry {
    c: CForm,
    mode: Mode,
    atom: Option<usize>,
}

/// Failures of the jet calculus.
#[derive(Debug, Clone, thiserror::Error)]
pub enum JetError {
    #[error("vertical derivative word on `{atom}` exceeds the context cap {cap}")]
    WordCapExceeded { atom: String, cap: usize },
    #[error("missing second-order link: cannot apply {op} to `{atom}`")]
    MissingLink { atom: String, op: String },
    #[error("{what} is nonlinear in jet variables")]
    NonLinear { what: String },
    #[error(
        "no dictionary decomposition of the degree-{degree} slice {slice} (candidates: {candidates})"
    )]
    Decomposition {
        degree: u8,
        slice: String,
        candidates: String,
    },
    #[error("context error: {0}")]
    Context(String),
    #[error("cyclic dependency while materializing `{atom}`")]
    Cycle { atom: String },
    #[error("context `{0}` declares eigen generators but no eigenvalue was supplied")]
    MissingEigenvalue(String),
}

/// Outcome of an exact identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Verified,
    Mismatch(String),
}

impl CheckOutcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, CheckOutcome::Verified)
    }

    /// Panics with the residual report unless the check verified.
    pub fn expect_verified(&self, label: &str) {
        if let CheckOutcome::Mismatch(report) = self {
            panic!("identity `{label}` failed:\n{report}");
        }
    }
}

struct State<K: Scalar> {
    atoms: Vec<AtomKey>,
    ids: HashMap<AtomKey, usize>,
    forms: HashMap<usize, JForm<K>>,
    vars: Vec<(usize, VarLabel)>,
    /// For each atom, the atoms whose materialized forms use its variables.
    users: BTreeMap<usize, BTreeSet<usize>>,
    stack: Vec<usize>,
    dh_cache: HashMap<Entry, JForm<K>>,
    lie_cache: HashMap<(usize, Entry), JForm<K>>,
}

/// The jet engine for one context.
pub struct JetCtx<K: ParamField> {
    spec: ContextSpec,
    nu: Option<K>,
    st: RefCell<State<K>>,
}

/// All horizontal monomial masks of the given degree, ascending.
fn h_masks(d: u8) -> Vec<u8> {
    (0u8..=HORIZONTAL_MASK)
        .filter(|m| m & !HORIZONTAL_MASK == 0 && m.count_ones() == d as u32)
        .collect()
}

/// Human-readable monomial name, e.g. `Z1Z3e2`; the empty mask is `1`.
pub(crate) fn mask_name(mask: u8) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let mut s = String::new();
    for a in 1..=3u8 {
        if mask & basis::z_mask(a) != 0 {
            s.push_str(&format!("Z{a}"));
        }
    }
    for i in 1..=4u8 {
        if mask & basis::e_mask(i) != 0 {
            s.push_str(&format!("e{i}"));
        }
    }
    s
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum RowKey {
    Unit,
    Var(u32),
}

impl<K: ParamField> JetCtx<K> {
    pub fn new(spec: ContextSpec, nu: Option<K>) -> Result<Self, JetError> {
        spec.validate().map_err(JetError::Context)?;
        for (i, g) in spec.generators.iter().enumerate() {
            if let Some(base) = &g.rotated_gradient_of {
                let j = spec.generator_index(base).expect("validated");
                if j >= i {
                    return Err(JetError::Context(format!(
                        "generator `{}` must come after its base `{base}`",
                        g.name
                    )));
                }
            }
        }
        if spec.needs_eigenvalue() && nu.is_none() {
            return Err(JetError::MissingEigenvalue(spec.name.clone()));
        }
        Ok(JetCtx {
            spec,
            nu,
            st: RefCell::new(State {
                atoms: Vec::new(),
                ids: HashMap::new(),
                forms: HashMap::new(),
                vars: Vec::new(),
                users: BTreeMap::new(),
                stack: Vec::new(),
                dh_cache: HashMap::new(),
                lie_cache: HashMap::new(),
            }),
        })
    }

    /// Builds the engine from embedded TOML context text.
    pub fn from_toml(text: &str, nu: Option<K>) -> Result<Self, JetError> {
        let spec = ContextSpec::from_toml_str(text).map_err(JetError::Context)?;
        Self::new(spec, nu)
    }

    pub fn spec(&self) -> &ContextSpec {
        &self.spec
    }

    pub fn eigenvalue(&self) -> Option<K> {
        self.nu.clone()
    }

    fn gen_spec(&self, idx: usize) -> &GeneratorSpec {
        &self.spec.generators[idx]
    }

    fn gen_named(&self, name: &str) -> Result<usize, JetError> {
        self.spec
            .generator_index(name)
            .ok_or_else(|| JetError::Context(format!("unknown generator `{name}`")))
    }

    /// Value of a single-component generator.
    pub fn gen_form(&self, name: &str) -> Result<JForm<K>, JetError> {
        let g = self.gen_named(name)?;
        if self.gen_spec(g).arity != Arity::Single || self.gen_spec(g).rotated_gradient_of.is_some()
        {
            return Err(JetError::Context(format!("generator `{name}` is a triple")));
        }
        self.atom_form(&AtomKey {
            gen: g,
            comp: 0,
            word: Vec::new(),
            tail: Tail::Plain,
        })
    }

    /// Value triple of a triple generator (free or rotated gradient).
    pub fn gen_triple(&self, name: &str) -> Result<Triple<MPoly<K>>, JetError> {
        let g = self.gen_named(name)?;
        let is_triple = self.gen_spec(g).arity == Arity::Triple
            || self.gen_spec(g).rotated_gradient_of.is_some();
        if !is_triple {
            return Err(JetError::Context(format!("generator `{name}` is single")));
        }
        let mut out = maps::zero_triple();
        for a in 0..3u8 {
            out[a as usize] = self.atom_form(&AtomKey {
                gen: g,
                comp: a,
                word: Vec::new(),
                tail: Tail::Plain,
            })?;
        }
        Ok(out)
    }

    // ----- atom bookkeeping -------------------------------------------------

    fn atom_name(&self, key: &AtomKey) -> String {
        let g = self.gen_spec(key.gen);
        let comp = if g.arity == Arity::Triple || g.rotated_gradient_of.is_some() {
            format!("{}", key.comp + 1)
        } else {
            String::new()
        };
        let w = if key.word.is_empty() {
            String::new()
        } else {
            format!("@{}", word::render(&key.word))
        };
        format!("{}{comp}{}{w}", g.name, key.tail.suffix())
    }

    fn intern(&self, key: &AtomKey) -> usize {
        let mut st = self.st.borrow_mut();
        if let Some(&id) = st.ids.get(key) {
            return id;
        }
        let id = st.atoms.len();
        st.atoms.push(key.clone());
        st.ids.insert(key.clone(), id);
        id
    }

    fn alloc_var(&self, atom: usize, label: VarLabel) -> u32 {
        let mut st = self.st.borrow_mut();
        let v = st.vars.len() as u32;
        st.vars.push((atom, label));
        v
    }

    fn var_name(&self, v: u32) -> String {
        let st = self.st.borrow();
        let (atom, label) = st.vars[v as usize];
        let key = st.atoms[atom].clone();
        drop(st);
        let suffix = match label {
            VarLabel::Mask(m) => format!("[{}]", mask_name(m)),
            VarLabel::Asd(k) => format!("[asd{}]", k + 1),
        };
        format!("{}{suffix}", self.atom_name(&key))
    }

    fn fresh_form(&self, atom: usize, degree: u8) -> JForm<K> {
        if degree > 4 {
            return Form::zero();
        }
        let mut out = Form::zero();
        for m in h_masks(degree) {
            let v = self.alloc_var(atom, VarLabel::Mask(m));
            out.add_term(m, &MPoly::var(v));
        }
        out
    }

    fn record(&self, id: usize, form: &JForm<K>) {
        let mut used: BTreeSet<usize> = BTreeSet::new();
        for (_, poly) in form.terms() {
            for v in poly.vars() {
                let atom = self.st.borrow().vars[v as usize].0;
                used.insert(atom);
            }
        }
        let mut st = self.st.borrow_mut();
        for atom in used {
            st.users.entry(atom).or_default().insert(id);
        }
        st.forms.insert(id, form.clone());
    }

    /// Materializes (and memoizes) the form of an atom.
    pub fn atom_form(&self, key: &AtomKey) -> Result<JForm<K>, JetError> {
        debug_assert!(key.word.windows(2).all(|p| p[0] <= p[1]));
        if key.word.len() > self.spec.word_cap {
            return Err(JetError::WordCapExceeded {
                atom: self.atom_name(key),
                cap: self.spec.word_cap,
            });
        }
        let id = self.intern(key);
        if let Some(f) = self.st.borrow().forms.get(&id) {
            return Ok(f.clone());
        }
        if self.st.borrow().stack.contains(&id) {
            return Err(JetError::Cycle {
                atom: self.atom_name(key),
            });
        }
        self.st.borrow_mut().stack.push(id);
        let result = self.materialize(id, key);
        self.st.borrow_mut().stack.pop();
        let form = result?;
        self.record(id, &form);
        Ok(form)
    }

    fn materialize(&self, id: usize, key: &AtomKey) -> Result<JForm<K>, JetError> {
        let g = self.gen_spec(key.gen).clone();
        if let Some(base) = &g.rotated_gradient_of {
            let base_idx = self.spec.generator_index(base).expect("validated");
            return self.materialize_rotated(id, key, base_idx, &g);
        }
        if g.basic && !key.word.is_empty() {
            return Ok(Form::zero());
        }
        if g.anti_self_dual {
            return match key.tail {
                Tail::Plain => {
                    let mut out = Form::zero();
                    for (k, asd) in asd_basis::<MPoly<K>>().iter().enumerate() {
                        let v = self.alloc_var(id, VarLabel::Asd(k as u8));
                        out = out.add(&asd.scale(&MPoly::var(v)));
                    }
                    Ok(out)
                }
                // ⋆_H A = −A, so the self-dual tail is minus the plain one.
                Tail::SD => Ok(self
                    .atom_form(&AtomKey {
                        tail: Tail::D,
                        ..key.clone()
                    })?
                    .neg()),
                Tail::D | Tail::SDD => Ok(self.fresh_form(id, key.tail.degree(2))),
            };
        }
        if g.eigen && key.tail == Tail::SDD {
            // dH ⋆ dH f = −(Δ_H f)·vol_H = −ν f · vol_H on an eigenfunction.
            let nu = self.nu.clone().expect("checked at construction");
            let plain = self.atom_form(&AtomKey {
                tail: Tail::Plain,
                ..key.clone()
            })?;
            let c = plain.coeff(0).scale(&nu).neg();
            return Ok(Form::term(HORIZONTAL_MASK, c));
        }
        Ok(self.fresh_form(id, key.tail.degree(g.degree)))
    }

    fn materialize_rotated(
        &self,
        id: usize,
        key: &AtomKey,
        base: usize,
        g: &GeneratorSpec,
    ) -> Result<JForm<K>, JetError> {
        let a = key.comp as usize;
        let base_key = |word: Word, tail: Tail| AtomKey {
            gen: base,
            comp: 0,
            word,
            tail,
        };
        // ℒ_{a+1} ∘ ℒ_word of the base scalar, as a straightened combination.
        let shifted = prepend(key.comp + 1, &key.word);
        match key.tail {
            Tail::Plain => {
                let df = self.atom_form(&base_key(key.word.clone(), Tail::D))?;
                Ok(maps::i_oneform(a, &df))
            }
            Tail::SD => {
                // dH ⋆ (I_a dH f) = dH(−dH f ∧ ω_a) = 4 (ℒ_a f) vol_H,
                // threaded through the vertical word.
                let mut acc = MPoly::zero();
                for (w, c) in &shifted {
                    let plain = self.atom_form(&base_key(w.clone(), Tail::Plain))?;
                    acc = acc.add(&plain.coeff(0).scale_int(*c));
                }
                Ok(Form::term(HORIZONTAL_MASK, acc.scale_int(4)))
            }
            Tail::D => {
                // Wedge trick: the self-dual part of dH(I_a dH f) is read off
                // the exact pairings dH(I_a dH f) ∧ ω_b; the anti-self-dual
                // part is an independent second-order jet.
                let plain = self.atom_form(&AtomKey {
                    tail: Tail::Plain,
                    ..key.clone()
                })?;
                if plain.is_zero() {
                    return Ok(Form::zero());
                }
                let omega: Triple<MPoly<K>> = maps::omega_in();
                let mut out = Form::zero();
                let half = MPoly::from_k(K::from_frac(1, 2));
                for b in 0..3 {
                    let wb = self.dh(&plain.wedge(&omega[b]))?;
                    let pb = wb.coeff(HORIZONTAL_MASK);
                    out = out.add(&omega[b].scale(&pb.mul(&half)));
                }
                for (k, asd) in asd_basis::<MPoly<K>>().iter().enumerate() {
                    let v = self.alloc_var(id, VarLabel::Asd(k as u8));
                    out = out.add(&asd.scale(&MPoly::var(v)));
                }
                Ok(out)
            }
            Tail::SDD => {
                let Some(shift) = g.laplace_shift else {
                    return Ok(self.fresh_form(id, 3));
                };
                // δH dH β = Δ_H β − dH δH β with Δ_H β = (ν + shift) β and
                // δH β = −⋆ dH ⋆ β = −4 ℒ_a f; then dH ⋆ dH β = ⋆(δH dH β).
                let nu = self.nu.clone().expect("validated: link over eigen base");
                let shifted_nu = nu.add(&K::from_int(shift));
                let plain = self.atom_form(&AtomKey {
                    tail: Tail::Plain,
                    ..key.clone()
                })?;
                let mut y = plain.scale(&MPoly::from_k(shifted_nu));
                for (w, c) in &shifted {
                    let dfw = self.atom_form(&base_key(w.clone(), Tail::D))?;
                    y = y.add(&dfw.scale_int(4 * c));
                }
                Ok(y.star_h())
            }
        }
    }

    /// The straightened combination `ℒ_a(atom)` as pairs (coeff, key).
    fn lie_atom(&self, a: usize, atom: usize) -> Vec<(i64, AtomKey)> {
        let key = self.st.borrow().atoms[atom].clone();
        let g = self.gen_spec(key.gen);
        if g.rotated_gradient_of.is_some() {
            // ℒ_a(I_c X) = (ℒ_a I_c) X + I_c (ℒ_a X): the rotation twist acts
            // on the component, the rest threads into the word.
            let mut out = Vec::new();
            let c = key.comp as usize;
            if c != a {
                let third = (3 - a - c) as u8;
                // (a, c, third) cyclic iff c ≡ a+1 (mod 3): ℒ_a I_c = 2 I_third.
                let sign = if (a + 1) % 3 == c { 2 } else { -2 };
                out.push((
                    sign,
                    AtomKey {
                        comp: third,
                        ..key.clone()
                    },
                ));
            }
            for (w, coeff) in prepend(a as u8 + 1, &key.word) {
                out.push((coeff, AtomKey { word: w, ..key.clone() }));
            }
            out
        } else {
            prepend(a as u8 + 1, &key.word)
                .into_iter()
                .map(|(w, c)| (c, AtomKey { word: w, ..key.clone() }))
                .collect()
        }
    }

    fn lie_atom_form(&self, a: usize, atom: usize) -> Result<JForm<K>, JetError> {
        let mut out = Form::zero();
        for (c, k) in self.lie_atom(a, atom) {
            out = out.add(&self.atom_form(&k)?.scale_int(c));
        }
        Ok(out)
    }

    // ----- dictionary decomposition ----------------------------------------

    fn entry_value(&self, e: &Entry) -> Result<JForm<K>, JetError> {
        let c: JForm<K> = maps::lift(&e.c.form_rat());
        Ok(match e.atom {
            None => c,
            Some(atom) => {
                let key = self.st.borrow().atoms[atom].clone();
                let f = self.atom_form(&key)?;
                match e.mode {
                    Mode::Plain => c.wedge(&f),
                    Mode::StarIn => c.wedge(&f.star_h()),
                    Mode::StarOut => c.wedge(&f).star_h(),
                }
            }
        })
    }

    fn entry_name(&self, e: &Entry) -> String {
        let cname = match e.c {
            CForm::One => "1".to_string(),
            CForm::Om(a) => format!("om{}", a + 1),
            CForm::Vol => "vol".to_string(),
        };
        match e.atom {
            None => cname,
            Some(atom) => {
                let key = self.st.borrow().atoms[atom].clone();
                let name = self.atom_name(&key);
                match e.mode {
                    Mode::Plain => format!("{cname}∧{name}"),
                    Mode::StarIn => format!("{cname}∧⋆{name}"),
                    Mode::StarOut => format!("⋆({cname}∧{name})"),
                }
            }
        }
    }

    /// Entry sort key: base generators before derived ones, then plain
    /// before starred (the star-outside rotations last, since they cannot
    /// be differentiated by `d_H`), shallow tails first.
    fn entry_rank(&self, e: &Entry) -> (usize, u8, usize, Tail, CForm, u8, Word) {
        // Mode outranks the generator: when the dictionary is redundant
        // (a star-wrapped entry of one generator equals a plain entry of a
        // later one) the solver must pivot on the plain entry, because only
        // plain and star-in entries carry a d_H rule.
        let mode = match e.mode {
            Mode::Plain => 0u8,
            Mode::StarIn => 1,
            Mode::StarOut => 2,
        };
        match e.atom {
            None => (0, 0, 0, Tail::Plain, e.c, 0, Vec::new()),
            Some(atom) => {
                let key = self.st.borrow().atoms[atom].clone();
                (1, mode, key.gen, key.tail, e.c, key.comp, key.word)
            }
        }
    }

    fn row_key(mono: &Mono, what: &str) -> Result<RowKey, JetError> {
        let pairs = mono.pairs();
        match pairs.len() {
            0 => Ok(RowKey::Unit),
            1 if pairs[0].1 == 1 => Ok(RowKey::Var(pairs[0].0)),
            _ => Err(JetError::NonLinear {
                what: what.to_string(),
            }),
        }
    }

    /// Expresses a homogeneous horizontal slice exactly in the dictionary.
    fn decompose_slice(
        &self,
        x: &JForm<K>,
        degree: u8,
        what: &str,
    ) -> Result<Vec<(K, Entry)>, JetError> {
        // Atom pool: atoms owning variables of x, closed upward under use.
        let mut pool: BTreeSet<usize> = BTreeSet::new();
        let mut queue: Vec<usize> = Vec::new();
        for (_, poly) in x.terms() {
            for v in poly.vars() {
                let atom = self.st.borrow().vars[v as usize].0;
                if pool.insert(atom) {
                    queue.push(atom);
                }
            }
        }
        while let Some(atom) = queue.pop() {
            let users: Vec<usize> = self
                .st
                .borrow()
                .users
                .get(&atom)
                .map(|s| s.iter().copied().collect())
                .unwrap_or_default();
            for u in users {
                if pool.insert(u) {
                    queue.push(u);
                }
            }
        }

        // Atoms in the same jet family as one currently being materialized
        // must not anchor candidate entries: their derivative tails are the
        // very data under construction, so routing a derivative through them
        // would be circular.  Dropping them is safe — the slice stays
        // reachable through base-generator columns — and at worst turns a
        // would-be cycle into an explicit decomposition failure.
        let in_progress: Vec<(usize, u8, Word)> = {
            let st = self.st.borrow();
            st.stack
                .iter()
                .map(|&id| {
                    let k = &st.atoms[id];
                    (k.gen, k.comp, k.word.clone())
                })
                .collect()
        };
        if !in_progress.is_empty() {
            pool.retain(|&atom| {
                let st = self.st.borrow();
                let k = &st.atoms[atom];
                !in_progress
                    .iter()
                    .any(|(g, c, w)| k.gen == *g && k.comp == *c && k.word == *w)
            });
        }

        // Candidate entries of matching degree with nonzero values.
        let mut entries: Vec<(Entry, JForm<K>)> = Vec::new();
        for c in CForm::ALL {
            if c.degree() == degree {
                entries.push((
                    Entry {
                        c,
                        mode: Mode::Plain,
                        atom: None,
                    },
                    maps::lift(&c.form_rat()),
                ));
            }
        }
        let mut atom_entries: Vec<Entry> = Vec::new();
        for &atom in &pool {
            let key = self.st.borrow().atoms[atom].clone();
            let g = self.gen_spec(key.gen);
            let d0 = if g.rotated_gradient_of.is_some() {
                1
            } else {
                g.degree
            };
            let td = key.tail.degree(d0);
            if td > 4 {
                continue;
            }
            for mode in [Mode::Plain, Mode::StarIn, Mode::StarOut] {
                for c in CForm::ALL {
                    let fits = match mode {
                        Mode::Plain => c.degree() + td == degree,
                        Mode::StarIn => td <= 4 && c.degree() + (4 - td) == degree,
                        // `⋆(c ∧ A)` duplicates `⋆A` when c = 1; skip that.
                        Mode::StarOut => {
                            c != CForm::One
                                && c.degree() + td <= 4
                                && 4 - (c.degree() + td) == degree
                        }
                    };
                    if fits {
                        atom_entries.push(Entry {
                            c,
                            mode,
                            atom: Some(atom),
                        });
                    }
                }
            }
        }
        atom_entries.sort_by(|a, b| self.entry_rank(a).cmp(&self.entry_rank(b)));
        for e in atom_entries {
            let v = self.entry_value(&e)?;
            if !v.is_zero() {
                entries.push((e, v));
            }
        }

        // Row space: (mask, monomial) pairs over x and all entry values.
        let mut rows: BTreeSet<(u8, RowKey)> = BTreeSet::new();
        let mut scan = |f: &JForm<K>| -> Result<(), JetError> {
            for (m, poly) in f.terms() {
                for (mono, _) in poly.terms() {
                    rows.insert((m, Self::row_key(mono, what)?));
                }
            }
            Ok(())
        };
        scan(x)?;
        for (_, v) in &entries {
            scan(v)?;
        }
        let rows: Vec<(u8, RowKey)> = rows.into_iter().collect();

        let coeff_at = |f: &JForm<K>, row: &(u8, RowKey)| -> K {
            let poly = f.coeff(row.0);
            match row.1 {
                RowKey::Unit => poly.constant_term(),
                RowKey::Var(v) => poly.coeff(&Mono::var(v)),
            }
        };
        let a = Mat::from_fn(rows.len(), entries.len(), |i, j| {
            coeff_at(&entries[j].1, &rows[i])
        });
        let b: Vec<K> = rows.iter().map(|r| coeff_at(x, r)).collect();
        let Some(sol) = a.solve(&b) else {
            let candidates = entries
                .iter()
                .map(|(e, _)| self.entry_name(e))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(JetError::Decomposition {
                degree,
                slice: self.short_render(x),
                candidates,
            });
        };
        Ok(sol
            .into_iter()
            .zip(entries)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, (e, _))| (c, e))
            .collect())
    }

    fn degree_slices(x: &JForm<K>) -> Vec<(u8, JForm<K>)> {
        let mut out: Vec<(u8, JForm<K>)> = Vec::new();
        for d in 0..=4u8 {
            let mut slice = Form::zero();
            for (m, c) in x.terms() {
                if m.count_ones() == d as u32 {
                    slice.add_term(m, c);
                }
            }
            if !slice.is_zero() {
                out.push((d, slice));
            }
        }
        out
    }

    // ----- derivative rules -------------------------------------------------

    fn dh_entry(&self, e: &Entry) -> Result<JForm<K>, JetError> {
        if let Some(f) = self.st.borrow().dh_cache.get(e) {
            return Ok(f.clone());
        }
        let out = self.dh_entry_uncached(e)?;
        self.st
            .borrow_mut()
            .dh_cache
            .insert(e.clone(), out.clone());
        Ok(out)
    }

    fn dh_entry_uncached(&self, e: &Entry) -> Result<JForm<K>, JetError> {
        let Some(atom) = e.atom else {
            // The invariant constants are dH-closed.
            return Ok(Form::zero());
        };
        let key = self.st.borrow().atoms[atom].clone();
        let c: JForm<K> = maps::lift(&e.c.form_rat());
        let omega: Triple<MPoly<K>> = maps::omega_in();
        if e.mode == Mode::StarOut {
            // The value determines only the jet tracked by the four tails;
            // dH ⋆(c ∧ A) is mixed second-order data the tails do not carry.
            return Err(JetError::MissingLink {
                atom: self.atom_name(&key),
                op: "dH∘⋆H(c∧·)".to_string(),
            });
        }
        if e.mode == Mode::Plain {
            match key.tail {
                Tail::Plain => {
                    let d = self.atom_form(&AtomKey {
                        tail: Tail::D,
                        ..key
                    })?;
                    Ok(c.wedge(&d))
                }
                // dH² = −2 Σ_b ω_b ∧ ℒ_b, with ⋆_H commuting past ℒ_b.
                Tail::D => {
                    let mut out = Form::zero();
                    for b in 0..3 {
                        let lb = self.lie_plain(b, atom, Tail::Plain)?;
                        out = out.add(&c.wedge(&omega[b]).wedge(&lb).scale_int(-2));
                    }
                    Ok(out)
                }
                Tail::SD => {
                    let mut out = Form::zero();
                    for b in 0..3 {
                        let lb = self.lie_plain(b, atom, Tail::Plain)?.star_h();
                        out = out.add(&c.wedge(&omega[b]).wedge(&lb).scale_int(-2));
                    }
                    Ok(out)
                }
                Tail::SDD => {
                    let mut out = Form::zero();
                    for b in 0..3 {
                        let lb = self.lie_plain(b, atom, Tail::D)?.star_h();
                        out = out.add(&c.wedge(&omega[b]).wedge(&lb).scale_int(-2));
                    }
                    Ok(out)
                }
            }
        } else {
            match key.tail {
                Tail::Plain => {
                    let sd = self.atom_form(&AtomKey {
                        tail: Tail::SD,
                        ..key
                    })?;
                    Ok(c.wedge(&sd))
                }
                Tail::D => {
                    let sdd = self.atom_form(&AtomKey {
                        tail: Tail::SDD,
                        ..key
                    })?;
                    Ok(c.wedge(&sdd))
                }
                Tail::SD | Tail::SDD => Err(JetError::MissingLink {
                    atom: self.atom_name(&key),
                    op: "dH∘⋆H".to_string(),
                }),
            }
        }
    }

    /// `ℒ_b` of the atom re-keyed to the given tail (word straightening and
    /// rotation twist included).
    fn lie_plain(&self, b: usize, atom: usize, tail: Tail) -> Result<JForm<K>, JetError> {
        let base = self.st.borrow().atoms[atom].clone();
        let keyed = AtomKey { tail, ..base };
        let id = self.intern(&keyed);
        // Materialize so lie_atom sees a valid atom id.
        let _ = self.atom_form(&keyed)?;
        self.lie_atom_form(b, id)
    }

    fn lie_entry(&self, a: usize, e: &Entry) -> Result<JForm<K>, JetError> {
        if let Some(f) = self.st.borrow().lie_cache.get(&(a, e.clone())) {
            return Ok(f.clone());
        }
        let c: JForm<K> = maps::lift(&e.c.form_rat());
        let lc: JForm<K> = maps::lift(&e.c.lie_rat(a));
        let out = match e.atom {
            None => lc,
            Some(atom) => {
                let key = self.st.borrow().atoms[atom].clone();
                let f = self.atom_form(&key)?;
                let lf = self.lie_atom_form(a, atom)?;
                match e.mode {
                    Mode::Plain => lc.wedge(&f).add(&c.wedge(&lf)),
                    Mode::StarIn => lc.wedge(&f.star_h()).add(&c.wedge(&lf.star_h())),
                    // ⋆_H commutes with the isometric ℒ_a action.
                    Mode::StarOut => lc.wedge(&f).add(&c.wedge(&lf)).star_h(),
                }
            }
        };
        self.st
            .borrow_mut()
            .lie_cache
            .insert((a, e.clone()), out.clone());
        Ok(out)
    }

    // ----- public operators -------------------------------------------------

    /// Horizontal exterior derivative of a polynomial horizontal form.
    pub fn dh(&self, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        debug_assert!(x.is_horizontal());
        let mut out = Form::zero();
        for (d, slice) in Self::degree_slices(x) {
            for (coeff, e) in self.decompose_slice(&slice, d, "dH argument")? {
                out = out.add(&self.dh_entry(&e)?.scale(&MPoly::from_k(coeff)));
            }
        }
        Ok(out)
    }

    /// Vertical Lie derivative `ℒ_{a+1}` (`a ∈ 0..3`) of a horizontal form.
    pub fn lie(&self, a: usize, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        debug_assert!(x.is_horizontal());
        let mut out = Form::zero();
        for (d, slice) in Self::degree_slices(x) {
            for (coeff, e) in self.decompose_slice(&slice, d, "ℒ argument")? {
                out = out.add(&self.lie_entry(a, &e)?.scale(&MPoly::from_k(coeff)));
            }
        }
        Ok(out)
    }

    /// Horizontal codifferential `−⋆_H d_H ⋆_H`.
    pub fn dh_star(&self, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        Ok(self.dh(&x.star_h())?.star_h().neg())
    }

    /// Horizontal Hodge Laplacian `d_H δ_H + δ_H d_H`.
    pub fn lap_h(&self, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        let a = self.dh_star(&self.dh(x)?)?;
        let b = self.dh(&self.dh_star(x)?)?;
        Ok(a.add(&b))
    }

    /// The triple `(ℒ_1 x, ℒ_2 x, ℒ_3 x)`.
    pub fn lie_xi(&self, x: &JForm<K>) -> Result<Triple<MPoly<K>>, JetError> {
        Ok([self.lie(0, x)?, self.lie(1, x)?, self.lie(2, x)?])
    }

    /// Adjoint contraction `−Σ_a ℒ_a τ_a`.
    pub fn lie_xi_star(&self, t: &Triple<MPoly<K>>) -> Result<JForm<K>, JetError> {
        let mut out = Form::zero();
        for a in 0..3 {
            out = out.sub(&self.lie(a, &t[a])?);
        }
        Ok(out)
    }

    /// `p = Σ_a I_a ℒ_a` on horizontal 1-forms.
    pub fn p_op(&self, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        let mut out = Form::zero();
        for a in 0..3 {
            out = out.add(&maps::i_oneform(a, &self.lie(a, x)?));
        }
        Ok(out)
    }

    /// Vertical Casimir `−Σ_b ℒ_b²` (componentwise).
    pub fn casimir(&self, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        let mut out = Form::zero();
        for b in 0..3 {
            out = out.sub(&self.lie(b, &self.lie(b, x)?)?);
        }
        Ok(out)
    }

    /// The intertwiner `C(τ)_a = ℒ_b τ_c − ℒ_c τ_b` over cyclic `(a, b, c)`.
    pub fn c_op(&self, t: &Triple<MPoly<K>>) -> Result<Triple<MPoly<K>>, JetError> {
        let mut out = maps::zero_triple();
        for &(a, b, c) in &basis::CYCLIC {
            let (a, b, c) = (a as usize - 1, b as usize - 1, c as usize - 1);
            out[a] = self.lie(b, &t[c])?.sub(&self.lie(c, &t[b])?);
        }
        Ok(out)
    }

    /// Tensor-twisted vertical Lie derivative on triples:
    /// `(ℒ^ρ_a τ)_c = ℒ_a τ_c + 2 (e_a × τ)_c`.
    pub fn lie_twisted(&self, a: usize, t: &Triple<MPoly<K>>) -> Result<Triple<MPoly<K>>, JetError> {
        let mut out = maps::zero_triple();
        for c in 0..3 {
            out[c] = self.lie(a, &t[c])?;
        }
        // cross product: (e_a × τ)_k = Σ ε_{k a c} τ_c.
        for &(i, j, k) in &basis::CYCLIC {
            let (i, j, k) = (i as usize - 1, j as usize - 1, k as usize - 1);
            // ε_{ijk} = 1: contributes to out[i] via a = j, τ_k and a = k, τ_j.
            if a == j {
                out[i] = out[i].add(&t[k].scale_int(2));
            }
            if a == k {
                out[i] = out[i].sub(&t[j].scale_int(2));
            }
        }
        Ok(out)
    }

    /// Casimir of the twisted action on triples.
    pub fn casimir_twisted(&self, t: &Triple<MPoly<K>>) -> Result<Triple<MPoly<K>>, JetError> {
        let mut out = maps::zero_triple();
        for b in 0..3 {
            let once = self.lie_twisted(b, t)?;
            let twice = self.lie_twisted(b, &once)?;
            for c in 0..3 {
                out[c] = out[c].sub(&twice[c]);
            }
        }
        Ok(out)
    }

    // ----- full 7-dimensional calculus --------------------------------------

    /// `d Z^a = 2s ω_a − (2/s) Z^b ∧ Z^c` over cyclic `(a, b, c)`.
    fn d_z_single(&self, a: u8) -> Result<JForm<K>, JetError> {
        let s = K::s();
        let sinv = s.inv().map_err(|_| {
            JetError::Context("squashing parameter is not invertible".to_string())
        })?;
        let (b, c) = match a {
            1 => (2, 3),
            2 => (3, 1),
            _ => (1, 2),
        };
        let omega: JForm<K> = maps::lift(&model().omega[a as usize - 1]);
        let zz = Form::<MPoly<K>>::monomial(basis::z_mask(b))
            .wedge(&Form::monomial(basis::z_mask(c)));
        Ok(omega
            .scale(&MPoly::from_k(s.scale_int(2)))
            .sub(&zz.scale(&MPoly::from_k(sinv.scale_int(2)))))
    }

    /// Exterior derivative of a vertical monomial, by the Leibniz rule.
    fn d_z_monomial(&self, zmask: u8) -> Result<JForm<K>, JetError> {
        let mut out = Form::zero();
        let mut sign = 1i64;
        for a in 1..=3u8 {
            if zmask & basis::z_mask(a) == 0 {
                continue;
            }
            let before = (1..a)
                .filter(|&x| zmask & basis::z_mask(x) != 0)
                .fold(0u8, |m, x| m | basis::z_mask(x));
            let after = ((a + 1)..=3)
                .filter(|&x| zmask & basis::z_mask(x) != 0)
                .fold(0u8, |m, x| m | basis::z_mask(x));
            out = out.add(
                &Form::<MPoly<K>>::monomial(before)
                    .wedge(&self.d_z_single(a)?)
                    .wedge(&Form::monomial(after))
                    .scale_int(sign),
            );
            sign = -sign;
        }
        Ok(out)
    }

    /// Full exterior derivative on the squashed 7-manifold:
    /// `d(Z_m ∧ h) = dZ_m ∧ h + (−1)^{|Z_m|} Z_m ∧ (d_H h + (1/s) Σ_b Z^b ∧ ℒ_b h)`.
    pub fn d_full(&self, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        let s = K::s();
        let sinv = s.inv().map_err(|_| {
            JetError::Context("squashing parameter is not invertible".to_string())
        })?;
        let mut out = Form::zero();
        for zm in x.z_masks() {
            let h = x.z_slice(zm);
            let zmono = Form::<MPoly<K>>::monomial(zm);
            out = out.add(&self.d_z_monomial(zm)?.wedge(&h));
            let sign = if zm.count_ones() % 2 == 0 { 1 } else { -1 };
            let mut dh_part = self.dh(&h)?;
            for b in 0..3 {
                let zb = Form::<MPoly<K>>::monomial(basis::z_mask(b as u8 + 1));
                dh_part = dh_part.add(
                    &zb.wedge(&self.lie(b, &h)?)
                        .scale(&MPoly::from_k(sinv.clone())),
                );
            }
            out = out.add(&zmono.wedge(&dh_part).scale_int(sign));
        }
        Ok(out)
    }

    /// Full vertical Lie derivative `ℒ_{a+1}` on mixed forms, including the
    /// rotation of the vertical coframe.
    pub fn lie_full(&self, a: usize, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        let mut out = Form::zero();
        for zm in x.z_masks() {
            let h = x.z_slice(zm);
            let zmono = Form::<MPoly<K>>::monomial(zm);
            out = out.add(&zmono.wedge(&self.lie(a, &h)?));
            // ℒ_a Z^b = 2 Z^c, ℒ_a Z^c = −2 Z^b over cyclic (a, b, c).
            for b in 0..3usize {
                if b == a || zm & basis::z_mask(b as u8 + 1) == 0 {
                    continue;
                }
                let c = 3 - a - b;
                let sign = if (a + 1) % 3 == b { 2 } else { -2 };
                let replaced = (zm & !basis::z_mask(b as u8 + 1)) | basis::z_mask(c as u8 + 1);
                if replaced.count_ones() != zm.count_ones() {
                    continue; // Z^c already present: wedge vanishes.
                }
                // Re-expand with the replacement in the original position.
                let pos_sign = Self::replace_sign(zm, b as u8 + 1, c as u8 + 1);
                out = out.add(
                    &Form::<MPoly<K>>::monomial(replaced)
                        .wedge(&h)
                        .scale_int(sign * pos_sign),
                );
            }
        }
        Ok(out)
    }

    /// Sign of substituting `Z^from → Z^to` inside an ascending monomial and
    /// re-sorting.
    fn replace_sign(zmask: u8, from: u8, to: u8) -> i64 {
        let others = zmask & !basis::z_mask(from);
        let s1 = basis::wedge_sign(basis::z_mask(from), others) as i64;
        let s2 = basis::wedge_sign(basis::z_mask(to), others) as i64;
        // zm = s1 · Z^from ∧ others; Z^to ∧ others = s2 · sorted.
        s1 * s2
    }

    /// Hodge star of the squashed metric (the coframe `Z^a, e^i` is
    /// orthonormal for it).
    pub fn star_s(&self, x: &JForm<K>) -> JForm<K> {
        x.star7()
    }

    /// Codifferential `δ = (−1)^k ⋆ d ⋆` on homogeneous k-forms (dimension 7).
    pub fn codiff_s(&self, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        if x.is_zero() {
            return Ok(Form::zero());
        }
        let k = x
            .degree()
            .expect("codifferential needs a homogeneous form");
        let out = self.star_s(&self.d_full(&self.star_s(x))?);
        Ok(if k % 2 == 0 { out } else { out.neg() })
    }

    /// Hodge Laplacian of the squashed metric.
    pub fn laplace_s(&self, x: &JForm<K>) -> Result<JForm<K>, JetError> {
        let a = self.codiff_s(&self.d_full(x)?)?;
        let b = self.d_full(&self.codiff_s(x)?)?;
        Ok(a.add(&b))
    }

    // ----- reporting --------------------------------------------------------

    fn short_render(&self, x: &JForm<K>) -> String {
        let namer = |v: u32| self.var_name(v);
        let mut parts: Vec<String> = Vec::new();
        for (i, (m, poly)) in x.terms().enumerate() {
            if i == 3 {
                parts.push("…".to_string());
                break;
            }
            parts.push(format!("({})·{}", poly.render(&namer), mask_name(m)));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Exact equality check with a short residual report on failure.
    pub fn check_equal(&self, lhs: &JForm<K>, rhs: &JForm<K>) -> CheckOutcome {
        let diff = lhs.sub(rhs);
        if diff.is_zero() {
            CheckOutcome::Verified
        } else {
            let n = diff.num_terms();
            CheckOutcome::Mismatch(format!(
                "residual has {n} nonzero monomial coefficient(s); leading terms: {}",
                self.short_render(&diff)
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::context;
    use super::*;
    use crate::scalar::ParamScalar;

    type Ctx = JetCtx<ParamScalar>;

    fn blocks() -> Ctx {
        Ctx::from_toml(context::BLOCKS, None).unwrap()
    }

    #[test]
    fn dh_squared_is_minus_two_omega_lie() {
        let ctx = blocks();
        let f = ctx.gen_form("F").unwrap();
        let ddf = ctx.dh(&ctx.dh(&f).unwrap()).unwrap();
        let mut rhs: JForm<ParamScalar> = Form::zero();
        let omega: Triple<MPoly<ParamScalar>> = maps::omega_in();
        for b in 0..3 {
            rhs = rhs.sub(&omega[b].wedge(&ctx.lie(b, &f).unwrap()).scale_int(2));
        }
        ctx.check_equal(&ddf, &rhs).expect_verified("dH² on scalars");
    }

    #[test]
    fn dh_commutes_with_lie() {
        let ctx = blocks();
        for name in ["F", "a", "tau"] {
            let x = ctx.gen_form(name).unwrap();
            for a in 0..3 {
                let lhs = ctx.dh(&ctx.lie(a, &x).unwrap()).unwrap();
                let rhs = ctx.lie(a, &ctx.dh(&x).unwrap()).unwrap();
                ctx.check_equal(&lhs, &rhs)
                    .expect_verified("[dH, ℒ] = 0");
            }
        }
    }

    #[test]
    fn lie_bracket_on_forms() {
        let ctx = blocks();
        let x = ctx.gen_form("tau").unwrap();
        // [ℒ1, ℒ2] = 2 ℒ3.
        let l12 = ctx.lie(0, &ctx.lie(1, &x).unwrap()).unwrap();
        let l21 = ctx.lie(1, &ctx.lie(0, &x).unwrap()).unwrap();
        let lhs = l12.sub(&l21);
        let rhs = ctx.lie(2, &x).unwrap().scale_int(2);
        ctx.check_equal(&lhs, &rhs).expect_verified("su(2) bracket");
    }

    #[test]
    fn full_d_squares_to_zero_on_scalar() {
        let ctx = blocks();
        let f = ctx.gen_form("F").unwrap();
        let ddf = ctx.d_full(&ctx.d_full(&f).unwrap()).unwrap();
        assert!(ddf.is_zero(), "d² F = {}", ctx.short_render(&ddf));
    }

    #[test]
    fn full_d_squares_to_zero_on_vertical_coframe() {
        let ctx = blocks();
        for a in 1..=3u8 {
            let z = Form::<MPoly<ParamScalar>>::monomial(basis::z_mask(a));
            let ddz = ctx.d_full(&ctx.d_full(&z).unwrap()).unwrap();
            assert!(ddz.is_zero(), "d² Z{a} = {}", ctx.short_render(&ddz));
        }
    }

    #[test]
    fn rotated_gradient_coclosure() {
        let ctx = JetCtx::<ParamScalar>::from_toml(context::SCALAR_FIELD, None).unwrap();
        let rg = ctx.gen_triple("rg").unwrap();
        let f = ctx.gen_form("f").unwrap();
        for a in 0..3 {
            let lhs = ctx.dh_star(&rg[a]).unwrap();
            let rhs = ctx.lie(a, &f).unwrap().scale_int(-4);
            ctx.check_equal(&lhs, &rhs)
                .expect_verified("δH(I_a dH f) = −4 ℒ_a f");
        }
    }

    #[test]
    fn word_cap_is_enforced() {
        let text = r#"
            name = "tiny"
            word_cap = 1
            [[generator]]
            name = "F"
            degree = 0
        "#;
        let ctx = JetCtx::<ParamScalar>::from_toml(text, None).unwrap();
        let f = ctx.gen_form("F").unwrap();
        let lf = ctx.lie(0, &f).unwrap();
        assert!(matches!(
            ctx.lie(1, &lf),
            Err(JetError::WordCapExceeded { .. })
        ));
    }
}

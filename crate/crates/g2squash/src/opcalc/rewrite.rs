//! The rewrite engine: exhaustive normalization and scripted replay of
//! operator polynomials against an oriented rule set.
//!
//! Normalization repeatedly applies the first matching rule — terms in
//! their stored order, positions left to right (outermost first), rules in
//! selection order — so runs are deterministic.  A step cap guards against
//! non-terminating rule sets; hitting it is reported as a failure, never
//! silently truncated.  Replay applies an explicit script of rule
//! applications instead, reporting the step and reason on the first
//! mismatch; it is used where a derivation is meant to be read as a proof
//! rather than found by search.

use crate::scalar::Scalar;

use super::poly::{word_cod, OpPoly};
use super::rules::RuleSet;
use super::symbol::OpSymbol;
use super::OpError;

/// Default bound on rewrite steps per normalization.
pub const DEFAULT_CAP: usize = 10_000;

/// One scripted rewrite step: a rule, optionally pinned to the `term`-th
/// term (in stored order) at symbol position `pos`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptStep {
    pub rule: String,
    pub at: Option<(usize, usize)>,
}

/// A parsed replay script.
#[derive(Clone, Debug, Default)]
pub struct Script {
    steps: Vec<ScriptStep>,
}

impl Script {
    /// Parse a script: one `apply <rule-id>` or `apply <rule-id> at
    /// <term>.<pos>` per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, OpError> {
        let mut steps = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| OpError::Script {
                line: lineno + 1,
                msg: msg.into(),
            };
            let rest = line
                .strip_prefix("apply ")
                .ok_or_else(|| err("expected `apply <rule-id> [at <term>.<pos>]`"))?;
            let step = match rest.split_once(" at ") {
                None => ScriptStep { rule: rest.trim().into(), at: None },
                Some((id, locus)) => {
                    let (t, p) = locus
                        .trim()
                        .split_once('.')
                        .ok_or_else(|| err("locus must be `<term>.<pos>`"))?;
                    let t = t.parse().map_err(|_| err("term index must be a number"))?;
                    let p = p.parse().map_err(|_| err("position must be a number"))?;
                    ScriptStep { rule: id.trim().into(), at: Some((t, p)) }
                }
            };
            steps.push(step);
        }
        Ok(Script { steps })
    }

    pub fn steps(&self) -> &[ScriptStep] {
        &self.steps
    }
}

/// Replace `word[pos .. pos+len]` by each right-hand segment of the rule,
/// returning the substituted weighted words.
fn substitute<K: Scalar>(
    word: &[OpSymbol],
    pos: usize,
    len: usize,
    rhs: &[(K, Vec<OpSymbol>)],
    coeff: &K,
) -> Vec<(K, Vec<OpSymbol>)> {
    rhs.iter()
        .map(|(c, seg)| {
            let mut w = word[..pos].to_vec();
            w.extend_from_slice(seg);
            w.extend_from_slice(&word[pos + len..]);
            (coeff.mul(c), w)
        })
        .collect()
}

/// Does `rule` match `word` at `pos`, given the polynomial domain?
fn rule_matches<K: Scalar>(
    rule: &super::rules::Rule<K>,
    word: &[OpSymbol],
    pos: usize,
    dom: super::symbol::Space,
) -> bool {
    let len = rule.lhs.len();
    if pos + len > word.len() || word[pos..pos + len] != rule.lhs[..] {
        return false;
    }
    match word_cod(&word[pos + len..], dom) {
        Some(local) => rule.admits_dom(local),
        None => false,
    }
}

/// Apply one rewrite of `rule` to the term `(word, coeff)` inside `poly`.
fn apply_step<K: Scalar>(
    poly: &OpPoly<K>,
    word: &[OpSymbol],
    coeff: &K,
    pos: usize,
    rule: &super::rules::Rule<K>,
) -> Result<OpPoly<K>, OpError> {
    let mut out = poly.sub(&OpPoly::term(coeff.clone(), word, poly.dom())?);
    for (c, w) in substitute(word, pos, rule.lhs.len(), &rule.rhs, coeff) {
        out = out.add(&OpPoly::term(c, &w, poly.dom())?);
    }
    Ok(out)
}

/// Exhaustively rewrite `poly` with `rules`; returns the normal form and
/// the number of steps taken.
pub fn normalize<K: Scalar>(
    poly: &OpPoly<K>,
    rules: &RuleSet<K>,
    cap: usize,
) -> Result<(OpPoly<K>, usize), OpError> {
    let mut cur = poly.clone();
    let mut steps = 0usize;
    'outer: loop {
        let found = {
            let mut hit = None;
            'scan: for (word, coeff) in cur.terms() {
                for pos in 0..word.len() {
                    for rule in rules.rules() {
                        if rule_matches(rule, word, pos, cur.dom()) {
                            hit = Some((word.to_vec(), coeff.clone(), pos, rule.clone()));
                            break 'scan;
                        }
                    }
                }
            }
            hit
        };
        match found {
            None => break 'outer,
            Some((word, coeff, pos, rule)) => {
                if steps >= cap {
                    return Err(OpError::CapExceeded { cap });
                }
                cur = apply_step(&cur, &word, &coeff, pos, &rule)?;
                steps += 1;
            }
        }
    }
    Ok((cur, steps))
}

/// Apply a replay script step by step; every step must fire exactly where
/// stated (or, without a locus, at the first match of that rule).
pub fn replay<K: Scalar>(
    poly: &OpPoly<K>,
    rules: &RuleSet<K>,
    script: &Script,
) -> Result<(OpPoly<K>, usize), OpError> {
    let mut cur = poly.clone();
    for (stepno, step) in script.steps().iter().enumerate() {
        let fail = |reason: String| OpError::Replay {
            step: stepno + 1,
            rule: step.rule.clone(),
            reason,
        };
        let rule = rules
            .get(&step.rule)
            .ok_or_else(|| fail("rule not in the selected set".into()))?
            .clone();
        let found = match step.at {
            Some((t, p)) => {
                let term = cur.terms().nth(t);
                match term {
                    None => None,
                    Some((word, coeff)) => rule_matches(&rule, word, p, cur.dom())
                        .then(|| (word.to_vec(), coeff.clone(), p)),
                }
            }
            None => {
                let mut hit = None;
                'scan: for (word, coeff) in cur.terms() {
                    for pos in 0..word.len() {
                        if rule_matches(&rule, word, pos, cur.dom()) {
                            hit = Some((word.to_vec(), coeff.clone(), pos));
                            break 'scan;
                        }
                    }
                }
                hit
            }
        };
        let (word, coeff, pos) = found.ok_or_else(|| {
            fail(format!("no match in {}", cur.render()))
        })?;
        cur = apply_step(&cur, &word, &coeff, pos, &rule)?;
    }
    Ok((cur, script.steps().len()))
}

/// Interpret a normal form as a verification outcome.
pub fn expect_zero<K: Scalar>(poly: &OpPoly<K>) -> Result<(), String> {
    if poly.is_zero() {
        Ok(())
    } else {
        Err(format!("residual: {}", poly.render()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opcalc::symbol::{OpSymbol::*, Space};
    use crate::scalar::Rat;

    fn set(ids: &[&str]) -> RuleSet<Rat> {
        RuleSet::select(ids, Vec::new()).unwrap()
    }

    #[test]
    fn normalization_sorts_a_reeb_word() {
        // ℒ₂ℒ₁ − ℒ₁ℒ₂ + 2ℒ₃ normalizes to zero on functions.
        let dom = Space::single(0);
        let p = OpPoly::<Rat>::word(&[Lie(2), Lie(1)], dom)
            .unwrap()
            .sub(&OpPoly::word(&[Lie(1), Lie(2)], dom).unwrap())
            .add(&OpPoly::word(&[Lie(3)], dom).unwrap().scale_int(2));
        let (nf, steps) = normalize(&p, &set(&["lie-sort-21"]), 100).unwrap();
        assert!(nf.is_zero(), "residual {}", nf.render());
        assert_eq!(steps, 1);
    }

    #[test]
    fn domain_restriction_gates_rules() {
        // The Laplacian expansion at degree zero must not fire on 1-forms.
        let p1 = OpPoly::<Rat>::word(&[LapH], Space::single(1)).unwrap();
        let (nf, steps) = normalize(&p1, &set(&["laplace-expand-bottom"]), 100).unwrap();
        assert_eq!(steps, 0);
        assert_eq!(nf, p1);
    }

    #[test]
    fn cap_is_enforced() {
        let dom = Space::single(0);
        let p = OpPoly::<Rat>::word(&[Lie(2), Lie(1), Lie(2), Lie(1)], dom).unwrap();
        let err = normalize(&p, &set(&["lie-sort-21", "lie-sort-31", "lie-sort-32"]), 1)
            .unwrap_err();
        assert!(matches!(err, OpError::CapExceeded { cap: 1 }));
    }

    #[test]
    fn scripts_parse_and_replay_with_failure_positions() {
        let dom = Space::single(0);
        let p = OpPoly::<Rat>::word(&[Lie(2), Lie(1)], dom).unwrap();
        let rules = set(&["lie-sort-21"]);
        let script = Script::parse("# sort the word\napply lie-sort-21 at 0.0\n").unwrap();
        let (out, steps) = replay(&p, &rules, &script).unwrap();
        assert_eq!(steps, 1);
        assert_eq!(out.num_terms(), 2);
        // A second application has nothing to match and names the step.
        let script2 = Script::parse("apply lie-sort-21\napply lie-sort-21\n").unwrap();
        let err = replay(&p, &rules, &script2).unwrap_err();
        match err {
            OpError::Replay { step, rule, .. } => {
                assert_eq!(step, 2);
                assert_eq!(rule, "lie-sort-21");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn malformed_scripts_are_rejected_with_line_numbers() {
        let err = Script::parse("apply ok-rule\nfrobnicate\n").unwrap_err();
        match err {
            OpError::Script { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }
}

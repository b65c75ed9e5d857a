//! Ordered words in the three vertical Lie-derivative operators.
//!
//! The Killing frame satisfies the commutation rules of `su(2)` at weight
//! two: `[L1, L2] = 2 L3` and cyclic permutations.  A *word* is a sorted
//! sequence of letters `1..=3`, read as the composition
//! `L_{w[0]} ∘ L_{w[1]} ∘ …` applied to a generator.  Arbitrary
//! compositions are rewritten into integer combinations of sorted words by
//! the Poincaré–Birkhoff–Witt straightening rules
//!
//! ```text
//! L2 L1 = L1 L2 − 2 L3,   L3 L1 = L1 L3 + 2 L2,   L3 L2 = L2 L3 − 2 L1.
//! ```

use std::collections::HashMap;

/// A sorted composition of vertical Lie derivatives (letters `1..=3`).
pub type Word = Vec<u8>;

/// An integer combination of sorted words.
pub type WordCombo = Vec<(Word, i64)>;

/// Commutator `[L_a, L_b] = coeff · L_k` for `a > b`.
fn bracket(a: u8, b: u8) -> (u8, i64) {
    match (a, b) {
        (2, 1) => (3, -2),
        (3, 1) => (2, 2),
        (3, 2) => (1, -2),
        _ => unreachable!("bracket called with letters {a} <= {b}"),
    }
}

fn add_combo(acc: &mut HashMap<Word, i64>, w: Word, c: i64) {
    let entry = acc.entry(w).or_insert(0);
    *entry += c;
    if *entry == 0 {
        acc.remove_entry_zero();
    }
}

trait RemoveZero {
    fn remove_entry_zero(&mut self);
}

impl RemoveZero for HashMap<Word, i64> {
    fn remove_entry_zero(&mut self) {
        self.retain(|_, c| *c != 0);
    }
}

/// Straightens `L_a ∘ (sorted word w)` into a combination of sorted words.
pub fn prepend(a: u8, w: &[u8]) -> WordCombo {
    debug_assert!((1..=3).contains(&a), "letter out of range");
    debug_assert!(w.windows(2).all(|p| p[0] <= p[1]), "word not sorted");
    if w.is_empty() || a <= w[0] {
        let mut out = Vec::with_capacity(w.len() + 1);
        out.push(a);
        out.extend_from_slice(w);
        return vec![(out, 1)];
    }
    // a > w[0]: swap past the head and recurse on both summands.
    let head = w[0];
    let rest = &w[1..];
    let mut acc: HashMap<Word, i64> = HashMap::new();
    for (tail_word, c) in prepend(a, rest) {
        for (full, c2) in prepend_sorted_head(head, &tail_word) {
            add_combo(&mut acc, full, c * c2);
        }
    }
    let (k, bc) = bracket(a, head);
    for (full, c) in prepend(k, rest) {
        add_combo(&mut acc, full, bc * c);
    }
    let mut out: WordCombo = acc.into_iter().collect();
    out.sort();
    out
}

/// Prepends a letter known to be `<=` every letter of `w` (already sorted).
fn prepend_sorted_head(head: u8, w: &[u8]) -> WordCombo {
    if w.is_empty() || head <= w[0] {
        let mut out = Vec::with_capacity(w.len() + 1);
        out.push(head);
        out.extend_from_slice(w);
        vec![(out, 1)]
    } else {
        prepend(head, w)
    }
}

/// Renders a word for diagnostics, e.g. `L1L3`; the empty word is `·`.
pub fn render(w: &[u8]) -> String {
    if w.is_empty() {
        "·".to_string()
    } else {
        w.iter().map(|l| format!("L{l}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prepend_keeps_sorted_words() {
        assert_eq!(prepend(1, &[2, 3]), vec![(vec![1, 2, 3], 1)]);
        assert_eq!(prepend(2, &[2]), vec![(vec![2, 2], 1)]);
    }

    #[test]
    fn straightening_rules() {
        // L2 L1 = L1 L2 − 2 L3
        assert_eq!(prepend(2, &[1]), vec![(vec![1, 2], 1), (vec![3], -2)]);
        // L3 L1 = L1 L3 + 2 L2
        assert_eq!(prepend(3, &[1]), vec![(vec![1, 3], 1), (vec![2], 2)]);
        // L3 L2 = L2 L3 − 2 L1
        assert_eq!(prepend(3, &[2]), vec![(vec![1], -2), (vec![2, 3], 1)]);
    }

    #[test]
    fn casimir_commutes_with_each_letter() {
        // The Casimir −(L1² + L2² + L3²) commutes with every L_a: straighten
        // L_a ∘ L_b ∘ L_b and L_b ∘ L_b ∘ L_a and compare sums over b.
        for a in 1..=3u8 {
            let mut left: HashMap<Word, i64> = HashMap::new();
            let mut right: HashMap<Word, i64> = HashMap::new();
            for b in 1..=3u8 {
                for (w, c) in prepend(a, &[b, b]) {
                    add_combo(&mut left, w, c);
                }
                // L_b L_b L_a: straighten innermost-first.
                for (w1, c1) in prepend(b, &[a]) {
                    for (w2, c2) in prepend(b, &w1) {
                        add_combo(&mut right, w2, c1 * c2);
                    }
                }
            }
            let mut l: WordCombo = left.into_iter().collect();
            let mut r: WordCombo = right.into_iter().collect();
            l.sort();
            r.sort();
            assert_eq!(l, r, "Casimir fails to commute with L{a}");
        }
    }
}

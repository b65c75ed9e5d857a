//! Basis combinatorics for the 7-dimensional model fiber.
//!
//! Directions are indexed `0,1,2` for the vertical frame covectors
//! `Z¹,Z²,Z³` and `3..=6` for the horizontal covectors `e¹..e⁴`.  A basis
//! monomial of the exterior algebra is a bitmask over these seven
//! directions, ordered ascending; signs are inversion counts.  The model
//! volume orientation is the full mask `Z¹∧Z²∧Z³∧e¹∧e²∧e³∧e⁴`.

/// Total number of frame directions.
pub const DIM: u32 = 7;

/// Bitmask of the three vertical directions.
pub const VERTICAL_MASK: u8 = 0b0000_0111;

/// Bitmask of the four horizontal directions.
pub const HORIZONTAL_MASK: u8 = 0b0111_1000;

/// The full orientation monomial (7-form mask).
pub const VOLUME_MASK: u8 = VERTICAL_MASK | HORIZONTAL_MASK;

/// Mask of the vertical covector `Z^a`, `a ∈ {1,2,3}`.
pub const fn z_mask(a: u8) -> u8 {
    debug_assert!(a >= 1 && a <= 3);
    1 << (a - 1)
}

/// Mask of the horizontal covector `e^i`, `i ∈ {1,2,3,4}`.
pub const fn e_mask(i: u8) -> u8 {
    debug_assert!(i >= 1 && i <= 4);
    1 << (i + 2)
}

/// Exterior degree of a monomial.
pub fn degree(mask: u8) -> u32 {
    mask.count_ones()
}

/// Is the monomial purely horizontal?
pub fn is_horizontal(mask: u8) -> bool {
    mask & VERTICAL_MASK == 0
}

/// Wedge sign of two disjoint monomials (0 if they overlap): the parity of
/// the number of transpositions needed to merge `a` ascending into `b`.
pub fn wedge_sign(a: u8, b: u8) -> i8 {
    if a & b != 0 {
        return 0;
    }
    let mut inversions = 0u32;
    let mut rest_a = a;
    while rest_a != 0 {
        let i = rest_a.trailing_zeros();
        rest_a &= rest_a - 1;
        // Bits of b strictly below i must hop over direction i.
        inversions += (b & ((1u8 << i) - 1)).count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the 7-dimensional Hodge star on a monomial: `⋆ mask = sign ·
/// complement`, with the orientation fixed by [`VOLUME_MASK`].
pub fn star7_sign(mask: u8) -> i8 {
    let s = wedge_sign(mask, VOLUME_MASK & !mask);
    debug_assert!(s != 0);
    s
}

/// Sign of the horizontal (4-dimensional) Hodge star on a purely horizontal
/// monomial, oriented by `e¹∧e²∧e³∧e⁴`.
pub fn star_h_sign(mask: u8) -> i8 {
    debug_assert!(is_horizontal(mask));
    let s = wedge_sign(mask, HORIZONTAL_MASK & !mask);
    debug_assert!(s != 0);
    s
}

/// Sign picked up when extracting direction `i` from the front of an
/// ascending monomial containing it: `(−1)^{#set bits below i}`.
pub fn extraction_sign(mask: u8, i: u8) -> i8 {
    debug_assert!(mask & (1 << i) != 0);
    if (mask & ((1u8 << i) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Human-readable monomial label: `1`, `Z1^Z3`, `Z2^e1^e4`, ...
pub fn monomial_label(mask: u8) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for i in 0..DIM {
        if mask & (1 << i) != 0 {
            if i < 3 {
                parts.push(format!("Z{}", i + 1));
            } else {
                parts.push(format!("e{}", i - 2));
            }
        }
    }
    parts.join("^")
}

/// All monomial masks of a given degree, ascending.
pub fn masks_of_degree(k: u32) -> Vec<u8> {
    (0u8..=VOLUME_MASK)
        .filter(|m| degree(*m) == k)
        .collect()
}

/// All purely horizontal masks of a given degree, ascending.
pub fn horizontal_masks_of_degree(k: u32) -> Vec<u8> {
    masks_of_degree(k)
        .into_iter()
        .filter(|&m| is_horizontal(m))
        .collect()
}

/// The `(a, b, c)` cyclic triples of vertical indices: (1,2,3), (2,3,1),
/// (3,1,2).
pub const CYCLIC: [(u8, u8, u8); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks_and_degrees() {
        assert_eq!(z_mask(1), 0b001);
        assert_eq!(z_mask(3), 0b100);
        assert_eq!(e_mask(1), 0b000_1000);
        assert_eq!(e_mask(4), 0b100_0000);
        assert_eq!(degree(VOLUME_MASK), 7);
        assert_eq!(masks_of_degree(3).len(), 35);
        assert_eq!(horizontal_masks_of_degree(2).len(), 6);
    }

    #[test]
    fn wedge_signs() {
        // Z1 ∧ Z2 in order: +; Z2 ∧ Z1: −.
        assert_eq!(wedge_sign(z_mask(1), z_mask(2)), 1);
        assert_eq!(wedge_sign(z_mask(2), z_mask(1)), -1);
        assert_eq!(wedge_sign(z_mask(1), z_mask(1)), 0);
        // e1∧e2 then e3∧e4 merge with no inversions.
        let e12 = e_mask(1) | e_mask(2);
        let e34 = e_mask(3) | e_mask(4);
        assert_eq!(wedge_sign(e12, e34), 1);
        // e2∧e4 ∧ e1∧e3: merging {2,4} into {1,3}: e1 hops 2 (past e2,e4 →
        // below-count), count inversions explicitly: pairs (i∈a, j∈b, i>j):
        // (2,1),(4,1),(4,3) → 3 inversions → −.
        let a = e_mask(2) | e_mask(4);
        let b = e_mask(1) | e_mask(3);
        assert_eq!(wedge_sign(a, b), -1);
    }

    #[test]
    fn star_signs_square_correctly() {
        // 7d: ⋆⋆ = id on every degree.
        for mask in 0u8..=VOLUME_MASK {
            if mask & !VOLUME_MASK != 0 {
                continue;
            }
            let c = VOLUME_MASK & !mask;
            assert_eq!(star7_sign(mask) * star7_sign(c), 1, "mask {mask:#b}");
        }
        // 4d: ⋆⋆ = (−1)^k.
        for &mask in masks_of_degree(0)
            .iter()
            .chain(masks_of_degree(1).iter())
            .chain(masks_of_degree(2).iter())
        {
            if !is_horizontal(mask) {
                continue;
            }
            let k = degree(mask);
            let c = HORIZONTAL_MASK & !mask;
            let expect = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(star_h_sign(mask) * star_h_sign(c), expect);
        }
    }

    #[test]
    fn extraction_signs() {
        // e1 from e1∧e2: front, +. e2 from e1∧e2: one hop, −.
        let e12 = e_mask(1) | e_mask(2);
        assert_eq!(extraction_sign(e12, 3), 1);
        assert_eq!(extraction_sign(e12, 4), -1);
    }

    #[test]
    fn labels() {
        assert_eq!(monomial_label(0), "1");
        assert_eq!(monomial_label(z_mask(1) | z_mask(2) | z_mask(3)), "Z1^Z2^Z3");
        assert_eq!(monomial_label(z_mask(2) | e_mask(1) | e_mask(4)), "Z2^e1^e4");
    }
}

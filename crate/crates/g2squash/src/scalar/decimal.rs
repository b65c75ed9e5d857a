//! Decimal rendering of quadratic surds with 12 significant digits.
//!
//! The only irrational ingredient is an integer square root, computed on big
//! integers with 60 guard digits; rounding is half away from zero.  The
//! result is a pure function of the exact value, so reports containing
//! decimals stay byte-deterministic.

use num::{BigInt, BigUint, Signed, Zero};

use super::root::QuadSurd;
use super::Rat;

const SIG_DIGITS: u32 = 12;
const GUARD_DIGITS: u32 = 60;

/// Render `a + b√m` with 12 significant digits.
pub fn decimal_12(s: &QuadSurd) -> String {
    let approx = rational_approximation(s);
    if approx.is_zero() {
        return "0.00000000000".to_string();
    }
    let negative = approx.is_negative();
    let (digits, exponent) = significant_digits(&approx);
    let body = place_point(&digits, exponent);
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// A rational within 10^−(GUARD−2) of the exact value — far tighter than the
/// 12-digit target, so rounding is unambiguous for any value this crate
/// produces (exact decimal-boundary values are handled by half-away rounding
/// of the approximation, which agrees with the exact value by construction).
fn rational_approximation(s: &QuadSurd) -> Rat {
    if s.root_part().is_zero() {
        return s.rational_part().clone();
    }
    let scale = BigUint::from(10u32).pow(GUARD_DIGITS);
    let radicand = BigUint::from(s.radicand()) * &scale * &scale;
    let root = radicand.sqrt(); // floor(√m · 10^GUARD)
    let root_over_scale = Rat::new(
        BigInt::from(root),
        BigInt::from(BigUint::from(10u32).pow(GUARD_DIGITS)),
    );
    s.rational_part().clone() + s.root_part().clone() * root_over_scale
}

/// Round `|r|` to 12 significant digits: returns (digit string, exponent of
/// the leading digit).
fn significant_digits(r: &Rat) -> (String, i64) {
    let abs = r.abs();
    let p = abs.numer().magnitude().clone();
    let q = abs.denom().magnitude().clone();
    // Exponent e with 10^e ≤ |r| < 10^{e+1}: compare p·10^k with q·10^j.
    let ten = BigUint::from(10u32);
    // Start from the digit-length difference, then correct by comparison.
    let dp = p.to_string().len() as i64;
    let dq = q.to_string().len() as i64;
    let mut e: i64 = dp - dq;
    loop {
        // |r| ≥ 10^e  ⇔  p·10^{-min(e,0)} ≥ q·10^{max(e,0)}
        let lhs = &p * ten.pow((-e).max(0) as u32);
        let rhs = &q * ten.pow(e.max(0) as u32);
        if lhs >= rhs {
            // Maybe e can grow.
            let lhs2 = &p * ten.pow((-(e + 1)).max(0) as u32);
            let rhs2 = &q * ten.pow((e + 1).max(0) as u32);
            if lhs2 >= rhs2 {
                e += 1;
                continue;
            }
            break;
        }
        e -= 1;
    }
    // digits = round(|r| · 10^{11 − e}), half away from zero.
    let shift = (SIG_DIGITS as i64 - 1) - e;
    let (num, den) = if shift >= 0 {
        (&p * ten.pow(shift as u32), q.clone())
    } else {
        (p.clone(), &q * ten.pow((-shift) as u32))
    };
    let two = BigUint::from(2u32);
    let rounded = (&num * &two + &den) / (&den * &two);
    let mut ds = rounded.to_string();
    let mut e = e;
    if ds.len() as u32 > SIG_DIGITS {
        // Rounding overflowed to 10^12: drop the trailing zero, bump exponent.
        debug_assert!(ds.ends_with('0'));
        ds.pop();
        e += 1;
    }
    debug_assert_eq!(ds.len() as u32, SIG_DIGITS);
    (ds, e)
}

/// Place the decimal point for exponent `e` (positional for the magnitudes
/// this crate produces, scientific notation as a fallback).
fn place_point(digits: &str, e: i64) -> String {
    let n = digits.len() as i64;
    if (0..n).contains(&e) {
        let split = (e + 1) as usize;
        format!("{}.{}", &digits[..split], &digits[split..])
    } else if e == n {
        // One digit more than we carry: append a zero rather than going
        // scientific for this boundary case.
        format!("{digits}0")
    } else if (-4..0).contains(&e) {
        let zeros = "0".repeat((-e - 1) as usize);
        format!("0.{zeros}{digits}")
    } else {
        format!(
            "{}.{}e{}",
            &digits[..1],
            &digits[1..],
            e
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    fn surd(a: Rat, b: Rat, m: u64) -> QuadSurd {
        QuadSurd::new(a, b, m)
    }

    #[test]
    fn rational_values() {
        assert_eq!(decimal_12(&surd(rat(76, 5), rint(0), 5)), "15.2000000000");
        assert_eq!(decimal_12(&surd(rat(108, 5), rint(0), 5)), "21.6000000000");
        assert_eq!(decimal_12(&surd(rat(28, 5), rint(0), 5)), "5.60000000000");
        assert_eq!(decimal_12(&surd(rint(0), rint(0), 5)), "0.00000000000");
        assert_eq!(decimal_12(&surd(rint(-3), rint(0), 5)), "-3.00000000000");
    }

    #[test]
    fn square_roots() {
        // √5 = 2.2360679774997896964...
        assert_eq!(decimal_12(&surd(rint(0), rint(1), 5)), "2.23606797750");
        // √2 = 1.4142135623730950488...
        assert_eq!(decimal_12(&surd(rint(0), rint(1), 2)), "1.41421356237");
        // −√101 = −10.049875621120890270...
        assert_eq!(decimal_12(&surd(rint(0), rint(-1), 101)), "-10.0498756211");
    }

    #[test]
    fn mixed_values() {
        // 132/5 − (4/5)√101 = 26.4 − 8.0399004968967122... = 18.360099503...
        assert_eq!(
            decimal_12(&surd(rat(132, 5), rat(-4, 5), 101)),
            "18.3600995031"
        );
        // 12/√5 = (12/5)√5 = 5.3665631459994938...
        assert_eq!(decimal_12(&surd(rint(0), rat(12, 5), 5)), "5.36656314600");
    }

    #[test]
    fn small_magnitudes_stay_positional() {
        assert_eq!(decimal_12(&surd(rat(1, 800), rint(0), 5)), "0.00125000000000");
    }
}

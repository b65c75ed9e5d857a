//! The real quadratic field `ℚ(√5)` and general quadratic surds.
//!
//! [`RootScalar`] is the arithmetic workhorse: every special value of the
//! nearly-parallel geometry (`s = √5/5`, torsion `12/√5`, the obstruction
//! constant) lives here.  [`QuadSurd`] represents `a + b·√m` for a
//! square-free `m ≥ 2` and supports *exact* sign determination and
//! cross-radical comparison, which the deformation table uses to certify
//! orderings without floating point.

// NOTE: the `Scalar` trait is deliberately *not* imported at module scope:
// its method names (`is_zero`, `add`, ...) would collide with the `num`
// traits on `Rat`.  The trait impl below uses a qualified path instead.
use num::{BigInt, One, Signed, Zero};

use super::{Rat, ScalarError};

/// An element `a + b·√5` of `ℚ(√5)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootScalar {
    a: Rat,
    b: Rat,
}

impl RootScalar {
    pub fn new(a: Rat, b: Rat) -> Self {
        RootScalar { a, b }
    }

    /// `√5`.
    pub fn sqrt5() -> Self {
        RootScalar::new(Rat::zero(), Rat::one())
    }

    /// `√5/5 = 1/√5`, the nearly-parallel squashing parameter.
    pub fn sqrt5_over5() -> Self {
        RootScalar::new(Rat::zero(), Rat::new(1.into(), 5.into()))
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn root_part(&self) -> &Rat {
        &self.b
    }

    /// Is this element rational?
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        RootScalar::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 5b²` (product with the conjugate).
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - Rat::from_integer(5.into()) * &self.b * &self.b
    }

    /// View as a general quadratic surd (radicand 5).
    pub fn as_surd(&self) -> QuadSurd {
        QuadSurd::new(self.a.clone(), self.b.clone(), 5)
    }

    /// Exact sign: −1, 0, or 1.
    pub fn signum(&self) -> i32 {
        self.as_surd().signum()
    }

    /// Exact comparison with another element.
    pub fn cmp_exact(&self, rhs: &Self) -> std::cmp::Ordering {
        QuadSurd::new(&self.a - &rhs.a, &self.b - &rhs.b, 5)
            .signum()
            .cmp(&0)
    }

    /// Canonical exact rendering, e.g. `(-33264/5)*sqrt5` or
    /// `7/5 + (2)*sqrt5`.
    pub fn exact_string(&self) -> String {
        self.as_surd().exact_string()
    }

    /// Decimal rendering with 12 significant digits.
    pub fn decimal_string(&self) -> String {
        self.as_surd().decimal_string()
    }
}

impl std::fmt::Display for RootScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.exact_string())
    }
}

// Plain-function helpers: inside the trait impl the `Scalar` methods would
// shadow/collide with the `num` traits on `Rat`.
fn rat_zero() -> Rat {
    num::Zero::zero()
}
fn rat_is_zero(r: &Rat) -> bool {
    num::Zero::is_zero(r)
}

impl super::Scalar for RootScalar {
    fn zero() -> Self {
        RootScalar::new(rat_zero(), rat_zero())
    }
    fn one() -> Self {
        RootScalar::new(num::One::one(), rat_zero())
    }
    fn from_rat(r: &Rat) -> Self {
        RootScalar::new(r.clone(), rat_zero())
    }
    fn is_zero(&self) -> bool {
        rat_is_zero(&self.a) && rat_is_zero(&self.b)
    }
    fn add(&self, rhs: &Self) -> Self {
        RootScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
    fn neg(&self) -> Self {
        RootScalar::new(-self.a.clone(), -self.b.clone())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let five = Rat::from_integer(5.into());
        RootScalar::new(
            &self.a * &rhs.a + &five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        if rat_is_zero(&self.a) && rat_is_zero(&self.b) {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        debug_assert!(
            !rat_is_zero(&n),
            "√5 is irrational, nonzero elements are units"
        );
        let ninv = <Rat as num::One>::one() / n;
        Ok(RootScalar::new(&self.a * &ninv, -(&self.b * &ninv)))
    }
}

/// A quadratic surd `a + b·√m` with `m` square-free.
///
/// The constructor normalizes: square factors of the radicand migrate into
/// `b`, perfect-square radicands collapse to rationals (`b = 0`, `m = 1`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadSurd {
    a: Rat,
    b: Rat,
    m: u64,
}

/// Split `n ≥ 1` as `k² · m` with `m` square-free; returns `(k, m)`.
fn squarefree_split(n: u64) -> (u64, u64) {
    let mut k = 1u64;
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        while m % (d * d) == 0 {
            m /= d * d;
            k *= d;
        }
        d += 1;
    }
    (k, m)
}

impl QuadSurd {
    /// `a + b·√radicand` with an integer radicand ≥ 0.
    pub fn new(a: Rat, b: Rat, radicand: u64) -> Self {
        if b.is_zero() || radicand == 0 {
            return QuadSurd {
                a,
                b: Rat::zero(),
                m: 1,
            };
        }
        let (k, m) = squarefree_split(radicand);
        if m == 1 {
            QuadSurd {
                a: a + b * Rat::from_integer(k.into()),
                b: Rat::zero(),
                m: 1,
            }
        } else {
            QuadSurd {
                a,
                b: b * Rat::from_integer(k.into()),
                m,
            }
        }
    }

    /// `a + b·√(p/q)` with a non-negative rational radicand:
    /// `√(p/q) = √(pq)/q`.
    pub fn with_rat_radicand(a: Rat, b: Rat, radicand: &Rat) -> Self {
        assert!(
            !radicand.is_negative(),
            "quadratic surd radicand must be non-negative"
        );
        let p: BigInt = radicand.numer().clone();
        let q: BigInt = radicand.denom().clone();
        let pq = &p * &q;
        let pq_u64 = u64::try_from(pq.clone()).expect("radicand too large for table arithmetic");
        let scaled = b * Rat::new(1.into(), q);
        QuadSurd::new(a, scaled, pq_u64)
    }

    pub fn from_rat(a: Rat) -> Self {
        QuadSurd {
            a,
            b: Rat::zero(),
            m: 1,
        }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn root_part(&self) -> &Rat {
        &self.b
    }

    /// The square-free radicand (1 when the value is rational).
    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn neg(&self) -> Self {
        QuadSurd {
            a: -self.a.clone(),
            b: -self.b.clone(),
            m: self.m,
        }
    }

    /// Exact sign of `a + b√m`: compare `a` against `−b√m` by squaring with
    /// sign bookkeeping; no approximation is involved.
    pub fn signum(&self) -> i32 {
        let sa = rat_sign(&self.a);
        if self.b.is_zero() {
            return sa;
        }
        let sb = rat_sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: |a| vs |b|√m decides; compare a² with b²·m.
        let a2 = &self.a * &self.a;
        let b2m = &self.b * &self.b * Rat::from_integer(self.m.into());
        match a2.cmp(&b2m) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// Exact comparison, allowing different radicands.
    pub fn cmp_exact(&self, rhs: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let sign = if self.m == rhs.m || rhs.b.is_zero() {
            QuadSurd {
                a: &self.a - &rhs.a,
                b: if rhs.b.is_zero() {
                    self.b.clone()
                } else {
                    &self.b - &rhs.b
                },
                m: self.m,
            }
            .signum()
        } else if self.b.is_zero() {
            -QuadSurd {
                a: &rhs.a - &self.a,
                b: rhs.b.clone(),
                m: rhs.m,
            }
            .signum()
        } else {
            // (a₁ − a₂) + b₁√m₁ − b₂√m₂ with distinct square-free radicands:
            // compare u = (a₁ − a₂) + b₁√m₁ against v = b₂√m₂.
            let u = QuadSurd {
                a: &self.a - &rhs.a,
                b: self.b.clone(),
                m: self.m,
            };
            let su = u.signum();
            let sv = rat_sign(&rhs.b);
            if su != sv {
                // Also covers zeros: u = 0 ⇒ result is sign(−v), etc.
                (su - sv).signum()
            } else {
                // Same nonzero sign: compare u² with v² and flip for negatives.
                let u2 = QuadSurd::new(
                    &u.a * &u.a + &u.b * &u.b * Rat::from_integer(u.m.into()),
                    Rat::from_integer(2.into()) * &u.a * &u.b,
                    u.m,
                );
                let v2 = &rhs.b * &rhs.b * Rat::from_integer(rhs.m.into());
                let s2 = match u2.cmp_exact(&QuadSurd::from_rat(v2)) {
                    Ordering::Greater => 1,
                    Ordering::Less => -1,
                    Ordering::Equal => 0,
                };
                if su > 0 {
                    s2
                } else {
                    -s2
                }
            }
        };
        match sign {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    /// Canonical exact rendering:
    /// rational → `p/q`; pure root → `(b)*sqrtM`; mixed → `p/q + (b)*sqrtM`.
    pub fn exact_string(&self) -> String {
        if self.b.is_zero() {
            return self.a.to_string();
        }
        let root = format!("({})*sqrt{}", self.b, self.m);
        if self.a.is_zero() {
            root
        } else {
            format!("{} + {}", self.a, root)
        }
    }

    /// Decimal rendering with 12 significant digits (big-integer square
    /// roots, round half away from zero).
    pub fn decimal_string(&self) -> String {
        super::decimal::decimal_12(self)
    }
}

impl std::fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.exact_string())
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint, Scalar};
    use std::cmp::Ordering;

    #[test]
    fn field_axioms_in_sqrt5() {
        let x = RootScalar::new(rat(1, 2), rat(-2, 3));
        let y = RootScalar::new(rint(3), rat(1, 5));
        assert_eq!(x.mul(&y).sub(&y.mul(&x)), RootScalar::zero());
        let xi = x.inv().unwrap();
        assert!(x.mul(&xi).is_one());
        // √5 · √5 = 5.
        assert_eq!(
            RootScalar::sqrt5().mul(&RootScalar::sqrt5()),
            RootScalar::from_int(5)
        );
        // (√5/5)² = 1/5.
        let s = RootScalar::sqrt5_over5();
        assert_eq!(s.mul(&s), RootScalar::from_rat(&rat(1, 5)));
        // 1/s = √5.
        assert_eq!(s.inv().unwrap(), RootScalar::sqrt5());
    }

    #[test]
    fn norms_multiply() {
        let x = RootScalar::new(rint(2), rint(3));
        let y = RootScalar::new(rat(1, 3), rat(-1, 2));
        assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
        assert_eq!(x.norm(), rint(4 - 45));
    }

    #[test]
    fn surd_normalization() {
        // √20 = 2√5.
        let s = QuadSurd::new(rint(0), rint(1), 20);
        assert_eq!(s, QuadSurd::new(rint(0), rint(2), 5));
        // √9 = 3 collapses to a rational.
        let t = QuadSurd::new(rint(1), rint(2), 9);
        assert!(t.is_rational());
        assert_eq!(t.rational_part(), &rint(7));
        // √(121/5) = (11/5)√5.
        let u = QuadSurd::with_rat_radicand(rint(0), rint(1), &rat(121, 5));
        assert_eq!(u, QuadSurd::new(rint(0), rat(11, 5), 5));
    }

    #[test]
    fn exact_signs() {
        // 2 − √5 < 0 < 3 − √5.
        assert_eq!(QuadSurd::new(rint(2), rint(-1), 5).signum(), -1);
        assert_eq!(QuadSurd::new(rint(3), rint(-1), 5).signum(), 1);
        assert_eq!(QuadSurd::new(rint(0), rint(0), 5).signum(), 0);
        // 9 − 4√5 > 0 (since 81 > 80), a tight case.
        assert_eq!(QuadSurd::new(rint(9), rint(-4), 5).signum(), 1);
        assert_eq!(QuadSurd::new(rint(-9), rint(4), 5).signum(), -1);
    }

    #[test]
    fn cross_radical_comparison() {
        let sqrt2 = QuadSurd::new(rint(0), rint(1), 2);
        let sqrt3 = QuadSurd::new(rint(0), rint(1), 3);
        let sqrt10 = QuadSurd::new(rint(0), rint(1), 10);
        assert_eq!(sqrt2.cmp_exact(&sqrt3), Ordering::Less);
        assert_eq!(sqrt10.cmp_exact(&sqrt3), Ordering::Greater);
        // 1 + √2 vs √10: squares 3 + 2√2 ≈ 5.83 < 10.
        let one_plus_sqrt2 = QuadSurd::new(rint(1), rint(1), 2);
        assert_eq!(one_plus_sqrt2.cmp_exact(&sqrt10), Ordering::Less);
        // Same-sign branch with mixed rational parts.
        let x = QuadSurd::new(rint(2), rint(1), 2); // ≈ 3.4142
        let y = QuadSurd::new(rint(2), rint(-1), 3); // ≈ 0.2679
        assert_eq!(x.cmp_exact(&y), Ordering::Greater);
        assert_eq!(y.cmp_exact(&x), Ordering::Less);
        assert_eq!(x.cmp_exact(&x.clone()), Ordering::Equal);
        // Rational vs surd on either side.
        assert_eq!(
            QuadSurd::from_rat(rat(3, 2)).cmp_exact(&sqrt2),
            Ordering::Greater
        );
        assert_eq!(
            sqrt2.cmp_exact(&QuadSurd::from_rat(rat(3, 2))),
            Ordering::Less
        );
    }

    #[test]
    fn exact_strings() {
        assert_eq!(
            QuadSurd::new(rat(-33264, 5), rint(0), 5).exact_string(),
            "-33264/5"
        );
        assert_eq!(
            QuadSurd::new(rint(0), rat(-33264, 5), 5).exact_string(),
            "(-33264/5)*sqrt5"
        );
        assert_eq!(
            QuadSurd::new(rat(132, 5), rat(-4, 5), 101).exact_string(),
            "132/5 + (-4/5)*sqrt101"
        );
        assert_eq!(RootScalar::sqrt5_over5().exact_string(), "(1/5)*sqrt5");
        assert_eq!(RootScalar::zero().exact_string(), "0");
    }
}

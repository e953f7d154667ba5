//! The two single-parameter families of monogenic cyclic cubic trinomials,
//! the four exceptional `x³ + Ax² + B` trinomials, simplest cubics, and the
//! discriminant-equality necessity test.
//!
//! Family one is `x³ − 3δ₁x + (6k+1)δ₁` with `δ₁ = 9k² + 3k + 1` and
//! discriminant `3⁴δ₁²`; family two is `x³ − δ₂x + (2k+1)δ₂` with
//! `δ₂ = 27k² + 27k + 7` and discriminant `δ₂²`. Membership in the family
//! sets requires δ squarefree (and `k ≥ 0` for family two).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{as_perfect_square, is_squarefree};
use crate::jks::{monogenicity_report, Verdict};
use crate::polycore::{generic_cubic_discriminant, swan_discriminant, Cubic, Trinomial};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F1,
    F2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F1 => "F1",
            Family::F2 => "F2",
        })
    }
}

/// One evaluated family element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub family: Family,
    pub k: BigInt,
    pub delta: BigInt,
    pub trinomial: Trinomial,
    pub delta_squarefree: bool,
    /// Squarefree δ, and additionally `k ≥ 0` for family two.
    pub in_family_set: bool,
}

/// `x³ − 3δ₁x + (6k+1)δ₁` with `δ₁ = 9k² + 3k + 1`.
pub fn family1(k: i64) -> FamilyMember {
    let kb = BigInt::from(k);
    let delta: BigInt = BigInt::from(9) * kb.pow(2) + BigInt::from(3) * &kb + 1;
    let a = BigInt::from(-3) * &delta;
    let b = (BigInt::from(6) * &kb + 1) * &delta;
    let trinomial = Trinomial::cubic(1, a, b).expect("δ₁ ≥ 1, coefficients nonzero");
    let disc = swan_discriminant(&trinomial);
    assert_eq!(disc, BigInt::from(81) * delta.pow(2), "Δ(f₁,k) = 3⁴δ₁²");
    let delta_squarefree = is_squarefree(&delta).expect("δ₁ factors at desk scale");
    FamilyMember {
        family: Family::F1,
        k: kb,
        delta,
        trinomial,
        delta_squarefree,
        in_family_set: delta_squarefree,
    }
}

/// `x³ − δ₂x + (2k+1)δ₂` with `δ₂ = 27k² + 27k + 7`.
///
/// Total over all `k`; negatives mirror the nonnegative values of δ₂, so
/// the family set keeps only `k ≥ 0`.
pub fn family2(k: i64) -> FamilyMember {
    let kb = BigInt::from(k);
    let delta: BigInt = BigInt::from(27) * kb.pow(2) + BigInt::from(27) * &kb + 7;
    let a = -&delta;
    let b = (BigInt::from(2) * &kb + 1) * &delta;
    let trinomial = Trinomial::cubic(1, a, b).expect("δ₂ ≥ 1, coefficients nonzero");
    let disc = swan_discriminant(&trinomial);
    assert_eq!(disc, delta.pow(2), "Δ(f₂,k) = δ₂²");
    let delta_squarefree = is_squarefree(&delta).expect("δ₂ factors at desk scale");
    FamilyMember {
        family: Family::F2,
        k: kb,
        delta,
        trinomial,
        delta_squarefree,
        in_family_set: delta_squarefree && k >= 0,
    }
}

/// The `k` with `9k² + 3k + 1 = δ`, when one exists:
/// `k = (−1 ± √(4δ−3))/6`; the two sign branches are exclusive.
pub(crate) fn invert_delta1(delta: &BigInt) -> Option<BigInt> {
    if !delta.is_positive() {
        return None;
    }
    let root = as_perfect_square(&(BigInt::from(4) * delta - 3))?;
    for r in [&root, &-&root] {
        let num: BigInt = r - 1;
        let (k, rem) = num.div_rem(&BigInt::from(6));
        if rem.is_zero() {
            return Some(k);
        }
    }
    None
}

/// The `k` with `27k² + 27k + 7 = δ`: `k = (−9 ± √(12δ−3))/18`.
pub(crate) fn invert_delta2(delta: &BigInt) -> Option<BigInt> {
    if !delta.is_positive() {
        return None;
    }
    let root = as_perfect_square(&(BigInt::from(12) * delta - 3))?;
    for r in [&root, &-&root] {
        let num: BigInt = r - 9;
        let (k, rem) = num.div_rem(&BigInt::from(18));
        if rem.is_zero() {
            return Some(k);
        }
    }
    None
}

/// Inverts the family parameterizations on the coefficients of
/// `x³ + Ax + B`. Returns the family and parameter only for genuine
/// family-set members (δ squarefree, `k ≥ 0` for family two).
pub fn classify_member(a: &BigInt, b: &BigInt) -> Option<(Family, BigInt)> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    // Family one: A = −3δ with δ = 9k² + 3k + 1.
    if (a % BigInt::from(3)).is_zero() {
        let delta = -(a / BigInt::from(3));
        if let Some(k) = invert_delta1(&delta) {
            if (BigInt::from(6) * &k + 1) * &delta == *b && is_squarefree(&delta).unwrap_or(false) {
                return Some((Family::F1, k));
            }
        }
    }
    // Family two: A = −δ with δ = 27k² + 27k + 7 and k ≥ 0.
    let delta = -a;
    if let Some(k) = invert_delta2(&delta) {
        if !k.is_negative()
            && (BigInt::from(2) * &k + 1) * &delta == *b
            && is_squarefree(&delta).unwrap_or(false)
        {
            return Some((Family::F2, k));
        }
    }
    None
}

/// The only four monogenic cyclic trinomials of the form `x³ + Ax² + B`,
/// each re-verified through the monogenicity engine.
pub fn the_four_exceptional() -> Vec<Trinomial> {
    let four = [(3i64, -3i64), (-3, 3), (-3, 1), (3, -1)];
    four.iter()
        .map(|&(a, b)| {
            let t = Trinomial::cubic(2, a, b).expect("valid");
            let report = monogenicity_report(&t);
            assert_eq!(report.verdict, Verdict::Monogenic, "{t} must be monogenic");
            assert_eq!(report.cyclic_cubic, Some(true), "{t} must be cyclic");
            t
        })
        .collect()
}

/// Shanks' simplest cubic `x³ − t·x² − (t+3)·x − 1`; its discriminant is
/// `(t² + 3t + 9)²`, so these are all cyclic.
pub fn simplest_cubic(t: i64) -> Cubic {
    let tb = BigInt::from(t);
    let cubic = Cubic::new(-&tb, -(&tb + BigInt::from(3)), BigInt::from(-1));
    let expected = (tb.pow(2) + BigInt::from(3) * &tb + BigInt::from(9)).pow(2);
    assert_eq!(generic_cubic_discriminant(&cubic), expected);
    cubic
}

/// Equal discriminants — the necessary condition for equivalence of
/// monogenic cyclic cubics. Not sufficient; see `numfield::fields_equal`
/// for the rigorous test.
pub fn equal_discriminant(f: &Trinomial, g: &Trinomial) -> Result<bool> {
    if f.n() != 3 || g.n() != 3 {
        return Err(Error::NotCubic);
    }
    Ok(swan_discriminant(f) == swan_discriminant(g))
}

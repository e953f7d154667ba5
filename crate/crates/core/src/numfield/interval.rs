//! Exact dyadic numbers `m·2^e` and closed interval arithmetic over them.
//!
//! Sums and products of dyadics are computed exactly (mantissas grow as
//! needed); only division rounds, and it rounds outward to a requested
//! number of fractional bits. That makes the intervals rigorous enclosures
//! with no directed-rounding subtleties.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// The exact dyadic rational `mant · 2^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: impl Into<BigInt>, exp: i64) -> Self {
        Self { mant: mant.into(), exp }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self { mant: n.clone(), exp: 0 }
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Both mantissas rebased to the smaller exponent.
    fn aligned(&self, other: &Self) -> (BigInt, BigInt, i64) {
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        (a, b, e)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, e) = self.aligned(other);
        Self { mant: a + b, exp: e }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, e) = self.aligned(other);
        Self { mant: a - b, exp: e }
    }

    pub fn neg(&self) -> Self {
        Self { mant: -&self.mant, exp: self.exp }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { mant: &self.mant * &other.mant, exp: self.exp + other.exp }
    }

    pub fn mul_bigint(&self, n: &BigInt) -> Self {
        Self { mant: &self.mant * n, exp: self.exp }
    }

    /// Exact midpoint of two dyadics.
    pub fn midpoint(&self, other: &Self) -> Self {
        let (a, b, e) = self.aligned(other);
        Self { mant: a + b, exp: e - 1 }
    }

    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            self.mant.div_floor(&(BigInt::from(1) << (-self.exp) as u64))
        }
    }

    pub fn ceil(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            self.mant.div_ceil(&(BigInt::from(1) << (-self.exp) as u64))
        }
    }

    /// Quotient rounded down (`ceil = false`) or up to `2^-prec` granularity.
    pub fn div_rounded(&self, divisor: &Self, prec: u32, round_up: bool) -> Self {
        debug_assert!(!divisor.is_zero());
        // self/divisor = (ma/mb)·2^(ea−eb); result mantissa at exponent −prec.
        let shift = self.exp - divisor.exp + prec as i64;
        let (num, den) = if shift >= 0 {
            (&self.mant << shift as u64, divisor.mant.clone())
        } else {
            (self.mant.clone(), &divisor.mant << (-shift) as u64)
        };
        let mant = if round_up { num.div_ceil(&den) } else { num.div_floor(&den) };
        Self { mant, exp: -(prec as i64) }
    }

    pub fn to_f64(&self) -> f64 {
        // Lossy; debugging and display only.
        let mut m = self.mant.clone();
        let mut e = self.exp;
        while m.bits() > 60 {
            m >>= 8;
            e += 8;
        }
        use num_traits::ToPrimitive;
        m.to_f64().unwrap_or(f64::NAN) * 2f64.powi(e.clamp(-1020, 1020) as i32)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

/// Closed interval `[lo, hi]` with exact dyadic endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
}

/// Integer content of an interval narrower than 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegerInside {
    /// Interval too wide to isolate a single integer.
    Ambiguous,
    /// No integer inside.
    None,
    /// Exactly one integer inside.
    One(BigInt),
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(d: Dyadic) -> Self {
        Self { lo: d.clone(), hi: d }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self::point(Dyadic::from_bigint(n))
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.lo.add(&other.lo), self.hi.add(&other.hi))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.lo.sub(&other.hi), self.hi.sub(&other.lo))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.hi.neg(), self.lo.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = products.iter().min().expect("four products").clone();
        let hi = products.into_iter().max().expect("four products");
        Self::new(lo, hi)
    }

    pub fn mul_bigint(&self, n: &BigInt) -> Self {
        let a = self.lo.mul_bigint(n);
        let b = self.hi.mul_bigint(n);
        if n.is_negative() {
            Self::new(b, a)
        } else {
            Self::new(a, b)
        }
    }

    /// Outward-rounded quotient at `2^-prec` granularity. Errors when the
    /// divisor straddles zero.
    pub fn div_outward(&self, divisor: &Self, prec: u32) -> Result<Self> {
        if divisor.contains_zero() {
            return Err(Error::Indeterminate);
        }
        let candidates = [
            (&self.lo, &divisor.lo),
            (&self.lo, &divisor.hi),
            (&self.hi, &divisor.lo),
            (&self.hi, &divisor.hi),
        ];
        let lo = candidates
            .iter()
            .map(|(n, d)| n.div_rounded(d, prec, false))
            .min()
            .expect("four quotients");
        let hi = candidates
            .iter()
            .map(|(n, d)| n.div_rounded(d, prec, true))
            .max()
            .expect("four quotients");
        Ok(Self::new(lo, hi))
    }

    /// Identifies the unique integer inside, if the interval is narrow
    /// enough to hold at most one.
    pub fn integer_inside(&self) -> IntegerInside {
        let one = Dyadic::new(1, 0);
        if self.width() >= one {
            return IntegerInside::Ambiguous;
        }
        let lo = self.lo.ceil();
        let hi = self.hi.floor();
        match lo.cmp(&hi) {
            Ordering::Greater => IntegerInside::None,
            Ordering::Equal => IntegerInside::One(lo),
            Ordering::Less => IntegerInside::Ambiguous,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(m: i64, e: i64) -> Dyadic {
        Dyadic::new(m, e)
    }

    #[test]
    fn dyadic_ordering_and_arith() {
        // 3/4 < 1 < 5/4
        assert!(dy(3, -2) < dy(1, 0));
        assert!(dy(5, -2) > dy(1, 0));
        assert_eq!(dy(1, -1).add(&dy(1, -2)), dy(3, -2));
        assert_eq!(dy(1, 3).mul(&dy(3, -1)), dy(3, 2));
        assert_eq!(dy(7, -2).floor(), BigInt::from(1));
        assert_eq!(dy(7, -2).ceil(), BigInt::from(2));
        assert_eq!(dy(-7, -2).floor(), BigInt::from(-2));
        assert_eq!(dy(-7, -2).ceil(), BigInt::from(-1));
        assert_eq!(dy(3, 2).floor(), BigInt::from(12));
    }

    #[test]
    fn dyadic_division_brackets_quotient() {
        // 1/3 at 8 fractional bits.
        let lo = dy(1, 0).div_rounded(&dy(3, 0), 8, false);
        let hi = dy(1, 0).div_rounded(&dy(3, 0), 8, true);
        assert!(lo <= hi);
        assert!(lo.mul(&dy(3, 0)) <= dy(1, 0));
        assert!(hi.mul(&dy(3, 0)) >= dy(1, 0));
        // Negative numerator keeps the bracket property.
        let lo = dy(-1, 0).div_rounded(&dy(3, 0), 8, false);
        let hi = dy(-1, 0).div_rounded(&dy(3, 0), 8, true);
        assert!(lo.mul(&dy(3, 0)) <= dy(-1, 0));
        assert!(hi.mul(&dy(3, 0)) >= dy(-1, 0));
    }

    #[test]
    fn interval_mul_signs() {
        let a = Interval::new(dy(-1, 0), dy(2, 0));
        let b = Interval::new(dy(-3, 0), dy(1, 0));
        let p = a.mul(&b);
        assert_eq!(p.lo(), &dy(-6, 0));
        assert_eq!(p.hi(), &dy(3, 0));
    }

    #[test]
    fn interval_division_contains_truth() {
        // [1,2] / [3,4] contains 1/3..2/3.
        let n = Interval::new(dy(1, 0), dy(2, 0));
        let d = Interval::new(dy(3, 0), dy(4, 0));
        let q = n.div_outward(&d, 16).unwrap();
        assert!(q.lo() <= &dy(1, -2)); // lo ≤ 1/4
        assert!(q.hi().mul(&dy(3, 0)) >= dy(2, 0)); // hi ≥ 2/3
        let z = Interval::new(dy(-1, 0), dy(1, 0));
        assert!(n.div_outward(&z, 16).is_err());
    }

    #[test]
    fn integer_isolation() {
        let i = Interval::new(dy(7, -2), dy(9, -2)); // [1.75, 2.25]
        assert_eq!(i.integer_inside(), IntegerInside::One(BigInt::from(2)));
        let i = Interval::new(dy(5, -2), dy(7, -2)); // [1.25, 1.75]
        assert_eq!(i.integer_inside(), IntegerInside::None);
        let i = Interval::new(dy(0, 0), dy(3, 0));
        assert_eq!(i.integer_inside(), IntegerInside::Ambiguous);
    }
}

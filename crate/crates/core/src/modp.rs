//! Dense univariate polynomials over the prime field `F_q` for `q < 2^63`.
//!
//! Coefficients are stored in ascending degree order, always reduced into
//! `[0, q)` and trimmed of leading zeros. Gcds use monic remainder sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::{Error, Result};

pub fn addmod(a: u64, b: u64, q: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % q as u128) as u64
}

pub fn submod(a: u64, b: u64, q: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (q - b)
    }
}

pub fn mulmod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u128, q: u64) -> u64 {
    if q == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, q);
        }
        base = mulmod(base, base, q);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `q`.
pub fn invmod(a: u64, q: u64) -> u64 {
    // Extended Euclid over signed 128-bit; q prime and a ≢ 0.
    debug_assert!(a % q != 0);
    let (mut r0, mut r1) = (q as i128, (a % q) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(q as i128) as u64
}

/// Square root modulo an odd prime via Tonelli–Shanks; `None` when `a` is a
/// non-residue. The non-residue search scans 2, 3, 5, … so runs are
/// reproducible.
pub fn sqrtmod(a: u64, q: u64) -> Option<u64> {
    let a = a % q;
    if a == 0 {
        return Some(0);
    }
    if q == 2 {
        return Some(a);
    }
    if powmod(a, ((q - 1) / 2) as u128, q) != 1 {
        return None;
    }
    if q % 4 == 3 {
        return Some(powmod(a, ((q + 1) / 4) as u128, q));
    }
    let mut s = 0u32;
    let mut d = q - 1;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while powmod(z, ((q - 1) / 2) as u128, q) != q - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powmod(z, d as u128, q);
    let mut t = powmod(a, d as u128, q);
    let mut r = powmod(a, ((d + 1) / 2) as u128, q);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mulmod(tt, tt, q);
            i += 1;
        }
        let b = powmod(c, 1u128 << (m - i - 1), q);
        m = i;
        c = mulmod(b, b, q);
        t = mulmod(t, c, q);
        r = mulmod(r, b, q);
    }
    Some(r)
}

/// Fits a (positive prime) `BigInt` modulus into `u64`.
pub fn modulus_to_u64(q: &BigInt) -> Result<u64> {
    q.to_u64()
        .filter(|&v| v < 1 << 63)
        .ok_or_else(|| Error::PrimeTooLarge(q.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    q: u64,
    coeffs: Vec<u64>, // ascending, trimmed, all < q
}

impl ModPoly {
    pub fn new(q: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= q;
        }
        let mut p = Self { q, coeffs };
        p.trim();
        p
    }

    pub fn zero(q: u64) -> Self {
        Self { q, coeffs: vec![] }
    }

    pub fn one(q: u64) -> Self {
        Self::new(q, vec![1])
    }

    /// The monomial `x`.
    pub fn x(q: u64) -> Self {
        Self::new(q, vec![0, 1])
    }

    /// Reduces ascending integer coefficients into `F_q`.
    pub fn from_bigint_coeffs(q: u64, coeffs: &[BigInt]) -> Self {
        let qb = BigInt::from(q);
        let reduced = coeffs
            .iter()
            .map(|c| c.mod_floor(&qb).to_u64().expect("reduced below u64 modulus"))
            .collect();
        Self::new(q, reduced)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = addmod(mulmod(acc, x, self.q), c, self.q);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.q, other.q);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                addmod(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                    self.q,
                )
            })
            .collect();
        Self::new(self.q, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.q, other.q);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                submod(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                    self.q,
                )
            })
            .collect();
        Self::new(self.q, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.q, other.q);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.q);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = addmod(coeffs[i + j], mulmod(a, b, self.q), self.q);
            }
        }
        Self::new(self.q, coeffs)
    }

    pub fn scale(&self, s: u64) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| mulmod(c, s, self.q)).collect();
        Self::new(self.q, coeffs)
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.leading(), self.q);
        self.scale(inv)
    }

    /// Remainder of `self` modulo a nonzero divisor.
    pub fn rem(&self, divisor: &Self) -> Self {
        debug_assert_eq!(self.q, divisor.q);
        debug_assert!(!divisor.is_zero());
        let d = divisor.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let lead_inv = invmod(divisor.leading(), self.q);
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = mulmod(*rem.last().unwrap(), lead_inv, self.q);
            if factor != 0 {
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    rem[idx] = submod(rem[idx], mulmod(factor, dc, self.q), self.q);
                }
            }
            rem.pop();
            while rem.last() == Some(&0) && rem.len() > d {
                rem.pop();
            }
        }
        Self::new(self.q, rem)
    }

    /// Exact quotient; panics in debug builds if the division is not exact.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        debug_assert_eq!(self.q, divisor.q);
        let d = divisor.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(d)];
        let lead_inv = invmod(divisor.leading(), self.q);
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = mulmod(*rem.last().unwrap(), lead_inv, self.q);
            quot[k - d] = factor;
            if factor != 0 {
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    rem[idx] = submod(rem[idx], mulmod(factor, dc, self.q), self.q);
                }
            }
            rem.pop();
        }
        debug_assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
        Self::new(self.q, quot)
    }

    /// Monic gcd; `gcd(0, g) = monic(g)`.
    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.q, other.q);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.q);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, (i as u64) % self.q, self.q))
            .collect();
        Self::new(self.q, coeffs)
    }

    /// `base^exp` reduced modulo `mod_poly`, by square and multiply.
    pub fn powmod_poly(base: &Self, mut exp: u128, mod_poly: &Self) -> Self {
        let q = base.q;
        let mut acc = Self::one(q);
        let mut base = base.rem(mod_poly);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(mod_poly);
            }
            base = base.mul(&base).rem(mod_poly);
            exp >>= 1;
        }
        acc
    }
}

/// Irreducibility over `F_q` for small degree: `f` of degree `n` is
/// irreducible iff `x^(q^n) ≡ x (mod f)` and `gcd(x^(q^(n/ℓ)) − x, f) = 1`
/// for every prime `ℓ | n`.
pub fn is_irreducible_modp(f: &ModPoly) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let q = f.modulus();
    // Repeated factors disqualify immediately.
    if !f.gcd(&f.derivative()).is_constant() {
        return false;
    }
    let x = ModPoly::x(q);
    let qe = |e: usize| (q as u128).checked_pow(e as u32);
    let Some(qn) = qe(n) else { return false };
    let xqn = ModPoly::powmod_poly(&x, qn, f);
    if xqn != x.rem(f) {
        return false;
    }
    let mut rem_n = n;
    let mut ell = 2;
    while ell * ell <= rem_n {
        if rem_n % ell == 0 {
            while rem_n % ell == 0 {
                rem_n /= ell;
            }
            let Some(qt) = qe(n / ell) else { return false };
            let probe = ModPoly::powmod_poly(&x, qt, f).sub(&x.rem(f));
            if !f.gcd(&probe).is_constant() {
                return false;
            }
        }
        ell += 1;
    }
    if rem_n > 1 {
        let Some(qt) = qe(n / rem_n) else { return false };
        let probe = ModPoly::powmod_poly(&x, qt, f).sub(&x.rem(f));
        if !f.gcd(&probe).is_constant() {
            return false;
        }
    }
    true
}

/// All roots of `f` in `F_q` without multiplicity, ascending.
pub fn roots_modp(f: &ModPoly) -> Vec<u64> {
    let q = f.modulus();
    if f.is_zero() {
        return (0..q).collect();
    }
    let mut out = if q < 1000 {
        (0..q).filter(|&r| f.eval(r) == 0).collect::<Vec<_>>()
    } else {
        // gcd(x^q − x, f) isolates the distinct linear factors.
        let x = ModPoly::x(q);
        let xq = ModPoly::powmod_poly(&x, q as u128, f);
        let lin = f.gcd(&xq.sub(&x.rem(f)));
        let mut roots = Vec::new();
        split_linear_factors(&lin, &mut roots);
        roots
    };
    out.sort_unstable();
    out
}

/// Extracts the roots of a product of distinct monic linear factors.
fn split_linear_factors(p: &ModPoly, out: &mut Vec<u64>) {
    let q = p.modulus();
    match p.degree() {
        None | Some(0) => {}
        Some(1) => {
            // monic x + c  →  root −c
            let c = p.coeffs()[0];
            out.push((q - c) % q);
        }
        Some(2) => {
            // Quadratic formula; the discriminant is a residue since the
            // polynomial splits.
            let c = p.coeffs()[0];
            let b = p.coeffs()[1];
            let disc = submod(mulmod(b, b, q), mulmod(4 % q, c, q), q);
            let s = sqrtmod(disc, q).expect("split quadratic has residue discriminant");
            let inv2 = invmod(2, q);
            out.push(mulmod(submod(s, b, q), inv2, q));
            out.push(mulmod(submod(submod(0, b, q), s, q), inv2, q));
        }
        Some(_) => {
            // Equal-degree splitting with a fixed shift schedule.
            let half = ((q - 1) / 2) as u128;
            for c in 0..10_000u64 {
                let shifted = ModPoly::new(q, vec![c, 1]);
                let probe = ModPoly::powmod_poly(&shifted, half, p).sub(&ModPoly::one(q));
                let g = p.gcd(&probe);
                if let Some(d) = g.degree() {
                    if d > 0 && d < p.degree().unwrap() {
                        split_linear_factors(&g, out);
                        split_linear_factors(&p.div_exact(&g), out);
                        return;
                    }
                }
            }
            unreachable!("splitting schedule exhausted for modulus {q}");
        }
    }
}

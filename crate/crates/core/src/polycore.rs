//! Exact polynomials over the integers: trinomials `x^N + A·x^M + B`, monic
//! cubics, closed-form and resultant-based discriminants, cubic
//! irreducibility and Galois-type classification.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{as_perfect_square, factor, isqrt};
use crate::modp::{is_irreducible_modp, ModPoly};
use crate::{Error, Result};

/// The trinomial `x^N + A·x^M + B` with `0 < M < N` and `A·B ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Trinomial {
    n: u32,
    m: u32,
    a: BigInt,
    b: BigInt,
}

impl Trinomial {
    pub fn new(n: u32, m: u32, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if n < 2 {
            return Err(Error::InvalidTrinomial(format!("degree {n} < 2")));
        }
        if m == 0 || m >= n {
            return Err(Error::InvalidTrinomial(format!(
                "inner exponent {m} outside 0 < M < {n}"
            )));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidTrinomial("requires A·B ≠ 0".into()));
        }
        Ok(Self { n, m, a, b })
    }

    /// Cubic convenience constructor for `x³ + A·x^m + B`.
    pub fn cubic(m: u32, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        Self::new(3, m, a, b)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// `gcd(N, M)`.
    pub fn gcd_nm(&self) -> u32 {
        self.n.gcd(&self.m)
    }

    /// `M / gcd(N, M)`.
    pub fn m1(&self) -> u32 {
        self.m / self.gcd_nm()
    }

    /// `N / gcd(N, M)`.
    pub fn n1(&self) -> u32 {
        self.n / self.gcd_nm()
    }

    /// Ascending coefficient vector of length `N + 1`.
    pub fn coeffs_ascending(&self) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); self.n as usize + 1];
        c[0] = self.b.clone();
        c[self.m as usize] = self.a.clone();
        c[self.n as usize] = BigInt::one();
        c
    }

    /// The monic cubic carrier, when `N = 3`.
    pub fn to_cubic(&self) -> Option<Cubic> {
        if self.n != 3 {
            return None;
        }
        Some(match self.m {
            1 => Cubic::new(0, self.a.clone(), self.b.clone()),
            2 => Cubic::new(self.a.clone(), 0, self.b.clone()),
            _ => unreachable!("0 < M < 3"),
        })
    }
}

impl fmt::Display for Trinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}", self.n)?;
        write_term(f, &self.a, Some(self.m))?;
        write_term(f, &self.b, None)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, coeff: &BigInt, power: Option<u32>) -> fmt::Result {
    if coeff.is_zero() {
        return Ok(());
    }
    let mag = coeff.abs();
    let sign = if coeff.is_negative() { " - " } else { " + " };
    match power {
        Some(1) => {
            if mag.is_one() {
                write!(f, "{sign}x")
            } else {
                write!(f, "{sign}{mag}x")
            }
        }
        Some(p) => {
            if mag.is_one() {
                write!(f, "{sign}x^{p}")
            } else {
                write!(f, "{sign}{mag}x^{p}")
            }
        }
        None => write!(f, "{sign}{mag}"),
    }
}

/// The monic cubic `x³ + a·x² + b·x + c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cubic {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl Cubic {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into() }
    }

    pub fn coeffs_ascending(&self) -> Vec<BigInt> {
        vec![self.c.clone(), self.b.clone(), self.a.clone(), BigInt::one()]
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        ((x + &self.a) * x + &self.b) * x + &self.c
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^3")?;
        write_term(f, &self.a, Some(2))?;
        write_term(f, &self.b, Some(1))?;
        write_term(f, &self.c, None)
    }
}

/// Discriminant of a trinomial in closed form:
/// `(−1)^(N(N−1)/2) · B^(M−1) · (N^(N/d)·B^((N−M)/d) − (−1)^(N/d)·(N−M)^((N−M)/d)·M^(M/d)·A^(N/d))^d`
/// with `d = gcd(N, M)`.
pub fn swan_discriminant(t: &Trinomial) -> BigInt {
    let n = t.n();
    let m = t.m();
    let d = t.gcd_nm();
    let nd = n / d;
    let nmd = (n - m) / d;
    let md = m / d;
    let term = BigInt::from(n).pow(nd) * t.b().pow(nmd)
        - sign_pow(nd) * BigInt::from(n - m).pow(nmd) * BigInt::from(m).pow(md) * t.a().pow(nd);
    sign_pow_half(n) * t.b().pow(m - 1) * term.pow(d)
}

fn sign_pow(e: u32) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn sign_pow_half(n: u32) -> BigInt {
    let e = (n as u64) * (n as u64 - 1) / 2;
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Closed-form discriminant of the cubic trinomial `x³ + A·x^m + B`:
/// `−4A³ − 27B²` for `m = 1` and `−B(4A³ + 27B)` for `m = 2`.
pub fn cubic_trinomial_discriminant(m: u32, a: &BigInt, b: &BigInt) -> Result<BigInt> {
    match m {
        1 => Ok(BigInt::from(-4) * a.pow(3) - BigInt::from(27) * b.pow(2)),
        2 => Ok(-b * (BigInt::from(4) * a.pow(3) + BigInt::from(27) * b)),
        other => Err(Error::InvalidInnerExponent(other)),
    }
}

/// Discriminant of `x³ + ax² + bx + c`: `18abc − 4a³c + a²b² − 4b³ − 27c²`.
pub fn generic_cubic_discriminant(cu: &Cubic) -> BigInt {
    let (a, b, c) = (&cu.a, &cu.b, &cu.c);
    BigInt::from(18) * a * b * c - BigInt::from(4) * a.pow(3) * c + a.pow(2) * b.pow(2)
        - BigInt::from(4) * b.pow(3)
        - BigInt::from(27) * c.pow(2)
}

/// Discriminant via the Sylvester resultant of `f` and `f'`, for monic `f`
/// given by ascending coefficients of degree 2..=8. Test oracle for the
/// closed forms.
pub fn resultant_discriminant(coeffs: &[BigInt]) -> Result<BigInt> {
    let n = coeffs.len().checked_sub(1).ok_or(Error::OracleUnsupported)?;
    if !(2..=8).contains(&n) || !coeffs[n].is_one() {
        return Err(Error::OracleUnsupported);
    }
    // f' ascending.
    let deriv: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| BigInt::from(i as u32) * c)
        .collect();
    // Sylvester matrix in descending-coefficient convention.
    let size = 2 * n - 1;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    let f_desc: Vec<BigInt> = coeffs.iter().rev().cloned().collect();
    let g_desc: Vec<BigInt> = deriv.iter().rev().cloned().collect();
    for (row, item) in mat.iter_mut().take(n - 1).enumerate() {
        for (j, c) in f_desc.iter().enumerate() {
            item[row + j] = c.clone();
        }
    }
    for row in 0..n {
        for (j, c) in g_desc.iter().enumerate() {
            mat[n - 1 + row][row + j] = c.clone();
        }
    }
    let det = bareiss_determinant(mat);
    Ok(sign_pow_half(n as u32) * det)
}

/// Fraction-free Gaussian elimination; exact over the integers.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// All distinct integer roots of a monic cubic with nonzero constant term,
/// ascending. An empty answer certifies irreducibility over the rationals.
///
/// Enumerates divisors of the constant term, so it inherits [`factor`]'s
/// best-effort behaviour on enormous inputs.
pub fn cubic_rational_roots(cu: &Cubic) -> Result<Vec<BigInt>> {
    if cu.c.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let f = factor(&cu.c)?;
    let mut divisors = vec![BigInt::one()];
    for (p, e) in f.factors() {
        let mut next = Vec::with_capacity(divisors.len() * (*e as usize + 1));
        let mut pk = BigInt::one();
        for _ in 0..=*e {
            for d in &divisors {
                next.push(d * &pk);
            }
            pk *= p;
        }
        divisors = next;
    }
    let mut roots: Vec<BigInt> = divisors
        .into_iter()
        .flat_map(|d| [-&d, d])
        .filter(|r| cu.eval(r).is_zero())
        .collect();
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Distinct integer roots of a monic cubic, ascending, via bisection on the
/// monotone segments between the critical points. Total: never factors,
/// never fails.
pub(crate) fn integer_roots_monotone(cu: &Cubic) -> Vec<BigInt> {
    let bound = BigInt::one() + cu.a.abs().max(cu.b.abs()).max(cu.c.abs());
    let lo = -&bound;
    let hi = bound.clone();
    // Critical points of f are the roots of 3x² + 2ax + b; they are real
    // exactly when D = a² − 3b > 0.
    let d = cu.a.pow(2) - BigInt::from(3) * &cu.b;
    let mut roots = Vec::new();
    if d.is_positive() {
        // x ≤ c1 ⇔ 3x + a ≤ −√D; x ≥ c2 ⇔ 3x + a ≥ √D; between ⇔ (3x+a)² ≤ D.
        let sd = isqrt(&d).expect("d > 0");
        let left_of_c1 = |x: &BigInt| {
            let t = BigInt::from(3) * x + &cu.a;
            !t.is_positive() && t.pow(2) >= d
        };
        let right_of_c2 = |x: &BigInt| {
            let t = BigInt::from(3) * x + &cu.a;
            !t.is_negative() && t.pow(2) >= d
        };
        let in_middle = |x: &BigInt| {
            let t = BigInt::from(3) * x + &cu.a;
            t.pow(2) <= d
        };
        // Largest integer left of c1, adjusted from a floor-division seed.
        let mut t1 = (-&cu.a - &sd).div_floor(&BigInt::from(3));
        while !left_of_c1(&t1) {
            t1 -= 1;
        }
        while left_of_c1(&(&t1 + 1)) {
            t1 += 1;
        }
        // Smallest integer right of c2.
        let mut t2 = (-&cu.a + &sd).div_ceil(&BigInt::from(3));
        while !right_of_c2(&t2) {
            t2 += 1;
        }
        while right_of_c2(&(&t2 - 1)) {
            t2 -= 1;
        }
        // Middle range of integers strictly between the critical points.
        let mut m_lo = t1.clone();
        while !in_middle(&m_lo) {
            m_lo += 1;
        }
        let mut m_hi = t2.clone();
        while !in_middle(&m_hi) {
            m_hi -= 1;
        }
        bisect_monotone(cu, &lo, &t1, true, &mut roots);
        bisect_monotone(cu, &m_lo, &m_hi, false, &mut roots);
        bisect_monotone(cu, &t2, &hi, true, &mut roots);
    } else {
        bisect_monotone(cu, &lo, &hi, true, &mut roots);
    }
    roots.sort();
    roots.dedup();
    roots
}

fn bisect_monotone(cu: &Cubic, lo: &BigInt, hi: &BigInt, increasing: bool, out: &mut Vec<BigInt>) {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    while lo <= hi {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let v = cu.eval(&mid);
        if v.is_zero() {
            out.push(mid);
            return;
        }
        if v.is_negative() == increasing {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
}

/// Three-valued irreducibility verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    Yes,
    No,
    Unknown,
}

/// Irreducibility over the rationals.
///
/// Cubics are decided exactly through the rational-root test. For higher
/// degree, an integer root gives `No`; a prime `p ≤ certificate_prime_bound`
/// not dividing the discriminant whose reduction is irreducible over `F_p`
/// gives `Yes`; quartics fall back to a decisive search for a factorization
/// into two integer quadratics; otherwise `Unknown`.
pub fn is_irreducible(t: &Trinomial, certificate_prime_bound: u64) -> Irreducibility {
    if t.n() == 3 {
        let cubic = t.to_cubic().expect("cubic trinomial");
        return match cubic_rational_roots(&cubic) {
            Ok(roots) if roots.is_empty() => Irreducibility::Yes,
            Ok(_) => Irreducibility::No,
            Err(_) => Irreducibility::Unknown,
        };
    }
    if has_integer_root(t) {
        return Irreducibility::No;
    }
    let disc = swan_discriminant(t);
    let coeffs = t.coeffs_ascending();
    let mut p = 2u64;
    while p <= certificate_prime_bound {
        if crate::arith::is_prime(&BigInt::from(p)) && !(&disc % p).is_zero() {
            let fp = ModPoly::from_bigint_coeffs(p, &coeffs);
            if is_irreducible_modp(&fp) {
                return Irreducibility::Yes;
            }
        }
        p += 1;
    }
    if t.n() == 4 {
        return if has_quadratic_factorization(t) {
            Irreducibility::No
        } else {
            Irreducibility::Yes
        };
    }
    Irreducibility::Unknown
}

fn has_integer_root(t: &Trinomial) -> bool {
    let eval = |x: &BigInt| x.pow(t.n()) + t.a() * x.pow(t.m()) + t.b();
    match factor(t.b()) {
        Ok(f) => {
            let mut divisors = vec![BigInt::one()];
            for (p, e) in f.factors() {
                let mut next = Vec::new();
                let mut pk = BigInt::one();
                for _ in 0..=*e {
                    for d in &divisors {
                        next.push(d * &pk);
                    }
                    pk *= p;
                }
                divisors = next;
            }
            divisors.iter().any(|d| eval(d).is_zero() || eval(&-d).is_zero())
        }
        Err(_) => false,
    }
}

/// Decisive quartic check: does `x⁴ + ... ` split into two monic integer
/// quadratics `(x² + ux + v)(x² + u'x + v')`? Candidates are pinned by
/// `v·v' = c0` and linear coefficient matching, so the search is finite.
fn has_quadratic_factorization(t: &Trinomial) -> bool {
    debug_assert_eq!(t.n(), 4);
    let coeffs = t.coeffs_ascending();
    let (c0, c1, c2, c3) = (&coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3]);
    let Ok(f) = factor(c0) else { return false };
    let mut divisors = vec![BigInt::one()];
    for (p, e) in f.factors() {
        let mut next = Vec::new();
        let mut pk = BigInt::one();
        for _ in 0..=*e {
            for d in &divisors {
                next.push(d * &pk);
            }
            pk *= p;
        }
        divisors = next;
    }
    let signed: Vec<BigInt> = divisors.iter().flat_map(|d| [d.clone(), -d]).collect();
    for v in &signed {
        let vp = c0 / v;
        if v != &vp {
            // c1 = u(v' − v) + c3·v determines u.
            let num = c1 - c3 * v;
            let den = &vp - v;
            let (u, rem) = num.div_rem(&den);
            if !rem.is_zero() {
                continue;
            }
            let up = c3 - &u;
            if v + &vp + &u * &up == *c2 {
                return true;
            }
        } else {
            // v' = v: u and u' are roots of t² − c3·t + (c2 − 2v).
            if c1 != &(c3 * v) {
                continue;
            }
            let prod = c2 - BigInt::from(2) * v;
            let disc = c3.pow(2) - BigInt::from(4) * &prod;
            if let Some(s) = as_perfect_square(&disc) {
                if ((c3 + &s) % BigInt::from(2)).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Galois type of a monic cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaloisType {
    Reducible,
    C3,
    S3,
}

/// Reducible when a rational root exists; otherwise `C3` exactly when the
/// discriminant is a perfect square, else `S3`.
pub fn galois_type_cubic(cu: &Cubic) -> GaloisType {
    if cu.c.is_zero() || !integer_roots_monotone(cu).is_empty() {
        return GaloisType::Reducible;
    }
    let disc = generic_cubic_discriminant(cu);
    if as_perfect_square(&disc).is_some() {
        GaloisType::C3
    } else {
        GaloisType::S3
    }
}

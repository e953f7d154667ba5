//! Exact arithmetic in the quotient ring `Z[x]/(f)` for monic cubics,
//! verification of explicit factorization identities, rigorous real-root
//! enclosures, and the field-equality (equivalence) decision for cyclic
//! cubics.
//!
//! The equivalence test is exact: interval arithmetic over dyadic rationals
//! proposes integer candidates for a root of `g` expressed in the ring, and
//! a purely symbolic substitution verifies or rejects every candidate. A
//! negative answer is reached only once every pairing has been rigorously
//! excluded.

pub mod interval;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::factor;
use crate::polycore::{galois_type_cubic, generic_cubic_discriminant, Cubic, GaloisType};
use crate::{Error, Result};
use interval::{Dyadic, IntegerInside, Interval};

/// Precision ladder for the numeric proposal stage, in bits.
const PRECISION_START: u32 = 128;
const PRECISION_CAP: u32 = 2048;

/// An element `a + b·α + c·α²` of `Z[x]/(f)`, with `α` a root of the monic
/// cubic modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    modulus: Cubic,
    coords: [BigInt; 3],
}

impl RingElement {
    pub fn new(modulus: Cubic, coords: [BigInt; 3]) -> Self {
        Self { modulus, coords }
    }

    pub fn from_i64(modulus: Cubic, coords: [i64; 3]) -> Self {
        Self::new(modulus, coords.map(BigInt::from))
    }

    pub fn constant(modulus: Cubic, n: impl Into<BigInt>) -> Self {
        Self::new(modulus, [n.into(), BigInt::zero(), BigInt::zero()])
    }

    /// The residue class of `x`, i.e. the root α itself.
    pub fn alpha(modulus: Cubic) -> Self {
        Self::new(modulus, [BigInt::zero(), BigInt::one(), BigInt::zero()])
    }

    pub fn modulus(&self) -> &Cubic {
        &self.modulus
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn neg(&self) -> Self {
        Self::new(self.modulus.clone(), [(-&self.coords[0]), -&self.coords[1], -&self.coords[2]])
    }

    fn scale(&self, n: &BigInt) -> Self {
        Self::new(
            self.modulus.clone(),
            [&self.coords[0] * n, &self.coords[1] * n, &self.coords[2] * n],
        )
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "α", "α²"];
        let mut wrote = false;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{}", names[i])?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exact sum in `Z[x]/(f)`.
pub fn ring_add(u: &RingElement, v: &RingElement) -> Result<RingElement> {
    if u.modulus != v.modulus {
        return Err(Error::ModulusMismatch);
    }
    Ok(RingElement::new(
        u.modulus.clone(),
        [
            &u.coords[0] + &v.coords[0],
            &u.coords[1] + &v.coords[1],
            &u.coords[2] + &v.coords[2],
        ],
    ))
}

/// Exact product in `Z[x]/(f)`, reduced by `α³ = −aα² − bα − c`.
pub fn ring_mul(u: &RingElement, v: &RingElement) -> Result<RingElement> {
    if u.modulus != v.modulus {
        return Err(Error::ModulusMismatch);
    }
    let mut conv = [
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
    ];
    for (i, a) in u.coords.iter().enumerate() {
        for (j, b) in v.coords.iter().enumerate() {
            conv[i + j] += a * b;
        }
    }
    let m = &u.modulus;
    for i in (3..=4).rev() {
        let t = std::mem::take(&mut conv[i]);
        if t.is_zero() {
            continue;
        }
        conv[i - 1] -= &t * &m.a;
        conv[i - 2] -= &t * &m.b;
        conv[i - 3] -= &t * &m.c;
    }
    let [c0, c1, c2, ..] = conv;
    Ok(RingElement::new(u.modulus.clone(), [c0, c1, c2]))
}

/// Exact difference in `Z[x]/(f)`.
pub fn ring_sub(u: &RingElement, v: &RingElement) -> Result<RingElement> {
    ring_add(u, &v.neg())
}

/// Checks the identity `g = (x − r₁)(x − r₂)(x − r₃)` over `Z[x]/(f)` by
/// expanding the elementary symmetric functions of the proposed roots.
pub fn verify_split(g: &Cubic, roots: &[RingElement; 3]) -> Result<bool> {
    let [r1, r2, r3] = roots;
    if r1.modulus != r2.modulus || r1.modulus != r3.modulus {
        return Err(Error::ModulusMismatch);
    }
    let e1 = ring_add(&ring_add(r1, r2)?, r3)?;
    let r1r2 = ring_mul(r1, r2)?;
    let e2 = ring_add(&ring_add(&r1r2, &ring_mul(r1, r3)?)?, &ring_mul(r2, r3)?)?;
    let e3 = ring_mul(&r1r2, r3)?;
    let modulus = r1.modulus.clone();
    let want_e1 = RingElement::constant(modulus.clone(), -&g.a);
    let want_e2 = RingElement::constant(modulus.clone(), g.b.clone());
    let want_e3 = RingElement::constant(modulus, -&g.c);
    Ok(e1 == want_e1 && e2 == want_e2 && e3 == want_e3)
}

/// Exact sign of `f(x)` at a dyadic point: for `x = m·2^-s`, evaluates
/// `f(x)·2^(3s)` over the integers.
fn sign_at(cu: &Cubic, x: &Dyadic) -> i32 {
    let v = if x.exp() >= 0 {
        let t = x.mant() << x.exp() as u64;
        cu.eval(&t)
    } else {
        let s = (-x.exp()) as u64;
        let m = x.mant();
        m.pow(3)
            + (&cu.a << s) * m.pow(2)
            + (&cu.b << (2 * s)) * m
            + (&cu.c << (3 * s))
    };
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn bisect_root(cu: &Cubic, mut lo: Dyadic, mut hi: Dyadic, prec: u32) -> Interval {
    let target = Dyadic::new(1, -(prec as i64));
    let lo_sign = sign_at(cu, &lo);
    debug_assert_ne!(lo_sign, 0);
    debug_assert_eq!(sign_at(cu, &hi), -lo_sign);
    while hi.sub(&lo) > target {
        let mid = lo.midpoint(&hi);
        let s = sign_at(cu, &mid);
        // A dyadic (hence rational) root would contradict irreducibility.
        assert_ne!(s, 0, "irreducible cubic has no dyadic root");
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Interval::new(lo, hi)
}

/// Rigorous enclosures of the three real roots of an irreducible cubic with
/// positive discriminant, in descending order. Each interval has width at
/// most `2^-precision_bits` and exact sign-change endpoints.
pub fn real_roots(cu: &Cubic, precision_bits: u32) -> Result<Vec<Interval>> {
    if !generic_cubic_discriminant(cu).is_positive() {
        return Err(Error::DiscriminantNotPositive);
    }
    if !crate::polycore::integer_roots_monotone(cu).is_empty() {
        return Err(Error::NotCyclicCubic(format!("{cu} is reducible")));
    }
    // Cauchy bound: all roots lie strictly inside ±(1 + max |coeff|).
    let bound = BigInt::one() + cu.a.abs().max(cu.b.abs()).max(cu.c.abs());
    let lo_end = Dyadic::from_bigint(&-&bound);
    let hi_end = Dyadic::from_bigint(&bound);
    debug_assert_eq!(sign_at(cu, &lo_end), -1);
    debug_assert_eq!(sign_at(cu, &hi_end), 1);

    // Positive discriminant gives two real critical points c₁ < c₂ with
    // f(c₁) > 0 > f(c₂); dyadic stand-ins u ∈ (r₁, r₂) and v ∈ (r₂, r₃)
    // are certified by exact sign evaluation.
    let d = cu.a.pow(2) - BigInt::from(3) * &cu.b;
    debug_assert!(d.is_positive());
    let mut scale = 8u64;
    let (u, v) = loop {
        let shifted = &d << (2 * scale);
        let sd = shifted.sqrt();
        // u ≈ (−a − √d)/3 and v ≈ (−a + √d)/3 at 2^-scale granularity.
        let a_shift = -&cu.a << scale;
        let three = BigInt::from(3);
        let u = Dyadic::new((&a_shift - &sd).div_floor(&three), -(scale as i64));
        let v = Dyadic::new((&a_shift + &sd).div_ceil(&three), -(scale as i64));
        if sign_at(cu, &u) > 0 && sign_at(cu, &v) < 0 && u < v {
            break (u, v);
        }
        scale += 16;
        assert!(scale < 1 << 20, "critical-point refinement must terminate");
    };

    let r1 = bisect_root(cu, lo_end, u.clone(), precision_bits);
    let r2 = bisect_root(cu, u, v.clone(), precision_bits);
    let r3 = bisect_root(cu, v, hi_end, precision_bits);
    // Descending order: r3 > r2 > r1.
    Ok(vec![r3, r2, r1])
}

/// A root of `g` inside the field of `f`: `(element) / denominator` with
/// integer coordinates. The denominator is 1 whenever `Z[α]` already
/// contains the root (always the case for monogenic `f`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInField {
    pub element: RingElement,
    pub denominator: BigInt,
}

enum Attempt {
    Found(RootInField),
    NoRoot,
    NeedPrecision,
}

/// Decides whether `g` has a root in `Q[x]/(f)` for irreducible cyclic
/// cubics `f`, `g`, and exhibits it when so.
///
/// Interval arithmetic at the given starting precision proposes candidate
/// coordinates for each of the six root pairings and each admissible
/// denominator; exact ring substitution has the final word. Precision
/// doubles on demand up to a cap, after which [`Error::Indeterminate`] is
/// returned (distinct from a definite `None`).
pub fn express_root(g: &Cubic, f: &Cubic, precision_bits: u32) -> Result<Option<RootInField>> {
    for cu in [f, g] {
        if galois_type_cubic(cu) != GaloisType::C3 {
            return Err(Error::NotCyclicCubic(cu.to_string()));
        }
    }
    // Any root of monic g in the field is an algebraic integer, so its
    // coordinates over Z[α] have denominator dividing the index
    // [Z_K : Z[α]], whose square divides Δ(f).
    let disc = generic_cubic_discriminant(f);
    let factored = factor(&disc)?;
    let mut index_bound = BigInt::one();
    for (p, e) in factored.factors() {
        index_bound *= p.pow(e / 2);
    }
    let denominators = sorted_divisors(&index_bound)?;
    let mut prec = precision_bits.clamp(PRECISION_START, PRECISION_CAP);
    loop {
        match attempt_express(g, f, &denominators, prec)? {
            Attempt::Found(root) => return Ok(Some(root)),
            Attempt::NoRoot => return Ok(None),
            Attempt::NeedPrecision => {
                if prec >= PRECISION_CAP {
                    return Err(Error::Indeterminate);
                }
                prec = (prec * 2).min(PRECISION_CAP);
            }
        }
    }
}

fn sorted_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let f = factor(n)?;
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
    divisors.sort();
    Ok(divisors)
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn attempt_express(
    g: &Cubic,
    f: &Cubic,
    denominators: &[BigInt],
    prec: u32,
) -> Result<Attempt> {
    let alphas = real_roots(f, prec)?;
    let betas = real_roots(g, prec)?;
    let alpha_sq: Vec<Interval> = alphas.iter().map(|a| a.mul(a)).collect();
    let one = Interval::from_bigint(&BigInt::one());
    let mut need_precision = false;

    for perm in PERMUTATIONS {
        // Solve [1 αᵢ αᵢ²]·(a,b,c)ᵀ = β_{π(i)} by Cramer's rule.
        let rows: Vec<[&Interval; 3]> =
            (0..3).map(|i| [&one, &alphas[i], &alpha_sq[i]]).collect();
        let rhs: Vec<&Interval> = perm.iter().map(|&p| &betas[p]).collect();
        let det = det3([rows[0], rows[1], rows[2]]);
        if det.contains_zero() {
            need_precision = true;
            continue;
        }
        let mut coord_intervals = Vec::with_capacity(3);
        let mut failed = false;
        for col in 0..3 {
            let mut m = [rows[0], rows[1], rows[2]];
            for (r, row) in m.iter_mut().enumerate() {
                row[col] = rhs[r];
            }
            match det3(m).div_outward(&det, prec) {
                Ok(iv) => coord_intervals.push(iv),
                Err(_) => {
                    failed = true;
                    break;
                }
            }
        }
        if failed {
            need_precision = true;
            continue;
        }
        for den in denominators {
            let mut coords: [BigInt; 3] = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
            let mut viable = true;
            for (i, iv) in coord_intervals.iter().enumerate() {
                match iv.mul_bigint(den).integer_inside() {
                    IntegerInside::One(v) => coords[i] = v,
                    IntegerInside::None => {
                        viable = false;
                        break;
                    }
                    IntegerInside::Ambiguous => {
                        need_precision = true;
                        viable = false;
                        break;
                    }
                }
            }
            if viable && is_scaled_root(g, f, &coords, den) {
                return Ok(Attempt::Found(RootInField {
                    element: RingElement::new(f.clone(), coords),
                    denominator: den.clone(),
                }));
            }
        }
    }
    Ok(if need_precision { Attempt::NeedPrecision } else { Attempt::NoRoot })
}

fn det3(m: [[&Interval; 3]; 3]) -> Interval {
    let minor = |a: &Interval, b: &Interval, c: &Interval, d: &Interval| a.mul(d).sub(&b.mul(c));
    let m0 = minor(m[1][1], m[1][2], m[2][1], m[2][2]);
    let m1 = minor(m[1][0], m[1][2], m[2][0], m[2][2]);
    let m2 = minor(m[1][0], m[1][1], m[2][0], m[2][1]);
    m[0][0].mul(&m0).sub(&m[0][1].mul(&m1)).add(&m[0][2].mul(&m2))
}

/// Exact check that `(a + bα + cα²)/den` is a root of `g`, clearing
/// denominators: `E³ + g_a·den·E² + g_b·den²·E + g_c·den³ = 0`.
fn is_scaled_root(g: &Cubic, f: &Cubic, coords: &[BigInt; 3], den: &BigInt) -> bool {
    let e = RingElement::new(f.clone(), coords.clone());
    let e2 = ring_mul(&e, &e).expect("same modulus");
    let e3 = ring_mul(&e2, &e).expect("same modulus");
    let term2 = e2.scale(&(den * &g.a));
    let term1 = e.scale(&(den.pow(2) * &g.b));
    let term0 = RingElement::constant(f.clone(), den.pow(3) * &g.c);
    let mut acc = ring_add(&e3, &term2).expect("same modulus");
    acc = ring_add(&acc, &term1).expect("same modulus");
    acc = ring_add(&acc, &term0).expect("same modulus");
    acc.is_zero()
}

/// Equality of splitting fields for irreducible cyclic cubics: for these,
/// containing one root of `g` is containing all of them.
pub fn fields_equal(f: &Cubic, g: &Cubic) -> Result<bool> {
    Ok(express_root(g, f, PRECISION_START)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::Trinomial;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn t_modulus() -> Cubic {
        Cubic::new(0, -3, 1) // x³ − 3x + 1
    }

    #[test]
    fn ring_mul_reduces_alpha_cubed() {
        let m = t_modulus();
        let alpha = RingElement::alpha(m.clone());
        let alpha2 = ring_mul(&alpha, &alpha).unwrap();
        let alpha3 = ring_mul(&alpha, &alpha2).unwrap();
        // α³ = 3α − 1.
        assert_eq!(alpha3, RingElement::from_i64(m, [-1, 3, 0]));
    }

    #[test]
    fn ring_additive_inverse() {
        let m = t_modulus();
        let u = RingElement::from_i64(m.clone(), [-2, 0, 1]); // α² − 2
        let v = RingElement::from_i64(m.clone(), [2, 0, -1]); // 2 − α²
        assert!(ring_add(&u, &v).unwrap().is_zero());
    }

    #[test]
    fn ring_mul_example() {
        // (α² − 2)(α² + α − 2) = 3 − α² over x³ − 3x + 1.
        let m = t_modulus();
        let u = RingElement::from_i64(m.clone(), [-2, 0, 1]);
        let v = RingElement::from_i64(m.clone(), [-2, 1, 1]);
        assert_eq!(ring_mul(&u, &v).unwrap(), RingElement::from_i64(m, [3, 0, -1]));
    }

    #[test]
    fn ring_mismatched_moduli() {
        let u = RingElement::from_i64(t_modulus(), [0, 1, 0]);
        let v = RingElement::from_i64(Cubic::new(0, -7, 7), [0, 1, 0]);
        assert!(matches!(ring_add(&u, &v), Err(Error::ModulusMismatch)));
        assert!(matches!(ring_mul(&u, &v), Err(Error::ModulusMismatch)));
    }

    #[test]
    fn split_identities_over_t() {
        let m = t_modulus();
        let e = |a: i64, b: i64, c: i64| RingElement::from_i64(m.clone(), [a, b, c]);
        // T itself: (x − α)(x − (α² − 2))(x + α² + α − 2).
        assert!(verify_split(&t_modulus(), &[e(0, 1, 0), e(-2, 0, 1), e(2, -1, -1)]).unwrap());
        // x³ + 3x² − 3 = (x + α + 1)(x + α² − 1)(x − α² − α + 3).
        assert!(verify_split(&Cubic::new(3, 0, -3), &[e(-1, -1, 0), e(1, 0, -1), e(-3, 1, 1)])
            .unwrap());
        // Wrong multiset fails.
        assert!(!verify_split(&t_modulus(), &[e(0, 1, 0), e(0, 1, 0), e(0, 1, 0)]).unwrap());
    }

    #[test]
    fn real_roots_of_t() {
        let roots = real_roots(&t_modulus(), 64).unwrap();
        let approx: Vec<f64> = roots.iter().map(|i| i.lo().to_f64()).collect();
        let expected = [1.532088886, 0.347296355, -1.879385242];
        for (a, e) in approx.iter().zip(expected) {
            assert!((a - e).abs() < 1e-7, "{a} vs {e}");
        }
        for r in &roots {
            assert!(r.width() <= Dyadic::new(1, -64));
        }
    }

    #[test]
    fn real_roots_shifted() {
        // x³ − 3x − 1 has the negated roots of T.
        let roots = real_roots(&Cubic::new(0, -3, -1), 64).unwrap();
        let approx: Vec<f64> = roots.iter().map(|i| i.lo().to_f64()).collect();
        let expected = [1.879385242, -0.347296355, -1.532088886];
        for (a, e) in approx.iter().zip(expected) {
            assert!((a - e).abs() < 1e-7);
        }
    }

    #[test]
    fn real_roots_sum_zero() {
        // x³ − 7x + 7: no x² term, so the roots sum to 0.
        let roots = real_roots(&Cubic::new(0, -7, 7), 80).unwrap();
        let mut lo = Dyadic::zero();
        let mut hi = Dyadic::zero();
        for r in roots {
            lo = lo.add(r.lo());
            hi = hi.add(r.hi());
        }
        assert!(lo <= Dyadic::zero() && Dyadic::zero() <= hi);
    }

    #[test]
    fn real_roots_rejects_negative_discriminant() {
        assert!(matches!(
            real_roots(&Cubic::new(0, 1, 1), 64),
            Err(Error::DiscriminantNotPositive)
        ));
    }

    #[test]
    fn express_root_examples() {
        let t = t_modulus();
        // x³ + 3x² − 3 has roots −α − 1, −α² + 1 and α² + α − 3 over T;
        // any exactly verified one is a correct answer.
        let g = Cubic::new(3, 0, -3);
        let r = express_root(&g, &t, 128).unwrap().unwrap();
        assert_eq!(r.denominator, bi(1));
        let known = [[bi(-1), bi(-1), bi(0)], [bi(1), bi(0), bi(-1)], [bi(-3), bi(1), bi(1)]];
        assert!(known.contains(r.element.coords()), "{}", r.element);
        assert!(is_scaled_root(&g, &t, r.element.coords(), &r.denominator));
        // x³ − 3x² + 1 has roots 1 − α, 3 − α², α² + α − 1.
        let g = Cubic::new(-3, 0, 1);
        let r = express_root(&g, &t, 128).unwrap().unwrap();
        assert_eq!(r.denominator, bi(1));
        let known = [[bi(1), bi(-1), bi(0)], [bi(3), bi(0), bi(-1)], [bi(-1), bi(1), bi(1)]];
        assert!(known.contains(r.element.coords()), "{}", r.element);
        // Distinct fields: no root.
        assert!(express_root(&Cubic::new(0, -7, 7), &t, 128).unwrap().is_none());
    }

    #[test]
    fn express_root_requires_cyclic() {
        let t = t_modulus();
        assert!(matches!(
            express_root(&Cubic::new(0, 1, 1), &t, 128),
            Err(Error::NotCyclicCubic(_))
        ));
    }

    #[test]
    fn fields_equal_examples() {
        let t = t_modulus();
        assert!(fields_equal(&t, &Cubic::new(3, 0, -3)).unwrap());
        assert!(fields_equal(&t, &t).unwrap());
        assert!(!fields_equal(&t, &Cubic::new(0, -7, 7)).unwrap());
    }

    #[test]
    fn fields_equal_symmetric() {
        let polys = [
            t_modulus(),
            Cubic::new(3, 0, -3),
            Cubic::new(0, -7, 7),
            Cubic::new(0, -61, 183),
        ];
        for f in &polys {
            for g in &polys {
                assert_eq!(
                    fields_equal(f, g).unwrap(),
                    fields_equal(g, f).unwrap(),
                    "{f} vs {g}"
                );
            }
        }
    }

    #[test]
    fn collision_pair_has_distinct_fields() {
        // Both discriminants are 3⁴·307² = 7634169, yet the splitting
        // fields differ: equal discriminant does not imply equivalence.
        let fam = Cubic::new(0, -921, -10745); // family one at k = −6
        let exc = Cubic::new(0, -6447, 199243);
        assert_eq!(
            generic_cubic_discriminant(&fam),
            generic_cubic_discriminant(&exc)
        );
        assert!(!fields_equal(&fam, &exc).unwrap());
        assert!(!fields_equal(&exc, &fam).unwrap());
    }

    #[test]
    fn equivalent_fields_share_discriminant_on_test_set() {
        // Sound direction of the discriminant lemma, on monogenic members.
        let set: Vec<Trinomial> = vec![
            Trinomial::cubic(1, -3, 1).unwrap(),
            Trinomial::cubic(2, 3, -3).unwrap(),
            Trinomial::cubic(2, -3, 3).unwrap(),
            Trinomial::cubic(2, -3, 1).unwrap(),
            Trinomial::cubic(2, 3, -1).unwrap(),
            Trinomial::cubic(1, -7, 7).unwrap(),
            Trinomial::cubic(1, -39, 91).unwrap(),
            Trinomial::cubic(1, -61, 183).unwrap(),
            Trinomial::cubic(1, -21, -35).unwrap(),
            Trinomial::cubic(1, -921, -10745).unwrap(),
        ];
        for f in &set {
            for g in &set {
                let fc = f.to_cubic().unwrap();
                let gc = g.to_cubic().unwrap();
                if fields_equal(&fc, &gc).unwrap() {
                    assert_eq!(
                        crate::polycore::swan_discriminant(f),
                        crate::polycore::swan_discriminant(g),
                        "{f} ≡ {g}"
                    );
                }
            }
        }
    }

    #[test]
    fn expressed_root_verifies_exactly() {
        let t = t_modulus();
        for g in [Cubic::new(3, 0, -3), Cubic::new(-3, 0, 3), Cubic::new(-3, 0, 1), Cubic::new(3, 0, -1)] {
            let root = express_root(&g, &t, 128).unwrap().unwrap();
            assert!(is_scaled_root(&g, &t, root.element.coords(), &root.denominator));
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(32))]

        #[test]
        fn ring_axioms(
            a0 in -50i64..=50, a1 in -50i64..=50, a2 in -50i64..=50,
            b0 in -50i64..=50, b1 in -50i64..=50, b2 in -50i64..=50,
            c0 in -50i64..=50, c1 in -50i64..=50, c2 in -50i64..=50,
        ) {
            let m = t_modulus();
            let u = RingElement::from_i64(m.clone(), [a0, a1, a2]);
            let v = RingElement::from_i64(m.clone(), [b0, b1, b2]);
            let w = RingElement::from_i64(m.clone(), [c0, c1, c2]);
            // Commutativity.
            proptest::prop_assert_eq!(ring_add(&u, &v).unwrap(), ring_add(&v, &u).unwrap());
            proptest::prop_assert_eq!(ring_mul(&u, &v).unwrap(), ring_mul(&v, &u).unwrap());
            // Associativity.
            proptest::prop_assert_eq!(
                ring_mul(&ring_mul(&u, &v).unwrap(), &w).unwrap(),
                ring_mul(&u, &ring_mul(&v, &w).unwrap()).unwrap()
            );
            // Distributivity.
            proptest::prop_assert_eq!(
                ring_mul(&u, &ring_add(&v, &w).unwrap()).unwrap(),
                ring_add(&ring_mul(&u, &v).unwrap(), &ring_mul(&u, &w).unwrap()).unwrap()
            );
            // α satisfies its modulus: α³ − 3α + 1 = 0.
            let alpha = RingElement::alpha(m.clone());
            let a3 = ring_mul(&alpha, &ring_mul(&alpha, &alpha).unwrap()).unwrap();
            let val = ring_add(
                &ring_sub(&a3, &alpha.scale(&BigInt::from(3))).unwrap(),
                &RingElement::constant(m, 1),
            ).unwrap();
            proptest::prop_assert!(val.is_zero());
        }
    }
}

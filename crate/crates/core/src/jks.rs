//! The monogenicity engine: per-prime index-divisor analysis for trinomials
//! (the five-condition criterion of Jakhar, Khanduja and Sangwan), aggregate
//! verdicts, and an independent Dedekind-criterion oracle for monic cubics.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{as_perfect_square, factor, is_prime, valuation};
use crate::modp::{modulus_to_u64, roots_modp, ModPoly};
use crate::polycore::{is_irreducible, swan_discriminant, Cubic, Irreducibility, Trinomial};
use crate::{Error, Result};

/// Prime bound for mod-p irreducibility certificates inside reports.
pub const DEFAULT_CERTIFICATE_PRIME_BOUND: u64 = 100;

/// Which divisibility case of the per-prime criterion applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JksCase {
    /// `q | A`, `q | B`
    C1,
    /// `q | A`, `q ∤ B`
    C2,
    /// `q ∤ A`, `q | B`
    C3,
    /// `q ∤ AB`, `q | M`
    C4,
    /// `q ∤ ABM`
    C5,
    NotApplicable,
}

impl fmt::Display for JksCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            JksCase::C1 => "C1",
            JksCase::C2 => "C2",
            JksCase::C3 => "C3",
            JksCase::C4 => "C4",
            JksCase::C5 => "C5",
            JksCase::NotApplicable => "not_applicable",
        };
        f.write_str(s)
    }
}

/// Exact intermediate values backing a per-prime verdict; fields are present
/// only when the applied case defines them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseWitnesses {
    /// `(A + (−A)^(q^ℓ)) / q` with `q^ℓ ∥ (N − M)`.
    pub a1: Option<BigInt>,
    /// `A / q`.
    pub a2: Option<BigInt>,
    /// `(B + (−B)^(q^j)) / q` with `q^j ∥ N`.
    pub b1: Option<BigInt>,
    /// `B / q`.
    pub b2: Option<BigInt>,
    pub j: Option<u32>,
    pub ell: Option<u32>,
    /// `M / q^k`.
    pub s: Option<u32>,
    /// `N / q^k`.
    pub s_prime: Option<u32>,
    /// Exact power of `q` dividing both `N` and `M`.
    pub k_exponent: Option<u32>,
    /// `x^s' + A·x^s + B`, ascending integer coefficients.
    pub h1: Option<Vec<BigInt>>,
    /// `(A·x^(s·q^k) + B + (−A·x^s − B)^(q^k)) / q`, ascending.
    pub h2: Option<Vec<BigInt>>,
}

/// Per-prime verdict: does `q` stay out of the index `[Z_K : Z[θ]]`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JksPrimeAnalysis {
    pub q: BigInt,
    pub case: JksCase,
    pub index_free: bool,
    pub witnesses: CaseWitnesses,
}

/// Aggregate monogenicity verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Monogenic,
    NotMonogenic,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Monogenic => "monogenic",
            Verdict::NotMonogenic => "not_monogenic",
            Verdict::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// Full report: discriminant data, cyclicity for cubics, the per-prime
/// analyses and the aggregate verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenicityReport {
    pub trinomial: Trinomial,
    pub irreducible: Irreducibility,
    pub discriminant: BigInt,
    pub discriminant_square_root: Option<BigInt>,
    /// Present only for cubics: irreducible with square discriminant.
    pub cyclic_cubic: Option<bool>,
    pub prime_analyses: Vec<JksPrimeAnalysis>,
    pub verdict: Verdict,
    /// Set when the verdict required an explanation (repeated root,
    /// reducibility, factorization giving up).
    pub reason: Option<String>,
}

/// `q^e` as a `u32` exponent. Any power of `q` exactly dividing `N` or `M`
/// is at most `N`, so this never overflows for valid trinomials.
fn prime_power_u32(q: &BigInt, e: u32) -> u32 {
    if e == 0 {
        return 1;
    }
    let base = q.to_u32().expect("q^e divides N, so q fits u32");
    base.checked_pow(e).expect("q^e divides N")
}

/// Per-prime index-freeness analysis for a prime divisor `q` of `Δ(f)`.
///
/// The meaning of the verdict presumes `f` irreducible; callers check that.
pub fn jks_prime_analysis(t: &Trinomial, q: &BigInt) -> Result<JksPrimeAnalysis> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q.clone()));
    }
    let disc = swan_discriminant(t);
    if !(&disc % q).is_zero() {
        return Err(Error::PrimeNotInDiscriminant(q.clone()));
    }
    let (a, b) = (t.a(), t.b());
    let q_div_a = (a % q).is_zero();
    let q_div_b = (b % q).is_zero();
    let n1 = t.n1();
    let m1 = t.m1();
    let mut w = CaseWitnesses::default();

    let (case, index_free) = if q_div_a && q_div_b {
        // q² must not divide B.
        (JksCase::C1, !(b % q.pow(2)).is_zero())
    } else if q_div_a {
        let j = valuation(&BigInt::from(t.n()), q)?;
        let qj = prime_power_u32(q, j);
        let a2 = a / q;
        let b1_num = b + (-b).pow(qj);
        debug_assert!((&b1_num % q).is_zero());
        let b1 = &b1_num / q;
        let first = (&a2 % q).is_zero() && !(&b1 % q).is_zero();
        let second = {
            let probe = &a2 * ((-b).pow(m1) * a2.pow(n1) - (-&b1).pow(n1));
            !(&probe % q).is_zero()
        };
        w.j = Some(j);
        w.a2 = Some(a2);
        w.b1 = Some(b1);
        (JksCase::C2, first || second)
    } else if q_div_b {
        let ell = valuation(&BigInt::from(t.n() - t.m()), q)?;
        let ql = prime_power_u32(q, ell);
        let a1_num = a + (-a).pow(ql);
        debug_assert!((&a1_num % q).is_zero());
        let a1 = &a1_num / q;
        let b2 = b / q;
        let first = (&a1 % q).is_zero() && !(&b2 % q).is_zero();
        let second = {
            let probe =
                &a1 * b2.pow(t.m() - 1) * ((-a).pow(m1) * a1.pow(n1 - m1) - (-&b2).pow(n1 - m1));
            !(&probe % q).is_zero()
        };
        w.ell = Some(ell);
        w.a1 = Some(a1);
        w.b2 = Some(b2);
        (JksCase::C3, first || second)
    } else if (BigInt::from(t.m()) % q).is_zero() {
        // N = s'·q^k, M = s·q^k with q not dividing gcd(s', s).
        let k = valuation(&BigInt::from(t.n()), q)?.min(valuation(&BigInt::from(t.m()), q)?);
        let qk = prime_power_u32(q, k);
        let s_prime = t.n() / qk;
        let s = t.m() / qk;
        let (h1, h2) = build_h_polynomials(a, b, s, s_prime, qk, q);
        let qu = modulus_to_u64(q)?;
        let h1_bar = ModPoly::from_bigint_coeffs(qu, &h1);
        let h2_bar = ModPoly::from_bigint_coeffs(qu, &h2);
        let gcd = h1_bar.gcd(&h2_bar);
        let coprime = gcd.is_constant() && !gcd.is_zero();
        w.k_exponent = Some(k);
        w.s = Some(s);
        w.s_prime = Some(s_prime);
        w.h1 = Some(h1);
        w.h2 = Some(h2);
        (JksCase::C4, coprime)
    } else {
        // q ∤ ABM: q² must not divide the collapsed resultant term.
        let probe = b.pow(n1 - m1) * BigInt::from(n1).pow(n1)
            - sign(m1) * a.pow(n1) * BigInt::from(m1).pow(m1)
                * (BigInt::from(m1) - BigInt::from(n1)).pow(n1 - m1);
        let fails = (&probe % q.pow(2)).is_zero();
        (JksCase::C5, !fails)
    };

    Ok(JksPrimeAnalysis { q: q.clone(), case, index_free, witnesses: w })
}

fn sign(e: u32) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `H1 = x^s' + A·x^s + B` and `H2 = (A·x^(s·q^k) + B + (−A·x^s − B)^(q^k)) / q`
/// over the integers, ascending coefficients.
fn build_h_polynomials(
    a: &BigInt,
    b: &BigInt,
    s: u32,
    s_prime: u32,
    qk: u32,
    q: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let deg1 = s_prime.max(s) as usize;
    let mut h1 = vec![BigInt::zero(); deg1 + 1];
    h1[0] += b;
    h1[s as usize] += a;
    h1[s_prime as usize] += BigInt::one();

    // (−A·x^s − B)^(q^k) by binomial expansion.
    let e = qk;
    let deg2 = (s * e) as usize;
    let mut h2 = vec![BigInt::zero(); deg2 + 1];
    let mut binom = BigInt::one();
    for i in 0..=e {
        // binom = C(e, i); term: C(e,i)·(−A)^i·(−B)^(e−i)·x^(s·i)
        let term = &binom * (-a).pow(i) * (-b).pow(e - i);
        h2[(s * i) as usize] += term;
        if i < e {
            binom = binom * BigInt::from(e - i) / BigInt::from(i + 1);
        }
    }
    h2[deg2] += a;
    h2[0] += b;
    for c in h2.iter_mut() {
        let (quot, rem) = c.div_rem(q);
        debug_assert!(rem.is_zero(), "H2 numerator must vanish mod q");
        *c = quot;
    }
    (h1, h2)
}

/// Full monogenicity report; total function, failures surface as
/// `Verdict::Unknown` with a reason.
pub fn monogenicity_report(t: &Trinomial) -> MonogenicityReport {
    let discriminant = swan_discriminant(t);
    let irreducible = is_irreducible(t, DEFAULT_CERTIFICATE_PRIME_BOUND);
    let discriminant_square_root = as_perfect_square(&discriminant);
    let cyclic_cubic = (t.n() == 3)
        .then(|| irreducible == Irreducibility::Yes && discriminant_square_root.is_some());
    let mut report = MonogenicityReport {
        trinomial: t.clone(),
        irreducible,
        discriminant: discriminant.clone(),
        discriminant_square_root,
        cyclic_cubic,
        prime_analyses: Vec::new(),
        verdict: Verdict::Unknown,
        reason: None,
    };
    if discriminant.is_zero() {
        report.verdict = Verdict::NotMonogenic;
        report.reason = Some("repeated root / not separable".into());
        return report;
    }
    if irreducible == Irreducibility::No {
        report.verdict = Verdict::NotMonogenic;
        report.reason = Some("reducible over the rationals".into());
        return report;
    }
    let factored = match factor(&discriminant) {
        Ok(f) => f,
        Err(_) => {
            report.reason = Some("discriminant factorization incomplete".into());
            return report;
        }
    };
    for q in factored.distinct_primes() {
        let analysis = jks_prime_analysis(t, q).expect("prime divisor of the discriminant");
        report.prime_analyses.push(analysis);
    }
    let all_free = report.prime_analyses.iter().all(|p| p.index_free);
    let any_blocked = report.prime_analyses.iter().any(|p| !p.index_free);
    report.verdict = if any_blocked {
        Verdict::NotMonogenic
    } else if all_free && irreducible == Irreducibility::Yes {
        Verdict::Monogenic
    } else {
        report.reason = Some("irreducibility undecided".into());
        Verdict::Unknown
    };
    report
}

/// Dedekind's criterion for a monic irreducible cubic: `true` iff `q` does
/// not divide the index `[Z_K : Z[θ]]`.
///
/// Independent of the trinomial criterion; used as its oracle in tests.
pub fn dedekind_prime_check(c: &Cubic, q: &BigInt) -> Result<bool> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q.clone()));
    }
    let qu = modulus_to_u64(q)?;
    let coeffs = c.coeffs_ascending();
    let fbar = ModPoly::from_bigint_coeffs(qu, &coeffs);
    debug_assert_eq!(fbar.degree(), Some(3));

    // Factor the cubic mod q: distinct roots with multiplicities plus at
    // most one irreducible non-linear cofactor (necessarily simple).
    let mut radical = ModPoly::one(qu);
    let mut hbar = ModPoly::one(qu);
    let mut cofactor = fbar.clone();
    for r in roots_modp(&fbar) {
        let linear = ModPoly::new(qu, vec![(qu - r % qu) % qu, 1]);
        let mut mult = 0u32;
        while cofactor.degree() >= linear.degree() && cofactor.rem(&linear).is_zero() {
            cofactor = cofactor.div_exact(&linear);
            mult += 1;
        }
        debug_assert!(mult >= 1);
        radical = radical.mul(&linear);
        for _ in 1..mult {
            hbar = hbar.mul(&linear);
        }
    }
    if !cofactor.is_constant() {
        radical = radical.mul(&cofactor);
    }

    // Lift with coefficients in [0, q), form F = (g*·h* − f)/q exactly.
    let lift = |p: &ModPoly| -> Vec<BigInt> { p.coeffs().iter().map(|&c| BigInt::from(c)).collect() };
    let g_lift = lift(&radical);
    let h_lift = lift(&hbar);
    let mut prod = vec![BigInt::zero(); g_lift.len() + h_lift.len() - 1];
    for (i, gi) in g_lift.iter().enumerate() {
        for (jj, hj) in h_lift.iter().enumerate() {
            prod[i + jj] += gi * hj;
        }
    }
    let mut f_big = vec![BigInt::zero(); prod.len().max(coeffs.len())];
    for (i, c) in coeffs.iter().enumerate() {
        f_big[i] = c.clone();
    }
    prod.resize(f_big.len(), BigInt::zero());
    let f_coeffs: Vec<BigInt> = prod
        .iter()
        .zip(f_big.iter())
        .map(|(p, f)| {
            let num = p - f;
            let (quot, rem) = num.div_rem(q);
            debug_assert!(rem.is_zero(), "g*h* ≡ f mod q coefficientwise");
            quot
        })
        .collect();
    let f_bar = ModPoly::from_bigint_coeffs(qu, &f_coeffs);
    let g = f_bar.gcd(&radical).gcd(&hbar);
    Ok(g.is_constant() && !g.is_zero())
}

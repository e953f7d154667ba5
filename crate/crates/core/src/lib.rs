//! Exact-arithmetic toolkit for monogenic cyclic cubic trinomials.
//!
//! The crate decides monogenicity of trinomials `x^N + A·x^M + B` with the
//! Jakhar–Khanduja–Sangwan prime-by-prime criterion, classifies cubic Galois
//! types through the square-discriminant test, generates the two infinite
//! families `F1`/`F2` of monogenic cyclic cubics, and settles equivalence
//! (equality of splitting fields) by exact root expression in the quotient
//! ring `Z[x]/(f)`.
//!
//! Module map:
//! - [`arith`] — integer square roots, deterministic primality, factorization.
//! - [`modp`] — dense polynomial arithmetic over prime fields.
//! - [`polycore`] — trinomials, cubics, Swan/resultant discriminants,
//!   irreducibility and Galois type.
//! - [`jks`] — the monogenicity engine plus a Dedekind-criterion oracle.
//! - [`families`] — family generators, classifiers and the four exceptional
//!   `x^3 + Ax^2 + B` trinomials.
//! - [`numfield`] — arithmetic in `Z[x]/(f)`, rigorous real roots and the
//!   field-equality test.
//! - [`scan`] — deterministic coefficient-box searches and reproduction
//!   suites.

pub mod arith;
pub mod families;
pub mod jks;
pub mod modp;
pub mod numfield;
pub mod polycore;
pub mod scan;

use num_bigint::BigInt;

/// Errors shared across the crate's modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation undefined for zero input")]
    ZeroInput,
    #[error("negative input {0} not allowed")]
    NegativeInput(BigInt),
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("factorization incomplete: cofactor {0} resisted the retry schedule")]
    IncompleteFactorization(BigInt),
    #[error("invalid trinomial: {0}")]
    InvalidTrinomial(String),
    #[error("inner exponent must be 1 or 2, got {0}")]
    InvalidInnerExponent(u32),
    #[error("resultant oracle requires a monic polynomial of degree 2..=8")]
    OracleUnsupported,
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("prime {0} does not divide the discriminant")]
    PrimeNotInDiscriminant(BigInt),
    #[error("prime {0} exceeds the supported modulus range")]
    PrimeTooLarge(BigInt),
    #[error("ring element moduli differ")]
    ModulusMismatch,
    #[error("expected a cubic (degree 3) input")]
    NotCubic,
    #[error("not an irreducible cyclic cubic: {0}")]
    NotCyclicCubic(String),
    #[error("discriminant is not positive")]
    DiscriminantNotPositive,
    #[error("precision cap reached without a definite answer")]
    Indeterminate,
    #[error("invalid filter expression: {0}")]
    FilterParse(String),
    #[error("invalid range: {0}")]
    InvalidRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use arith::{as_perfect_square, factor, is_prime, is_squarefree, isqrt, valuation, FactoredInteger};
pub use families::{
    classify_member, equal_discriminant, family1, family2, simplest_cubic, the_four_exceptional,
    Family, FamilyMember,
};
pub use jks::{
    dedekind_prime_check, jks_prime_analysis, monogenicity_report, CaseWitnesses, JksCase,
    JksPrimeAnalysis, MonogenicityReport, Verdict,
};
pub use numfield::{
    express_root, fields_equal, real_roots, ring_add, ring_mul, verify_split, RingElement,
    RootInField,
};
pub use polycore::{
    cubic_rational_roots, cubic_trinomial_discriminant, galois_type_cubic,
    generic_cubic_discriminant, is_irreducible, resultant_discriminant, swan_discriminant, Cubic,
    GaloisType, Irreducibility, Trinomial,
};
pub use scan::{
    family_audit, reproduce_final_remarks, reproduce_theorem_item2, scan_form, CollisionRecord,
    FamilyAudit, FinalRemarksEntry, Item2Reproduction, ScanResult, Tag, TagFilter, TagSet,
};

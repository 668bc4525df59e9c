//! Invariants of quotients `Γ \ B` where `Γ` is the unit group of a maximal
//! order in a central division algebra of prime index `n` over `F_q(T)`.
//!
//! A division algebra enters only through its ramification data: the
//! degrees of the ramified finite places and, optionally, their local
//! invariants.

mod chi;
mod demo;
mod embedding;
mod theta;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{BigInteger, ExactError};
use crate::fqspace::is_prime;
use crate::qcombinatorics::QCombError;

pub use chi::{chi, chi_raw, chi_symbolic, volume, ChiReport, StabilizerProfile};
pub use demo::multilayer_demo;
pub use embedding::{embedding_numbers, embeds_subfield, EmbeddingReport};
pub use theta::{theta, ThetaReport};

/// Ramification data of a division algebra over `F_q(T)`, unramified at
/// infinity. Places are identified only by their degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationData {
    pub q: u64,
    pub n: u32,
    pub degrees: Vec<u32>,
    /// Numerators `a_x` of the local invariants `a_x / n`, in the same
    /// order as `degrees`.
    pub invariants: Option<Vec<i64>>,
}

impl RamificationData {
    pub fn new(q: u64, n: u32, degrees: &[u32]) -> Self {
        Self {
            q,
            n,
            degrees: degrees.to_vec(),
            invariants: None,
        }
    }

    pub fn with_invariants(mut self, invariants: &[i64]) -> Self {
        self.invariants = Some(invariants.to_vec());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("q = {0} must be at least 2")]
    QTooSmall(u64),
    #[error("n = {0} must be at least 2")]
    NTooSmall(u32),
    #[error("place degrees must be positive")]
    ZeroDegree,
    #[error("{0} ramified place(s) given, at least 2 required")]
    TooFewPlaces(usize),
    #[error("n = {n} is even, so the number of ramified places must be even (got {count})")]
    OddRamificationForEvenN { n: u32, count: usize },
    #[error("{requested} places of degree {degree} requested but F_q[T] has only {available}")]
    TooManyPlacesOfDegree {
        degree: u32,
        requested: usize,
        available: BigInteger,
    },
    #[error("bad local invariants: {0}")]
    BadInvariants(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    QNotPrimePower(u64),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::QNotPrimePower(q) => {
                write!(
                    f,
                    "q = {q} is not a prime power; formulas are evaluated formally"
                )
            }
        }
    }
}

/// Ramification data that passed [`validate_data`], with degrees sorted
/// ascending and invariants permuted along.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validated {
    pub q: u64,
    pub n: u32,
    pub degrees: Vec<u32>,
    /// Given invariants, or a default admissible choice.
    pub invariants: Vec<i64>,
    pub warnings: Vec<Warning>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("invalid ramification data: {}", join(.0))]
    Invalid(Vec<ValidationError>),
    #[error("n = {0} is not prime; use the raw evaluation for non-prime n")]
    NonPrimeN(u32),
    #[error("formula value {0} is not an integer")]
    IntegralityFailure(String),
    #[error("theta_{index} = {value} is not a positive integer")]
    NonIntegralTheta { index: usize, value: String },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("no explicit quotient complex for n = {0}")]
    Unsupported(u32),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    QComb(#[from] QCombError),
}

impl ArithmeticError {
    /// Errors caused by the input rather than by a failed internal check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            ArithmeticError::Invalid(_)
                | ArithmeticError::NonPrimeN(_)
                | ArithmeticError::Unsupported(_)
        )
    }
}

fn join(errs: &[ValidationError]) -> String {
    errs.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            return r == 1;
        }
        p += 1;
    }
    true
}

fn mobius(mut m: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Number of places of `F_q(T)` of degree `d` other than infinity, i.e. the
/// number of monic irreducible polynomials of degree `d` over `F_q`.
pub fn finite_places_of_degree(q: u64, d: u32) -> BigInteger {
    let q = BigInteger::from(q);
    let total: BigInteger = (1..=d)
        .filter(|e| d % e == 0)
        .map(|e| q.pow(e) * mobius(d / e))
        .sum();
    total / d
}

/// `1` if `gcd(m, deg) = 1`, else `0`.
pub fn wp(deg: u32, m: u32) -> u32 {
    u32::from(deg.gcd(&m) == 1)
}

/// Product of [`wp`] over all places.
pub fn wp_set(degrees: &[u32], m: u32) -> u32 {
    degrees.iter().map(|&d| wp(d, m)).product()
}

/// Checks the structural conditions on ramification data. Primality of `n`
/// is not required here; the formula paths that need it check separately.
pub fn validate_data(d: &RamificationData) -> Result<Validated, Vec<ValidationError>> {
    let mut errs = Vec::new();
    if d.q < 2 {
        errs.push(ValidationError::QTooSmall(d.q));
    }
    if d.n < 2 {
        errs.push(ValidationError::NTooSmall(d.n));
    }
    if d.degrees.contains(&0) {
        errs.push(ValidationError::ZeroDegree);
    }
    let k = d.degrees.len();
    if k < 2 {
        errs.push(ValidationError::TooFewPlaces(k));
    }
    if d.n % 2 == 0 && k % 2 == 1 {
        errs.push(ValidationError::OddRamificationForEvenN { n: d.n, count: k });
    }
    if d.q >= 2 && !d.degrees.contains(&0) {
        let mut by_degree: BTreeMap<u32, usize> = BTreeMap::new();
        for &deg in &d.degrees {
            *by_degree.entry(deg).or_default() += 1;
        }
        for (degree, requested) in by_degree {
            let available = finite_places_of_degree(d.q, degree);
            if BigInteger::from(requested) > available {
                errs.push(ValidationError::TooManyPlacesOfDegree {
                    degree,
                    requested,
                    available,
                });
            }
        }
    }

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| d.degrees[i]);
    let mut invariants = Vec::new();
    if d.n >= 2 {
        match &d.invariants {
            Some(a) => match check_invariants(d.n, a, k) {
                Ok(()) => invariants = order.iter().map(|&i| a[i].rem_euclid(d.n as i64)).collect(),
                Err(e) => errs.push(e),
            },
            None if errs.is_empty() => match default_invariants(d.n, k) {
                Some(a) => invariants = a,
                None => errs.push(ValidationError::BadInvariants(
                    "no admissible local invariants exist".into(),
                )),
            },
            None => {}
        }
    }
    if !errs.is_empty() {
        return Err(errs);
    }

    let mut warnings = Vec::new();
    if !is_prime_power(d.q) {
        warnings.push(Warning::QNotPrimePower(d.q));
    }
    Ok(Validated {
        q: d.q,
        n: d.n,
        degrees: order.iter().map(|&i| d.degrees[i]).collect(),
        invariants,
        warnings,
    })
}

fn check_invariants(n: u32, a: &[i64], k: usize) -> Result<(), ValidationError> {
    let n = n as i64;
    if a.len() != k {
        return Err(ValidationError::BadInvariants(format!(
            "{} invariants for {} places",
            a.len(),
            k
        )));
    }
    if let Some(bad) = a.iter().find(|x| x.gcd(&n) != 1) {
        return Err(ValidationError::BadInvariants(format!(
            "{bad}/{n} does not have exact order {n}"
        )));
    }
    let sum: i64 = a.iter().map(|x| x.rem_euclid(n)).sum();
    if sum % n != 0 {
        return Err(ValidationError::BadInvariants(format!(
            "invariants sum to {}/{n}, not 0",
            sum % n
        )));
    }
    Ok(())
}

/// Lexicographically smallest tuple of units mod `n` summing to 0.
fn default_invariants(n: u32, k: usize) -> Option<Vec<i64>> {
    let n = n as i64;
    let units: Vec<i64> = (1..n).filter(|a| a.gcd(&n) == 1).collect();
    fn go(units: &[i64], n: i64, k: usize, acc: &mut Vec<i64>) -> bool {
        let sum: i64 = acc.iter().sum();
        if acc.len() + 1 == k {
            let last = (-sum).rem_euclid(n);
            if last.gcd(&n) == 1 {
                acc.push(last);
                return true;
            }
            return false;
        }
        for &u in units {
            acc.push(u);
            if go(units, n, k, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::new();
    go(&units, n, k, &mut acc).then_some(acc)
}

/// Validation plus the primality of `n` required by the closed formulas.
pub(crate) fn validate_prime(d: &RamificationData) -> Result<Validated, ArithmeticError> {
    let v = validate_data(d).map_err(ArithmeticError::Invalid)?;
    if !is_prime(v.n as u64) {
        return Err(ArithmeticError::NonPrimeN(v.n));
    }
    Ok(v)
}

/// `W = wp(R, n) n^{#R - 1}`: the number of vertex orbits whose stabilizer
/// is `F_{q^n}^×`.
pub(crate) fn special_orbits(n: u32, degrees: &[u32]) -> BigInteger {
    if degrees.is_empty() {
        return BigInteger::zero();
    }
    BigInteger::from(wp_set(degrees, n)) * BigInteger::from(n).pow(degrees.len() as u32 - 1)
}

pub(crate) fn sign(n: u32) -> BigInteger {
    if n % 2 == 1 {
        BigInteger::one()
    } else {
        -BigInteger::one()
    }
}

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{
    sign, special_orbits, validate_data, validate_prime, wp_set, ArithmeticError, RamificationData,
    Validated, Warning,
};
use crate::exactnum::{poly_div_exact, BigInteger, BigRational, QPolynomial};
use crate::fqspace::is_prime;
use crate::qcombinatorics::{bracket, bracket_at_power};

/// Orders of simplex stabilizers in `Γ`: vertex stabilizers are `F_q^×` or
/// `F_{q^n}^×`, higher simplices always have `F_q^×`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerProfile {
    /// Vertex orbits with stabilizer of order `q^n - 1`.
    pub special_vertex_orbits: BigInteger,
    pub special_order: BigInteger,
    /// Order `q - 1` of every other stabilizer.
    pub generic_order: BigInteger,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiReport {
    pub n: u32,
    pub q: u64,
    pub degrees: Vec<u32>,
    pub invariants: Vec<i64>,
    pub warnings: Vec<Warning>,
    /// `wp(R, n)`.
    pub wp_n: u32,
    pub volume: BigRational,
    pub chi: BigInteger,
    pub chi_poly: Option<QPolynomial>,
    /// `wp(R, n) n^{#R - 1}`.
    pub w: BigInteger,
    pub stabilizers: StabilizerProfile,
    pub congruence_ok: bool,
    /// `h^0, ..., h^{n-1}` of the cohomology of `Γ`.
    pub h: Vec<BigInteger>,
}

fn bracket_at(m: u32, q: &BigInteger) -> BigInteger {
    bracket(m).eval_int(q)
}

fn q_big(v: &Validated) -> BigInteger {
    BigInteger::from(v.q)
}

/// `∏_{x ∈ R} [n-1]_{q_x}` at an integer `q`.
fn place_product(n: u32, q: &BigInteger, degrees: &[u32]) -> BigInteger {
    degrees
        .iter()
        .map(|&d| bracket_at(n - 1, &q.pow(d)))
        .product()
}

fn volume_of(v: &Validated) -> BigRational {
    let q = q_big(v);
    let n = v.n;
    let num = BigInteger::from(n) * (&q - 1u32) * place_product(n, &q, &v.degrees);
    let den = bracket_at(n - 1, &q) * bracket_at(n, &q);
    BigRational::new(num, den)
}

/// `(q-1)(-1)^{n-1} / [n]_q ∏ [n-1]_{q_x} + W (1 - (q-1)/(q^n-1))` as a
/// rational; returns both summands.
fn formula_terms(v: &Validated) -> (BigRational, BigRational) {
    let q = q_big(v);
    let n = v.n;
    let first = BigRational::new(
        sign(n) * (&q - 1u32) * place_product(n, &q, &v.degrees),
        bracket_at(n, &q),
    );
    let w = BigRational::from_integer(special_orbits(n, &v.degrees));
    let ratio = BigRational::new(&q - 1u32, q.pow(n) - 1u32);
    let second = w * (BigRational::one() - ratio);
    (first, second)
}

/// Volume of `Γ \ PGL_n(F_∞)`: `n (q-1) / ([n-1]_q [n]_q) ∏ [n-1]_{q_x}`.
pub fn volume(d: &RamificationData) -> Result<BigRational, ArithmeticError> {
    Ok(volume_of(&validate_prime(d)?))
}

/// The closed formula for χ evaluated as a rational, without requiring `n`
/// to be prime. For composite `n` the value need not be an integer.
pub fn chi_raw(d: &RamificationData) -> Result<BigRational, ArithmeticError> {
    let v = validate_data(d).map_err(ArithmeticError::Invalid)?;
    let (a, b) = formula_terms(&v);
    Ok(a + b)
}

/// χ as a polynomial in a formal `q`, for prime `n`.
pub fn chi_symbolic(n: u32, degrees: &[u32]) -> Result<QPolynomial, ArithmeticError> {
    if !is_prime(n as u64) {
        return Err(ArithmeticError::NonPrimeN(n));
    }
    let q_minus_1 = QPolynomial::from_i64s(&[-1, 1]);
    let places: QPolynomial = degrees
        .iter()
        .map(|&d| bracket_at_power(n - 1, d))
        .product();
    let w = special_orbits(n, degrees);
    // W (1 - (q-1)/(q^n-1)) = W ([n]_q - (q-1)[n-1]_q) / [n]_q
    let correction = bracket(n) - &q_minus_1 * &bracket(n - 1);
    let numerator = (&q_minus_1 * &places).scale(&sign(n)) + correction.scale(&w);
    let poly = poly_div_exact(&numerator, &bracket(n))?;
    if poly.coeff(0) != BigInteger::one() {
        return Err(ArithmeticError::InvariantViolation(format!(
            "symbolic chi {poly} has constant term {}",
            poly.coeff(0)
        )));
    }
    Ok(poly)
}

pub fn chi(d: &RamificationData) -> Result<ChiReport, ArithmeticError> {
    let v = validate_prime(d)?;
    let n = v.n;
    let q = q_big(&v);
    let (first, second) = formula_terms(&v);

    let volume = volume_of(&v);
    let assembled =
        &volume * BigRational::new(sign(n) * bracket_at(n - 1, &q), BigInteger::from(n));
    if assembled != first {
        return Err(ArithmeticError::InvariantViolation(format!(
            "volume term {assembled} differs from first chi term {first}"
        )));
    }

    let value = first + second;
    if !value.is_integer() {
        return Err(ArithmeticError::IntegralityFailure(value.to_string()));
    }
    let chi = value.to_integer();

    let chi_poly = chi_symbolic(n, &v.degrees)?;
    if chi_poly.eval_int(&q) != chi {
        return Err(ArithmeticError::InvariantViolation(format!(
            "symbolic chi evaluates to {} but the formula gives {chi}",
            chi_poly.eval_int(&q)
        )));
    }

    let congruence_ok = chi.mod_floor(&q).is_one();
    let top = sign(n) * (&chi - 1u32);
    if top.is_negative() {
        return Err(ArithmeticError::InvariantViolation(format!(
            "h^{} = {top} is negative",
            n - 1
        )));
    }
    let mut h = vec![BigInteger::zero(); n as usize];
    h[0] = BigInteger::one();
    h[n as usize - 1] += top;

    let w = special_orbits(n, &v.degrees);
    Ok(ChiReport {
        n,
        q: v.q,
        wp_n: wp_set(&v.degrees, n),
        degrees: v.degrees,
        invariants: v.invariants,
        warnings: v.warnings,
        volume,
        chi,
        chi_poly: Some(chi_poly),
        stabilizers: StabilizerProfile {
            special_vertex_orbits: w.clone(),
            special_order: q.pow(n) - 1u32,
            generic_order: &q - 1u32,
        },
        w,
        congruence_ok,
        h,
    })
}

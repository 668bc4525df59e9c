//! Exact integers, rationals, and polynomials / rational functions in a
//! formal parameter `q`.
//!
//! Integers and rationals are the `num` crate's arbitrary-precision types.
//! Polynomials and rational functions over them are [`QPolynomial`] and
//! [`QRationalFunction`].

mod poly;
mod ratfunc;

pub use poly::{poly_div_exact, poly_eval, QPolynomial};
pub use ratfunc::{ratfunc_normalize, QRationalFunction};

/// Arbitrary-precision signed integer.
pub type BigInteger = num_bigint::BigInt;
/// Reduced fraction of [`BigInteger`]s with positive denominator.
pub type BigRational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("polynomial division is not exact over the integers")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
}

/// Formats a rational as `num/den`, or just `num` when the denominator is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom() == &BigInteger::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

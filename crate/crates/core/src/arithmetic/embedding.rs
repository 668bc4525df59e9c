use num_traits::Zero;

use super::{special_orbits, validate_prime, wp, wp_set, ArithmeticError, RamificationData};
use crate::exactnum::BigInteger;

/// Optimal embedding numbers of `B = F_{q^n}[T]` into the maximal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// Sorted place degrees, matching `local_m`.
    pub degrees: Vec<u32>,
    /// `m_x(B_x)` for each ramified place; every other place contributes 1.
    pub local_m: Vec<BigInteger>,
    /// `m(B) = ∏ m_x(B_x)`.
    pub m_b: BigInteger,
    /// `(m, F_{q^m} embeds into D)` for each divisor `m` of `n`.
    pub subfields: Vec<(u32, bool)>,
    /// Vertex orbits with stabilizer `F_{q^n}^×`.
    pub w: BigInteger,
}

/// `F_{q^m}` embeds into `D` iff `m | n` and no ramified place has degree
/// sharing a factor with `m`.
pub fn embeds_subfield(d: &RamificationData, m: u32) -> bool {
    m > 0 && d.n % m == 0 && wp_set(&d.degrees, m) == 1
}

pub fn embedding_numbers(d: &RamificationData) -> Result<EmbeddingReport, ArithmeticError> {
    let v = validate_prime(d)?;
    let n = v.n;
    let local_m: Vec<BigInteger> = v
        .degrees
        .iter()
        .map(|&deg| BigInteger::from(wp(deg, n) * n))
        .collect();
    let m_b: BigInteger = local_m.iter().product();
    let w = special_orbits(n, &v.degrees);
    if m_b != &w * n {
        return Err(ArithmeticError::InvariantViolation(format!(
            "m(B) = {m_b} but n W = {}",
            &w * n
        )));
    }
    if m_b.is_zero() != (wp_set(&v.degrees, n) == 0) {
        return Err(ArithmeticError::InvariantViolation(
            "m(B) vanishing disagrees with wp(R, n)".into(),
        ));
    }
    let subfields = (1..=n)
        .filter(|m| n % m == 0)
        .map(|m| (m, embeds_subfield(d, m)))
        .collect();
    Ok(EmbeddingReport {
        degrees: v.degrees,
        local_m,
        m_b,
        subfields,
        w,
    })
}

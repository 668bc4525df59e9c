use num_traits::{One, Signed, Zero};

use super::{chi, sign, ArithmeticError, RamificationData};
use crate::exactnum::{format_rational, BigInteger, BigRational};
use crate::qcombinatorics::{bracket, vertex_degree};

/// Numbers `θ_i` of `i`-simplices of `Γ \ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaReport {
    pub theta: Vec<BigInteger>,
    /// The product formula for two degree-one places was evaluated and
    /// agreed with the solved values.
    pub closed_form_used: bool,
}

/// Solves for `θ_0, ..., θ_{n-1}`.
///
/// Every `i`-simplex orbit has stabilizer `F_q^×` except the `W` special
/// vertex orbits, so counting `i`-simplices around vertices gives
/// `θ_i = deg^i / (i+1) · ((q-1) W / (q^n-1) + θ_0 - W)` for `i ≥ 1`;
/// together with `χ = Σ (-1)^i θ_i` this determines `θ_0`.
pub fn theta(d: &RamificationData) -> Result<ThetaReport, ArithmeticError> {
    let report = chi(d)?;
    let n = report.n;
    let q = BigInteger::from(report.q);
    let w = BigRational::from_integer(report.w.clone());

    let coeffs: Vec<BigRational> = (1..n)
        .map(|i| {
            let deg = vertex_degree(n, i)?.eval_int(&q);
            Ok(BigRational::new(deg, BigInteger::from(i + 1)))
        })
        .collect::<Result<_, ArithmeticError>>()?;
    let offset = &w * BigRational::new(&q - 1u32, q.pow(n) - 1u32) - &w;

    let c: BigRational = coeffs
        .iter()
        .enumerate()
        .map(|(k, x)| if k % 2 == 0 { -x.clone() } else { x.clone() })
        .sum();
    let lead = BigRational::one() + &c;
    let expected = BigRational::new(sign(n) * bracket(n - 1).eval_int(&q), BigInteger::from(n));
    if lead != expected {
        return Err(ArithmeticError::InvariantViolation(format!(
            "theta_0 coefficient {lead} differs from {expected}"
        )));
    }

    let chi_r = BigRational::from_integer(report.chi.clone());
    let theta0 = (chi_r.clone() - &c * &offset) / lead;
    let mut values = vec![theta0.clone()];
    values.extend(coeffs.iter().map(|x| x * (&offset + &theta0)));

    let alternating: BigRational = values
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 0 { x.clone() } else { -x.clone() })
        .sum();
    if alternating != chi_r {
        return Err(ArithmeticError::InvariantViolation(format!(
            "alternating theta sum {alternating} differs from chi {}",
            report.chi
        )));
    }

    let mut theta = Vec::with_capacity(values.len());
    for (index, x) in values.iter().enumerate() {
        if !x.is_integer() || !x.is_positive() {
            return Err(ArithmeticError::NonIntegralTheta {
                index,
                value: format_rational(x),
            });
        }
        theta.push(x.to_integer());
    }

    let closed_form_used = report.degrees == [1, 1];
    if closed_form_used {
        let closed = two_place_closed_form(n, &q)?;
        if closed != theta {
            return Err(ArithmeticError::InvariantViolation(format!(
                "solved theta {theta:?} differs from closed form {closed:?}"
            )));
        }
    }
    Ok(ThetaReport {
        theta,
        closed_form_used,
    })
}

/// `θ_0 = n`, `θ_i = n/(i+1) · (q-1)/(q^n-1) · Σ_{ℓ(p) = i+1} [n; p]_q`.
fn two_place_closed_form(n: u32, q: &BigInteger) -> Result<Vec<BigInteger>, ArithmeticError> {
    let mut out = vec![BigInteger::from(n)];
    let ratio = BigRational::new(q - 1u32, q.pow(n) - 1u32);
    for i in 1..n {
        let deg = vertex_degree(n, i)?.eval_int(q);
        let x = BigRational::new(BigInteger::from(n) * deg, BigInteger::from(i + 1)) * &ratio;
        if !x.is_integer() {
            return Err(ArithmeticError::NonIntegralTheta {
                index: i as usize,
                value: format_rational(&x),
            });
        }
        out.push(x.to_integer());
    }
    debug_assert!(!out.iter().any(|x| x.is_zero()));
    Ok(out)
}

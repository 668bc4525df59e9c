//! Ordered partitions, q-brackets, Gaussian binomials and multinomials, and
//! the flag counts they describe.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::{
    poly_div_exact, BigInteger, BigRational, ExactError, QPolynomial, QRationalFunction,
};
use crate::fqspace::{PrimeField, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QCombError {
    #[error("a composition needs at least one part")]
    EmptyComposition,
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("composition sums to {actual}, expected {expected}")]
    SumMismatch { expected: u32, actual: u32 },
    #[error("need 0 <= k <= m, got m = {m}, k = {k}")]
    BinomialRange { m: u32, k: u32 },
    #[error("need n >= 2 and 1 <= i <= n - 1, got n = {n}, i = {i}")]
    FlagRange { n: u32, i: u32 },
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("subspace enumeration of F_{p}^{n} exceeds the size guard")]
    TooLarge { n: u32, p: u32 },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An ordered partition of `n`: positive parts summing to `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, QCombError> {
        if parts.is_empty() {
            return Err(QCombError::EmptyComposition);
        }
        if parts.contains(&0) {
            return Err(QCombError::ZeroPart);
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `[m]_q = (q^m - 1)(q^{m-1} - 1)...(q - 1)`, with `[0]_q = 1`.
pub fn bracket(m: u32) -> QPolynomial {
    (1..=m as usize)
        .map(QPolynomial::q_power_minus_one)
        .product()
}

/// `[m]_{q^k}`: the bracket with `q` replaced by `q^k`.
pub fn bracket_at_power(m: u32, k: u32) -> QPolynomial {
    bracket(m).compose_power(k as usize)
}

/// All compositions of `n` in lexicographic order, optionally only those
/// with exactly `length` parts.
pub fn compositions(n: u32, length: Option<u32>) -> Vec<Composition> {
    assert!(n >= 1, "compositions of n need n >= 1");
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_compositions(n, length, &mut current, &mut out);
    out
}

fn extend_compositions(
    remaining: u32,
    length: Option<u32>,
    current: &mut Vec<u32>,
    out: &mut Vec<Composition>,
) {
    if remaining == 0 {
        if length.is_none_or(|h| current.len() as u32 == h) {
            out.push(Composition {
                parts: current.clone(),
            });
        }
        return;
    }
    if length.is_some_and(|h| current.len() as u32 >= h) {
        return;
    }
    for first in 1..=remaining {
        current.push(first);
        extend_compositions(remaining - first, length, current, out);
        current.pop();
    }
}

/// The Gaussian multinomial `[n]_q / prod [p_i]_q`, by exact division.
pub fn gauss_multinomial(n: u32, p: &Composition) -> Result<QPolynomial, QCombError> {
    if p.total() != n {
        return Err(QCombError::SumMismatch {
            expected: n,
            actual: p.total(),
        });
    }
    let den: QPolynomial = p.parts().iter().map(|&k| bracket(k)).product();
    Ok(poly_div_exact(&bracket(n), &den)?)
}

/// The Gaussian binomial `[m]_q / ([k]_q [m-k]_q)`.
pub fn gauss_binomial(m: u32, k: u32) -> Result<QPolynomial, QCombError> {
    if k > m {
        return Err(QCombError::BinomialRange { m, k });
    }
    Ok(poly_div_exact(&bracket(m), &(bracket(k) * bracket(m - k)))?)
}

/// Number of `i`-simplices at a vertex of the building of `PGL_n`: the sum of
/// Gaussian multinomials over compositions of `n` with `i + 1` parts.
pub fn vertex_degree(n: u32, i: u32) -> Result<QPolynomial, QCombError> {
    if n < 2 || i == 0 || i >= n {
        return Err(QCombError::FlagRange { n, i });
    }
    compositions(n, Some(i + 1))
        .iter()
        .map(|p| gauss_multinomial(n, p))
        .sum()
}

/// Largest `p^{floor(n^2/4)}` admitted by [`flag_count_oracle`]; this
/// bounds the number of subspaces of `F_p^n` the brute-force walk visits.
pub const FLAG_ORACLE_WORK_GUARD: u64 = 4096;
/// Largest `p^n` admitted by [`flag_count_oracle`].
pub const FLAG_ORACLE_SIZE_GUARD: u64 = 4096;

/// Whether [`flag_count_oracle`] accepts `(n, p)`.
pub fn flag_oracle_admits(n: u32, p: u32) -> bool {
    let pow = |e: u32| (p as u64).checked_pow(e);
    matches!(pow(n), Some(v) if v <= FLAG_ORACLE_SIZE_GUARD)
        && matches!(pow(n * n / 4), Some(v) if v <= FLAG_ORACLE_WORK_GUARD)
}

/// Counts chains `V != F_1 > F_2 > ... > F_i != 0` of subspaces of
/// `V = F_p^n` by walking every subspace explicitly.
pub fn flag_count_oracle(n: u32, i: u32, p: u32) -> Result<BigInteger, QCombError> {
    if n < 2 || i == 0 || i >= n {
        return Err(QCombError::FlagRange { n, i });
    }
    let field = PrimeField::new(p).map_err(|_| QCombError::NotPrime(p))?;
    if !flag_oracle_admits(n, p) {
        return Err(QCombError::TooLarge { n, p });
    }
    let mut memo = HashMap::new();
    Ok(chains_below(
        &field,
        &Subspace::whole(n as usize),
        i,
        &mut memo,
    ))
}

/// Number of chains `top > G_1 > ... > G_depth > 0` of proper subspaces.
fn chains_below(
    field: &PrimeField,
    top: &Subspace,
    depth: u32,
    memo: &mut HashMap<(Subspace, u32), BigInteger>,
) -> BigInteger {
    if depth == 0 {
        return BigInteger::one();
    }
    if let Some(v) = memo.get(&(top.clone(), depth)) {
        return v.clone();
    }
    let mut total = BigInteger::zero();
    for sub in top.proper_nonzero_subspaces(field) {
        total += chains_below(field, &sub, depth - 1, memo);
    }
    memo.insert((top.clone(), depth), total.clone());
    total
}

/// Counts the `k`-dimensional subspaces of `F_p^n` by enumeration.
pub fn subspace_count_oracle(n: u32, k: u32, p: u32) -> Result<BigInteger, QCombError> {
    if k > n {
        return Err(QCombError::BinomialRange { m: n, k });
    }
    let field = PrimeField::new(p).map_err(|_| QCombError::NotPrime(p))?;
    if !flag_oracle_admits(n, p) {
        return Err(QCombError::TooLarge { n, p });
    }
    Ok(Subspace::whole(n as usize)
        .subspaces_of_dim(&field, k as usize)
        .len()
        .into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AndrewsReport {
    pub n: u32,
    pub lhs: QRationalFunction,
    pub rhs: QRationalFunction,
    pub equal: bool,
}

/// Compares `sum over compositions p of n of (-1)^len(p) / len(p) * [n; p]_q`
/// with `(-1)^n / n * [n-1]_q`, both as exact rational functions of `q`.
pub fn andrews_check(n: u32) -> Result<AndrewsReport, QCombError> {
    assert!(n >= 1, "andrews_check needs n >= 1");
    let mut lhs = QRationalFunction::zero();
    for p in compositions(n, None) {
        let len = p.len() as i64;
        let sign = if len % 2 == 0 { 1 } else { -1 };
        let term = QRationalFunction::from_poly(gauss_multinomial(n, &p)?)
            .scale(&BigRational::new(sign.into(), len.into()));
        lhs = &lhs + &term;
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let rhs = QRationalFunction::from_poly(bracket(n - 1))
        .scale(&BigRational::new(sign.into(), (n as i64).into()));
    let equal = lhs == rhs;
    Ok(AndrewsReport { n, lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(0), QPolynomial::one());
        assert_eq!(bracket(1), p(&[-1, 1]));
        let expected = p(&[-1, 0, 0, 1]) * p(&[-1, 0, 1]) * p(&[-1, 1]);
        assert_eq!(bracket(3), expected);
        assert_eq!(bracket(4).degree(), Some(10));
    }

    #[test]
    fn composition_examples() {
        assert_eq!(compositions(1, None), vec![comp(&[1])]);
        assert_eq!(
            compositions(3, None),
            vec![comp(&[1, 1, 1]), comp(&[1, 2]), comp(&[2, 1]), comp(&[3])]
        );
        assert_eq!(compositions(3, Some(2)), vec![comp(&[1, 2]), comp(&[2, 1])]);
    }

    #[test]
    fn composition_counts() {
        for n in 1..=10u32 {
            assert_eq!(compositions(n, None).len(), 1 << (n - 1));
            let mut binom = 1usize; // C(n-1, h-1)
            for h in 1..=n {
                assert_eq!(compositions(n, Some(h)).len(), binom);
                binom = binom * (n - h) as usize / h as usize;
            }
        }
    }

    #[test]
    fn composition_validation() {
        assert_eq!(Composition::new(vec![]), Err(QCombError::EmptyComposition));
        assert_eq!(Composition::new(vec![1, 0]), Err(QCombError::ZeroPart));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(gauss_multinomial(3, &comp(&[1, 2])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(
            gauss_multinomial(5, &comp(&[5])).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(
            gauss_multinomial(3, &comp(&[1, 1, 1])).unwrap(),
            p(&[1, 1, 1]) * p(&[1, 1])
        );
        assert_eq!(
            gauss_multinomial(4, &comp(&[1, 2])),
            Err(QCombError::SumMismatch {
                expected: 4,
                actual: 3
            })
        );
    }

    #[test]
    fn multinomial_ignores_part_order() {
        let a = gauss_multinomial(6, &comp(&[1, 2, 3])).unwrap();
        for perm in [[1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]] {
            assert_eq!(gauss_multinomial(6, &comp(&perm)).unwrap(), a);
        }
    }

    #[test]
    fn binomial_examples() {
        for m in 0..6 {
            assert_eq!(gauss_binomial(m, 0).unwrap(), QPolynomial::one());
        }
        assert_eq!(gauss_binomial(2, 1).unwrap(), p(&[1, 1]));
        let g = gauss_binomial(4, 2).unwrap();
        assert_eq!(g.eval_int(&2.into()), 35.into());
        assert!(gauss_binomial(2, 3).is_err());
    }

    #[test]
    fn vertex_degree_examples() {
        assert_eq!(vertex_degree(3, 1).unwrap(), p(&[2, 2, 2]));
        assert_eq!(vertex_degree(3, 2).unwrap(), p(&[1, 1, 1]) * p(&[1, 1]));
        assert_eq!(vertex_degree(2, 1).unwrap(), p(&[1, 1]));
        assert!(vertex_degree(3, 3).is_err());
        assert!(vertex_degree(1, 1).is_err());
    }

    #[test]
    fn flag_oracle_examples() {
        assert_eq!(flag_count_oracle(2, 1, 2).unwrap(), 3.into());
        assert_eq!(flag_count_oracle(3, 1, 2).unwrap(), 14.into());
        assert_eq!(flag_count_oracle(3, 2, 3).unwrap(), 52.into());
        assert_eq!(
            flag_count_oracle(13, 1, 2),
            Err(QCombError::TooLarge { n: 13, p: 2 })
        );
        assert_eq!(flag_count_oracle(3, 1, 4), Err(QCombError::NotPrime(4)));
    }

    #[test]
    fn vertex_degree_matches_flag_oracle() {
        for p in [2u32, 3] {
            for n in 2..=5u32 {
                if !flag_oracle_admits(n, p) {
                    continue;
                }
                for i in 1..n {
                    let formula = vertex_degree(n, i).unwrap().eval_int(&p.into());
                    assert_eq!(
                        formula,
                        flag_count_oracle(n, i, p).unwrap(),
                        "n={n} i={i} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn binomial_matches_subspace_oracle() {
        for p in [2u32, 3, 5] {
            for m in 0..=5u32 {
                if !flag_oracle_admits(m.max(1), p) {
                    continue;
                }
                for k in 0..=m {
                    let g = gauss_binomial(m, k).unwrap();
                    assert_eq!(g, gauss_binomial(m, m - k).unwrap());
                    assert_eq!(
                        g.eval_int(&p.into()),
                        subspace_count_oracle(m, k, p).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn andrews_small_cases() {
        let r1 = andrews_check(1).unwrap();
        assert!(r1.equal);
        assert_eq!(r1.lhs, QRationalFunction::from_poly(p(&[-1])));

        let r2 = andrews_check(2).unwrap();
        assert!(r2.equal);
        let expected = QRationalFunction::new(p(&[-1, 1]), p(&[2])).unwrap();
        assert_eq!(r2.lhs, expected);
        assert_eq!(r2.rhs, expected);

        assert!(andrews_check(5).unwrap().equal);
    }
}

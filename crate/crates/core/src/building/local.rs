//! Truncated power series in the uniformizer `pi` over `F_p`: elements of the
//! chain ring `O / pi^N` with `O = F_p[[pi]]`.

use crate::fqspace::PrimeField;

/// Ascending coefficients in `pi`, each in `0..p`, no trailing zeros.
pub(crate) type Poly = Vec<u32>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn valuation(a: &[u32]) -> Option<usize> {
    a.iter().position(|&c| c != 0)
}

pub(crate) fn truncate(mut a: Poly, prec: usize) -> Poly {
    a.truncate(prec);
    trim(a)
}

pub(crate) fn monomial(k: usize) -> Poly {
    let mut a = vec![0; k + 1];
    a[k] = 1;
    a
}

pub(crate) fn add(f: &PrimeField, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect(),
    )
}

pub(crate) fn sub(f: &PrimeField, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect(),
    )
}

/// Product truncated below `pi^prec`; `prec = usize::MAX` keeps everything.
pub(crate) fn mul_trunc(f: &PrimeField, a: &[u32], b: &[u32], prec: usize) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = (a.len() + b.len() - 1).min(prec);
    let mut out = vec![0u32; len];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 || i >= len {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

pub(crate) fn scale(f: &PrimeField, a: &[u32], c: u32) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

/// Drops the `k` lowest coefficients (the quotient by `pi^k`, rounded
/// towards the high part).
pub(crate) fn shift_down(a: &[u32], k: usize) -> Poly {
    if k >= a.len() {
        Vec::new()
    } else {
        a[k..].to_vec()
    }
}

pub(crate) fn shift_up(a: &[u32], k: usize) -> Poly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; k];
    out.extend_from_slice(a);
    out
}

/// Inverse of a unit (nonzero constant term) modulo `pi^prec`.
pub(crate) fn unit_inverse(f: &PrimeField, u: &[u32], prec: usize) -> Poly {
    assert!(u.first().is_some_and(|&c| c != 0), "not a unit");
    let c0 = f.inv(u[0]);
    let mut inv = vec![0u32; prec];
    for k in 0..prec {
        // coefficient k of u * inv must be [k == 0]
        let mut acc = if k == 0 { 1 } else { 0 };
        for j in 1..=k.min(u.len().saturating_sub(1)) {
            acc = f.sub(acc, f.mul(u[j], inv[k - j]));
        }
        inv[k] = f.mul(acc, c0);
    }
    trim(inv)
}

/// An element of `O / pi^N`: a polynomial in `pi` over `F_p` of degree < N.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalScalar {
    pub(crate) coeffs: Poly,
}

impl LocalScalar {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `pi^k`.
    pub fn pi_power(k: usize) -> Self {
        Self {
            coeffs: monomial(k),
        }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Index of the lowest nonzero coefficient; `None` for zero.
    pub fn ord(&self) -> Option<usize> {
        valuation(&self.coeffs)
    }
}

/// `pi^shift * (c_0 + c_1 pi + ...)`, an element of `K = F_p((pi))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    pub shift: i64,
    pub coeffs: Vec<u32>,
}

impl LaurentScalar {
    pub fn new(shift: i64, coeffs: Vec<u32>) -> Self {
        Self { shift, coeffs }
    }

    pub fn constant(c: u32) -> Self {
        Self::new(0, vec![c])
    }

    pub fn zero() -> Self {
        Self::new(0, Vec::new())
    }

    /// `pi^k` for any integer `k`.
    pub fn pi_power(k: i64) -> Self {
        Self::new(k, vec![1])
    }
}

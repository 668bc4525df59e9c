use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BigInteger, BigRational, ExactError};

/// Polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial has an empty coefficient list and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInteger>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInteger::one())
    }

    pub fn constant(c: impl Into<BigInteger>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The polynomial `c * q^k`.
    pub fn monomial(c: impl Into<BigInteger>, k: usize) -> Self {
        let mut coeffs = vec![BigInteger::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `q^k - 1`.
    pub fn q_power_minus_one(k: usize) -> Self {
        Self::monomial(1, k) - Self::one()
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInteger>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInteger::from(c)).collect())
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInteger] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInteger {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&BigInteger> {
        self.coeffs.last()
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInteger {
        self.coeffs
            .iter()
            .fold(BigInteger::zero(), |acc, c| acc.gcd(c))
    }

    pub fn scale(&self, c: &BigInteger) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division of every coefficient by `c`; panics if `c` does not
    /// divide the content.
    pub(crate) fn div_scalar_exact(&self, c: &BigInteger) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| {
                    let (quot, rem) = a.div_rem(c);
                    assert!(rem.is_zero(), "scalar does not divide content");
                    quot
                })
                .collect(),
        )
    }

    /// Substitutes `q -> q^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut coeffs = vec![BigInteger::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, v: &BigInteger) -> BigInteger {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInteger::zero(), |acc, c| acc * v + c)
    }

    pub fn eval(&self, v: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * v + BigRational::from(c.clone())
            })
    }

    pub(crate) fn to_rational_coeffs(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect()
    }

    /// Clears denominators and content, leaving a primitive integer
    /// polynomial with positive leading coefficient.
    pub(crate) fn primitive_from_rational(coeffs: &[BigRational]) -> Self {
        let lcm = coeffs
            .iter()
            .fold(BigInteger::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInteger> = coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let p = Self::from_coeffs(ints);
        p.primitive_part()
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            content = -content;
        }
        self.div_scalar_exact(&content)
    }

    /// Greatest common divisor over the rationals, returned as a primitive
    /// integer polynomial with positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.to_rational_coeffs();
        let mut b = other.to_rational_coeffs();
        while !b.is_empty() {
            let r = rational_rem(&a, &b);
            a = b;
            b = r;
        }
        Self::primitive_from_rational(&a)
    }
}

fn trim_rational(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Remainder of `a` modulo nonzero `b` over the rationals.
fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim_rational(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &factor * c;
        }
        trim_rational(&mut r);
    }
    r
}

/// Divides `a` by `b`, requiring an exact quotient with integer coefficients.
pub fn poly_div_exact(a: &QPolynomial, b: &QPolynomial) -> Result<QPolynomial, ExactError> {
    let Some(db) = b.degree() else {
        return Err(ExactError::DivisionByZero);
    };
    let lead = &b.coeffs[db];
    let mut rem = a.coeffs.clone();
    let Some(da) = a.degree() else {
        return Ok(QPolynomial::zero());
    };
    if da < db {
        return Err(ExactError::NotDivisible);
    }
    let mut quot = vec![BigInteger::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return Err(ExactError::NotDivisible);
        }
        for (i, bc) in b.coeffs.iter().enumerate() {
            rem[k + i] -= &c * bc;
        }
        quot[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(ExactError::NotDivisible);
    }
    Ok(QPolynomial::from_coeffs(quot))
}

pub fn poly_eval(p: &QPolynomial, v: &BigRational) -> BigRational {
    p.eval(v)
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInteger::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QPolynomial> for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: &QPolynomial) -> QPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        -&self
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for QPolynomial {
    fn product<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::one(), |a, b| a * b)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

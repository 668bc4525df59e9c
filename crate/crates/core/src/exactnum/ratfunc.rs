use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{poly_div_exact, BigRational, ExactError, QPolynomial};

/// Quotient of two integer polynomials in `q`, kept in a canonical form:
///
/// - numerator and denominator are coprime over the rationals,
/// - the denominator has a positive leading coefficient,
/// - the contents of numerator and denominator are jointly coprime,
/// - zero is `0/1`.
///
/// Two values are equal exactly when their normalized pairs are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRationalFunction {
    num: QPolynomial,
    den: QPolynomial,
}

pub fn ratfunc_normalize(
    num: QPolynomial,
    den: QPolynomial,
) -> Result<QRationalFunction, ExactError> {
    QRationalFunction::new(num, den)
}

impl QRationalFunction {
    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        // g is primitive and divides both over Q, so by Gauss's lemma the
        // quotients stay integral.
        let mut num = poly_div_exact(&num, &g).expect("gcd divides numerator");
        let mut den = poly_div_exact(&den, &g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        Ok(Self { num, den })
    }

    pub fn zero() -> Self {
        Self {
            num: QPolynomial::zero(),
            den: QPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPolynomial::one())
    }

    pub fn from_poly(p: QPolynomial) -> Self {
        Self {
            num: p,
            den: QPolynomial::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(
            QPolynomial::constant(r.numer().clone()),
            QPolynomial::constant(r.denom().clone()),
        )
        .expect("rational has nonzero denominator")
    }

    pub fn numerator(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplies by a rational constant, folding it into the pair before
    /// normalizing.
    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(self.num.scale(r.numer()), self.den.scale(r.denom()))
            .expect("nonzero denominator")
    }

    /// `None` if the value is zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()).expect("nonzero numerator"))
        }
    }

    /// The polynomial this value equals, if the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&QPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    /// Evaluates at `v`; `None` if `v` is a pole.
    pub fn eval(&self, v: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(v);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(v) / d)
        }
    }
}

impl Add for &QRationalFunction {
    type Output = QRationalFunction;
    fn add(self, rhs: &QRationalFunction) -> QRationalFunction {
        QRationalFunction::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl Sub for &QRationalFunction {
    type Output = QRationalFunction;
    fn sub(self, rhs: &QRationalFunction) -> QRationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &QRationalFunction {
    type Output = QRationalFunction;
    fn mul(self, rhs: &QRationalFunction) -> QRationalFunction {
        QRationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Div for &QRationalFunction {
    type Output = QRationalFunction;
    /// Panics on division by zero.
    fn div(self, rhs: &QRationalFunction) -> QRationalFunction {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

impl Neg for &QRationalFunction {
    type Output = QRationalFunction;
    fn neg(self) -> QRationalFunction {
        QRationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for QRationalFunction {
    type Output = QRationalFunction;
    fn add(self, rhs: QRationalFunction) -> QRationalFunction {
        &self + &rhs
    }
}

impl Mul for QRationalFunction {
    type Output = QRationalFunction;
    fn mul(self, rhs: QRationalFunction) -> QRationalFunction {
        &self * &rhs
    }
}

impl std::iter::Sum for QRationalFunction {
    fn sum<I: Iterator<Item = QRationalFunction>>(iter: I) -> Self {
        iter.fold(QRationalFunction::zero(), |a, b| a + b)
    }
}

impl fmt::Display for QRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<QPolynomial> for QRationalFunction {
    fn from(p: QPolynomial) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn normalize_examples() {
        let r = ratfunc_normalize(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.denominator(), &p(&[1]));

        let r = ratfunc_normalize(p(&[-1, 1]), p(&[-1, 0, 1])).unwrap();
        assert_eq!(r.numerator(), &p(&[1]));
        assert_eq!(r.denominator(), &p(&[1, 1]));

        let r = ratfunc_normalize(QPolynomial::zero(), p(&[-1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(r, QRationalFunction::zero());

        assert_eq!(
            ratfunc_normalize(p(&[1]), QPolynomial::zero()),
            Err(ExactError::ZeroDenominator)
        );
    }

    #[test]
    fn sign_and_content_are_canonical() {
        let a = ratfunc_normalize(p(&[2, 2]), p(&[-4])).unwrap();
        let b = ratfunc_normalize(p(&[-1, -1]), p(&[2])).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.denominator(), &p(&[2]));
        assert_eq!(b.numerator(), &p(&[-1, -1]));
    }

    #[test]
    fn rational_scaling() {
        let half = BigRational::new(1.into(), 2.into());
        let r = QRationalFunction::from_poly(p(&[-1, 1])).scale(&half);
        assert_eq!(r.numerator(), &p(&[-1, 1]));
        assert_eq!(r.denominator(), &p(&[2]));
        let twice = r.scale(&BigRational::from_integer(2.into()));
        assert_eq!(twice.as_polynomial(), Some(&p(&[-1, 1])));
    }
}

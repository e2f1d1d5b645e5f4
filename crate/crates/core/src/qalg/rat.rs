use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::QPoly;
use crate::error::{Error, Result};

/// Reduced fraction of two polynomials in `q`.
///
/// Canonical form: numerator and denominator share no common factor in
/// `Z[q]` and the denominator has positive leading coefficient, so two equal
/// rational functions always have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        QRat::reduce(
            QPoly::constant(r.numer().clone()),
            QPoly::constant(r.denom().clone()),
        )
        .expect("rational has nonzero denominator")
    }

    /// `num / den` in canonical form.
    pub fn reduce(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_one() {
            return Ok(Self::from_poly(num));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Ok(QRat { num, den })
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn into_poly(self) -> Option<QPoly> {
        if self.is_polynomial() {
            Some(self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        QRat::reduce(self.den.clone(), self.num.clone())
    }

    pub fn eval_q1(&self) -> Result<BigRational> {
        let d = self.den.eval_q1();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(BigRational::new(self.num.eval_q1(), d))
    }

    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(q) / d)
    }

    /// Divide by a polynomial known to be nonzero.
    pub fn div_poly(&self, p: &QPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_polynomial() {
            if let Some(quo) = self.num.div_exact(p) {
                return Ok(Self::from_poly(quo));
            }
        }
        QRat::reduce(self.num.clone(), &self.den * p)
    }

    pub fn mul_poly(&self, p: &QPoly) -> Self {
        if self.is_polynomial() {
            return Self::from_poly(&self.num * p);
        }
        QRat::reduce(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({})", self)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return QRat::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return QRat::reduce(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QRat::reduce(num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<'a> Sub<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return QRat::from_poly(&self.num * &rhs.num);
        }
        QRat::reduce(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<'a> Div<&'a QRat> for &'a QRat {
    type Output = Result<QRat>;
    fn div(self, rhs: &QRat) -> Result<QRat> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        QRat::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl Add for QRat {
    type Output = QRat;
    fn add(self, rhs: QRat) -> QRat {
        &self + &rhs
    }
}

impl Sub for QRat {
    type Output = QRat;
    fn sub(self, rhs: QRat) -> QRat {
        &self - &rhs
    }
}

impl Mul for QRat {
    type Output = QRat;
    fn mul(self, rhs: QRat) -> QRat {
        &self * &rhs
    }
}

//! Reduced rational functions over Z[t].

use super::{poly_gcd, IntPolynomial, PolyError};
use num_bigint::Sign;
use num_integer::Integer;
use num_traits::One;
use std::fmt;

/// Quotient of integer polynomials in canonical form.
///
/// Canonical means: the polynomial gcd of numerator and denominator is
/// constant, the integer contents of the pair are coprime, and the
/// denominator's leading coefficient is positive. Two equal values therefore
/// have identical representations and `==` decides equality of functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    /// Builds and reduces. The denominator must be non-zero.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: IntPolynomial::zero(),
                den: IntPolynomial::one(),
            });
        }
        // Cancel the polynomial gcd, then the shared integer content, then
        // fix the denominator sign.
        let g = poly_gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = IntPolynomial::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPolynomial::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.leading().unwrap().sign() == Sign::Minus {
            num = num.neg_ref();
            den = den.neg_ref();
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(IntPolynomial::one())
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `true` when the value is a polynomial (denominator reduced to a constant).
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The polynomial value, if [`is_polynomial`](Self::is_polynomial) and the
    /// constant denominator divides the numerator exactly.
    pub fn as_polynomial(&self) -> Option<IntPolynomial> {
        if !self.is_polynomial() {
            return None;
        }
        self.num.exact_div(&self.den).ok()
    }

    pub fn reciprocal(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroReciprocal);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Substitutes `t -> 1/t` and renormalizes, staying in Z(t):
    /// `p(1/t)/q(1/t) = rev(p) t^(deg q) / (rev(q) t^(deg p))`.
    ///
    /// Applied twice this is the identity whenever neither numerator nor
    /// denominator vanishes at 0 (otherwise powers of t cancel first).
    pub fn reverse_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dp = self.num.degree().unwrap();
        let dq = self.den.degree().unwrap();
        let mut num = self.num.reverse();
        let mut den = self.den.reverse();
        if dq >= dp {
            num = num.mul_pow_t(dq - dp);
        } else {
            den = den.mul_pow_t(dp - dq);
        }
        Self::new(num, den).expect("denominator stays non-zero")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of non-zero denominators")
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of non-zero denominators")
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of non-zero denominators")
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }
}

impl From<IntPolynomial> for RationalFunction {
    fn from(p: IntPolynomial) -> Self {
        Self::from_polynomial(p)
    }
}

//! Exact Taylor coefficients of a rational function at the origin.

use super::{IntPolynomial, PolyError, RationalFunction};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// First `n + 1` Taylor coefficients of `f` at 0, computed exactly by the
/// linear recurrence read off the denominator.
///
/// With `f = p/q` and `q = q_0 + q_1 t + ...`, the coefficients satisfy
/// `q_0 a_k = p_k - sum_(i>=1) q_i a_(k-i)`. The denominator must not vanish
/// at 0, and every coefficient must come out an integer (growth series do;
/// a non-integer signals a caller error and is reported as such).
pub fn series_coefficients(f: &RationalFunction, n: usize) -> Result<Vec<BigInt>, PolyError> {
    let q = f.den();
    let q0 = q.constant_term();
    if q0.is_zero() {
        return Err(PolyError::DenominatorConstantTermZero);
    }
    let p = f.num();
    let q0 = BigRational::from(q0);
    let mut acc: Vec<BigRational> = Vec::with_capacity(n + 1);
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    let qd = q.degree().unwrap_or(0);
    for k in 0..=n {
        let mut v = BigRational::from(p.coeff(k));
        for i in 1..=qd.min(k) {
            v -= BigRational::from(q.coeff(i)) * &acc[k - i];
        }
        v /= &q0;
        if !v.is_integer() {
            return Err(PolyError::NonIntegerSeriesCoefficient { index: k });
        }
        out.push(v.to_integer());
        acc.push(v);
    }
    Ok(out)
}

/// Exact series check helper: the polynomial truncation of `f` to degree `n`.
#[allow(dead_code)]
pub fn series_polynomial(f: &RationalFunction, n: usize) -> Result<IntPolynomial, PolyError> {
    Ok(IntPolynomial::new(series_coefficients(f, n)?))
}

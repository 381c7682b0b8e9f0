//! Exact polynomial and rational-function arithmetic over the integers.
//!
//! Everything downstream (growth series, root certificates, identity checks)
//! reduces to arithmetic in Z[t] and its fraction field, so this module keeps
//! two invariants religiously:
//!
//! * [`IntPolynomial`] stores dense coefficients in ascending degree with no
//!   trailing zero, so equality is structural;
//! * [`RationalFunction`] is always fully reduced with a positive leading
//!   coefficient on the denominator, so equality of values is equality of
//!   representations.
//!
//! Root work comes in two flavours: exact isolation of the smallest positive
//! root via Sturm chains ([`sturm`]), and advisory floating-point roots of all
//! complex zeros ([`numeric`]). The exact side is the source of truth; the
//! numeric side only corroborates.

mod numeric;
mod ratfun;
mod series;
mod sturm;

pub use numeric::{all_roots_numeric, ComplexRoot, DEFAULT_ROOT_TOLERANCE};
pub use ratfun::RationalFunction;
pub use series::series_coefficients;
pub use sturm::{
    certify_shared_smallest_root, default_width, isolate_smallest_positive_root,
    refine_root_interval, SturmChain,
};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Errors out of polynomial and rational-function arithmetic.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// Division left a non-zero remainder (reported up to a positive scale).
    #[error("non-exact division, remainder {remainder}")]
    InexactDivision { remainder: IntPolynomial },
    /// Division was exact over the rationals but the quotient is not integral.
    #[error("quotient is not an integer polynomial")]
    NonIntegralQuotient,
    #[error("bracket index must be at least 1, got {0}")]
    BracketIndex(u32),
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("no root in (0, +inf)")]
    NoPositiveRoot,
    #[error("root iteration did not reach tolerance {tolerance:e} (worst radius {worst_radius:e})")]
    NonConvergence { worst_radius: f64, tolerance: f64 },
    #[error("the two polynomials do not share their smallest positive root")]
    DistinctSmallestRoots,
    #[error("reciprocal of the zero function")]
    ZeroReciprocal,
    #[error("denominator has constant term zero")]
    DenominatorConstantTermZero,
    #[error("series coefficient {index} is not an integer")]
    NonIntegerSeriesCoefficient { index: usize },
}

/// Dense polynomial over Z, coefficients ascending by degree.
///
/// The zero polynomial is the empty coefficient vector; any other value has a
/// non-zero last coefficient. All constructors trim, so `==` compares values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Convenience constructor from machine integers, ascending by degree.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point, without building the value:
    /// for x = a/b with b > 0, sign(p(a/b)) = sign(sum_i c_i a^i b^(n-i)).
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let (a, b) = (x.numer(), x.denom());
        debug_assert!(b.sign() == Sign::Plus);
        let n = self.coeffs.len() - 1;
        let mut b_pow = BigInt::one();
        // terms[j] = c_(n-j) * b^j, consumed by a Horner pass in a.
        let mut terms: Vec<BigInt> = Vec::with_capacity(n + 1);
        for i in (0..=n).rev() {
            terms.push(&self.coeffs[i] * &b_pow);
            b_pow *= b;
        }
        let mut acc = BigInt::zero();
        for term in terms {
            acc = acc * a + term;
        }
        match acc.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients, non-negative; zero only for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive. Zero stays zero.
    pub fn primitive_normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().sign() == Sign::Minus {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn neg_ref(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul_scalar(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `t^k`.
    pub fn mul_pow_t(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficient reversal `t^deg * p(1/t)`. Zero maps to zero.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Number of strictly positive real roots is bounded by (and has the same
    /// parity as) the sign changes in the coefficient sequence.
    pub fn descartes_sign_changes(&self) -> usize {
        let mut changes = 0;
        let mut last = Sign::NoSign;
        for c in &self.coeffs {
            let s = c.sign();
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Largest `k` with `t^k` dividing the polynomial (0 for non-zero constant
    /// term, 0 for the zero polynomial by convention).
    pub fn trailing_zero_degree(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Quotient under exact division. Fails with the remainder if `d` does not
    /// divide `self` over the rationals, and with [`PolyError::NonIntegralQuotient`]
    /// if it divides but the quotient leaves Z[t].
    pub fn exact_div(&self, d: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
        let (q, r) = rational_div_rem(self, d)?;
        if !r.iter().all(Zero::is_zero) {
            return Err(PolyError::InexactDivision {
                remainder: clear_denominators(&r),
            });
        }
        let mut out = Vec::with_capacity(q.len());
        for c in q {
            if !c.is_integer() {
                return Err(PolyError::NonIntegralQuotient);
            }
            out.push(c.to_integer());
        }
        Ok(IntPolynomial::new(out))
    }

    /// `true` when `d` divides `self` exactly in Z[t].
    pub fn divisible_by(&self, d: &IntPolynomial) -> bool {
        self.exact_div(d).is_ok()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.sign() == Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = BigInt::zero();
            if let Some(a) = self.coeffs.get(i) {
                c += a;
            }
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            out.push(c);
        }
        IntPolynomial::new(out)
    }
}

impl std::ops::Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &rhs.neg_ref()
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl std::ops::Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.neg_ref()
    }
}

/// Division with remainder over Q[t]; returns ascending coefficient vectors.
fn rational_div_rem(
    a: &IntPolynomial,
    d: &IntPolynomial,
) -> Result<(Vec<BigRational>, Vec<BigRational>), PolyError> {
    if d.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let mut rem: Vec<BigRational> = a
        .coeffs
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    let dn = d.coeffs.len();
    let lead = BigRational::from(d.leading().unwrap().clone());
    if rem.len() < dn {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dn + 1];
    for qi in (0..quot.len()).rev() {
        let c = &rem[qi + dn - 1] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, dc) in d.coeffs.iter().enumerate() {
            let sub = BigRational::from(dc.clone()) * &c;
            rem[qi + j] -= sub;
        }
        quot[qi] = c;
    }
    rem.truncate(dn - 1);
    Ok((quot, rem))
}

/// Scales a rational-coefficient polynomial by the positive lcm of its
/// denominators and returns the integer result (used for error payloads).
fn clear_denominators(coeffs: &[BigRational]) -> IntPolynomial {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    IntPolynomial::new(
        coeffs
            .iter()
            .map(|c| (c * BigRational::from(lcm.clone())).to_integer())
            .collect(),
    )
}

/// Primitive gcd in Z[t], positive leading coefficient; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut f = a.primitive_normalized();
    let mut g = b.primitive_normalized();
    if f.is_zero() {
        return g.mul_scalar(&b.content());
    }
    if g.is_zero() {
        return f.mul_scalar(&a.content());
    }
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    // Primitive pseudo-remainder sequence; sizes here are small enough that
    // re-normalizing every step is cheaper than coefficient blow-up.
    while !g.is_zero() {
        let r = positive_pseudo_rem(&f, &g).primitive_normalized();
        f = g;
        g = r;
    }
    let content_gcd = a.content().gcd(&b.content());
    f.primitive_normalized().mul_scalar(&content_gcd)
}

/// Remainder of a positive constant multiple of `a` by `b`.
///
/// Returns `r` with `r = c * a - q * b` for some rational `c > 0` and
/// polynomial `q`, hence `sign(r(x)) = sign((a mod b)(x))` everywhere. The
/// positivity of the scale is what Sturm chains need.
pub(crate) fn positive_pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("non-zero divisor");
    let lead = b.leading().unwrap();
    let lead_abs = lead.abs();
    let lead_sign = if lead.sign() == Sign::Minus {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        // r := |lc(b)| r - sign(lc(b)) lc(r) t^(dr-db) b, killing degree dr.
        let lc_r = r.leading().unwrap().clone();
        let scaled = r.mul_scalar(&lead_abs);
        let shift = b.mul_scalar(&(&lc_r * &lead_sign)).mul_pow_t(dr - db);
        r = &scaled - &shift;
        debug_assert!(r.degree().map_or(true, |d| d < dr));
    }
    r
}

/// `[n] = 1 + t + ... + t^(n-1)`, the t-analogue of the integer `n`.
pub fn bracket(n: u32) -> Result<IntPolynomial, PolyError> {
    if n < 1 {
        return Err(PolyError::BracketIndex(n));
    }
    Ok(IntPolynomial::new(vec![BigInt::one(); n as usize]))
}

/// `[n_1, n_2, ...] = [n_1][n_2]...`; the empty product is 1.
pub fn bracket_product(ns: &[u32]) -> Result<IntPolynomial, PolyError> {
    let mut acc = IntPolynomial::one();
    for &n in ns {
        acc = &acc * &bracket(n)?;
    }
    Ok(acc)
}

/// Interval certified to contain exactly one real root.
///
/// Produced by [`isolate_smallest_positive_root`]: the polynomial has exactly
/// one root in the open interval `(lo, hi)`, no root in `(0, lo]`, and does
/// not vanish at either endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    /// Multiplicity of the isolated root (1 unless the gcd chain says more).
    pub multiplicity_hint: u32,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.hi + &self.lo) / BigRational::from(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        *x > self.lo && *x < self.hi
    }

    /// Interval of reciprocals (both endpoints must be positive).
    pub fn reciprocal(&self) -> RootInterval {
        assert!(self.lo.is_positive(), "reciprocal needs a positive interval");
        RootInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
            multiplicity_hint: self.multiplicity_hint,
        }
    }
}

#[cfg(test)]
mod tests;

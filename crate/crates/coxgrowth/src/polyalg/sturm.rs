//! Sturm-chain root counting and certified isolation of the smallest
//! positive real root.
//!
//! All arithmetic is exact. A returned [`RootInterval`] is a proof object:
//! the chain certifies exactly one distinct root inside the interval and none
//! between 0 and its left endpoint, so the reciprocal of the interval brackets
//! the growth rate with no numeric leap of faith.

use super::{poly_gcd, positive_pseudo_rem, IntPolynomial, PolyError, RootInterval};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Default isolation width, 2^-40.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2).pow(40))
}

/// Sturm chain of a non-zero polynomial.
///
/// The chain is the Euclidean remainder sequence of (p, p') with flipped
/// signs, each member replaced by a positive-scale integer multiple, which
/// leaves all sign variations intact. Works for non-squarefree inputs too;
/// counts are of distinct roots.
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut chain = vec![p.primitive_normalized()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_normalized());
            loop {
                let (a, b) = (&chain[chain.len() - 2], &chain[chain.len() - 1]);
                let r = positive_pseudo_rem(a, b);
                if r.is_zero() {
                    break;
                }
                // Negate, then shrink coefficients; the scale must stay positive.
                let next = r.neg_ref();
                let content = next.content();
                let next = IntPolynomial::new(
                    next.coeffs().iter().map(|c| c / &content).collect(),
                );
                chain.push(next);
            }
        }
        Ok(SturmChain { chain })
    }

    /// Number of sign variations of the chain at `x`.
    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the open interval `(a, b)`.
    ///
    /// Requires non-root endpoints; that is the caller's invariant throughout
    /// the bisection below.
    pub fn count_roots_open(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a < b);
        debug_assert!(self.chain[0].sign_at(a) != Ordering::Equal);
        debug_assert!(self.chain[0].sign_at(b) != Ordering::Equal);
        self.variations(a) - self.variations(b)
    }
}

/// Strict upper bound for the absolute value of every root.
fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().expect("non-zero").abs();
    let mut max = BigRational::zero();
    let n = p.degree().unwrap();
    for c in &p.coeffs()[..n] {
        let r = BigRational::new(c.abs(), lead.clone());
        if r > max {
            max = r;
        }
    }
    max + BigRational::one()
}

/// Finds a point in `(lo, hi)` where `p` does not vanish, preferring the
/// midpoint. Deterministic; tries successive dyadic offsets.
fn non_root_point(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> BigRational {
    let width = hi - lo;
    let mut denom = BigInt::from(2);
    loop {
        let step = &width / BigRational::from(denom.clone());
        let mut x = lo + &step;
        while &x < hi {
            if p.sign_at(&x) != Ordering::Equal {
                return x;
            }
            x += &step;
        }
        denom *= BigInt::from(2);
        // A polynomial has finitely many roots, so this terminates fast.
    }
}

/// Isolates the smallest strictly positive real root of `p`.
///
/// On success the returned interval `(lo, hi)` satisfies, with Sturm-chain
/// certificates: exactly one distinct root of `p` lies in `(lo, hi)`, no root
/// lies in `(0, lo]`, both endpoints are non-roots, and `hi - lo <= width`.
/// The multiplicity hint is derived from the derivative-gcd chain.
///
/// A Descartes sign check runs first as a cheap exact "no positive root"
/// filter.
pub fn isolate_smallest_positive_root(
    p: &IntPolynomial,
    width: &BigRational,
) -> Result<RootInterval, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    assert!(width.is_positive(), "isolation width must be positive");
    // Roots at t = 0 are not positive; strip them so 0 is a non-root point.
    let shift = p.trailing_zero_degree();
    let q = if shift > 0 {
        IntPolynomial::new(p.coeffs()[shift..].to_vec())
    } else {
        p.clone()
    };
    if q.degree() == Some(0) || q.descartes_sign_changes() == 0 {
        return Err(PolyError::NoPositiveRoot);
    }

    let chain = SturmChain::new(&q)?;
    let zero = BigRational::zero();
    let bound = cauchy_bound(&q);
    let total = chain.count_roots_open(&zero, &bound);
    if total == 0 {
        return Err(PolyError::NoPositiveRoot);
    }

    // Invariants: q(lo) != 0, q(hi) != 0, no root in (0, lo], >= 1 root in (lo, hi).
    let mut lo = zero.clone();
    let mut hi = bound;
    loop {
        let narrow = &hi - &lo <= *width;
        let isolated = chain.count_roots_open(&lo, &hi) == 1;
        if narrow && isolated {
            break;
        }
        let mid = non_root_point(&q, &lo, &hi);
        if chain.count_roots_open(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let multiplicity_hint = multiplicity_in(&q, &lo, &hi);
    Ok(RootInterval {
        lo,
        hi,
        multiplicity_hint,
    })
}

/// Multiplicity of the single root of `q` inside `(lo, hi)`: counts how many
/// levels of the repeated derivative-gcd still contain it.
fn multiplicity_in(q: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> u32 {
    let mut mult = 1u32;
    let mut g = poly_gcd(q, &q.derivative());
    while g.degree().map_or(false, |d| d >= 1) {
        let chain = SturmChain::new(&g).expect("non-zero gcd");
        // lo/hi are non-roots of q, hence of g (g divides q).
        if chain.count_roots_open(lo, hi) == 1 {
            mult += 1;
            g = poly_gcd(&g, &g.derivative());
        } else {
            break;
        }
    }
    mult
}

/// Shrinks a certified interval for `p` below `target_width`, keeping all
/// isolation invariants. The interval must have come from
/// [`isolate_smallest_positive_root`] for the same polynomial.
pub fn refine_root_interval(
    p: &IntPolynomial,
    interval: &RootInterval,
    target_width: &BigRational,
) -> Result<RootInterval, PolyError> {
    let shift = p.trailing_zero_degree();
    let q = if shift > 0 {
        IntPolynomial::new(p.coeffs()[shift..].to_vec())
    } else {
        p.clone()
    };
    let chain = SturmChain::new(&q)?;
    let mut lo = interval.lo.clone();
    let mut hi = interval.hi.clone();
    debug_assert_eq!(chain.count_roots_open(&lo, &hi), 1);
    while &hi - &lo > *target_width {
        let mid = non_root_point(&q, &lo, &hi);
        if chain.count_roots_open(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(RootInterval {
        lo,
        hi,
        multiplicity_hint: interval.multiplicity_hint,
    })
}

/// Certifies that `a` and `b` have the same smallest positive root.
///
/// Both roots are isolated, the intervals are intersected, and the gcd of the
/// two polynomials is shown (by its own Sturm count) to have exactly one root
/// in the intersection. Since each polynomial has exactly one root in its own
/// interval and the gcd root is common, the shared root is the smallest
/// positive root of both. Returns the intersection interval.
pub fn certify_shared_smallest_root(
    a: &IntPolynomial,
    b: &IntPolynomial,
    width: &BigRational,
) -> Result<RootInterval, PolyError> {
    let ia = isolate_smallest_positive_root(a, width)?;
    let ib = isolate_smallest_positive_root(b, width)?;
    let lo = if ia.lo >= ib.lo { ia.lo.clone() } else { ib.lo.clone() };
    let hi = if ia.hi <= ib.hi { ia.hi.clone() } else { ib.hi.clone() };
    if lo >= hi {
        return Err(PolyError::DistinctSmallestRoots);
    }
    let g = poly_gcd(a, b);
    if g.degree().map_or(true, |d| d == 0) {
        return Err(PolyError::DistinctSmallestRoots);
    }
    let chain = SturmChain::new(&g)?;
    if chain.count_roots_open(&lo, &hi) != 1 {
        return Err(PolyError::DistinctSmallestRoots);
    }
    Ok(RootInterval {
        lo,
        hi,
        multiplicity_hint: ia.multiplicity_hint,
    })
}

//! Growth-rate analysis: growth functions of labeled polyhedra, the
//! nonnegative-coefficient root criterion on a normalized denominator, exact
//! isolation of the growth rate, and numeric corroboration.
//!
//! The certification chain is fully exact: the denominator is brought into
//! the shape g(t) = a_1 t + ... + a_n t^n - 1 by stripping (t - 1) and
//! bracket factors (whose roots lie on the unit circle and therefore never
//! hide the radius of convergence), the criterion guarantees g has a unique
//! smallest-modulus zero r_0 in (0, 1), and a shared-root certificate ties
//! that zero back to the actual denominator. The growth rate tau = 1/r_0 is
//! then a zero of the monic integer polynomial -reverse(g), so it is an
//! algebraic integer whose conjugates are reciprocals of other zeros of g,
//! all of strictly larger modulus: a Perron number. Floating-point root
//! finding only corroborates and never certifies.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coxeter::{CoxeterOrder, CoxeterSystem};
use crate::polyalg::{
    all_roots_numeric, bracket, certify_shared_smallest_root, isolate_smallest_positive_root,
    refine_root_interval, series_coefficients, IntPolynomial, PolyError, RationalFunction,
    RootInterval, DEFAULT_ROOT_TOLERANCE,
};
use crate::polyhedron::{CombinatorialPolyhedron, VertexKind};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GrowthError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("series coefficient {index} is negative")]
    NegativeSeriesCoefficient { index: usize },
    #[error("series terminated before index {index} (finite group)")]
    SeriesTerminated { index: usize },
}

/// Solomon polynomial of the rank-3 Coxeter system with pairwise orders
/// (a, b, c), or `None` when that system is infinite.
pub fn triangle_group_series(a: u32, b: u32, c: u32) -> Option<IntPolynomial> {
    let mut sys = CoxeterSystem::all_commuting(3);
    sys.set_order(0, 1, CoxeterOrder::Finite(c));
    sys.set_order(0, 2, CoxeterOrder::Finite(b));
    sys.set_order(1, 2, CoxeterOrder::Finite(a));
    sys.solomon_series(sys.full_mask())
}

/// Growth function of a labeled polyhedron assembled from its face, edge and
/// vertex census alone.
///
/// The census sum runs over faces, labeled edges, and the spherical 3-valent
/// vertices; euclidean and hyperbolic vertices (and the 4-valent cusps)
/// correspond to infinite subgroups and contribute nothing. For polyhedra
/// whose only finite generator subsets are the face/edge/vertex ones, this
/// equals the Steinberg growth of the associated Coxeter system; the
/// pipeline-agreement tests pin that down for the whole catalog.
pub fn pseudo_growth(p: &CombinatorialPolyhedron) -> RationalFunction {
    let census = p.classify_vertices();
    let term = |count: u64, den: IntPolynomial| {
        RationalFunction::new(IntPolynomial::constant(BigInt::from(count)), den)
            .expect("growth polynomials are non-zero")
    };

    let mut w = RationalFunction::one();
    w = &w - &term(census.face_count as u64, bracket(2).unwrap());
    for (&m, &count) in &census.edge_label_counts {
        let den = &bracket(2).unwrap() * &bracket(m).unwrap();
        w = &w + &term(count, den);
    }
    for (sig, &count) in &census.signature_counts {
        if sig.len() != 3 {
            continue;
        }
        let kind = crate::polyhedron::VertexType::from_signature(sig.clone()).kind;
        if kind != VertexKind::Spherical {
            continue;
        }
        let f = triangle_group_series(sig[0], sig[1], sig[2])
            .expect("spherical triples generate finite groups");
        w = &w - &term(count, f);
    }
    w.reverse_variable()
        .reciprocal()
        .expect("the census sum of a growth series is non-zero")
}

/// Outcome of the nonnegative-coefficient criterion on
/// g(t) = a_1 t + ... + a_n t^n - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KuVerdict {
    /// g has a unique smallest-modulus zero, real and in (0, 1).
    Applies,
    /// Shape requirements failed: degree, constant term, or a negative a_k.
    FailsNonneg { reason: String },
    /// All a_k nonnegative but the support indices share a common divisor,
    /// so smallest-modulus zeros come in rotated families.
    FailsGcd { support_gcd: u64 },
}

impl KuVerdict {
    pub fn applies(&self) -> bool {
        matches!(self, KuVerdict::Applies)
    }
}

/// Nonnegative-coefficient criterion: if g(t) = sum a_k t^k - 1 with every
/// a_k >= 0, deg g >= 2, and gcd{k : a_k != 0} = 1, then g has exactly one
/// zero of smallest modulus, and it lies in (0, 1).
pub fn ku_criterion(g: &IntPolynomial) -> KuVerdict {
    let fail = |reason: String| KuVerdict::FailsNonneg { reason };
    let Some(degree) = g.degree() else {
        return fail("zero polynomial".into());
    };
    if degree < 2 {
        return fail(format!("degree {degree} is below 2"));
    }
    if g.constant_term() != BigInt::from(-1) {
        return fail(format!("constant term {} is not -1", g.constant_term()));
    }
    let mut support_gcd: u64 = 0;
    for (k, a) in g.coeffs().iter().enumerate().skip(1) {
        if a.is_negative() {
            return fail(format!("coefficient of t^{k} is {a}"));
        }
        if !a.is_zero() {
            support_gcd = num_integer::gcd(support_gcd, k as u64);
        }
    }
    if support_gcd != 1 {
        return KuVerdict::FailsGcd { support_gcd };
    }
    KuVerdict::Applies
}

/// Denominator after peeling unit-circle factors, aiming at the
/// "sum of nonnegative terms minus 1" shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    /// Residual polynomial with constant term -1.
    pub polynomial: IntPolynomial,
    /// Multiplicity of the removed factor (t - 1).
    pub removed_t_minus_one: u32,
    /// Bracket factors [n] removed, in removal order.
    pub removed_brackets: Vec<u32>,
}

fn t_minus_one() -> IntPolynomial {
    IntPolynomial::from_coeffs(&[-1, 1])
}

/// Sign-normalizes `p` to constant term -1 if its constant term is a unit.
fn to_minus_one_shape(p: &IntPolynomial) -> Option<IntPolynomial> {
    let c = p.constant_term();
    if c == BigInt::from(-1) {
        Some(p.clone())
    } else if c == BigInt::from(1) {
        Some(p.neg_ref())
    } else {
        None
    }
}

/// Peels (t - 1) powers and then bracket factors [n] (n ascending, smallest
/// first) off `q` until the criterion accepts the residual or nothing
/// divides any more. Bracket zeros are roots of unity distinct from 1, and
/// t = 1 is never the radius of convergence of an exponentially growing
/// series, so peeling preserves the smallest positive root of interest.
///
/// Returns the last residual reachable in the minus-one shape (if any) and
/// the criterion verdict on it.
pub fn denominator_normal_form(q: &IntPolynomial) -> (Option<NormalForm>, KuVerdict) {
    let mut residual = q.primitive_normalized();
    let mut removed_t_minus_one = 0u32;
    while let Ok(next) = residual.exact_div(&t_minus_one()) {
        residual = next;
        removed_t_minus_one += 1;
    }

    let mut removed_brackets = Vec::new();
    let mut best: Option<(NormalForm, KuVerdict)> = None;
    loop {
        if let Some(shaped) = to_minus_one_shape(&residual) {
            let verdict = ku_criterion(&shaped);
            let applies = verdict.applies();
            if best.is_none() || applies {
                best = Some((
                    NormalForm {
                        polynomial: shaped,
                        removed_t_minus_one,
                        removed_brackets: removed_brackets.clone(),
                    },
                    verdict,
                ));
            }
            if applies {
                break;
            }
        }
        let degree = residual.degree().unwrap_or(0);
        if degree < 1 {
            break;
        }
        let next = (2..=(degree as u32 + 1)).find_map(|n| {
            residual
                .exact_div(&bracket(n).unwrap())
                .ok()
                .map(|quotient| (n, quotient))
        });
        match next {
            Some((n, quotient)) => {
                removed_brackets.push(n);
                residual = quotient;
            }
            None => break,
        }
    }

    match best {
        Some((form, verdict)) => (Some(form), verdict),
        None => (
            None,
            KuVerdict::FailsNonneg {
                reason: "no residual with unit constant term".into(),
            },
        ),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PerronVerdict {
    /// Exact: criterion + shared-root certificate + rate above 1.
    CertifiedPerron,
    /// Floating-point only: unique smallest-modulus denominator zero with
    /// the reported modulus gap to the next one.
    NumericOnly { modulus_gap: f64 },
    Inconclusive { reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PisotAdvisory {
    /// Every candidate conjugate of the rate lies strictly inside the unit
    /// disk (numerically). Candidates form a superset of the true
    /// conjugates, so this direction is reliable up to float error.
    PisotNumeric,
    /// Some candidate lies strictly outside; if the residual polynomial is
    /// not the rate's minimal polynomial this may be a false alarm.
    NotPisotNumeric,
    /// Degenerate input or candidates hugging the unit circle.
    Skipped,
}

/// Everything the analysis certifies or estimates about one growth function.
#[derive(Debug, Clone)]
pub struct GrowthReport {
    pub growth_function: RationalFunction,
    /// Residual denominator in the minus-one shape, when reachable.
    pub denominator_normal_form: Option<IntPolynomial>,
    pub removed_t_minus_one: u32,
    pub removed_brackets: Vec<u32>,
    /// Radius of convergence R, isolated exactly. `None` for polynomial
    /// growth functions (finite groups) and denominators without positive
    /// roots.
    pub radius_interval: Option<RootInterval>,
    /// Exact reciprocal bounds: tau lies in [lo, hi].
    pub rate_interval: Option<(BigRational, BigRational)>,
    pub ku_verdict: KuVerdict,
    pub perron_verdict: PerronVerdict,
    pub pisot_advisory: PisotAdvisory,
}

impl GrowthReport {
    /// Polynomial growth series: a finite group, no rate to extract.
    pub fn is_degenerate(&self) -> bool {
        self.radius_interval.is_none()
    }
}

/// Analyzes a growth function end to end with the default normalization.
pub fn analyze_growth(f: &RationalFunction, rate_width: &BigRational) -> GrowthReport {
    analyze_growth_against(f, None, rate_width)
}

/// Like [`analyze_growth`], but certifies against a caller-supplied
/// denominator form (a displayed numerator polynomial sharing the radius
/// root) instead of the generic peeling.
pub fn analyze_growth_against(
    f: &RationalFunction,
    display_form: Option<&IntPolynomial>,
    rate_width: &BigRational,
) -> GrowthReport {
    let q = f.den().clone();

    if q.degree().map_or(true, |d| d == 0) {
        return GrowthReport {
            growth_function: f.clone(),
            denominator_normal_form: None,
            removed_t_minus_one: 0,
            removed_brackets: Vec::new(),
            radius_interval: None,
            rate_interval: None,
            ku_verdict: KuVerdict::FailsNonneg {
                reason: "polynomial growth series (finite group)".into(),
            },
            perron_verdict: PerronVerdict::Inconclusive {
                reason: "polynomial growth series (finite group)".into(),
            },
            pisot_advisory: PisotAdvisory::Skipped,
        };
    }

    let (normal_form, ku_verdict) = match display_form {
        Some(g) => (
            Some(NormalForm {
                polynomial: g.clone(),
                removed_t_minus_one: 0,
                removed_brackets: Vec::new(),
            }),
            ku_criterion(g),
        ),
        None => denominator_normal_form(&q),
    };

    let mut report = GrowthReport {
        growth_function: f.clone(),
        denominator_normal_form: normal_form.as_ref().map(|n| n.polynomial.clone()),
        removed_t_minus_one: normal_form.as_ref().map_or(0, |n| n.removed_t_minus_one),
        removed_brackets: normal_form
            .as_ref()
            .map_or_else(Vec::new, |n| n.removed_brackets.clone()),
        radius_interval: None,
        rate_interval: None,
        ku_verdict,
        perron_verdict: PerronVerdict::Inconclusive {
            reason: "not analyzed".into(),
        },
        pisot_advisory: PisotAdvisory::Skipped,
    };

    let radius = match isolate_smallest_positive_root(&q, rate_width) {
        Ok(interval) => interval,
        Err(PolyError::NoPositiveRoot) => {
            report.perron_verdict = PerronVerdict::Inconclusive {
                reason: "denominator has no positive root".into(),
            };
            return report;
        }
        Err(e) => {
            report.perron_verdict = PerronVerdict::Inconclusive {
                reason: format!("root isolation failed: {e}"),
            };
            return report;
        }
    };
    let radius = narrow_for_rate(&q, radius, rate_width);
    let rate = radius.reciprocal();
    report.radius_interval = Some(radius.clone());
    report.rate_interval = Some((rate.lo.clone(), rate.hi.clone()));

    report.perron_verdict = perron_verdict(&q, &report.ku_verdict, &normal_form, &radius, rate_width);
    report.pisot_advisory = pisot_advisory(normal_form.as_ref().map(|n| &n.polynomial), &radius);
    report
}

/// Shrinks the radius interval until its reciprocal is narrower than
/// `rate_width` (and its lower endpoint is positive, so the reciprocal is
/// well-defined).
fn narrow_for_rate(q: &IntPolynomial, mut radius: RootInterval, rate_width: &BigRational) -> RootInterval {
    loop {
        if radius.lo.is_positive() {
            let rate_span = radius.reciprocal().width();
            if rate_span <= *rate_width {
                return radius;
            }
        }
        let target = radius.width() / BigRational::from(BigInt::from(16));
        radius = refine_root_interval(q, &radius, &target).expect("interval stays certified");
    }
}

fn perron_verdict(
    q: &IntPolynomial,
    ku: &KuVerdict,
    normal_form: &Option<NormalForm>,
    radius: &RootInterval,
    rate_width: &BigRational,
) -> PerronVerdict {
    if ku.applies() {
        let g = &normal_form.as_ref().expect("verdict implies a form").polynomial;
        match certify_shared_smallest_root(q, g, rate_width) {
            Ok(shared) => {
                // The criterion puts the shared root in (0, 1): g(0) < 0 and
                // g(1) >= 1, so refinement below 1 terminates.
                let mut shared = shared;
                while shared.hi >= BigRational::one() {
                    let target = shared.width() / BigRational::from(BigInt::from(16));
                    shared = refine_root_interval(q, &shared, &target).expect("interval stays certified");
                }
                return PerronVerdict::CertifiedPerron;
            }
            Err(e) => {
                return PerronVerdict::Inconclusive {
                    reason: format!("criterion root does not match the denominator: {e}"),
                }
            }
        }
    }

    // Advisory fallback: look for a strictly smallest-modulus zero.
    let mut roots = match all_roots_numeric(q, DEFAULT_ROOT_TOLERANCE) {
        Ok(roots) => roots,
        Err(e) => {
            return PerronVerdict::Inconclusive {
                reason: format!("numeric root finding failed: {e}"),
            }
        }
    };
    roots.sort_by(|a, b| a.value.norm().total_cmp(&b.value.norm()));
    let smallest = roots.first().expect("denominator is non-constant");
    let tolerance = 8.0 * (smallest.radius + DEFAULT_ROOT_TOLERANCE);
    let mid = radius.midpoint().to_f64().unwrap_or(f64::NAN);
    let gap = match roots.get(1) {
        Some(second) => {
            let gap = second.value.norm() - smallest.value.norm();
            if gap <= 10.0 * (smallest.radius + second.radius + DEFAULT_ROOT_TOLERANCE) {
                return PerronVerdict::Inconclusive {
                    reason: format!("modulus tie within tolerance (gap {gap:.3e})"),
                };
            }
            gap
        }
        // A single zero (of any multiplicity) is trivially the unique
        // smallest one.
        None => f64::INFINITY,
    };
    if (smallest.value.re - mid).abs() > tolerance || smallest.value.im.abs() > tolerance {
        return PerronVerdict::Inconclusive {
            reason: "smallest-modulus zero is not the isolated positive root".into(),
        };
    }
    if radius.hi >= BigRational::one() {
        return PerronVerdict::Inconclusive {
            reason: "rate is not certified above 1".into(),
        };
    }
    PerronVerdict::NumericOnly { modulus_gap: gap }
}

/// Numeric modulus gap between the two smallest zeros of `q`; infinite when
/// all zeros lie in a single cluster. Advisory evidence next to the exact
/// certificates, not a proof.
pub fn smallest_modulus_gap(q: &IntPolynomial) -> Result<f64, PolyError> {
    let mut roots = all_roots_numeric(q, DEFAULT_ROOT_TOLERANCE)?;
    roots.sort_by(|a, b| a.value.norm().total_cmp(&b.value.norm()));
    match (roots.first(), roots.get(1)) {
        (Some(a), Some(b)) => Ok(b.value.norm() - a.value.norm()),
        _ => Ok(f64::INFINITY),
    }
}

/// Candidate conjugates of the rate are reciprocals of the other zeros of
/// the residual polynomial; Pisot needs them strictly inside the unit disk,
/// i.e. every other zero strictly outside.
fn pisot_advisory(normal_form: Option<&IntPolynomial>, radius: &RootInterval) -> PisotAdvisory {
    let Some(g) = normal_form else {
        return PisotAdvisory::Skipped;
    };
    let Ok(roots) = all_roots_numeric(g, DEFAULT_ROOT_TOLERANCE) else {
        return PisotAdvisory::Skipped;
    };
    let lo = radius.lo.to_f64().unwrap_or(0.0);
    let hi = radius.hi.to_f64().unwrap_or(1.0);
    let slack = 1e-9;
    let mut all_outside = true;
    let mut any_inside = false;
    for root in &roots {
        let is_radius_root = root.value.im.abs() <= root.radius + slack
            && root.value.re >= lo - root.radius - slack
            && root.value.re <= hi + root.radius + slack;
        if is_radius_root {
            continue;
        }
        let margin = 10.0 * (root.radius + DEFAULT_ROOT_TOLERANCE);
        let modulus = root.value.norm();
        if modulus <= 1.0 + margin {
            all_outside = false;
        }
        if modulus < 1.0 - margin {
            any_inside = true;
        }
    }
    if all_outside {
        PisotAdvisory::PisotNumeric
    } else if any_inside {
        PisotAdvisory::NotPisotNumeric
    } else {
        PisotAdvisory::Skipped
    }
}

/// Series-side estimates of the rate: a_n^(1/n) and a_n / a_(n-1).
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesEstimates {
    pub coefficients: Vec<BigInt>,
    pub root_estimate: f64,
    pub ratio_estimate: f64,
}

/// Bit-length based log2, robust for integers far beyond f64 range.
fn log2_bigint(a: &BigInt) -> f64 {
    let bits = a.bits();
    if bits <= 53 {
        return a.to_f64().expect("fits").log2();
    }
    let shifted = a >> (bits - 53);
    shifted.to_f64().expect("53 bits fit").log2() + (bits - 53) as f64
}

/// Advisory rate estimates from the first `n + 1` series coefficients.
///
/// Never used for certification: the root estimate converges like
/// tau^(log C / n) and the ratio estimate geometrically.
pub fn rate_from_series(f: &RationalFunction, n: usize) -> Result<SeriesEstimates, GrowthError> {
    assert!(n >= 2, "need at least three coefficients");
    let coefficients = series_coefficients(f, n)?;
    for (index, a) in coefficients.iter().enumerate() {
        if a.is_negative() {
            return Err(GrowthError::NegativeSeriesCoefficient { index });
        }
    }
    let a_last = &coefficients[n];
    let a_prev = &coefficients[n - 1];
    if a_prev.is_zero() || a_last.is_zero() {
        return Err(GrowthError::SeriesTerminated { index: n });
    }
    let root_estimate = (log2_bigint(a_last) / n as f64).exp2();
    let ratio_estimate = BigRational::new(a_last.clone(), a_prev.clone())
        .to_f64()
        .expect("ratio of consecutive growth coefficients is moderate");
    Ok(SeriesEstimates {
        coefficients,
        root_estimate,
        ratio_estimate,
    })
}

/// Largest decimal with `digits` fractional digits not exceeding `x`,
/// rendered as a string (round toward minus infinity).
pub fn decimal_lower(x: &BigRational, digits: u32) -> String {
    decimal_directed(x, digits, false)
}

/// Smallest decimal with `digits` fractional digits not below `x`
/// (round toward plus infinity).
pub fn decimal_upper(x: &BigRational, digits: u32) -> String {
    decimal_directed(x, digits, true)
}

fn decimal_directed(x: &BigRational, digits: u32, round_up: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x * BigRational::from(scale.clone());
    let mut units = scaled.floor().to_integer();
    if round_up && !scaled.is_integer() {
        units += 1;
    }
    let negative = units.is_negative();
    let mut magnitude = units.magnitude().clone();
    let ten = num_bigint::BigUint::from(10u32);
    let mut frac = String::new();
    for _ in 0..digits {
        frac.push(char::from(b'0' + (&magnitude % &ten).to_u8().unwrap()));
        magnitude /= &ten;
    }
    let frac: String = frac.chars().rev().collect();
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{magnitude}")
    } else {
        format!("{sign}{magnitude}.{frac}")
    }
}

#[cfg(test)]
mod tests;

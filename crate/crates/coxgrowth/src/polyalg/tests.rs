use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn p(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(coeffs)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn bracket_basics() {
    assert_eq!(bracket(1).unwrap(), p(&[1]));
    assert_eq!(bracket(2).unwrap(), p(&[1, 1]));
    assert_eq!(bracket(5).unwrap(), p(&[1, 1, 1, 1, 1]));
    assert!(matches!(bracket(0), Err(PolyError::BracketIndex(0))));
}

#[test]
fn bracket_value_at_one_is_the_index() {
    for n in 1..=60u32 {
        let b = bracket(n).unwrap();
        assert_eq!(b.eval_rational(&BigRational::one()), rat(n as i64, 1));
    }
}

#[test]
fn bracket_product_multiplies_out() {
    // [2,2] = (1+t)^2 = 1 + 2t + t^2
    assert_eq!(bracket_product(&[2, 2]).unwrap(), p(&[1, 2, 1]));
    // [2,3] = 1 + 2t + 2t^2 + t^3
    assert_eq!(bracket_product(&[2, 3]).unwrap(), p(&[1, 2, 2, 1]));
    assert_eq!(bracket_product(&[]).unwrap(), p(&[1]));
}

#[test]
fn arithmetic_smoke() {
    let a = p(&[1, 2, 1]);
    let b = p(&[-1, 1]);
    assert_eq!(&a + &b, p(&[0, 3, 1]));
    assert_eq!(&a - &a, IntPolynomial::zero());
    assert_eq!(&b * &b, p(&[1, -2, 1]));
    assert_eq!(p(&[0]), IntPolynomial::zero());
    assert_eq!(p(&[3]).degree(), Some(0));
    assert_eq!(IntPolynomial::zero().degree(), None);
}

#[test]
fn exact_division_and_remainders() {
    // (t^2 - 1) / (t - 1) = t + 1
    assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
    // t^2 + 1 = (t + 1)(t - 1) + 2
    match p(&[1, 0, 1]).exact_div(&p(&[-1, 1])) {
        Err(PolyError::InexactDivision { remainder }) => assert_eq!(remainder, p(&[2])),
        other => panic!("expected remainder, got {other:?}"),
    }
    // 2t / 4 divides over Q but not over Z.
    assert!(matches!(
        p(&[0, 2]).exact_div(&p(&[4])),
        Err(PolyError::NonIntegralQuotient)
    ));
    assert!(matches!(
        p(&[1]).exact_div(&IntPolynomial::zero()),
        Err(PolyError::DivisionByZero)
    ));
}

#[test]
fn gcd_finds_common_factors() {
    let a = &p(&[-1, 1]) * &p(&[1, 1]); // t^2 - 1
    let b = &p(&[-1, 1]) * &p(&[2, 1]); // (t-1)(t+2)
    assert_eq!(poly_gcd(&a, &b), p(&[-1, 1]));
    // Contents count: gcd(2(t+1), 4(t+1)) = 2(t+1).
    assert_eq!(poly_gcd(&p(&[2, 2]), &p(&[4, 4])), p(&[2, 2]));
    assert_eq!(poly_gcd(&IntPolynomial::zero(), &p(&[0, 7])), p(&[0, 7]));
}

#[test]
fn ratfun_reduces_to_canonical_form() {
    // (t^2 - 1)/(t - 1) reduces to t + 1.
    let f = RationalFunction::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
    assert_eq!(f, RationalFunction::from_polynomial(p(&[1, 1])));
    assert!(f.is_polynomial());
    // Shared content is cancelled, sign moves to the numerator.
    let g = RationalFunction::new(p(&[2, 2]), p(&[0, -4])).unwrap();
    assert_eq!(g.num(), &p(&[-1, -1]));
    assert_eq!(g.den(), &p(&[0, 2]));
    // Mixed content stays when not shared: (2t+2)/3.
    let h = RationalFunction::new(p(&[2, 2]), p(&[3])).unwrap();
    assert_eq!(h.num(), &p(&[2, 2]));
    assert_eq!(h.den(), &p(&[3]));
}

#[test]
fn ratfun_field_ops() {
    let half = RationalFunction::new(p(&[1]), p(&[1, 1])).unwrap(); // 1/(1+t)
    let sum = &half + &half; // 2/(1+t)
    assert_eq!(sum, RationalFunction::new(p(&[2]), p(&[1, 1])).unwrap());
    let prod = &half * &RationalFunction::from_polynomial(p(&[1, 1]));
    assert_eq!(prod, RationalFunction::one());
    let recip = RationalFunction::from_polynomial(p(&[1, 1])).reciprocal().unwrap();
    assert_eq!(recip, half);
    assert!(RationalFunction::zero().reciprocal().is_err());
}

#[test]
fn reverse_variable_matches_substitution() {
    // f = (1+t)/(1-2t); f(1/t) = (1+1/t)/(1-2/t) = (t+1)/(t-2).
    let f = RationalFunction::new(p(&[1, 1]), p(&[1, -2])).unwrap();
    let rev = f.reverse_variable();
    assert_eq!(rev, RationalFunction::new(p(&[1, 1]), p(&[-2, 1])).unwrap());
    // Involution on non-vanishing constant terms.
    assert_eq!(rev.reverse_variable(), f);
}

#[test]
fn series_of_geometric_function() {
    // 1/(1-t) = 1 + t + t^2 + ...
    let f = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
    let coeffs = series_coefficients(&f, 5).unwrap();
    assert_eq!(coeffs, vec![BigInt::one(); 6]);
    // (1+t)/(1-2t): 1, 3, 6, 12, 24, ...
    let g = RationalFunction::new(p(&[1, 1]), p(&[1, -2])).unwrap();
    let coeffs = series_coefficients(&g, 4).unwrap();
    let expect: Vec<BigInt> = [1i64, 3, 6, 12, 24].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(coeffs, expect);
    // Denominator vanishing at zero is rejected.
    let bad = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
    assert!(matches!(
        series_coefficients(&bad, 3),
        Err(PolyError::DenominatorConstantTermZero)
    ));
}

#[test]
fn sturm_counts_roots() {
    // (t-1)(t-2)(t-3)
    let q = &(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[-3, 1]);
    let chain = SturmChain::new(&q).unwrap();
    assert_eq!(chain.count_roots_open(&rat(0, 1), &rat(4, 1)), 3);
    assert_eq!(chain.count_roots_open(&rat(3, 2), &rat(4, 1)), 2);
    assert_eq!(chain.count_roots_open(&rat(5, 2), &rat(11, 4)), 0);
    // Repeated roots are counted once: (t-1)^2 (t-2)
    let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[-2, 1]);
    let chain = SturmChain::new(&q).unwrap();
    assert_eq!(chain.count_roots_open(&rat(1, 2), &rat(5, 2)), 2);
}

#[test]
fn isolate_smallest_positive_root_certifies() {
    // Roots 1/3 and 2; smallest positive is 1/3.
    let q = &p(&[-1, 3]) * &p(&[-2, 1]);
    let width = rat(1, 1 << 20);
    let iv = isolate_smallest_positive_root(&q, &width).unwrap();
    assert!(iv.width() <= width);
    assert!(iv.contains(&rat(1, 3)));
    assert_eq!(iv.multiplicity_hint, 1);
    assert!(iv.lo.is_positive() || iv.lo.is_zero());

    // No positive roots.
    assert!(matches!(
        isolate_smallest_positive_root(&p(&[1, 0, 1]), &width),
        Err(PolyError::NoPositiveRoot)
    ));
    assert!(matches!(
        isolate_smallest_positive_root(&p(&[1, 1]), &width),
        Err(PolyError::NoPositiveRoot)
    ));
    assert!(matches!(
        isolate_smallest_positive_root(&IntPolynomial::zero(), &width),
        Err(PolyError::ZeroPolynomial)
    ));

    // Roots at the origin are ignored: t^3 (t - 5).
    let q = p(&[0, 0, 0, -5, 1]);
    let iv = isolate_smallest_positive_root(&q, &width).unwrap();
    assert!(iv.contains(&rat(5, 1)));
}

#[test]
fn isolate_handles_exact_dyadic_roots() {
    // Root exactly at 1/2; bisection midpoints will hit it.
    let q = p(&[-1, 2]); // 2t - 1
    let width = rat(1, 1 << 30);
    let iv = isolate_smallest_positive_root(&q, &width).unwrap();
    assert!(iv.contains(&rat(1, 2)));
    assert!(iv.width() <= width);
}

#[test]
fn isolate_reports_multiplicity() {
    // (2t-1)^2 (t-3): smallest positive root 1/2 with multiplicity 2.
    let q = &(&p(&[-1, 2]) * &p(&[-1, 2])) * &p(&[-3, 1]);
    let iv = isolate_smallest_positive_root(&q, &rat(1, 1 << 20)).unwrap();
    assert!(iv.contains(&rat(1, 2)));
    assert_eq!(iv.multiplicity_hint, 2);
}

#[test]
fn refine_narrows_without_losing_the_root() {
    let q = &p(&[-1, 3]) * &p(&[-2, 1]);
    let iv = isolate_smallest_positive_root(&q, &rat(1, 16)).unwrap();
    let narrow = refine_root_interval(&q, &iv, &rat(1, 1 << 40)).unwrap();
    assert!(narrow.width() <= rat(1, 1 << 40));
    assert!(narrow.contains(&rat(1, 3)));
}

#[test]
fn shared_root_certificate() {
    // Both polynomials vanish at 1/3; second also at 7.
    let a = &p(&[-1, 3]) * &p(&[-5, 1]);
    let b = &p(&[-1, 3]) * &p(&[-7, 1]);
    let iv = certify_shared_smallest_root(&a, &b, &rat(1, 1 << 20)).unwrap();
    assert!(iv.contains(&rat(1, 3)));
    // Distinct smallest roots are rejected.
    let c = &p(&[-1, 2]) * &p(&[-5, 1]);
    assert!(matches!(
        certify_shared_smallest_root(&a, &c, &rat(1, 1 << 20)),
        Err(PolyError::DistinctSmallestRoots)
    ));
}

#[test]
fn numeric_roots_of_bracket_five_lie_on_unit_circle() {
    let b5 = bracket(5).unwrap();
    let roots = all_roots_numeric(&b5, 1e-10).unwrap();
    assert_eq!(roots.len(), 4);
    for r in &roots {
        assert!((r.value.norm() - 1.0).abs() < 1e-9);
        assert_eq!(r.multiplicity, 1);
        assert!(r.radius <= 1e-10);
        // Fifth roots of unity: z^5 = 1.
        assert!((r.value.powu(5) - 1.0).norm() < 1e-8);
    }
}

#[test]
fn numeric_roots_report_multiplicity() {
    // (t-1)^2 (t+2)^3
    let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &(&(&p(&[2, 1]) * &p(&[2, 1])) * &p(&[2, 1]));
    let roots = all_roots_numeric(&q, 1e-9).unwrap();
    assert_eq!(roots.len(), 2);
    assert_eq!(roots[0].multiplicity, 3);
    assert!((roots[0].value.re + 2.0).abs() < 1e-9);
    assert_eq!(roots[1].multiplicity, 2);
    assert!((roots[1].value.re - 1.0).abs() < 1e-9);
}

#[test]
fn reciprocal_interval_flips_bounds() {
    let iv = RootInterval {
        lo: rat(1, 3),
        hi: rat(1, 2),
        multiplicity_hint: 1,
    };
    let r = iv.reciprocal();
    assert_eq!(r.lo, rat(2, 1));
    assert_eq!(r.hi, rat(3, 1));
}

#[test]
fn display_is_readable() {
    assert_eq!(p(&[-1, 0, 3]).to_string(), "3t^2 - 1");
    assert_eq!(p(&[1, 1]).to_string(), "t + 1");
    assert_eq!(IntPolynomial::zero().to_string(), "0");
    let f = RationalFunction::new(p(&[1]), p(&[1, 1])).unwrap();
    assert_eq!(f.to_string(), "(1) / (t + 1)");
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly(max_deg: usize, max_coeff: i64) -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-max_coeff..=max_coeff, 0..=max_deg + 1)
            .prop_map(|v| IntPolynomial::new(v.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn multiply_then_divide_roundtrips(a in arb_poly(8, 50), b in arb_poly(8, 50)) {
            prop_assume!(!b.is_zero());
            let product = &a * &b;
            prop_assert_eq!(product.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(6, 20), b in arb_poly(6, 20)) {
            let g = poly_gcd(&a, &b);
            if !g.is_zero() {
                prop_assert!(a.divisible_by(&g));
                prop_assert!(b.divisible_by(&g));
            } else {
                prop_assert!(a.is_zero() && b.is_zero());
            }
        }

        #[test]
        fn reverse_variable_is_an_involution(
            n in arb_poly(6, 30), d in arb_poly(6, 30)
        ) {
            prop_assume!(!d.is_zero());
            // Non-vanishing constant terms keep the degree bookkeeping exact.
            prop_assume!(!n.constant_term().is_zero() && !d.constant_term().is_zero());
            let f = RationalFunction::new(n, d).unwrap();
            prop_assume!(!f.num().constant_term().is_zero());
            prop_assert_eq!(f.reverse_variable().reverse_variable(), f);
        }

        #[test]
        fn ratfun_add_sub_cancels(
            n1 in arb_poly(5, 20), d1 in arb_poly(5, 20),
            n2 in arb_poly(5, 20), d2 in arb_poly(5, 20),
        ) {
            prop_assume!(!d1.is_zero() && !d2.is_zero());
            let f = RationalFunction::new(n1, d1).unwrap();
            let g = RationalFunction::new(n2, d2).unwrap();
            let back = &(&f + &g) - &g;
            prop_assert_eq!(back, f);
        }

        #[test]
        fn isolation_interval_contains_a_sign_change_or_even_root(
            r1n in 1i64..40, r1d in 1i64..40, r2n in 1i64..40, r2d in 1i64..40,
        ) {
            // Build (r1d t - r1n)(r2d t - r2n) with known positive roots.
            let q = &IntPolynomial::from_coeffs(&[-r1n, r1d])
                * &IntPolynomial::from_coeffs(&[-r2n, r2d]);
            let width = BigRational::new(BigInt::one(), BigInt::from(1 << 24));
            let iv = isolate_smallest_positive_root(&q, &width).unwrap();
            let smallest = BigRational::new(BigInt::from(r1n), BigInt::from(r1d))
                .min(BigRational::new(BigInt::from(r2n), BigInt::from(r2d)));
            prop_assert!(iv.contains(&smallest));
            prop_assert!(iv.width() <= width);
        }
    }
}

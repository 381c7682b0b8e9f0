//! Acceptance gate: ten criteria, one test per criterion. Each test prints
//! a single pass line with the measured evidence; the harness line itself
//! is the pass/fail verdict. Tolerances are pinned here in code:
//! polynomial and rational-function identities are exact (zero tolerance),
//! certified rate intervals must be narrower than 2^-40, the numeric
//! modulus gap must be at least 1e-6, and series estimates must land
//! within 1e-2 of the certified midpoint in relative terms.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coxgrowth::catalog;
use coxgrowth::coxeter::{CoxeterOrder, CoxeterSystem};
use coxgrowth::growth::{
    analyze_growth_against, pseudo_growth, rate_from_series, smallest_modulus_gap, PerronVerdict,
};
use coxgrowth::polyalg::{bracket, bracket_product, default_width};
use coxgrowth::polyhedron::{CombinatorialPolyhedron, CuspPairing, Edge};
use coxgrowth::verify::{
    apex_pyramid, base_identity_check, bipyramid_form_check, cusp_slack, display_normal_form,
    label_reduction_check, large_edges, prism_numerator_236, prism_numerator_244, prism_search,
    recursion_check, SMALL_ORDERS,
};
use coxgrowth::{IntPolynomial, RationalFunction};

const RATE_WIDTH_EXP: u32 = 40;
const MODULUS_GAP_FLOOR: f64 = 1e-6;
const SERIES_RELATIVE_TOLERANCE: f64 = 1e-2;
const SERIES_TERMS: usize = 200;

fn path(orders: &[u32]) -> CoxeterSystem {
    let mut sys = CoxeterSystem::all_commuting(orders.len() + 1);
    for (i, &m) in orders.iter().enumerate() {
        sys.set_order(i, i + 1, CoxeterOrder::Finite(m));
    }
    sys
}

fn star_d4() -> CoxeterSystem {
    let mut sys = CoxeterSystem::all_commuting(4);
    for leaf in 1..4 {
        sys.set_order(0, leaf, CoxeterOrder::Finite(3));
    }
    sys
}

fn t_minus_one() -> IntPolynomial {
    IntPolynomial::from_coeffs(&[-1, 1])
}

fn form_over_brackets(orders: &[u32], numerator: &IntPolynomial) -> RationalFunction {
    RationalFunction::new(
        bracket_product(orders).expect("valid orders"),
        &t_minus_one() * numerator,
    )
    .expect("nonzero denominator")
}

#[test]
fn criterion_01_steinberg_solomon_agreement() {
    let start = Instant::now();
    let mut cases: Vec<(&str, CoxeterSystem, Vec<u32>)> = vec![
        ("A1", path(&[]), vec![2]),
        ("A2", path(&[3]), vec![2, 3]),
        ("A3", path(&[3, 3]), vec![2, 3, 4]),
        ("A4", path(&[3, 3, 3]), vec![2, 3, 4, 5]),
        ("B2", path(&[4]), vec![2, 4]),
        ("B3", path(&[4, 3]), vec![2, 4, 6]),
        ("B4", path(&[4, 3, 3]), vec![2, 4, 6, 8]),
        ("D4", star_d4(), vec![2, 4, 4, 6]),
        ("F4", path(&[3, 4, 3]), vec![2, 6, 8, 12]),
        ("H3", path(&[5, 3]), vec![2, 6, 10]),
        ("H4", path(&[5, 3, 3]), vec![2, 12, 20, 30]),
    ];
    for m in 2..=50 {
        cases.push(("I2", path(&[m]), vec![2, m]));
    }

    for (name, sys, orders) in &cases {
        let table_product = bracket_product(orders).expect("valid orders");
        let growth = sys.steinberg_growth();
        assert_eq!(
            growth.as_polynomial(),
            Some(table_product.clone()),
            "{name} {orders:?}"
        );
        let labels = sys
            .classify_finite(sys.full_mask())
            .unwrap_or_else(|| panic!("{name} must classify as finite"));
        let classified = labels
            .iter()
            .map(|l| l.solomon_series())
            .fold(IntPolynomial::one(), |acc, p| &acc * &p);
        assert_eq!(classified, table_product, "{name} classification product");
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, need < 1 s");
    println!(
        "criterion 1: PASS - {} finite systems agree with their bracket products in {elapsed:?}",
        cases.len()
    );
}

#[test]
fn criterion_02_base_polynomial_identity() {
    let mut count = 0;
    for entry in catalog::small_angle_entries() {
        let report = base_identity_check(entry.name, &entry.load()).expect(entry.name);
        assert!(report.pass(), "{}: {:?}", entry.name, report.lines);
        count += 1;
    }
    assert!(count >= 5);
    println!("criterion 2: PASS - base identity exact on {count} small-angle polyhedra");
}

#[test]
fn criterion_03_label_reduction_identity() {
    let mut count = 0;
    for (entry, e, _) in catalog::single_large_edge_entries() {
        let p = entry.load();
        for m in 7..=12 {
            let relabeled = p.relabeled(e, m).expect(entry.name);
            let report = label_reduction_check(entry.name, &relabeled, e).expect(entry.name);
            assert!(report.pass(), "{} at {m}: {:?}", entry.name, report.lines);
            count += 1;
        }
    }
    assert_eq!(count, 18);
    println!("criterion 3: PASS - reduction identity exact on {count} (polyhedron, order) pairs");
}

#[test]
fn criterion_04_denominator_recursion() {
    let mut seen_k = Vec::new();
    for entry in catalog::CATALOG {
        let p = entry.load();
        let k = large_edges(&p).len();
        if k == 0 || cusp_slack(&p.classify_vertices()) < 0 {
            continue;
        }
        let report = recursion_check(entry.name, &p).expect(entry.name);
        assert!(report.pass(), "{}: {:?}", entry.name, report.lines);
        seen_k.push(k);
    }
    seen_k.sort_unstable();
    assert_eq!(seen_k, [1, 2, 3], "need witnesses for one, two and three large edges");
    println!("criterion 4: PASS - recursion exact for k = 1, 2, 3 large-order edges");
}

#[test]
fn criterion_05_prism_search_closed_forms() {
    for m in [7, 10] {
        let report = prism_search(m, &SMALL_ORDERS).expect("search");
        assert!(!report.survivors.is_empty(), "no survivors at {m}");
        let matched = report.survivors.iter().filter(|s| s.family.is_some()).count();
        assert_eq!(
            matched,
            report.survivors.len(),
            "unmatched survivors at {m}"
        );
        let (four, six) = report.family_counts();
        assert!(four > 0 && six > 0, "both families must occur at {m}");
        println!(
            "criterion 5: PASS - order {m}: {} survivors of {} labelings, {} + {} per family, {} classes",
            report.survivors.len(),
            report.total_labelings,
            four,
            six,
            report.classes.len()
        );
    }
}

#[test]
fn criterion_06_bipyramid_expansions() {
    let mut count = 0;
    for m1 in 7..=15 {
        for m2 in 7..=m1 {
            let report = bipyramid_form_check(m1, m2).expect("bipyramid");
            assert!(report.pass(), "({m1}, {m2}): {:?}", report.lines);
            count += 1;
        }
    }
    assert_eq!(count, 45);
    println!("criterion 6: PASS - displayed expansions exact on {count} order pairs");
}

/// Every growth function the identity criteria touch, deduplicated by exact
/// equality: the catalog, the reduction grid, the two prism family forms,
/// the bipyramid forms, and the saturating pyramids.
fn certification_corpus() -> Vec<(String, RationalFunction, Option<IntPolynomial>)> {
    let mut corpus = Vec::new();
    for entry in catalog::CATALOG {
        let p = entry.load();
        let display = display_normal_form(&p)
            .expect(entry.name)
            .filter(|h| coxgrowth::growth::ku_criterion(h).applies());
        corpus.push((entry.name.to_string(), pseudo_growth(&p), display));
    }
    for (entry, e, _) in catalog::single_large_edge_entries() {
        let p = entry.load();
        for m in 8..=12 {
            let relabeled = p.relabeled(e, m).expect(entry.name);
            let display = display_normal_form(&relabeled)
                .expect(entry.name)
                .filter(|h| coxgrowth::growth::ku_criterion(h).applies());
            corpus.push((
                format!("{} at order {m}", entry.name),
                pseudo_growth(&relabeled),
                display,
            ));
        }
    }
    for m in [7, 10] {
        let n244 = prism_numerator_244(m);
        let n236 = prism_numerator_236(m);
        corpus.push((
            format!("prism family (2,4,4) at {m}"),
            form_over_brackets(&[2, 2, 4, m], &n244),
            Some(n244),
        ));
        corpus.push((
            format!("prism family (2,3,6) at {m}"),
            form_over_brackets(&[2, 2, 6, m], &n236),
            Some(n236),
        ));
    }
    for m1 in 7..=15u32 {
        for m2 in 7..=m1 {
            let q = &(&IntPolynomial::from_coeffs(&[1, 2])
                * &bracket_product(&[m1, m2]).expect("orders"))
                - &(&IntPolynomial::from_coeffs(&[1, 1])
                    * &(&bracket(m1).expect("order") + &bracket(m2).expect("order")));
            corpus.push((
                format!("opened bipyramid ({m1}, {m2})"),
                form_over_brackets(&[2, 2, 2, m1, m2], &q),
                Some(q),
            ));
        }
    }
    for m in 7..=12 {
        let p = apex_pyramid(m).expect("pyramid");
        corpus.push((format!("saturating pyramid {m}"), pseudo_growth(&p), None));
    }
    corpus
}

#[test]
fn criterion_07_perron_certification() {
    let width = BigRational::new(BigInt::from(1), BigInt::from(2).pow(RATE_WIDTH_EXP));
    assert_eq!(width, default_width(), "pinned width drifted from the library default");
    let corpus = certification_corpus();
    for (name, growth, display) in &corpus {
        let analysis = analyze_growth_against(growth, display.as_ref(), &width);
        assert!(analysis.ku_verdict.applies(), "{name}: {:?}", analysis.ku_verdict);
        assert_eq!(
            analysis.perron_verdict,
            PerronVerdict::CertifiedPerron,
            "{name}: {:?}",
            analysis.perron_verdict
        );
        let (lo, hi) = analysis.rate_interval.expect("certified interval");
        assert!(lo > BigRational::from(BigInt::from(1)), "{name}: rate at most 1");
        assert!(&hi - &lo <= width, "{name}: interval too wide");
        let gap = smallest_modulus_gap(growth.den()).expect("numeric roots");
        assert!(gap >= MODULUS_GAP_FLOOR, "{name}: modulus gap {gap:.3e}");
    }
    println!(
        "criterion 7: PASS - {} growth functions certified with width <= 2^-{RATE_WIDTH_EXP} and gap >= {MODULUS_GAP_FLOOR:.0e}",
        corpus.len()
    );
}

#[test]
fn criterion_08_series_cross_check() {
    let width = default_width();
    for entry in catalog::CATALOG {
        let f = pseudo_growth(&entry.load());
        let estimates = rate_from_series(&f, SERIES_TERMS).expect(entry.name);
        assert_eq!(estimates.coefficients[0], BigInt::from(1), "{}", entry.name);
        assert_eq!(estimates.coefficients.len(), SERIES_TERMS + 1);

        let (lo, hi) = analyze_growth_against(&f, None, &width)
            .rate_interval
            .expect(entry.name);
        let midpoint = ((&lo + &hi) / BigRational::from(BigInt::from(2)))
            .to_f64()
            .expect("moderate rate");
        for (label, estimate) in [
            ("root", estimates.root_estimate),
            ("ratio", estimates.ratio_estimate),
        ] {
            let relative = (estimate - midpoint).abs() / midpoint;
            assert!(
                relative <= SERIES_RELATIVE_TOLERANCE,
                "{}: {label} estimate {estimate} vs midpoint {midpoint} (relative {relative:.2e})",
                entry.name
            );
        }
    }
    println!(
        "criterion 8: PASS - both series estimates within {SERIES_RELATIVE_TOLERANCE:.0e} of the certified midpoint on {} entries",
        catalog::CATALOG.len()
    );
}

#[test]
fn criterion_09_counting_identities_and_bound() {
    for entry in catalog::CATALOG {
        let p = entry.load();
        let identities = p.check_counting_identities().expect(entry.name);
        assert!(identities.all_pass, "{}: {:?}", entry.name, identities.lines);
        let bound = p.large_edge_bound().expect(entry.name);
        assert!(bound.bound_holds, "{}", entry.name);
    }

    let pyramid = apex_pyramid(7).expect("pyramid");
    let bound = pyramid.large_edge_bound().expect("bound");
    assert_eq!(bound.large_edge_count + 3, bound.face_count, "bound must saturate");
    let equality = bound.equality_case.expect("saturated bound");
    assert!(equality.unique_2222_cusp && equality.all_other_vertices_22m);
    let census = pyramid.classify_vertices();
    assert_eq!(census.v2222(), 1);
    println!(
        "criterion 9: PASS - counting identities and the large-edge bound hold on {} entries; the saturating pyramid census is forced",
        catalog::CATALOG.len()
    );
}

fn open_then_pinch(
    p: &CombinatorialPolyhedron,
    v: usize,
    pairing: CuspPairing,
    m: u32,
) -> CombinatorialPolyhedron {
    let opened = p.open_cusp(v, pairing, m).expect("valid cusp opening");
    let (&new_edge, _) = opened
        .labels()
        .iter()
        .find(|(_, &label)| label == m)
        .expect("the created edge carries the fresh order");
    opened.pinch(new_edge).expect("pinch the fresh edge")
}

fn pinch_then_open(p: &CombinatorialPolyhedron, e: Edge, m: u32) -> bool {
    let pinched = p.pinch(e).expect("pinch a large-order edge");
    let census = pinched.classify_vertices();
    (0..pinched.vertex_count()).any(|v| {
        census.types[v].signature == [2, 2, 2, 2]
            && [CuspPairing::KeepFirst, CuspPairing::KeepSecond]
                .iter()
                .any(|&pairing| {
                    pinched
                        .open_cusp(v, pairing, m)
                        .is_ok_and(|q| q.is_isomorphic_to(p))
                })
    })
}

#[test]
fn criterion_10_transform_roundtrips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6f70656e);
    let cusped: Vec<(CombinatorialPolyhedron, Vec<usize>)> = catalog::CATALOG
        .iter()
        .filter_map(|entry| {
            let p = entry.load();
            let census = p.classify_vertices();
            let cusps: Vec<usize> = (0..p.vertex_count())
                .filter(|&v| census.types[v].signature == [2, 2, 2, 2])
                .collect();
            (!cusps.is_empty()).then_some((p, cusps))
        })
        .collect();
    // A large-order edge bordering a triangle cannot be contracted, so the
    // valid pinch-first cases are the edges both of whose faces are quads
    // or larger.
    let edged: Vec<(CombinatorialPolyhedron, Vec<(Edge, u32)>)> = catalog::CATALOG
        .iter()
        .filter_map(|entry| {
            let p = entry.load();
            let pinchable: Vec<(Edge, u32)> = large_edges(&p)
                .into_iter()
                .filter(|&(e, _)| p.pinch(e).is_ok())
                .collect();
            (!pinchable.is_empty()).then_some((p, pinchable))
        })
        .collect();
    assert!(cusped.len() >= 3 && edged.len() >= 3, "pools too thin");

    let mut open_first = 0;
    let mut pinch_first = 0;
    for _ in 0..100 {
        if rng.gen_bool(0.5) {
            let (p, cusps) = &cusped[rng.gen_range(0..cusped.len())];
            let v = cusps[rng.gen_range(0..cusps.len())];
            let pairing = if rng.gen_bool(0.5) {
                CuspPairing::KeepFirst
            } else {
                CuspPairing::KeepSecond
            };
            let m = rng.gen_range(13..=40);
            assert!(
                open_then_pinch(p, v, pairing, m).is_isomorphic_to(p),
                "open then pinch at vertex {v}, order {m}"
            );
            open_first += 1;
        } else {
            let (p, pinchable) = &edged[rng.gen_range(0..edged.len())];
            let (e, m) = pinchable[rng.gen_range(0..pinchable.len())];
            assert!(pinch_then_open(p, e, m), "pinch then open at {e:?}");
            pinch_first += 1;
        }
    }
    assert_eq!(open_first + pinch_first, 100);
    println!(
        "criterion 10: PASS - 100 randomized roundtrips ({open_first} open-first, {pinch_first} pinch-first)"
    );
}

//! Floating-point approximation of all complex roots.
//!
//! The strategy keeps the exact and numeric layers separate: multiplicities
//! come from an exact square-free (Yun) decomposition, and only the
//! square-free factors go through simultaneous (Aberth-Ehrlich) iteration.
//! Each approximation carries an inclusion radius `deg * |p(z)/p'(z)|`, which
//! provably covers at least one true root of the factor, so callers can use
//! the radii as honest error bars. This layer is advisory; certified
//! statements come from the Sturm side.

use super::{poly_gcd, IntPolynomial, PolyError};
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// Default radius tolerance for accepting an approximation set.
pub const DEFAULT_ROOT_TOLERANCE: f64 = 1e-12;

/// One approximate root with its inclusion radius and exact multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexRoot {
    pub value: Complex64,
    /// Radius of a disk around `value` guaranteed to contain a true root of
    /// the square-free factor this approximation came from.
    pub radius: f64,
    pub multiplicity: u32,
}

/// Approximates every complex root of `p` (counted once, with multiplicity
/// reported) to inclusion radius at most `tolerance`.
///
/// Roots at the origin are split off exactly. Output order is deterministic:
/// by real part, then imaginary part.
pub fn all_roots_numeric(
    p: &IntPolynomial,
    tolerance: f64,
) -> Result<Vec<ComplexRoot>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let shift = p.trailing_zero_degree();
    if shift > 0 {
        roots.push(ComplexRoot {
            value: Complex64::new(0.0, 0.0),
            radius: 0.0,
            multiplicity: shift as u32,
        });
    }
    let q = IntPolynomial::new(p.coeffs()[shift..].to_vec());
    for (factor, mult) in squarefree_decomposition(&q) {
        if factor.degree().map_or(true, |d| d == 0) {
            continue;
        }
        let approx = aberth(&factor, tolerance)?;
        for (value, radius) in approx {
            roots.push(ComplexRoot {
                value,
                radius,
                multiplicity: mult,
            });
        }
    }
    roots.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(roots)
}

/// Yun's algorithm: exact square-free decomposition over Q, returned as
/// primitive integer factors paired with multiplicities.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    let p = p.primitive_normalized();
    if p.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let dp = p.derivative();
    let g = poly_gcd(&p, &dp);
    if g.degree() == Some(0) {
        return vec![(p, 1)];
    }
    let mut out = Vec::new();
    let mut c = p.exact_div(&g).expect("gcd divides").primitive_normalized();
    let mut d = &dp.exact_div(&g).expect("gcd divides") - &c.derivative();
    let mut mult = 1u32;
    loop {
        let f = poly_gcd(&c, &d).primitive_normalized();
        if f.degree().map_or(false, |deg| deg >= 1) {
            out.push((f.clone(), mult));
        }
        let c_next = c.exact_div(&f).expect("factor divides").primitive_normalized();
        if c_next.degree().map_or(true, |deg| deg == 0) {
            break;
        }
        let d_next = &d.exact_div(&f).expect("factor divides") - &c_next.derivative();
        c = c_next;
        d = d_next;
        mult += 1;
    }
    out
}

/// Aberth-Ehrlich simultaneous iteration on a square-free polynomial.
/// Returns (root, inclusion radius) pairs.
fn aberth(p: &IntPolynomial, tolerance: f64) -> Result<Vec<(Complex64, f64)>, PolyError> {
    let n = p.degree().expect("non-constant");
    let coeffs = to_f64_normalized(p);
    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();

    // Initial guesses on a circle sized by the Cauchy bound, with an angular
    // offset so no guess starts on the real axis.
    let lead = *coeffs.last().unwrap();
    let cauchy = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0f64, f64::max);
    let r0 = 0.5 * cauchy;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.41;
            Complex64::from_polar(r0, theta)
        })
        .collect();

    let eval = |cs: &[f64], x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in cs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };

    for _ in 0..400 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let pi = eval(&coeffs, z[i]);
            let di = eval(&deriv, z[i]);
            if pi.norm() == 0.0 {
                continue;
            }
            let newton = if di.norm() == 0.0 {
                // Rare saddle start; nudge instead of dividing by zero.
                Complex64::new(1e-3, 1e-3)
            } else {
                pi / di
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    repulsion += (z[i] - z[j]).finv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() == 0.0 { newton } else { newton / denom };
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }

    // Inclusion radius: a disk of radius deg * |p/p'| around any point
    // contains at least one root (from p'/p = sum 1/(z - r_i)).
    let mut out = Vec::with_capacity(n);
    let mut worst = 0.0f64;
    for zi in z {
        let pi = eval(&coeffs, zi);
        let di = eval(&deriv, zi);
        let radius = if pi.norm() == 0.0 {
            0.0
        } else if di.norm() == 0.0 {
            f64::INFINITY
        } else {
            (n as f64) * (pi / di).norm()
        };
        worst = worst.max(radius);
        out.push((zi, radius));
    }
    if worst > tolerance {
        return Err(PolyError::NonConvergence {
            worst_radius: worst,
            tolerance,
        });
    }
    Ok(out)
}

/// Coefficients as f64, scaled by a power of two so the largest magnitude
/// lands in [1, 2); keeps evaluation away from overflow without changing roots.
fn to_f64_normalized(p: &IntPolynomial) -> Vec<f64> {
    let bits = p
        .coeffs()
        .iter()
        .map(|c| c.bits())
        .max()
        .unwrap_or(0)
        .saturating_sub(1);
    p.coeffs()
        .iter()
        .map(|c| {
            if bits <= 900 {
                c.to_f64().unwrap_or(0.0) / 2f64.powi(bits as i32)
            } else {
                // Far beyond anything this crate produces; shift exactly.
                let shifted = c >> ((bits - 900) as usize);
                shifted.to_f64().unwrap_or(0.0) / 2f64.powi(900)
            }
        })
        .collect()
}

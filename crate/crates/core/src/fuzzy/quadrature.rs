//! Adaptive Simpson quadrature and the integral form of the signed distance.
//!
//! The integral form `½∫₀¹ [B_L(α) + B_U(α)] dα` is the reference against
//! which every closed-form signed distance in this crate is checked.

use super::AlphaLevel;
use crate::error::{Error, Result};

/// Absolute tolerance for signed-distance integrals.
pub const SIGNED_DISTANCE_TOLERANCE: f64 = 1e-12;

/// Maximum bisection depth for signed-distance integrals.
pub const MAX_DEPTH: u32 = 60;

/// Integrates `f` over `[a, b]` by adaptive Simpson with Richardson correction.
///
/// Subintervals are bisected until the two-panel estimate agrees with the
/// one-panel estimate to `15·ε`, where `ε` is the share of `tolerance`
/// assigned to that subinterval. `ε` never drops below a few ulps of the
/// local estimate, so integrands of large magnitude still terminate.
///
/// Fails with [`Error::Quadrature`] when any branch reaches `max_depth`
/// without converging.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tolerance: f64, max_depth: u32) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    let panel = Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole,
    };
    let estimate =
        refine(&f, panel, tolerance, max_depth).map_err(|estimate| Error::Quadrature {
            tolerance,
            max_depth,
            estimate,
        })?;
    if estimate.is_finite() {
        Ok(estimate)
    } else {
        Err(Error::Quadrature {
            tolerance,
            max_depth,
            estimate,
        })
    }
}

/// Signed distance `½∫₀¹ [lower(α) + upper(α)] dα` of a fuzzy set given by its α-cut endpoints.
///
/// Uses [`adaptive_simpson`] at [`SIGNED_DISTANCE_TOLERANCE`] and [`MAX_DEPTH`].
pub fn signed_distance_quadrature<L, U>(lower: L, upper: U) -> Result<f64>
where
    L: Fn(AlphaLevel) -> f64,
    U: Fn(AlphaLevel) -> f64,
{
    let integrand = |a: f64| {
        let alpha = AlphaLevel::new_unchecked(a);
        lower(alpha) + upper(alpha)
    };
    // Halve the target: the factor ½ is applied after integration.
    let integral = adaptive_simpson(
        integrand,
        0.0,
        1.0,
        2.0 * SIGNED_DISTANCE_TOLERANCE,
        MAX_DEPTH,
    )?;
    Ok(0.5 * integral)
}

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

// Err carries the partial estimate at the failing branch.
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    p: Panel,
    eps: f64,
    depth: u32,
) -> std::result::Result<f64, f64> {
    let m = 0.5 * (p.a + p.b);
    let lm = 0.5 * (p.a + m);
    let rm = 0.5 * (m + p.b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let both = left + right;
    let diff = both - p.whole;

    let floor = 8.0 * f64::EPSILON * both.abs();
    if diff.abs() <= 15.0 * eps.max(floor) {
        return Ok(both + diff / 15.0);
    }
    if depth == 0 || !diff.is_finite() {
        return Err(both);
    }
    let half = 0.5 * eps;
    let l = refine(
        f,
        Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: left,
        },
        half,
        depth - 1,
    )?;
    let r = refine(
        f,
        Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: right,
        },
        half,
        depth - 1,
    )?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TriangularFuzzyNumber;

    fn tfn_distance(b: TriangularFuzzyNumber) -> f64 {
        signed_distance_quadrature(|a| b.lower_at(a), |a| b.upper_at(a)).unwrap()
    }

    #[test]
    fn polynomials_up_to_cubic_are_exact() {
        let v = adaptive_simpson(|x| 4.0 * x * x * x - 3.0 * x + 1.0, 0.0, 2.0, 1e-12, 60).unwrap();
        assert!((v - 12.0).abs() < 1e-12);
    }

    #[test]
    fn smooth_transcendental() {
        let v = adaptive_simpson(f64::sin, 0.0, std::f64::consts::PI, 1e-12, 60).unwrap();
        assert!((v - 2.0).abs() < 1e-11);
        let v = adaptive_simpson(|x| 1.0 / (1.0 + 9.0 * x), 0.0, 1.0, 1e-12, 60).unwrap();
        assert!((v - 10f64.ln() / 9.0).abs() < 1e-11);
    }

    #[test]
    fn near_pole_rational_converges() {
        // ∫₀¹ dx / (10⁻³ + x) = ln 1001
        let v = adaptive_simpson(|x| 1.0 / (1e-3 + x), 0.0, 1.0, 1e-12, 60).unwrap();
        assert!((v - 1001f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn depth_exhaustion_is_reported() {
        let err =
            adaptive_simpson(|x| x.sqrt().sin() / x.max(1e-300), 0.0, 1.0, 1e-14, 3).unwrap_err();
        assert!(matches!(err, Error::Quadrature { max_depth: 3, .. }));
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        assert!(adaptive_simpson(|x| 1.0 / x, 0.0, 1.0, 1e-12, 60).is_err());
    }

    #[test]
    fn signed_distance_of_tfns() {
        let t = |a, b, c| TriangularFuzzyNumber::new(a, b, c).unwrap();
        assert!((tfn_distance(t(1.0, 2.0, 3.0)) - 2.0).abs() < 1e-10);
        assert!((tfn_distance(t(1.0, 2.0, 4.0)) - 2.25).abs() < 1e-10);
        assert!((tfn_distance(TriangularFuzzyNumber::fuzzy_point(5.0)) - 5.0).abs() < 1e-10);
    }

    #[test]
    fn large_magnitude_cuts_terminate() {
        let b = TriangularFuzzyNumber::new(1e9, 1e9 + 3.0, 1e9 + 10.0).unwrap();
        assert!((tfn_distance(b) - b.signed_distance()).abs() < 1e-5);
    }
}

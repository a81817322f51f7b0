//! Defuzzified model quantities.
//!
//! With demand `φ̃ = (φ−Δ₁, φ, φ+Δ₂)` and leakage `ψ̃ = (ψ−Δ₃, ψ, ψ+Δ₄)`,
//! the fuzzy cost needs two real numbers:
//!
//! * `δ = d(φ̃, 0̃) = φ + (Δ₂ − Δ₁)/4`
//! * `ζ = d(ψ̃/(φ̃+ψ̃), 0̃)`, the signed distance of the leakage fraction.
//!
//! `ζ` has a logarithmic closed form and an independent quadrature path over
//! the α-cuts of the quotient; the two must agree.

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::fuzzy::{signed_distance_quadrature, AlphaLevel, Interval, TriangularFuzzyNumber};

/// Below `NEAR_SINGULAR_RATIO · η` for `Δ₅` or `Δ₆` the closed form for `ζ`
/// is replaced by quadrature.
pub const NEAR_SINGULAR_RATIO: f64 = 1e-8;

/// Decision-maker deviations `Δ₁…Δ₄` around the crisp demand and leakage rates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FuzzySpreads {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d4: f64,
}

/// Which upper bounds on the spreads are enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Bounds {
    /// `0 < Δ₁, Δ₂ < φ` and `0 < Δ₃, Δ₄ < ψ`.
    #[default]
    Strict,
    /// Drops `Δ₂ < φ` and `Δ₄ < ψ`, which are not needed for the model to be well defined.
    Relaxed,
}

impl FuzzySpreads {
    pub fn new(d1: f64, d2: f64, d3: f64, d4: f64) -> Self {
        FuzzySpreads { d1, d2, d3, d4 }
    }

    /// Same relative spread on every side: `Δ₁ = Δ₂ = fraction·φ`, `Δ₃ = Δ₄ = fraction·ψ`.
    pub fn proportional(phi: f64, psi: f64, fraction: f64) -> Self {
        FuzzySpreads::new(
            fraction * phi,
            fraction * phi,
            fraction * psi,
            fraction * psi,
        )
    }

    /// `Δ₅ = Δ₁ + Δ₃`, the left spread of `η̃ = φ̃ + ψ̃`.
    pub fn d5(&self) -> f64 {
        self.d1 + self.d3
    }

    /// `Δ₆ = Δ₂ + Δ₄`, the right spread of `η̃`.
    pub fn d6(&self) -> f64 {
        self.d2 + self.d4
    }

    pub fn validate_demand(&self, phi: f64, bounds: Bounds) -> Result<()> {
        check_spread("d1", self.d1, "phi", phi, true)?;
        check_spread("d2", self.d2, "phi", phi, bounds == Bounds::Strict)
    }

    pub fn validate_leakage(&self, psi: f64, bounds: Bounds) -> Result<()> {
        check_spread("d3", self.d3, "psi", psi, true)?;
        check_spread("d4", self.d4, "psi", psi, bounds == Bounds::Strict)
    }

    pub fn validate(&self, phi: f64, psi: f64, bounds: Bounds) -> Result<()> {
        self.validate_demand(phi, bounds)?;
        self.validate_leakage(psi, bounds)
    }

    pub fn demand(&self, phi: f64) -> Result<TriangularFuzzyNumber> {
        TriangularFuzzyNumber::from_spreads(phi, self.d1, self.d2)
    }

    pub fn leakage(&self, psi: f64) -> Result<TriangularFuzzyNumber> {
        TriangularFuzzyNumber::from_spreads(psi, self.d3, self.d4)
    }
}

fn check_spread(name: &str, value: f64, rate: &str, bound: f64, upper: bool) -> Result<()> {
    ensure(
        value.is_finite() && value > 0.0,
        &format!("0 < {name}"),
        || format!("{name} = {value}"),
    )?;
    if upper {
        ensure(value < bound, &format!("{name} < {rate}"), || {
            format!("{name} = {value}, {rate} = {bound}")
        })?;
    }
    Ok(())
}

/// How a `ζ` value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaMethod {
    ClosedForm,
    /// `Δ₅` or `Δ₆` was below [`NEAR_SINGULAR_RATIO`]`·η`.
    QuadratureFallback,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Zeta {
    pub value: f64,
    pub method: ZetaMethod,
}

/// Defuzzification under a chosen spread-bound policy.
#[derive(Debug, Clone, Copy, Default)]
pub struct Defuzzifier {
    pub bounds: Bounds,
}

impl Defuzzifier {
    pub fn new(bounds: Bounds) -> Self {
        Defuzzifier { bounds }
    }

    pub fn delta(&self, phi: f64, sp: &FuzzySpreads) -> Result<f64> {
        check_rate("phi", phi)?;
        sp.validate_demand(phi, self.bounds)?;
        Ok(phi + (sp.d2 - sp.d1) / 4.0)
    }

    /// `ζ` by the logarithmic closed form, or by quadrature near the removable
    /// singularity at `Δ₅ = 0` or `Δ₆ = 0`.
    pub fn zeta(&self, phi: f64, psi: f64, sp: &FuzzySpreads) -> Result<Zeta> {
        self.check(phi, psi, sp)?;
        let eta = phi + psi;
        let threshold = NEAR_SINGULAR_RATIO * eta;
        if sp.d5() < threshold || sp.d6() < threshold {
            Ok(Zeta {
                value: leakage_fraction_quadrature(phi, psi, sp)?,
                method: ZetaMethod::QuadratureFallback,
            })
        } else {
            Ok(Zeta {
                value: log_form(phi, psi, sp),
                method: ZetaMethod::ClosedForm,
            })
        }
    }

    pub fn zeta_closed_form(&self, phi: f64, psi: f64, sp: &FuzzySpreads) -> Result<f64> {
        self.zeta(phi, psi, sp).map(|z| z.value)
    }

    pub fn zeta_quadrature(&self, phi: f64, psi: f64, sp: &FuzzySpreads) -> Result<f64> {
        self.check(phi, psi, sp)?;
        leakage_fraction_quadrature(phi, psi, sp)
    }

    /// α-cut of `ψ̃/(φ̃+ψ̃)`, computed as the interval quotient of the two cuts.
    pub fn leakage_fraction_cut(
        &self,
        phi: f64,
        psi: f64,
        sp: &FuzzySpreads,
        alpha: AlphaLevel,
    ) -> Result<Interval> {
        self.check(phi, psi, sp)?;
        let leak = sp.leakage(psi)?;
        let total = sp.demand(phi)? + leak;
        leak.alpha_cut(alpha).div(&total.alpha_cut(alpha))
    }

    fn check(&self, phi: f64, psi: f64, sp: &FuzzySpreads) -> Result<()> {
        check_rate("phi", phi)?;
        check_rate("psi", psi)?;
        sp.validate(phi, psi, self.bounds)
    }
}

fn check_rate(name: &str, value: f64) -> Result<()> {
    ensure(
        value.is_finite() && value > 0.0,
        &format!("{name} > 0"),
        || format!("{name} = {value}"),
    )
}

/// `δ = φ + (Δ₂ − Δ₁)/4` under the strict spread bounds.
pub fn delta_signed_demand(phi: f64, sp: &FuzzySpreads) -> Result<f64> {
    Defuzzifier::default().delta(phi, sp)
}

/// `ζ` via the closed form, with quadrature fallback near singular spreads.
pub fn zeta_closed_form(phi: f64, psi: f64, sp: &FuzzySpreads) -> Result<f64> {
    Defuzzifier::default().zeta_closed_form(phi, psi, sp)
}

/// `ζ` via adaptive quadrature of the quotient's α-cut endpoints.
pub fn zeta_quadrature(phi: f64, psi: f64, sp: &FuzzySpreads) -> Result<f64> {
    Defuzzifier::default().zeta_quadrature(phi, psi, sp)
}

// ½{ (ψΔ₆+ηΔ₃)/Δ₆² · ln((η+Δ₆)/η) + (ψΔ₅+ηΔ₄)/Δ₅² · ln(η/(η−Δ₅)) − Δ₃/Δ₆ − Δ₄/Δ₅ }
fn log_form(phi: f64, psi: f64, sp: &FuzzySpreads) -> f64 {
    let eta = phi + psi;
    let (d3, d4, d5, d6) = (sp.d3, sp.d4, sp.d5(), sp.d6());
    let upper_log = (d6 / eta).ln_1p();
    let lower_log = -(-d5 / eta).ln_1p();
    0.5 * ((psi * d6 + eta * d3) / (d6 * d6) * upper_log
        + (psi * d5 + eta * d4) / (d5 * d5) * lower_log
        - d3 / d6
        - d4 / d5)
}

// Left endpoint ψ_L(α)/η_U(α), right endpoint ψ_U(α)/η_L(α).
fn leakage_fraction_quadrature(phi: f64, psi: f64, sp: &FuzzySpreads) -> Result<f64> {
    let leak = sp.leakage(psi)?;
    let total = sp.demand(phi)? + leak;
    signed_distance_quadrature(
        |a| leak.lower_at(a) / total.upper_at(a),
        |a| leak.upper_at(a) / total.lower_at(a),
    )
}

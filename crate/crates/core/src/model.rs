//! Crisp and fuzzy leakage EOQ models.
//!
//! Stock of size `q` is drawn down by demand `φ` and leakage `ψ`, so it runs
//! out after `t₁ = q/(φ+ψ)` while the replenishment cycle sized by demand
//! alone is `t = q/φ`. The average cost per unit time is
//!
//! ```text
//! TC(q) = qh/2 + φs/q + ψqh / (2(φ+ψ))
//! ```
//!
//! The fuzzy model replaces `φ` by `δ` in the ordering term and `ψ/(φ+ψ)` by
//! `ζ` in the leakage term, giving `Z(q) = qh/2 + sδ/q + (qh/2)ζ`.

use serde::{Deserialize, Serialize};

use crate::defuzzify::{Bounds, Defuzzifier, FuzzySpreads};
use crate::error::{ensure, Result};

/// Crisp model inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrispParams {
    /// Demand rate φ.
    pub phi: f64,
    /// Leakage rate ψ.
    pub psi: f64,
    /// Holding cost per unit per unit time.
    pub h: f64,
    /// Set-up cost per order.
    pub s: f64,
}

impl CrispParams {
    pub fn new(phi: f64, psi: f64, h: f64, s: f64) -> Result<Self> {
        let p = CrispParams { phi, psi, h, s };
        p.validate()?;
        Ok(p)
    }

    /// φ = 600, ψ = 10, h = 10, s = 100.
    pub const fn published_example() -> Self {
        CrispParams {
            phi: 600.0,
            psi: 10.0,
            h: 10.0,
            s: 100.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = |name: &str, v: f64| {
            ensure(v.is_finite(), &format!("finite {name}"), || {
                format!("{name} = {v}")
            })
        };
        finite("phi", self.phi)?;
        finite("psi", self.psi)?;
        finite("h", self.h)?;
        finite("s", self.s)?;
        ensure(self.phi > 0.0, "phi > 0", || format!("phi = {}", self.phi))?;
        ensure(self.psi >= 0.0, "psi >= 0", || {
            format!("psi = {}", self.psi)
        })?;
        ensure(self.h > 0.0, "h > 0", || format!("h = {}", self.h))?;
        ensure(self.s > 0.0, "s > 0", || format!("s = {}", self.s))
    }

    /// Crisp leakage fraction `ψ/(φ+ψ)`.
    pub fn leakage_fraction(&self) -> f64 {
        self.psi / (self.phi + self.psi)
    }
}

/// Timing and loss within one replenishment cycle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CycleQuantities {
    /// Cycle length `q/φ`.
    pub t: f64,
    /// Time for stock to reach zero, `q/(φ+ψ)`.
    pub t1: f64,
    /// Units lost to leakage per cycle, `ψq/(φ+ψ)`.
    pub leaked: f64,
}

/// One solved instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub delta: f64,
    pub zeta: f64,
    pub q_star: f64,
    pub z_star: f64,
    /// Percent deviation of `q_star` from the crisp baseline.
    pub rel_q: f64,
    /// Percent deviation of `z_star` from the crisp baseline.
    pub rel_z: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelMetrics {
    pub rel_q: f64,
    pub rel_z: f64,
}

/// Crisp reference point for the relative-variation columns.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Baseline {
    /// The unrounded crisp optimum of the same parameters.
    #[default]
    Exact,
    /// Fixed values, e.g. the rounded `q*_c = 108`, `Z*_c = 1104` of the published example.
    Fixed { q_star: f64, z_star: f64 },
}

impl Baseline {
    pub const PUBLISHED: Baseline = Baseline::Fixed {
        q_star: 108.0,
        z_star: 1104.0,
    };

    pub fn record(&self, p: &CrispParams) -> Result<SolutionRecord> {
        match *self {
            Baseline::Exact => crisp_optimal(p),
            Baseline::Fixed { q_star, z_star } => Ok(SolutionRecord {
                delta: p.phi,
                zeta: p.leakage_fraction(),
                q_star,
                z_star,
                rel_q: 0.0,
                rel_z: 0.0,
            }),
        }
    }
}

fn check_lot(q: f64) -> Result<()> {
    ensure(q.is_finite() && q > 0.0, "q > 0", || format!("q = {q}"))
}

/// `TC(q) = qh/2 + φs/q + ψqh/(2(φ+ψ))`.
pub fn crisp_total_cost(q: f64, p: &CrispParams) -> Result<f64> {
    p.validate()?;
    check_lot(q)?;
    Ok(defuzzified_cost(q, p.h, p.s, p.phi, p.leakage_fraction()))
}

/// Minimiser of [`crisp_total_cost`], `q*_c = √(2sφ(φ+ψ) / (h(φ+2ψ)))`.
pub fn crisp_optimal(p: &CrispParams) -> Result<SolutionRecord> {
    p.validate()?;
    let q_star = (2.0 * p.s * p.phi * (p.phi + p.psi) / (p.h * (p.phi + 2.0 * p.psi))).sqrt();
    Ok(SolutionRecord {
        delta: p.phi,
        zeta: p.leakage_fraction(),
        q_star,
        z_star: crisp_total_cost(q_star, p)?,
        rel_q: 0.0,
        rel_z: 0.0,
    })
}

pub fn cycle_quantities(q: f64, p: &CrispParams) -> Result<CycleQuantities> {
    p.validate()?;
    check_lot(q)?;
    Ok(CycleQuantities {
        t: q / p.phi,
        t1: q / (p.phi + p.psi),
        leaked: p.psi * q / (p.phi + p.psi),
    })
}

/// `Z(q) = qh/2 + sδ/q + (qh/2)ζ` for already defuzzified `δ` and `ζ`.
pub fn defuzzified_cost(q: f64, h: f64, s: f64, delta: f64, zeta: f64) -> f64 {
    0.5 * q * h + s * delta / q + 0.5 * q * h * zeta
}

/// `q* = √(2sδ / (h(1+ζ)))`.
pub fn optimal_lot_size(h: f64, s: f64, delta: f64, zeta: f64) -> f64 {
    (2.0 * s * delta / (h * (1.0 + zeta))).sqrt()
}

/// Percent deviations of `fuzzy` from `crisp` in lot size and cost.
pub fn rel_metrics(fuzzy: &SolutionRecord, crisp: &SolutionRecord) -> Result<RelMetrics> {
    ensure(crisp.q_star > 0.0, "crisp q* > 0", || {
        format!("q* = {}", crisp.q_star)
    })?;
    ensure(crisp.z_star > 0.0, "crisp Z* > 0", || {
        format!("Z* = {}", crisp.z_star)
    })?;
    Ok(RelMetrics {
        rel_q: (fuzzy.q_star - crisp.q_star) / crisp.q_star * 100.0,
        rel_z: (fuzzy.z_star - crisp.z_star) / crisp.z_star * 100.0,
    })
}

/// Fuzzy-model solver with configurable spread bounds and crisp baseline.
#[derive(Debug, Clone, Copy, Default)]
pub struct Solver {
    pub bounds: Bounds,
    pub baseline: Baseline,
}

impl Solver {
    pub fn new(bounds: Bounds, baseline: Baseline) -> Self {
        Solver { bounds, baseline }
    }

    pub fn defuzzifier(&self) -> Defuzzifier {
        Defuzzifier::new(self.bounds)
    }

    pub fn fuzzy_cost(&self, q: f64, p: &CrispParams, sp: &FuzzySpreads) -> Result<f64> {
        p.validate()?;
        check_lot(q)?;
        let (delta, zeta) = self.defuzzify(p, sp)?;
        Ok(defuzzified_cost(q, p.h, p.s, delta, zeta))
    }

    pub fn fuzzy_optimal(&self, p: &CrispParams, sp: &FuzzySpreads) -> Result<SolutionRecord> {
        p.validate()?;
        let (delta, zeta) = self.defuzzify(p, sp)?;
        self.solve_defuzzified(p, delta, zeta)
    }

    /// Optimum for given `δ` and `ζ`, bypassing defuzzification of spreads.
    ///
    /// Lets externally supplied `ζ` values (such as a published table's) be
    /// pushed through the same optimisation and relative-variation steps.
    pub fn solve_defuzzified(
        &self,
        p: &CrispParams,
        delta: f64,
        zeta: f64,
    ) -> Result<SolutionRecord> {
        p.validate()?;
        ensure(delta > 0.0, "delta > 0", || format!("delta = {delta}"))?;
        ensure(zeta > -1.0, "1 + zeta > 0", || format!("zeta = {zeta}"))?;
        let q_star = optimal_lot_size(p.h, p.s, delta, zeta);
        let curvature = 2.0 * p.s * delta / q_star.powi(3);
        ensure(curvature > 0.0, "d2Z/dq2 > 0 at q*", || {
            format!("{curvature}")
        })?;
        let z_star = defuzzified_cost(q_star, p.h, p.s, delta, zeta);
        let mut record = SolutionRecord {
            delta,
            zeta,
            q_star,
            z_star,
            rel_q: 0.0,
            rel_z: 0.0,
        };
        let rel = rel_metrics(&record, &self.baseline.record(p)?)?;
        record.rel_q = rel.rel_q;
        record.rel_z = rel.rel_z;
        Ok(record)
    }

    fn defuzzify(&self, p: &CrispParams, sp: &FuzzySpreads) -> Result<(f64, f64)> {
        let d = self.defuzzifier();
        Ok((d.delta(p.phi, sp)?, d.zeta_closed_form(p.phi, p.psi, sp)?))
    }
}

/// [`Solver::fuzzy_cost`] with strict bounds.
pub fn fuzzy_cost(q: f64, p: &CrispParams, sp: &FuzzySpreads) -> Result<f64> {
    Solver::default().fuzzy_cost(q, p, sp)
}

/// [`Solver::fuzzy_optimal`] with strict bounds and the exact crisp baseline.
pub fn fuzzy_optimal(p: &CrispParams, sp: &FuzzySpreads) -> Result<SolutionRecord> {
    Solver::default().fuzzy_optimal(p, sp)
}

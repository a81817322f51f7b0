#![allow(dead_code)]

use leakage_eoq::{CrispParams, FuzzySpreads, TriangularFuzzyNumber};
use rand::Rng;

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let step = p1 / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule
}

/// Composite Gauss–Legendre on `[0, 1]` with geometrically graded panels
/// toward both ends. Independent of the crate's adaptive Simpson.
pub fn integrate_unit(f: impl Fn(f64) -> f64) -> f64 {
    let rule = gauss_legendre(12);
    let mut edges = vec![0.0];
    for k in (1..=40).rev() {
        edges.push(0.5 * 0.7f64.powi(k));
    }
    let mut upper: Vec<f64> = edges.iter().rev().map(|e| 1.0 - e).collect();
    edges.append(&mut upper);
    edges.dedup();
    let mut total = 0.0;
    for w in edges.windows(2) {
        let (a, b) = (w[0], w[1]);
        // Each graded panel is further split into 8 equal pieces.
        for j in 0..8 {
            let lo = a + (b - a) * j as f64 / 8.0;
            let hi = a + (b - a) * (j + 1) as f64 / 8.0;
            let (m, h) = (0.5 * (lo + hi), 0.5 * (hi - lo));
            total += rule
                .iter()
                .map(|&(x, wt)| wt * h * f(m + h * x))
                .sum::<f64>();
        }
    }
    total
}

/// Oracle ζ: ½∫₀¹ [ψ_L/η_U + ψ_U/η_L] dα written directly from the endpoint formulas.
pub fn zeta_oracle(phi: f64, psi: f64, sp: &FuzzySpreads) -> f64 {
    let eta = phi + psi;
    let (d3, d4, d5, d6) = (sp.d3, sp.d4, sp.d1 + sp.d3, sp.d2 + sp.d4);
    0.5 * integrate_unit(|a| {
        ((psi - d3) + d3 * a) / ((eta + d6) - d6 * a)
            + ((psi + d4) - d4 * a) / ((eta - d5) + d5 * a)
    })
}

pub fn random_params(rng: &mut impl Rng) -> CrispParams {
    let phi = rng.random_range(50.0..5000.0);
    CrispParams {
        phi,
        psi: phi * rng.random_range(0.001..0.5),
        h: rng.random_range(0.1..50.0),
        s: rng.random_range(1.0..1000.0),
    }
}

pub fn random_spreads(rng: &mut impl Rng, p: &CrispParams) -> FuzzySpreads {
    let mut frac = || rng.random_range(0.01..0.99);
    FuzzySpreads::new(
        frac() * p.phi,
        frac() * p.phi,
        frac() * p.psi,
        frac() * p.psi,
    )
}

pub fn random_tfn(rng: &mut impl Rng, scale: f64) -> TriangularFuzzyNumber {
    let m = rng.random_range(-scale..scale);
    let l = rng.random_range(0.0..scale);
    let r = rng.random_range(0.0..scale);
    TriangularFuzzyNumber::new(m - l, m, m + r).unwrap()
}

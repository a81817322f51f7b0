mod common;

use leakage_eoq::defuzzify::{zeta_closed_form, zeta_quadrature, Defuzzifier};
use leakage_eoq::fuzzy::AlphaLevel;
use leakage_eoq::sensitivity::reference_table;
use leakage_eoq::{CrispParams, FuzzySpreads};
use proptest::prelude::*;

fn params_and_spreads() -> impl Strategy<Value = (CrispParams, FuzzySpreads)> {
    (
        50.0..5000.0f64,
        0.001..0.5f64,
        [0.01..0.99f64, 0.01..0.99f64, 0.01..0.99f64, 0.01..0.99f64],
    )
        .prop_map(|(phi, leak, f)| {
            let psi = phi * leak;
            let p = CrispParams {
                phi,
                psi,
                h: 10.0,
                s: 100.0,
            };
            (
                p,
                FuzzySpreads::new(f[0] * phi, f[1] * phi, f[2] * psi, f[3] * psi),
            )
        })
}

#[test]
fn reference_rows_match_gauss_legendre_oracle() {
    let p = CrispParams::published_example();
    for row in reference_table() {
        let sp = row.spreads();
        let oracle = common::zeta_oracle(p.phi, p.psi, &sp);
        let closed = zeta_closed_form(p.phi, p.psi, &sp).unwrap();
        let quad = zeta_quadrature(p.phi, p.psi, &sp).unwrap();
        assert!(
            (closed - oracle).abs() / oracle < 1e-10,
            "{sp:?}: {closed} vs {oracle}"
        );
        assert!(
            (quad - oracle).abs() / oracle < 1e-9,
            "{sp:?}: {quad} vs {oracle}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn zeta_is_positive((p, sp) in params_and_spreads()) {
        prop_assert!(zeta_closed_form(p.phi, p.psi, &sp).unwrap() > 0.0);
    }

    #[test]
    fn closed_form_matches_quadrature((p, sp) in params_and_spreads()) {
        let closed = zeta_closed_form(p.phi, p.psi, &sp).unwrap();
        let quad = zeta_quadrature(p.phi, p.psi, &sp).unwrap();
        prop_assert!((closed - quad).abs() / quad < 1e-8, "{} vs {}", closed, quad);
    }

    #[test]
    fn closed_form_matches_independent_oracle((p, sp) in params_and_spreads()) {
        let closed = zeta_closed_form(p.phi, p.psi, &sp).unwrap();
        let oracle = common::zeta_oracle(p.phi, p.psi, &sp);
        prop_assert!((closed - oracle).abs() / oracle < 1e-8, "{} vs {}", closed, oracle);
    }

    #[test]
    fn quotient_cut_is_ordered((p, sp) in params_and_spreads(), a in 0.0..=1.0f64) {
        let cut = Defuzzifier::default()
            .leakage_fraction_cut(p.phi, p.psi, &sp, AlphaLevel::new(a).unwrap())
            .unwrap();
        prop_assert!(cut.lo() <= cut.hi() && cut.lo() > 0.0);
    }

    #[test]
    fn symmetric_spreads_stay_in_support_hull((p, sp) in params_and_spreads()) {
        let sym = FuzzySpreads::new(sp.d1, sp.d1, sp.d3, sp.d3);
        let eta = p.phi + p.psi;
        let z = zeta_closed_form(p.phi, p.psi, &sym).unwrap();
        let lo = (p.psi - sym.d3) / (eta + sym.d6());
        let hi = (p.psi + sym.d4) / (eta - sym.d5());
        prop_assert!(lo <= z && z <= hi);
    }
}

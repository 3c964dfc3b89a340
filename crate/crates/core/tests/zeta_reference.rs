//! Both evaluators against a frozen grid of externally computed
//! `zeta(1/2 + it)` values (40-digit arithmetic, rounded to f64), and the
//! advertised error models against the truth.

use zetalab::zeta::{zeta_em, zeta_half_line, zeta_rs, Method};
use zetalab::CReal;

/// `(t, Re zeta, Im zeta)`; the reference values carry ~1e-16 relative
/// rounding of their own.
const ZETA_REFERENCE: &[(f64, f64, f64)] = &[
    (10.0, 1.5448952202967527, -0.11533646527127338),
    (16.237767391887218, 1.1877129567224893, 1.2271349971599386),
    (26.366508987303583, 1.1115348484329954, 1.5566325716788065),
    (42.81332398719393, 0.7000464903112709, -0.3213619087862331),
    (69.51927961775606, 0.017137873058337832, -0.056594896783442726),
    (112.8837891684689, 1.3316710569213892, 0.9450212092069571),
    (183.29807108324357, 3.3226232560419855, -1.1841785132736544),
    (297.63514416313177, 1.3279132880282143, -1.3996483701468259),
    (483.29302385717517, 0.7422271687944553, 0.014132190628331303),
    (784.7599703514611, 1.59807161574813, 0.38978829997753606),
    (1274.2749857031336, -0.04910484953431878, 0.22406610337562674),
    (2069.13808111479, 0.7065875206145737, 2.2833392116151376),
    (3359.8182862837807, 0.047381459751927646, -0.03492114653073125),
    (5455.59478116852, 2.004044682386803, 0.9662968348672265),
    (8858.667904100823, -0.01663619901188328, -0.10093445451024395),
    (14384.49888287663, 2.2468574096981735, -0.720934383076564),
    (23357.214690901215, 0.6794628507030456, 6.204869401706956),
    (37926.9019073225, 0.17839246692871613, -1.5823100686618647),
    (61584.821106602605, 0.48401562758774447, -0.5602026478954382),
    (100000.0, 1.0730320148577532, 5.780848544363504),
    (6.5, 0.923348126981909, 0.37700220302114135),
    (8.0, 1.2416151055868185, 0.3600475883872323),
    (14.134725141734695, -2.6129945002613662e-17, 1.6413410360830773e-16),
    (1000000.0, 0.0760890697382271, 2.805102101019299),
];

fn reference() -> impl Iterator<Item = (f64, CReal)> {
    ZETA_REFERENCE.iter().map(|&(t, re, im)| (t, CReal::new(re, im)))
}

#[test]
fn riemann_siegel_error_model_holds_against_truth() {
    for (t, want) in reference() {
        let (got, est) = zeta_rs(t);
        let delta = (got - want).norm();
        // the reference itself is rounded at ~1e-15 |zeta|
        let slack = 1e-14 * (1.0 + want.norm());
        assert!(delta <= est + slack, "t={t}: delta {delta:e} > est {est:e}");
        if t >= 10.0 {
            assert!(est <= 1e-8, "t={t}: est {est:e} above the advertised ceiling");
        }
    }
}

#[test]
fn euler_maclaurin_error_model_holds_against_truth() {
    for (t, want) in reference() {
        let (got, est) = zeta_em(t);
        let delta = (got - want).norm();
        let slack = 1e-14 * (1.0 + want.norm());
        assert!(delta <= est + slack, "t={t}: delta {delta:e} > est {est:e}");
        assert!(est <= 1e-10, "t={t}: est {est:e}; truncation target is 1e-10");
    }
}

#[test]
fn zeta_half_line_agrees_with_truth_for_both_methods() {
    for (t, want) in reference() {
        for method in [Method::RiemannSiegel, Method::EulerMaclaurin] {
            if method == Method::RiemannSiegel && t < zetalab::zeta::RS_MIN_T {
                continue;
            }
            let p = zeta_half_line(t, method).unwrap();
            assert!(
                (p.value - want).norm() < 1e-7,
                "{method:?} t={t}: {:e}",
                (p.value - want).norm()
            );
        }
    }
}

#[test]
fn dual_method_agreement_on_the_log_grid() {
    // 100 log-spaced ordinates in [10, 1e5]
    let mut worst: (f64, f64) = (0.0, 0.0);
    for i in 0..100 {
        let t = 10.0 * 10f64.powf(4.0 * i as f64 / 99.0);
        let a = zeta_half_line(t, Method::RiemannSiegel).unwrap();
        let b = zeta_half_line(t, Method::EulerMaclaurin).unwrap();
        let delta = (a.value - b.value).norm();
        if delta > worst.1 {
            worst = (t, delta);
        }
        assert!(delta < 1e-6, "t={t}: {delta:e}");
        assert!(
            delta <= a.error_estimate.max(b.error_estimate),
            "t={t}: disagreement {delta:e} above both models ({:e}, {:e})",
            a.error_estimate,
            b.error_estimate
        );
    }
    eprintln!("worst dual-method disagreement: {:e} at t = {}", worst.1, worst.0);
}

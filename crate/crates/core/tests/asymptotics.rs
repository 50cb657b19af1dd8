use catalan_core::asymptotics::{estimate, ratio_diagnostics, t_over_f_limit};
use catalan_core::{SeqEngine, SeqKind};

#[test]
fn t_over_f_approaches_limit() {
    let e = SeqEngine::new();
    let limit = t_over_f_limit();
    let ratios: Vec<f64> = (6..=400).map(|n| ratio_diagnostics(n, &e).unwrap().t_over_f).collect();
    assert!(ratios.windows(2).all(|w| w[0] < w[1]));
    assert!(ratios.iter().all(|&r| r < limit));
    let last = *ratios.last().unwrap();
    assert!(((last - limit) / limit).abs() < 0.005);
}

#[test]
fn growth_ratios() {
    let e = SeqEngine::new();
    let d = ratio_diagnostics(400, &e).unwrap();
    assert!(((d.growth_f - 8.0) / 8.0).abs() < 0.01);
    assert!(((d.growth_t - 8.0) / 8.0).abs() < 0.01);
    assert!(((d.growth_c - 4.0) / 4.0).abs() < 0.01);
}

#[test]
fn f_estimate_ratio_band_and_drift() {
    let e = SeqEngine::new();
    for n in 50..=400 {
        let r = estimate(SeqKind::F, n, &e).unwrap().exact_ratio;
        assert!(r > 0.8 && r < 1.2, "n = {n}: {r}");
    }
    let d: Vec<f64> = [50, 100, 200, 400]
        .iter()
        .map(|&n| (estimate(SeqKind::F, n, &e).unwrap().exact_ratio - 1.0).abs())
        .collect();
    assert!(d.windows(2).all(|w| w[1] < w[0]), "{d:?}");
}

#[test]
fn catalan_estimate_is_off_by_a_constant() {
    let e = SeqEngine::new();
    let r: Vec<f64> = [50, 100, 200, 400]
        .iter()
        .map(|&n| estimate(SeqKind::C, n, &e).unwrap().exact_ratio)
        .collect();
    assert!(r.iter().all(|&x| x > 0.2 && x < 0.3), "{r:?}");
    assert!(r.windows(3).all(|w| (w[2] - w[1]).abs() < (w[1] - w[0]).abs()));
}

#[test]
fn estimates_positive_and_finite_in_log_space() {
    let e = SeqEngine::new();
    for kind in [SeqKind::C, SeqKind::A, SeqKind::F, SeqKind::T] {
        for n in [1, 2, 10, 100, 800] {
            let est = estimate(kind, n, &e).unwrap();
            assert!(est.estimate > 0.0);
            assert!(est.ln_estimate.is_finite());
            assert!(est.exact_ratio.is_finite() && est.exact_ratio > 0.0);
        }
    }
}

use starcat::harness::{law_names, run_laws, run_laws_with, GenConfig, Involution};
use starcat::RingId;

#[test]
fn negated_involution_is_caught() {
    let cfg = GenConfig::new(RingId::Gaussian, 7, 6).with_max_dim(3);
    let report = run_laws_with(&cfg, Involution::NegatedForTesting);
    let law = report.law("core.involution_laws").expect("law is registered");
    assert!(law.failed > 0);
    let cx = law.counterexample.as_ref().expect("a counterexample is kept");
    assert!(cx.document["morphisms"].as_object().is_some_and(|m| !m.is_empty()));
    assert!(!report.all_passed());
}

#[test]
fn reports_are_deterministic() {
    let cfg = GenConfig::new(RingId::Quaternion, 11, 3).with_max_dim(3);
    let a = run_laws(&cfg).without_timing();
    let b = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap().install(|| run_laws(&cfg).without_timing());
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn small_runs_are_green_on_every_ring() {
    for ring in RingId::ALL {
        let report = run_laws(&GenConfig::new(ring, 2, 4).with_max_dim(3));
        let failed: Vec<_> = report.laws.iter().filter(|l| l.failed > 0).map(|l| l.name.as_str()).collect();
        assert!(failed.is_empty(), "{}: {failed:?}", ring.name());
        assert_eq!(report.laws.len(), law_names(ring).len());
        for law in &report.laws {
            assert_eq!(law.passed + law.vacuous + law.failed, 4);
        }
    }
}

#[test]
fn ratfun_has_its_own_scalar_law() {
    assert!(law_names(RingId::Ratfun).contains(&"scalar.no_hermitian_sqrt_of_minus_x2"));
    assert!(!law_names(RingId::Rational).contains(&"scalar.no_hermitian_sqrt_of_minus_x2"));
}

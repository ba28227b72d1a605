use hankel_core::determinants::DeterminantKind;
use hankel_core::subordination::ClassTag;
use hankel_core::ScalarMode;
use hankel_verifier::catalog::{catalog, CatalogName, Provenance};
use hankel_verifier::suites::{run_coeffs, run_extremal_suite, run_maximization_suite, run_sampling_suite};

#[test]
fn discrepant_entries_are_data_not_failures() {
    let r = run_extremal_suite(ScalarMode::Exact).unwrap();
    assert!(r.passed);
    for name in ["h2 hankel", "h4 hankel"] {
        let c = r.check(name).unwrap();
        assert!(c.passed);
        assert_eq!(c.fields["matches_paper"], false);
        assert_eq!(c.fields["provenance"], "paper-discrepant");
    }
    let discrepant: Vec<_> = catalog()
        .into_iter()
        .filter(|e| e.expected.as_ref().unwrap().provenance == Provenance::Discrepant)
        .map(|e| e.name)
        .collect();
    assert_eq!(discrepant, [CatalogName::H2, CatalogName::H4]);
}

#[test]
fn sharp_entries_attain_their_bounds() {
    let r = run_extremal_suite(ScalarMode::Exact).unwrap();
    for name in ["h1 hankel", "h3 hankel", "h5 toeplitz", "h7 toeplitz"] {
        assert_eq!(r.check(name).unwrap().fields["attains_bound"], true, "{name}");
    }
    for name in ["h6 toeplitz", "h8 toeplitz"] {
        assert_eq!(r.check(name).unwrap().fields["attains_bound"], false, "{name}");
    }
}

#[test]
fn membership_diagnostic_flags_only_h7() {
    let r = run_extremal_suite(ScalarMode::Exact).unwrap();
    for e in catalog() {
        let kind = e.expected.as_ref().unwrap().kind;
        let c = r.check(&format!("{} {}", e.name.as_str(), kind.as_str())).unwrap();
        let member = c.fields["membership"]["passed"].as_bool().unwrap();
        assert_eq!(member, e.name != CatalogName::H7, "{:?}", e.name);
    }
}

#[test]
fn exact_and_float_extremal_reports_agree() {
    let exact = run_extremal_suite(ScalarMode::Exact).unwrap();
    let float = run_extremal_suite(ScalarMode::Float).unwrap();
    assert!(float.passed);
    for (a, b) in exact.checks.iter().zip(&float.checks) {
        assert_eq!(a.name, b.name);
        if let (Some(x), Some(y)) = (a.fields.get("modulus"), b.fields.get("modulus")) {
            assert!((x.as_f64().unwrap() - y.as_f64().unwrap()).abs() < 1e-12, "{}", a.name);
        }
    }
}

#[test]
fn sampling_requires_a_positive_count() {
    assert!(run_sampling_suite(ClassTag::StarlikeSym, DeterminantKind::Hankel, 0, 1).is_err());
}

#[test]
fn sampling_report_is_independent_of_thread_count() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| run_sampling_suite(ClassTag::ConvexSym, DeterminantKind::Hankel, 300_000, 9).unwrap())
    };
    let mut one = run(1).to_value();
    let mut many = run(4).to_value();
    one["timestamp"] = "".into();
    many["timestamp"] = "".into();
    assert_eq!(one, many);
}

#[test]
fn maximization_rejects_tiny_tolerance() {
    assert!(run_maximization_suite(1e-13, 11).is_err());
}

#[test]
fn coeffs_rejects_zero_length() {
    assert!(run_coeffs(CatalogName::H1, 0, ScalarMode::Exact).is_err());
    let r = run_coeffs(CatalogName::H7, 3, ScalarMode::Exact).unwrap();
    assert!(r.passed);
}

//! Acceptance criteria 1–7. Runs as its own binary and prints one PASS/FAIL
//! line per criterion; exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hankel_core::determinants::{evaluate, h21_closed, t21_closed, DeterminantKind, DeterminantRequest};
use hankel_core::log_coeffs::{gamma_inverse_closed, gamma_of_series, CoeffTuple, LogKind};
use hankel_core::omega::{boundary_restrict, maximize_univariate, ObjectiveFunction, ObjectiveTag, Polynomial, Segment};
use hankel_core::subordination::{
    coeffs_closed, coeffs_from_schwarz, determinant_in_schwarz, determinant_via_coeffs, ClassTag,
};
use hankel_core::{Coeff, Exact, ScalarMode, TruncatedSeries};
use hankel_verifier::catalog::{self, CatalogName};
use hankel_verifier::suites::{functional_routes, run_extremal_suite, run_sampling_suite};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_named<'a>(report: &'a Value, name: &str) -> Result<&'a Value, String> {
    report["checks"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["name"] == name))
        .ok_or_else(|| format!("report has no check '{name}'"))
}

fn sharp_constants() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hankel-verify"))
        .args(["maximize", "--tol", "1e-9"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let grid = report["tolerances"]["grid"].as_f64();
    ensure(grid == Some(2001.0), || format!("default grid not used: {grid:?}"))?;
    for (tag, max, bound) in [("M", "12/1", "1/4"), ("N", "64/1", "1/36"), ("P", "5/1", "5/16"), ("Q", "145/1", "145/2304")] {
        let m = check_named(&report, &format!("{tag} maximum"))?;
        ensure(m["passed"] == true && m["exact"]["exact"] == max, || format!("{tag} maximum: {m}"))?;
        let b = check_named(&report, &format!("{tag} bound"))?;
        ensure(b["passed"] == true && b["bound"]["exact"] == bound, || format!("{tag} bound: {b}"))?;
    }
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("M=12 N=64 P=5 Q=145; bounds 1/4 1/36 5/16 145/2304 in {elapsed:.2?}"))
}

fn boundary_analysis() -> Outcome {
    let m = maximize_univariate(&Polynomial::from_ints(&[0, 6, 0, -6, 1]), 0.0, 1.0, 1e-9).map_err(|e| e.to_string())?;
    let n = maximize_univariate(&Polynomial::from_ints(&[0, 36, 0, -36, 1]), 0.0, 1.0, 1e-9).map_err(|e| e.to_string())?;
    ensure((m.value - 2.437828).abs() <= 1e-5, || format!("6x-6x^3+x^4 max {}", m.value))?;
    ensure((n.value - 13.969963).abs() <= 1e-5, || format!("36x-36x^3+x^4 max {}", n.value))?;
    let want = [
        (ObjectiveTag::M, vec![12, 0, 0, 0, -11]),
        (ObjectiveTag::N, vec![64, 0, -24, 0, -39]),
        (ObjectiveTag::P, vec![4, 0, 0, 0, 1]),
        (ObjectiveTag::Q, vec![64, 0, 32, 0, 49]),
    ];
    for (tag, coeffs) in want {
        let p = boundary_restrict(&ObjectiveFunction::new(tag), Segment::Parabola).map_err(|e| e.to_string())?;
        ensure(p == Polynomial::from_ints(&coeffs), || format!("{tag:?} on parabola: {p}"))?;
    }
    Ok(format!("{:.6} and {:.6}; parabola restrictions exact", m.value, n.value))
}

fn extremal_catalog() -> Outcome {
    let start = Instant::now();
    let report = run_extremal_suite(ScalarMode::Exact).map_err(|e| e.to_string())?;
    let expected = [
        (CatalogName::H1, DeterminantKind::Hankel, Exact::from_ratio(-1, 4)),
        (CatalogName::H3, DeterminantKind::Hankel, Exact::from_ratio(-1, 36)),
        (CatalogName::H5, DeterminantKind::Toeplitz, Exact::from_ratio(-5, 16)),
        (CatalogName::H6, DeterminantKind::Toeplitz, Exact::from_ratio(3, 16)),
        (CatalogName::H7, DeterminantKind::Toeplitz, Exact::from_ratio(-145, 2304)),
        (CatalogName::H8, DeterminantKind::Toeplitz, Exact::from_ratio(143, 2304)),
    ];
    for (name, kind, want) in expected {
        let f = catalog::series(name, 8).map_err(|e| e.to_string())?;
        let (closed, pipeline) = functional_routes(&f, kind).map_err(|e| e.to_string())?;
        ensure(closed == pipeline, || format!("{name:?}: closed {closed} vs pipeline {pipeline}"))?;
        ensure(pipeline == want, || format!("{name:?}: {pipeline}, want {want}"))?;
        let c = report.check(&format!("{} {}", name.as_str(), kind.as_str())).ok_or("missing report check")?;
        ensure(c.passed, || format!("{name:?} check failed in report"))?;
    }
    let elapsed = start.elapsed();
    ensure(report.passed, || "extremal suite failed".into())?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("h1 h3 h5 h6 h7 h8 exact on both routes in {elapsed:.2?}"))
}

fn discrepancies() -> Outcome {
    let report = run_extremal_suite(ScalarMode::Exact).map_err(|e| e.to_string())?.to_value();
    let mut found = Vec::new();
    for (name, stated, bound) in [("h2", q(1, 12), q(1, 4)), ("h4", q(11, 576), q(1, 36))] {
        let c = check_named(&report, &format!("{name} hankel"))?;
        ensure(c["provenance"] == "paper-discrepant", || format!("{name} provenance {}", c["provenance"]))?;
        ensure(c["paper_stated"]["exact"] == format!("{}/{}", stated.numer(), stated.denom()), || {
            format!("{name} stated {}", c["paper_stated"])
        })?;
        ensure(c["bound"]["exact"] == format!("{}/{}", bound.numer(), bound.denom()), || format!("{name} bound"))?;
        ensure(c["routes_agree"] == true, || format!("{name}: routes disagree"))?;

        // independent oracle: series pipeline only
        let f = catalog::series(CatalogName::parse(name).unwrap(), 8).map_err(|e| e.to_string())?;
        let seq = gamma_of_series(&f, LogKind::Inverse).map_err(|e| e.to_string())?;
        let h = evaluate(&DeterminantRequest::new(&seq, 2, 1, DeterminantKind::Hankel)).map_err(|e| e.to_string())?.value;
        let v = h.as_rational().ok_or("non-rational value")?.clone();
        ensure(c["pipeline"]["exact"] == format!("{}/{}", v.numer(), v.denom()), || format!("{name} report value"))?;
        let modulus = num_traits::Signed::abs(&v);
        ensure(modulus < bound, || format!("{name}: |{v}| not below {bound}"))?;
        ensure(modulus != stated, || format!("{name}: stated value reproduced"))?;
        found.push(format!("{name}: {v} (stated {stated})"));
    }
    Ok(found.join(", "))
}

fn sampling() -> Outcome {
    let start = Instant::now();
    let mut gaps = Vec::new();
    for class in ClassTag::ALL {
        for kind in [DeterminantKind::Hankel, DeterminantKind::Toeplitz] {
            let r = run_sampling_suite(class, kind, 1_000_000, 42).map_err(|e| e.to_string())?.to_value();
            let main = &r["checks"][0];
            ensure(main["violations"] == 0 && main["passed"] == true, || format!("{main}"))?;
            let gap = main["gap"].as_f64().ok_or("missing gap")?;
            ensure((0.0..=1e-3).contains(&gap), || format!("{} {}: gap {gap}", class.as_str(), kind.as_str()))?;
            gaps.push(gap);
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("4 x 10^6 samples, no violation, max gap {:.1e}, {elapsed:.2?}", gaps.iter().cloned().fold(0.0, f64::max)))
}

fn rational(bound: i64) -> impl Strategy<Value = Exact> {
    (1i64..=12).prop_flat_map(move |d| (-bound * d..=bound * d).prop_map(move |n| Exact::from_ratio(n, d)))
}

fn run_200<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: 200, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn oracle_equivalences() -> Outcome {
    let tuple = || [rational(3), rational(3), rational(3), rational(3)];
    run_200(tuple(), |[a2, a3, a4, a5]| {
        let t = CoeffTuple::new(a2, a3, a4, a5);
        let pipeline = gamma_of_series(&t.to_series(8).unwrap(), LogKind::Inverse).unwrap();
        let closed = gamma_inverse_closed(&t);
        prop_assert_eq!(closed.values(), &pipeline.values()[..4]);
        Ok(())
    })
    .map_err(|e| format!("inverse log closed forms: {e}"))?;

    let triple = || [rational(1), rational(1), rational(1)];
    run_200(triple(), |[c1, c2, c3]| {
        let w = TruncatedSeries::new(8, vec![Exact::zero(), c1.clone(), c2.clone(), c3.clone()]).unwrap();
        for tag in ClassTag::ALL {
            let f = coeffs_from_schwarz(&w, tag, 4).unwrap();
            let (a2, a3, a4) = coeffs_closed(tag, &c1, &c2, &c3);
            prop_assert_eq!([f.coeff(2), f.coeff(3), f.coeff(4)], [&a2, &a3, &a4]);
        }
        Ok(())
    })
    .map_err(|e| format!("coefficient closed forms: {e}"))?;

    run_200(triple(), |[c1, c2, c3]| {
        for tag in ClassTag::ALL {
            for kind in [DeterminantKind::Hankel, DeterminantKind::Toeplitz] {
                prop_assert_eq!(
                    determinant_in_schwarz(&c1, &c2, &c3, tag, kind),
                    determinant_via_coeffs(&c1, &c2, &c3, tag, kind)
                );
            }
        }
        Ok(())
    })
    .map_err(|e| format!("Schwarz-form determinants: {e}"))?;

    run_200(tuple(), |[a2, a3, a4, a5]| {
        let t = CoeffTuple::new(a2.clone(), a3.clone(), a4.clone(), a5);
        let seq = gamma_inverse_closed(&t);
        let generic = |kind| evaluate(&DeterminantRequest::new(&seq, 2, 1, kind)).unwrap().value;
        prop_assert_eq!(h21_closed(&a2, &a3, &a4), generic(DeterminantKind::Hankel));
        prop_assert_eq!(t21_closed(&a2, &a3), generic(DeterminantKind::Toeplitz));
        Ok(())
    })
    .map_err(|e| format!("2x2 determinant closed forms: {e}"))?;
    Ok("4 equivalences x 200 exact instances".into())
}

fn koebe() -> Outcome {
    let f = catalog::series(CatalogName::Koebe, 8).map_err(|e| e.to_string())?;
    let inv = f.compositional_inverse().map_err(|e| e.to_string())?;
    let got: Vec<_> = (2..=5).map(|n| inv.coeff(n).clone()).collect();
    let want: Vec<_> = [-2, 5, -14, 42].into_iter().map(Exact::integer).collect();
    ensure(got == want, || format!("inverse coefficients {got:?}"))?;
    let gamma = gamma_of_series(&f, LogKind::Inverse).map_err(|e| e.to_string())?;
    let want = [Exact::from_ratio(-1, 1), Exact::from_ratio(3, 2), Exact::from_ratio(-10, 3)];
    ensure(gamma.values()[..3] == want, || format!("inverse log coefficients {:?}", &gamma.values()[..3]))?;
    for (n, binom) in [(1i64, 2i64), (2, 6), (3, 20)] {
        let g = gamma.get(n as usize).unwrap();
        let m2 = g.modulus_squared().ok_or("non-rational modulus")?;
        let want = q(binom, 2 * n);
        ensure(m2 == &want * &want, || format!("|Gamma_{n}| != {want}"))?;
    }
    Ok("A = (-2, 5, -14, 42); Gamma = (-1, 3/2, -10/3)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("sharp-constant reproduction", sharp_constants),
        ("boundary analysis reproduction", boundary_analysis),
        ("extremal catalog", extremal_catalog),
        ("discrepancy adjudication", discrepancies),
        ("sampling no-violation", sampling),
        ("oracle equivalences", oracle_equivalences),
        ("Koebe vectors", koebe),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Schur-parameter construction against an independent Möbius-chain
//! expansion, plus soundness, coverage and dominance over large samples.

use hankel_core::determinants::DeterminantKind;
use hankel_core::omega::{ObjectiveFunction, ObjectiveTag};
use hankel_core::schwarz::{chunks, lemma21_check, schur_to_coeffs, SchurParams, SchwarzSample};
use hankel_core::subordination::determinant_in_schwarz;
use num_complex::Complex64;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

type Poly = [Complex64; 4];

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for i in 0..4 {
        for j in 0..4 - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

fn div(a: &Poly, b: &Poly) -> Poly {
    let mut q = [Complex64::new(0.0, 0.0); 4];
    for k in 0..4 {
        let mut acc = a[k];
        for j in 1..=k {
            acc -= b[j] * q[k - j];
        }
        q[k] = acc / b[0];
    }
    q
}

/// `(g + z·h(z)) / (1 + ḡ·z·h(z))`, truncated after `z³`.
fn mobius_step(g: Complex64, h: &Poly) -> Poly {
    let zero = Complex64::new(0.0, 0.0);
    let zh = [zero, h[0], h[1], h[2]];
    let num = [g + zh[0], zh[1], zh[2], zh[3]];
    let den = [Complex64::new(1.0, 0.0) + g.conj() * zh[0], g.conj() * zh[1], g.conj() * zh[2], g.conj() * zh[3]];
    div(&num, &den)
}

fn oracle(p: &SchurParams) -> [Complex64; 3] {
    let zero = Complex64::new(0.0, 0.0);
    let g2 = [p.g2, zero, zero, zero];
    let g1 = mobius_step(p.g1, &g2);
    let g0 = mobius_step(p.g0, &g1);
    // w = z·g0
    let w = mul(&[zero, Complex64::new(1.0, 0.0), zero, zero], &g0);
    [w[1], w[2], w[3]]
}

fn unit(rng: &mut impl RngCore) -> f64 {
    rng.next_u32() as f64 / u32::MAX as f64
}

fn random_disk(rng: &mut impl RngCore) -> Complex64 {
    Complex64::from_polar(unit(rng).sqrt(), unit(rng) * std::f64::consts::TAU)
}

#[test]
fn schur_map_matches_mobius_chain() {
    let mut rng = ChaCha20Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let p = SchurParams::new(random_disk(&mut rng), random_disk(&mut rng), random_disk(&mut rng)).unwrap();
        let c = schur_to_coeffs(&p).unwrap();
        let o = oracle(&p);
        for (got, want) in [c.c1, c.c2, c.c3].into_iter().zip(o) {
            assert!((got - want).norm() < 1e-9, "{p:?}: {got} vs {want}");
        }
    }
}

#[test]
fn unimodular_last_parameter_attains_the_third_bound() {
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    for _ in 0..100 {
        let g2 = Complex64::from_polar(1.0, unit(&mut rng) * std::f64::consts::TAU);
        let p = SchurParams::new(random_disk(&mut rng), random_disk(&mut rng), g2).unwrap();
        let c = p.to_coeffs();
        let (x, y) = (c.c1.norm(), c.c2.norm());
        let bound = 1.0 - x * x - y * y / (1.0 + x);
        assert!(c.c3.norm() <= bound + 1e-12);
    }
}

fn par_samples<T: Send>(seed: u64, count: usize, f: impl Fn(SchwarzSample) -> T + Sync) -> Vec<T> {
    chunks(seed, count)
        .into_par_iter()
        .flat_map_iter(|c| c.iter().map(&f).collect::<Vec<_>>())
        .collect()
}

#[test]
fn million_samples_satisfy_the_coefficient_bounds() {
    let failures: Vec<_> = par_samples(11, 1_000_000, |s| (s.index, lemma21_check(&s.coeffs)))
        .into_iter()
        .filter(|(_, ok)| !ok)
        .collect();
    assert!(failures.is_empty(), "{} violations, first {:?}", failures.len(), failures.first());
}

#[test]
fn sampler_reaches_the_extremal_boundary() {
    let best = par_samples(12, 1_000_000, |s| {
        if s.coeffs.c1.norm() < 0.01 {
            s.coeffs.c2.norm()
        } else {
            0.0
        }
    })
    .into_iter()
    .fold(0.0, f64::max);
    assert!(best > 0.99, "max |c2| given |c1| < 0.01 was {best}");
}

#[test]
fn majorants_dominate_the_functionals() {
    let worst = par_samples(13, 100_000, |s| {
        let (x, y) = (s.coeffs.c1.norm(), s.coeffs.c2.norm());
        ObjectiveTag::ALL
            .into_iter()
            .map(|tag| {
                let (class, kind) = tag.functional();
                let d = determinant_in_schwarz(&s.coeffs.c1, &s.coeffs.c2, &s.coeffs.c3, class, kind);
                let scaled = d.norm() * tag.prefactor_denominator() as f64;
                ObjectiveFunction::new(tag).evaluate(x, y) - scaled
            })
            .fold(f64::INFINITY, f64::min)
    })
    .into_iter()
    .fold(f64::INFINITY, f64::min);
    assert!(worst >= -1e-10, "majorant undercut by {worst}");
}

#[test]
fn functional_pairs_are_consistent() {
    for tag in ObjectiveTag::ALL {
        let (class, kind) = tag.functional();
        assert_eq!(ObjectiveTag::for_functional(class, kind), tag);
        assert_eq!(
            hankel_core::subordination::schwarz_prefactor_denominator(class, kind),
            tag.prefactor_denominator()
        );
    }
    assert_eq!(ObjectiveTag::M.functional().1, DeterminantKind::Hankel);
}

//! Schwarz coefficient triples `(c₁, c₂, c₃)` built from Schur parameters,
//! the magnitude bounds every Schwarz function obeys, and a deterministic
//! seeded sampler.
//!
//! A Schwarz function is `w(z) = z·g(z)` with `g` bounded by one; the Schur
//! algorithm peels `g` as `g(z) = (g₀ + z g₁(z))/(1 + ḡ₀ z g₁(z))`, so any
//! parameters in the closed disk give a genuine Schwarz function.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};

/// Additive slack on every magnitude comparison.
pub const SCHWARZ_TOL: f64 = 1e-12;

/// Name of the generator recorded in reports.
pub const GENERATOR_NAME: &str = "ChaCha8Rng (rand_chacha 0.9, seed_from_u64, stream = chunk index)";

/// Random samples per generator stream.
pub const CHUNK_LEN: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchurParams {
    pub g0: Complex64,
    pub g1: Complex64,
    pub g2: Complex64,
}

impl SchurParams {
    pub fn new(g0: Complex64, g1: Complex64, g2: Complex64) -> Result<Self> {
        for (index, g) in [g0, g1, g2].into_iter().enumerate() {
            let modulus = g.norm();
            if modulus.is_nan() || modulus > 1.0 + SCHWARZ_TOL {
                return Err(Error::SchurParamOutOfDisk { index, modulus });
            }
        }
        Ok(SchurParams { g0, g1, g2 })
    }

    pub fn to_coeffs(&self) -> SchwarzCoeffs {
        let s0 = 1.0 - self.g0.norm_sqr();
        let s1 = 1.0 - self.g1.norm_sqr();
        SchwarzCoeffs {
            c1: self.g0,
            c2: s0 * self.g1,
            c3: s0 * (s1 * self.g2 - self.g0.conj() * self.g1 * self.g1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzCoeffs {
    pub c1: Complex64,
    pub c2: Complex64,
    pub c3: Complex64,
}

impl SchwarzCoeffs {
    pub fn new(c1: Complex64, c2: Complex64, c3: Complex64) -> Self {
        SchwarzCoeffs { c1, c2, c3 }
    }
}

/// `c₁ = g₀`, `c₂ = (1−|g₀|²) g₁`, `c₃ = (1−|g₀|²)((1−|g₁|²) g₂ − ḡ₀ g₁²)`.
pub fn schur_to_coeffs(p: &SchurParams) -> Result<SchwarzCoeffs> {
    SchurParams::new(p.g0, p.g1, p.g2).map(|p| p.to_coeffs())
}

/// `|c₁| ≤ 1`, `|c₂| ≤ 1 − |c₁|²`, `|c₃| ≤ 1 − |c₁|² − |c₂|²/(1 + |c₁|)`,
/// each with slack [`SCHWARZ_TOL`].
pub fn lemma21_check(c: &SchwarzCoeffs) -> bool {
    let x = c.c1.norm();
    let y = c.c2.norm();
    let z = c.c3.norm();
    x <= 1.0 + SCHWARZ_TOL
        && y <= 1.0 - x * x + SCHWARZ_TOL
        && z <= 1.0 - x * x - y * y / (1.0 + x) + SCHWARZ_TOL
}

/// One element of the sample stream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzSample {
    pub index: u64,
    pub params: SchurParams,
    pub coeffs: SchwarzCoeffs,
}

/// Parameters injected at the head of every stream, in order: `w = z²`,
/// `w = z`, `w = z³`, `w = iz`.
pub fn corner_params() -> [SchurParams; 4] {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let zero = c(0.0, 0.0);
    [
        SchurParams { g0: zero, g1: c(1.0, 0.0), g2: zero },
        SchurParams { g0: c(1.0, 0.0), g1: zero, g2: zero },
        SchurParams { g0: zero, g1: zero, g2: c(1.0, 0.0) },
        SchurParams { g0: c(0.0, 1.0), g1: zero, g2: zero },
    ]
}

/// Uniform in `[0, 1)` from the top 53 bits.
fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Area-uniform point in the unit disk.
fn disk_point(rng: &mut impl RngCore) -> Complex64 {
    let r = unit_f64(rng).sqrt();
    let theta = std::f64::consts::TAU * unit_f64(rng);
    Complex64::from_polar(r, theta)
}

fn sample_from(rng: &mut impl RngCore, index: u64) -> SchwarzSample {
    let params = SchurParams {
        g0: disk_point(rng),
        g1: disk_point(rng),
        g2: disk_point(rng),
    };
    SchwarzSample { index, params, coeffs: params.to_coeffs() }
}

/// A contiguous slice of the stream. Chunk 0 holds the corner cases; chunk
/// `k ≥ 1` holds random samples from generator stream `k − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleChunk {
    pub seed: u64,
    pub chunk: u64,
    pub start: u64,
    pub len: usize,
}

impl SampleChunk {
    pub fn iter(&self) -> Box<dyn Iterator<Item = SchwarzSample> + Send> {
        let start = self.start;
        if self.chunk == 0 {
            return Box::new(corner_params().into_iter().take(self.len).enumerate().map(
                move |(i, params)| SchwarzSample {
                    index: start + i as u64,
                    params,
                    coeffs: params.to_coeffs(),
                },
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.chunk - 1);
        Box::new((0..self.len as u64).map(move |i| sample_from(&mut rng, start + i)))
    }
}

/// Chunk layout of `sample(seed, count)`; independent of thread count, so
/// parallel consumers see exactly the sequential stream.
pub fn chunks(seed: u64, count: usize) -> Vec<SampleChunk> {
    let corners = corner_params().len().min(count);
    let mut out = vec![SampleChunk { seed, chunk: 0, start: 0, len: corners }];
    let mut start = corners as u64;
    let mut remaining = count - corners;
    let mut chunk = 1;
    while remaining > 0 {
        let len = remaining.min(CHUNK_LEN);
        out.push(SampleChunk { seed, chunk, start, len });
        start += len as u64;
        remaining -= len;
        chunk += 1;
    }
    out
}

/// Deterministic stream of `count` samples for `seed`: the corner cases
/// [`corner_params`] at positions 0..4, then area-uniform Schur parameters.
pub fn sample(seed: u64, count: usize) -> impl Iterator<Item = SchwarzSample> {
    chunks(seed, count).into_iter().flat_map(|c| c.iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn coeffs(a: f64, b: f64, d: f64) -> SchwarzCoeffs {
        SchwarzCoeffs::new(c(a, 0.0), c(b, 0.0), c(d, 0.0))
    }

    #[test]
    fn unimodular_first_parameter_kills_the_rest() {
        let p = SchurParams::new(c(1.0, 0.0), c(0.3, 0.4), c(-0.5, 0.1)).unwrap();
        let k = schur_to_coeffs(&p).unwrap();
        assert_eq!(k, coeffs(1.0, 0.0, 0.0));
    }

    #[test]
    fn pure_powers() {
        let k = schur_to_coeffs(&SchurParams::new(c(0.0, 0.0), c(1.0, 0.0), c(0.7, 0.0)).unwrap()).unwrap();
        assert_eq!(k, coeffs(0.0, 1.0, 0.0));
        let k = schur_to_coeffs(&SchurParams::new(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap()).unwrap();
        assert_eq!(k, coeffs(0.0, 0.0, 1.0));
    }

    #[test]
    fn out_of_disk_parameters_are_rejected() {
        let err = SchurParams::new(c(0.0, 0.0), c(0.9, 0.9), c(0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::SchurParamOutOfDisk { index: 1, .. }));
        let raw = SchurParams { g0: c(1.5, 0.0), g1: c(0.0, 0.0), g2: c(0.0, 0.0) };
        assert!(schur_to_coeffs(&raw).is_err());
        assert!(SchurParams::new(c(f64::NAN, 0.0), c(0.0, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert!(lemma21_check(&coeffs(1.0, 0.0, 0.0)));
        assert!(!lemma21_check(&coeffs(0.5, 0.9, 0.0)));
        assert!(lemma21_check(&coeffs(0.0, 1.0, 0.0)));
        assert!(!lemma21_check(&coeffs(0.0, 1.0, 1e-9)));
        assert!(!lemma21_check(&coeffs(1.0 + 1e-9, 0.0, 0.0)));
    }

    #[test]
    fn stream_layout() {
        let s: Vec<_> = sample(7, 10).collect();
        assert_eq!(s.len(), 10);
        assert_eq!(s[0].coeffs, coeffs(0.0, 1.0, 0.0));
        assert_eq!(s[1].coeffs, coeffs(1.0, 0.0, 0.0));
        assert_eq!(s[2].coeffs, coeffs(0.0, 0.0, 1.0));
        assert_eq!(s[3].coeffs.c1, c(0.0, 1.0));
        assert!(s.iter().enumerate().all(|(i, x)| x.index == i as u64));
        assert_eq!(sample(7, 1).count(), 1);
        assert_eq!(sample(7, 1).next().unwrap().coeffs, coeffs(0.0, 1.0, 0.0));
    }

    #[test]
    fn chunks_partition_the_stream() {
        let count = 2 * CHUNK_LEN + 17;
        let ch = chunks(3, count);
        assert_eq!(ch.iter().map(|c| c.len).sum::<usize>(), count);
        assert_eq!(ch.len(), 4);
        let mut next = 0;
        for c in &ch {
            assert_eq!(c.start, next);
            next += c.len as u64;
        }
    }

    #[test]
    fn same_seed_same_stream_different_seed_differs() {
        let a: Vec<_> = sample(42, 500).collect();
        let b: Vec<_> = sample(42, 500).collect();
        let other: Vec<_> = sample(43, 500).collect();
        assert_eq!(a, b);
        assert_eq!(a[..4], other[..4]);
        assert_ne!(a[4..], other[4..]);
    }

    #[test]
    fn prefix_stability() {
        let short: Vec<_> = sample(9, 100).collect();
        let long: Vec<_> = sample(9, 1000).collect();
        assert_eq!(short[..], long[..100]);
    }
}

//! Certified maximization of the majorants over
//! `Ω = {(x, y) : 0 ≤ x ≤ 1, 0 ≤ y ≤ 1 − x²}`.
//!
//! The maximum is certified on the three boundary pieces by exact
//! univariate analysis (Sturm isolation of critical points). The interior is
//! not solved symbolically; a dense grid scan checks that nothing inside
//! beats the boundary.

mod objective;
mod poly;

pub use objective::{ObjectiveFunction, ObjectiveTag, Term};
pub use poly::{isolate_roots, IsolatedRoot, Polynomial};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_GRID: usize = 2001;
pub const MIN_TOL: f64 = 1e-12;
pub const MAX_DEGREE: usize = 8;

/// A point of `Ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaPoint {
    pub x: f64,
    pub y: f64,
}

impl OmegaPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        let slack = 1e-12;
        if !(-slack..=1.0 + slack).contains(&x) || !(-slack..=1.0 - x * x + slack).contains(&y) {
            return Err(Error::Domain(format!("({x}, {y}) lies outside Omega")));
        }
        Ok(OmegaPoint { x, y })
    }
}

/// The three pieces of `∂Ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Segment {
    /// `y = 0`, parameter `x ∈ [0, 1]`.
    Y0,
    /// `x = 0`, parameter `y ∈ [0, 1]`.
    X0,
    /// `y = 1 − x²`, parameter `x ∈ [0, 1]`.
    Parabola,
}

impl Segment {
    pub const ALL: [Segment; 3] = [Segment::Y0, Segment::X0, Segment::Parabola];

    pub fn as_str(self) -> &'static str {
        match self {
            Segment::Y0 => "y=0",
            Segment::X0 => "x=0",
            Segment::Parabola => "y=1-x^2",
        }
    }

    pub fn variable(self) -> &'static str {
        match self {
            Segment::X0 => "y",
            _ => "x",
        }
    }

    pub fn point(self, t: f64) -> OmegaPoint {
        match self {
            Segment::Y0 => OmegaPoint { x: t, y: 0.0 },
            Segment::X0 => OmegaPoint { x: 0.0, y: t },
            Segment::Parabola => OmegaPoint { x: t, y: 1.0 - t * t },
        }
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The objective restricted to one boundary piece, as an exact polynomial in
/// the piece's parameter. On the parabola `y²/(1+x)` becomes
/// `(1 − x)²(1 + x)`, and in general `yᵇ/(1+x) = (1 − x)ᵇ(1 + x)^{b−1}`.
pub fn boundary_restrict(f: &ObjectiveFunction, segment: Segment) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for term in &f.terms {
        let c = q(term.coeff);
        let piece = match segment {
            Segment::Y0 => {
                if term.y_pow > 0 {
                    continue;
                }
                if term.over_one_plus_x {
                    return Err(Error::NotPolynomial(segment.as_str()));
                }
                Polynomial::monomial(c, term.x_pow as usize)
            }
            Segment::X0 => {
                if term.x_pow > 0 {
                    continue;
                }
                Polynomial::monomial(c, term.y_pow as usize)
            }
            Segment::Parabola => {
                let x_part = Polynomial::monomial(c, term.x_pow as usize);
                if term.over_one_plus_x {
                    if term.y_pow == 0 {
                        return Err(Error::NotPolynomial(segment.as_str()));
                    }
                    let one_minus = Polynomial::from_ints(&[1, -1]).pow(term.y_pow);
                    let one_plus = Polynomial::from_ints(&[1, 1]).pow(term.y_pow - 1);
                    x_part.mul(&one_minus).mul(&one_plus)
                } else {
                    x_part.mul(&Polynomial::from_ints(&[1, 0, -1]).pow(term.y_pow))
                }
            }
        };
        out = out.add(&piece);
    }
    Ok(out)
}

/// Where a candidate for the maximum sits.
#[derive(Debug, Clone, PartialEq)]
pub enum CandidateKind {
    Endpoint(BigRational),
    CriticalExact(BigRational),
    /// A critical point somewhere in `(lo, hi]`.
    CriticalBracket { lo: BigRational, hi: BigRational },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub kind: CandidateKind,
    /// Parameter value used for the estimate (midpoint for brackets).
    pub at: f64,
    pub estimate: f64,
    /// Exact value, or a rigorous upper enclosure on a bracket.
    pub upper: BigRational,
    pub exact_value: Option<BigRational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UnivariateMax {
    pub value: f64,
    pub argmax: f64,
    /// Set when the maximum is provably attained at a rational point.
    pub exact: Option<(BigRational, BigRational)>,
    /// Rigorous upper bound on the maximum.
    pub upper_bound: BigRational,
    pub candidates: Vec<Candidate>,
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Bound on `|p′|` over `[a, b]`.
fn derivative_bound(p: &Polynomial, a: &BigRational, b: &BigRational) -> BigRational {
    let radius = a.abs().max(b.abs());
    let mut bound = BigRational::zero();
    let mut power = BigRational::one();
    for (k, c) in p.coeffs().iter().enumerate().skip(1) {
        bound += c.abs() * q(k as i64) * &power;
        power *= &radius;
    }
    bound
}

/// Global maximum of `p` on `[lo, hi]`: endpoints evaluated exactly, every
/// critical point isolated by Sturm sequences on `p′` and bracketed to width
/// `tol`.
pub fn maximize_univariate(p: &Polynomial, lo: f64, hi: f64, tol: f64) -> Result<UnivariateMax> {
    if lo.is_nan() || hi.is_nan() || lo >= hi {
        return Err(Error::Domain(format!("empty interval [{lo}, {hi}]")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance {tol} must be positive")));
    }
    if p.degree().unwrap_or(0) > MAX_DEGREE {
        return Err(Error::Domain(format!("degree above {MAX_DEGREE}")));
    }
    let exact_point = |kind: CandidateKind, t: BigRational| {
        let v = p.eval(&t);
        Candidate {
            kind,
            at: to_f64(&t),
            estimate: to_f64(&v),
            upper: v.clone(),
            exact_value: Some(v),
        }
    };
    let lo_q = BigRational::from_float(lo).expect("finite");
    let hi_q = BigRational::from_float(hi).expect("finite");
    let width = BigRational::from_float(tol).expect("finite");

    let mut candidates = vec![
        exact_point(CandidateKind::Endpoint(lo_q.clone()), lo_q.clone()),
        exact_point(CandidateKind::Endpoint(hi_q.clone()), hi_q.clone()),
    ];
    for root in isolate_roots(&p.derivative(), &lo_q, &hi_q, &width) {
        candidates.push(match root {
            IsolatedRoot::Exact(t) => exact_point(CandidateKind::CriticalExact(t.clone()), t),
            IsolatedRoot::Bracket { lo: a, hi: b } => {
                let mid = (&a + &b) / q(2);
                let enclosure = p.eval(&a).max(p.eval(&b)) + derivative_bound(p, &a, &b) * (&b - &a);
                Candidate {
                    at: to_f64(&mid),
                    estimate: to_f64(&p.eval(&mid)),
                    upper: enclosure,
                    exact_value: None,
                    kind: CandidateKind::CriticalBracket { lo: a, hi: b },
                }
            }
        });
    }

    let upper_bound = candidates
        .iter()
        .map(|c| c.upper.clone())
        .max()
        .expect("endpoints are always candidates");
    let best_exact = candidates
        .iter()
        .filter_map(|c| c.exact_value.as_ref().map(|v| (c, v)))
        .max_by(|a, b| a.1.cmp(b.1))
        .expect("endpoints are exact");
    let exact = (best_exact.1 >= &upper_bound).then(|| {
        let arg = match &best_exact.0.kind {
            CandidateKind::Endpoint(t) | CandidateKind::CriticalExact(t) => t.clone(),
            CandidateKind::CriticalBracket { .. } => unreachable!("brackets carry no exact value"),
        };
        (arg, best_exact.1.clone())
    });
    let (value, argmax) = match &exact {
        Some((arg, v)) => (to_f64(v), to_f64(arg)),
        None => candidates
            .iter()
            .map(|c| (c.estimate, c.at))
            .max_by(|a, b| a.0.total_cmp(&b.0))
            .expect("non-empty"),
    };
    Ok(UnivariateMax {
        value,
        argmax,
        exact,
        upper_bound,
        candidates,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaConfig {
    pub tol: f64,
    /// Grid points per axis for the interior scan.
    pub grid: usize,
}

impl Default for OmegaConfig {
    fn default() -> Self {
        OmegaConfig {
            tol: DEFAULT_TOL,
            grid: DEFAULT_GRID,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SegmentMax {
    pub segment: Segment,
    pub polynomial: Polynomial,
    pub max: UnivariateMax,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridScan {
    pub density: usize,
    pub max: f64,
    pub at: OmegaPoint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedMax {
    pub tag: ObjectiveTag,
    pub value: f64,
    /// Exact maximum when it is attained at a rational boundary point.
    pub exact: Option<BigRational>,
    pub argmax: OmegaPoint,
    pub segments: Vec<SegmentMax>,
    pub interior: GridScan,
    pub tolerance: f64,
}

impl CertifiedMax {
    /// The functional's sharp bound `max / denominator`, when exact.
    pub fn bound(&self) -> Option<BigRational> {
        self.exact
            .as_ref()
            .map(|m| m / q(self.tag.prefactor_denominator()))
    }
}

/// Max of `f` over the `density × density` grid
/// `x = i/(D−1)`, `y = (1 − x²)·j/(D−1)`.
pub fn grid_scan(f: &ObjectiveFunction, density: usize) -> GridScan {
    let step = 1.0 / (density - 1) as f64;
    let (max, i, j) = (0..density)
        .into_par_iter()
        .map(|i| {
            let x = i as f64 * step;
            let top = 1.0 - x * x;
            (0..density)
                .map(|j| (f.evaluate(x, top * j as f64 * step), i, j))
                .fold((f64::NEG_INFINITY, 0, 0), |best, cur| if cur.0 > best.0 { cur } else { best })
        })
        .reduce(
            || (f64::NEG_INFINITY, 0, 0),
            |a, b| match a.0.total_cmp(&b.0) {
                std::cmp::Ordering::Less => b,
                std::cmp::Ordering::Greater => a,
                std::cmp::Ordering::Equal => a.min_by_index(b),
            },
        );
    let x = i as f64 * step;
    GridScan {
        density,
        max,
        at: OmegaPoint { x, y: (1.0 - x * x) * j as f64 * step },
    }
}

trait MinByIndex {
    fn min_by_index(self, other: Self) -> Self;
}

impl MinByIndex for (f64, usize, usize) {
    fn min_by_index(self, other: Self) -> Self {
        if (self.1, self.2) <= (other.1, other.2) {
            self
        } else {
            other
        }
    }
}

pub fn maximize_over_omega(f: &ObjectiveFunction, cfg: &OmegaConfig) -> Result<CertifiedMax> {
    if cfg.tol.is_nan() || cfg.tol < MIN_TOL {
        return Err(Error::Domain(format!("tolerance {} below {MIN_TOL}", cfg.tol)));
    }
    if cfg.grid < 2 {
        return Err(Error::Domain("grid density must be at least 2".into()));
    }
    let segments = Segment::ALL
        .into_iter()
        .map(|segment| {
            let polynomial = boundary_restrict(f, segment)?;
            let max = maximize_univariate(&polynomial, 0.0, 1.0, cfg.tol)?;
            Ok(SegmentMax { segment, polynomial, max })
        })
        .collect::<Result<Vec<_>>>()?;

    let upper = segments
        .iter()
        .map(|s| s.max.upper_bound.clone())
        .max()
        .expect("three segments");
    let best_exact = segments
        .iter()
        .filter_map(|s| s.max.exact.as_ref().map(|(_, v)| (s, v)))
        .max_by(|a, b| a.1.cmp(b.1));
    let exact = best_exact.filter(|(_, v)| **v >= upper).map(|(_, v)| v.clone());
    let best = match best_exact.filter(|_| exact.is_some()) {
        Some((s, _)) => s,
        None => segments
            .iter()
            .max_by(|a, b| a.max.value.total_cmp(&b.max.value))
            .expect("three segments"),
    };
    let value = best.max.value;
    let argmax = best.segment.point(best.max.argmax);

    let interior = grid_scan(f, cfg.grid);
    if interior.max > value + cfg.tol {
        return Err(Error::InteriorExceedsBoundary {
            x: interior.at.x,
            y: interior.at.y,
            value: interior.max,
            boundary: value,
        });
    }
    Ok(CertifiedMax {
        tag: f.tag,
        value,
        exact,
        argmax,
        segments,
        interior,
        tolerance: cfg.tol,
    })
}

/// The sharp bound for the functional majorized by `tag`, at default settings.
pub fn bound_from_max(tag: ObjectiveTag) -> Result<BigRational> {
    let cert = maximize_over_omega(&ObjectiveFunction::new(tag), &OmegaConfig::default())?;
    cert.bound().ok_or_else(|| {
        Error::Domain(format!(
            "maximum of {} is not attained at a rational point",
            tag.as_str()
        ))
    })
}

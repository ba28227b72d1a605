//! The extremal and example functions, with their exact Taylor coefficients,
//! analytic evaluators for the membership diagnostic, and the constants
//! claimed for them in the literature.

use hankel_core::determinants::DeterminantKind;
use hankel_core::subordination::{ClassTag, Jet};
use hankel_core::{Coeff, Exact, TruncatedSeries};
use num_complex::Complex64;
use num_rational::BigRational;

/// Whether the literature constant matches the value computed here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Consistent,
    Discrepant,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Consistent => "paper-consistent",
            Provenance::Discrepant => "paper-discrepant",
        }
    }
}

/// A functional claimed for a catalog function: `|functional| = stated`.
#[derive(Debug, Clone, PartialEq)]
pub struct Expected {
    pub kind: DeterminantKind,
    pub stated: BigRational,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogName {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    Koebe,
}

impl CatalogName {
    pub const EXTREMAL: [CatalogName; 8] = [
        CatalogName::H1,
        CatalogName::H2,
        CatalogName::H3,
        CatalogName::H4,
        CatalogName::H5,
        CatalogName::H6,
        CatalogName::H7,
        CatalogName::H8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::H1 => "h1",
            CatalogName::H2 => "h2",
            CatalogName::H3 => "h3",
            CatalogName::H4 => "h4",
            CatalogName::H5 => "h5",
            CatalogName::H6 => "h6",
            CatalogName::H7 => "h7",
            CatalogName::H8 => "h8",
            CatalogName::Koebe => "koebe",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::EXTREMAL
            .into_iter()
            .chain([CatalogName::Koebe])
            .find(|n| n.as_str() == s)
    }

    pub fn formula(self) -> &'static str {
        match self {
            CatalogName::H1 => "z/(1-z^2)",
            CatalogName::H2 | CatalogName::H6 => "z/(1-z)",
            CatalogName::H3 => "(1/2)log((1+z)/(1-z))",
            CatalogName::H4 | CatalogName::H8 => "-log(1-z)",
            CatalogName::H5 => "z/(1-iz)",
            CatalogName::H7 => "atanh(sqrt(s)z)/sqrt(s), s = sqrt(145)/8",
            CatalogName::Koebe => "z/(1-z)^2",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: CatalogName,
    /// `None` for the Koebe function, which belongs to neither class.
    pub class: Option<ClassTag>,
    pub expected: Option<Expected>,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn expected(kind: DeterminantKind, n: i64, d: i64, provenance: Provenance) -> Option<Expected> {
    Some(Expected { kind, stated: q(n, d), provenance })
}

pub fn entry(name: CatalogName) -> CatalogEntry {
    use CatalogName::*;
    use DeterminantKind::{Hankel, Toeplitz};
    use Provenance::{Consistent, Discrepant};
    let (class, expected) = match name {
        H1 => (Some(ClassTag::StarlikeSym), expected(Hankel, 1, 4, Consistent)),
        H2 => (Some(ClassTag::StarlikeSym), expected(Hankel, 1, 12, Discrepant)),
        H3 => (Some(ClassTag::ConvexSym), expected(Hankel, 1, 36, Consistent)),
        H4 => (Some(ClassTag::ConvexSym), expected(Hankel, 11, 576, Discrepant)),
        H5 => (Some(ClassTag::StarlikeSym), expected(Toeplitz, 5, 16, Consistent)),
        H6 => (Some(ClassTag::StarlikeSym), expected(Toeplitz, 3, 16, Consistent)),
        H7 => (Some(ClassTag::ConvexSym), expected(Toeplitz, 145, 2304, Consistent)),
        H8 => (Some(ClassTag::ConvexSym), expected(Toeplitz, 143, 2304, Consistent)),
        Koebe => (None, None),
    };
    CatalogEntry { name, class, expected }
}

pub fn catalog() -> Vec<CatalogEntry> {
    CatalogName::EXTREMAL.into_iter().map(entry).collect()
}

/// `aₙ` for `n ≥ 1`, exactly.
pub fn coefficient(name: CatalogName, n: usize) -> Exact {
    use CatalogName::*;
    let odd = n % 2 == 1;
    let recip = |k: usize| Exact::from_ratio(1, k as i64);
    match name {
        H1 => if odd { Exact::one() } else { Exact::zero() },
        H2 | H6 => Exact::one(),
        H3 => if odd { recip(n) } else { Exact::zero() },
        H4 | H8 => recip(n),
        H5 => Exact::i().pow(n as u32 - 1),
        H7 => {
            if odd {
                let s = Exact::sqrt(145).expect("145 is squarefree") * Exact::from_ratio(1, 8);
                s.pow((n as u32 - 1) / 2) * recip(n)
            } else {
                Exact::zero()
            }
        }
        Koebe => Exact::integer(n as i64),
    }
}

/// `z + a₂z² + … + a_N z^N`.
pub fn series(name: CatalogName, order: usize) -> hankel_core::error::Result<TruncatedSeries<Exact>> {
    TruncatedSeries::from_fn(order, |k| if k == 0 { Exact::zero() } else { coefficient(name, k) })
}

/// Closed-form `f, f′, f″` at `z`.
pub fn jet(name: CatalogName, z: Complex64) -> Jet {
    use CatalogName::*;
    let one = Complex64::new(1.0, 0.0);
    let (value, d1, d2) = match name {
        H1 => {
            let u = one - z * z;
            (z / u, (one + z * z) / (u * u), (6.0 * z + 2.0 * z * z * z) / (u * u * u))
        }
        H2 | H6 => {
            let u = one - z;
            (z / u, one / (u * u), 2.0 / (u * u * u))
        }
        H3 => {
            let u = one - z * z;
            (z.atanh(), one / u, 2.0 * z / (u * u))
        }
        H4 | H8 => {
            let u = one - z;
            (-u.ln(), one / u, one / (u * u))
        }
        H5 => {
            let i = Complex64::i();
            let u = one - i * z;
            (z / u, one / (u * u), 2.0 * i / (u * u * u))
        }
        H7 => {
            let s = 145f64.sqrt() / 8.0;
            let u = one - s * z * z;
            ((s.sqrt() * z).atanh() / s.sqrt(), one / u, 2.0 * s * z / (u * u))
        }
        Koebe => {
            let u = one - z;
            (z / (u * u), (one + z) / (u * u * u), (2.0 * z + 4.0) / (u * u * u * u))
        }
    };
    Jet { value, d1, d2 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h7_coefficients() {
        let s = Exact::sqrt(145).unwrap();
        assert_eq!(coefficient(CatalogName::H7, 2), Exact::zero());
        assert_eq!(coefficient(CatalogName::H7, 3), s * Exact::from_ratio(1, 24));
        assert_eq!(coefficient(CatalogName::H7, 5), Exact::from_ratio(29, 64));
    }

    #[test]
    fn h5_coefficients_cycle_through_powers_of_i() {
        let i = Exact::i();
        let want = [Exact::one(), i.clone(), Exact::integer(-1), -i];
        for (n, w) in (1..=4).zip(want) {
            assert_eq!(coefficient(CatalogName::H5, n), w);
        }
    }

    /// Jets against partial sums of the Taylor series near the origin.
    #[test]
    fn jets_match_coefficients() {
        for name in CatalogName::EXTREMAL.into_iter().chain([CatalogName::Koebe]) {
            let z = Complex64::new(0.05, 0.03);
            let mut value = Complex64::new(0.0, 0.0);
            let mut d1 = Complex64::new(0.0, 0.0);
            let mut d2 = Complex64::new(0.0, 0.0);
            for n in 1..60 {
                let a = coefficient(name, n).to_complex();
                value += a * z.powu(n as u32);
                d1 += a * n as f64 * z.powu(n as u32 - 1);
                if n >= 2 {
                    d2 += a * (n * (n - 1)) as f64 * z.powu(n as u32 - 2);
                }
            }
            let j = jet(name, z);
            assert!((j.value - value).norm() < 1e-12, "{name:?}");
            assert!((j.d1 - d1).norm() < 1e-12, "{name:?}");
            assert!((j.d2 - d2).norm() < 1e-10, "{name:?}");
        }
    }

    #[test]
    fn names_round_trip() {
        for e in catalog() {
            assert_eq!(CatalogName::parse(e.name.as_str()), Some(e.name));
        }
        assert_eq!(CatalogName::parse("koebe"), Some(CatalogName::Koebe));
        assert_eq!(CatalogName::parse("h9"), None);
    }
}

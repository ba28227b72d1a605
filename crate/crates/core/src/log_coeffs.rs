//! Logarithmic coefficients `γₙ` of `f` and `Γₙ` of its inverse `F = f⁻¹`,
//! defined by `log(f(z)/z) = 2Σ γₙ zⁿ` and `log(F(w)/w) = 2Σ Γₙ wⁿ`.
//!
//! Two independent routes are public: closed forms in `a₂..a₅`, and the
//! series pipeline (compositional inverse, then principal logarithm).

use crate::error::{Error, Result};
use crate::scalar::Coeff;
use crate::series::TruncatedSeries;

/// Taylor coefficients `a₂..a₅` of a normalized `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTuple<T> {
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a5: Option<T>,
}

impl<T: Coeff> CoeffTuple<T> {
    pub fn new(a2: T, a3: T, a4: T, a5: T) -> Self {
        CoeffTuple {
            a2,
            a3,
            a4,
            a5: Some(a5),
        }
    }

    pub fn without_a5(a2: T, a3: T, a4: T) -> Self {
        CoeffTuple {
            a2,
            a3,
            a4,
            a5: None,
        }
    }

    pub fn from_series(f: &TruncatedSeries<T>) -> Self {
        Self::new(
            f.coeff(2).clone(),
            f.coeff(3).clone(),
            f.coeff(4).clone(),
            f.coeff(5).clone(),
        )
    }

    /// `z + a₂z² + … + a₅z⁵` at the given order.
    pub fn to_series(&self, order: usize) -> Result<TruncatedSeries<T>> {
        let mut coeffs = vec![
            T::zero(),
            T::one(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
        ];
        coeffs.push(self.a5.clone().unwrap_or_else(T::zero));
        TruncatedSeries::new(order, coeffs)
    }
}

/// Whether a vector holds `γₙ(f)` or `Γₙ(f⁻¹)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LogKind {
    Direct,
    Inverse,
}

/// `(v₁, v₂, …)`, indexed from 1; there is no zeroth entry.
#[derive(Debug, Clone, PartialEq)]
pub struct LogCoeffVector<T> {
    values: Vec<T>,
    kind: LogKind,
}

impl<T: Coeff> LogCoeffVector<T> {
    pub fn new(values: Vec<T>, kind: LogKind) -> Self {
        LogCoeffVector { values, kind }
    }

    pub fn kind(&self) -> LogKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The `n`-th coefficient, `n ≥ 1`.
    pub fn get(&self, n: usize) -> Option<&T> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

/// `A₂..A₅` of `f⁻¹` in terms of `a₂..a₅`.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseCoeffs<T> {
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a5: T,
}

fn r<T: Coeff>(n: i64, d: i64) -> T {
    T::from_ratio(n, d)
}

pub fn inverse_coeffs_closed<T: Coeff>(c: &CoeffTuple<T>) -> Result<InverseCoeffs<T>> {
    let a5 = c.a5.clone().ok_or(Error::MissingA5)?;
    let (a2, a3, a4) = (c.a2.clone(), c.a3.clone(), c.a4.clone());
    let a2_2 = a2.clone() * a2.clone();
    Ok(InverseCoeffs {
        a2: -a2.clone(),
        a3: -a3.clone() + r::<T>(2, 1) * a2_2.clone(),
        a4: -a4.clone() + r::<T>(5, 1) * a2.clone() * a3.clone()
            - r::<T>(5, 1) * a2_2.clone() * a2.clone(),
        a5: -a5 + r::<T>(6, 1) * a4 * a2.clone() - r::<T>(21, 1) * a3.clone() * a2_2.clone()
            + r::<T>(3, 1) * a3.clone() * a3
            + r::<T>(14, 1) * a2_2.clone() * a2_2,
    })
}

/// `Γ₁..Γ₃` (and `Γ₄` when `a₅` is present) from the closed forms.
pub fn gamma_inverse_closed<T: Coeff>(c: &CoeffTuple<T>) -> LogCoeffVector<T> {
    let (a2, a3, a4) = (c.a2.clone(), c.a3.clone(), c.a4.clone());
    let half = r::<T>(-1, 2);
    let a2_2 = a2.clone() * a2.clone();
    let g1 = half.clone() * a2.clone();
    let g2 = half.clone() * (a3.clone() - r::<T>(3, 2) * a2_2.clone());
    let g3 = half.clone()
        * (a4.clone() - r::<T>(4, 1) * a2.clone() * a3.clone()
            + r::<T>(10, 3) * a2_2.clone() * a2.clone());
    let mut values = vec![g1, g2, g3];
    if let Some(a5) = &c.a5 {
        values.push(
            half * (a5.clone() - r::<T>(5, 1) * a4 * a2.clone()
                + r::<T>(15, 1) * a3.clone() * a2_2.clone()
                - r::<T>(5, 2) * a3.clone() * a3
                - r::<T>(35, 4) * a2_2.clone() * a2_2),
        );
    }
    LogCoeffVector::new(values, LogKind::Inverse)
}

/// Logarithmic coefficients by the series route.
///
/// Returns `N − 1` values for a series of order `N`: the coefficient of
/// `z^N` in `log(f/z)` would need `a_{N+1}`.
pub fn gamma_of_series<T: Coeff>(f: &TruncatedSeries<T>, kind: LogKind) -> Result<LogCoeffVector<T>> {
    let log = match kind {
        LogKind::Direct => f.log_div_z()?,
        LogKind::Inverse => f.compositional_inverse()?.log_div_z()?,
    };
    let half = r::<T>(1, 2);
    let values = log.coeffs()[1..log.order()]
        .iter()
        .map(|c| c.clone() * half.clone())
        .collect();
    Ok(LogCoeffVector::new(values, kind))
}

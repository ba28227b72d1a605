//! Truncated formal power series `c₀ + c₁z + … + c_N z^N`.
//!
//! Every operation works at a fixed truncation order `N` and never reads or
//! writes powers above it. Binary operations require equal orders.

use crate::error::{Error, Result};
use crate::scalar::{Coeff, ScalarMode};

/// Smallest admissible truncation order.
pub const MIN_ORDER: usize = 5;

/// Order used when a caller has no reason to pick another.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> TruncatedSeries<T> {
    /// Builds a series of the given order, padding `coeffs` with zeros.
    pub fn new(order: usize, mut coeffs: Vec<T>) -> Result<Self> {
        if order < MIN_ORDER {
            return Err(Error::OrderTooSmall(order));
        }
        if coeffs.len() > order + 1 {
            return Err(Error::TooManyCoefficients {
                len: coeffs.len(),
                order,
            });
        }
        coeffs.resize(order + 1, T::zero());
        Self::checked(coeffs)
    }

    /// Series whose coefficient of `z^k` is `gen(k)` for `k = 0..=order`.
    pub fn from_fn(order: usize, gen: impl FnMut(usize) -> T) -> Result<Self> {
        Self::new(order, (0..=order).map(gen).collect())
    }

    pub fn zero(order: usize) -> Result<Self> {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::new(order, vec![T::one()])
    }

    /// The series `z`.
    pub fn identity(order: usize) -> Result<Self> {
        Self::new(order, vec![T::zero(), T::one()])
    }

    /// `c·z^power`; a power above the order gives the zero series.
    pub fn monomial(order: usize, power: usize, c: T) -> Result<Self> {
        let mut s = Self::zero(order)?;
        if power <= order {
            s.coeffs[power] = c;
        }
        Ok(s)
    }

    fn checked(coeffs: Vec<T>) -> Result<Self> {
        if let Some(k) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(k));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mode(&self) -> ScalarMode {
        T::MODE
    }

    /// Coefficient of `z^k`. Panics if `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `coeff[0] = 0` and `coeff[1] = 1`.
    pub fn is_normalized(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs[1] == T::one()
    }

    fn same_order(&self, other: &Self) -> Result<usize> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(self.order())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Self::checked(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Self::checked(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, factor: &T) -> Result<Self> {
        Self::checked(
            self.coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        )
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.same_order(other)?;
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::checked(out)
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let n = self.order();
        let inv0 = self.coeffs[0].recip().ok_or(Error::NotInvertible)?;
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(-(acc * inv0.clone()));
        }
        Self::checked(out)
    }

    /// `self / other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.reciprocal()?)
    }

    /// `outer(inner(z))` by Horner accumulation; `inner` must vanish at 0.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let n = self.same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = Self::monomial(n, 0, self.coeffs[n].clone())?;
        for k in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// The series `F` with `f(F(w)) = w`, built power by power.
    ///
    /// With `F` correct through `w^{k−1}`, the `w^k` coefficient of `f∘F`
    /// depends on `A_k` with unit weight (since `f′(0) = 1`), so subtracting
    /// the residual fixes `A_k`.
    pub fn compositional_inverse(&self) -> Result<Self> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        let n = self.order();
        let mut inverse = Self::identity(n)?;
        for k in 2..=n {
            let residual = self.compose(&inverse)?.coeffs[k].clone();
            inverse.coeffs[k] = inverse.coeffs[k].clone() - residual;
        }
        Ok(inverse)
    }

    /// Principal `log(f(z)/z)` (constant term 0).
    ///
    /// `f/z` is only known through `z^{N−1}`, so the top coefficient of the
    /// result is dropped (reported as zero), as with [`Self::derivative`].
    pub fn log_div_z(&self) -> Result<Self> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        let n = self.order();
        // u = f/z − 1, known through z^{N−1}
        let mut u = Self::zero(n)?;
        for k in 1..n {
            u.coeffs[k] = self.coeffs[k + 1].clone();
        }
        // log(1 + t) = Σ (−1)^{k+1} t^k / k
        let log1p = Self::from_fn(n, |k| match k {
            0 => T::zero(),
            k if k % 2 == 1 => T::from_ratio(1, k as i64),
            k => T::from_ratio(-1, k as i64),
        })?;
        let mut out = log1p.compose(&u)?;
        out.coeffs[n] = T::zero();
        Ok(out)
    }

    /// Termwise derivative, reported at the same order with the top
    /// coefficient (which would need `c_{N+1}`) set to zero.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut coeffs: Vec<T> = (1..=n)
            .map(|k| self.coeffs[k].clone() * T::from_ratio(k as i64, 1))
            .collect();
        coeffs.push(T::zero());
        TruncatedSeries { coeffs }
    }

    /// Coefficientwise conversion into another scalar field.
    pub fn map<U: Coeff>(&self, f: impl FnMut(&T) -> U) -> Result<TruncatedSeries<U>> {
        TruncatedSeries::<U>::checked(self.coeffs.iter().map(f).collect())
    }

    /// `f(−z)`.
    pub fn reflect(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }
}

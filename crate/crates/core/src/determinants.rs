//! Hankel `H_{q,n}` and Toeplitz `T_{q,n}` determinants of a logarithmic
//! coefficient sequence, plus closed forms of `H_{2,1}` and `T_{2,1}` in the
//! Taylor coefficients of `f`.

use crate::error::{Error, Result};
use crate::log_coeffs::LogCoeffVector;
use crate::scalar::Coeff;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeterminantKind {
    Hankel,
    Toeplitz,
}

impl DeterminantKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DeterminantKind::Hankel => "hankel",
            DeterminantKind::Toeplitz => "toeplitz",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DeterminantRequest<'a, T> {
    pub seq: &'a LogCoeffVector<T>,
    pub q: usize,
    pub n: usize,
    pub kind: DeterminantKind,
}

impl<'a, T: Coeff> DeterminantRequest<'a, T> {
    pub fn new(seq: &'a LogCoeffVector<T>, q: usize, n: usize, kind: DeterminantKind) -> Self {
        DeterminantRequest { seq, q, n, kind }
    }

    /// Highest sequence index the matrix touches.
    pub fn highest_index(&self) -> usize {
        match self.kind {
            DeterminantKind::Hankel => self.n + 2 * (self.q - 1),
            DeterminantKind::Toeplitz => self.n + self.q - 1,
        }
    }

    /// The `q×q` matrix; entry `(i, j)` is `Γ_{n+i+j}` (Hankel) or
    /// `Γ_{n+|i−j|}` (Toeplitz).
    pub fn matrix(&self) -> Result<Vec<Vec<T>>> {
        if self.q == 0 {
            return Err(Error::InvalidRequest("q must be at least 1"));
        }
        if self.n == 0 {
            return Err(Error::InvalidRequest("n must be at least 1"));
        }
        let top = self.highest_index();
        if top > self.seq.len() {
            return Err(Error::SequenceTooShort {
                requested: top,
                available: self.seq.len(),
            });
        }
        let entry = |i: usize, j: usize| {
            let idx = match self.kind {
                DeterminantKind::Hankel => self.n + i + j,
                DeterminantKind::Toeplitz => self.n + i.abs_diff(j),
            };
            self.seq.get(idx).cloned().expect("index checked above")
        };
        Ok((0..self.q)
            .map(|i| (0..self.q).map(|j| entry(i, j)).collect())
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeterminantResult<T> {
    pub value: T,
    pub modulus: f64,
}

pub fn evaluate<T: Coeff>(req: &DeterminantRequest<'_, T>) -> Result<DeterminantResult<T>> {
    let value = bareiss_determinant(req.matrix()?);
    let modulus = value.modulus();
    Ok(DeterminantResult { value, modulus })
}

/// Fraction-free elimination. Each division by the previous pivot is exact
/// over the field; the pivot is the largest-modulus candidate in its column.
fn bareiss_determinant<T: Coeff>(mut m: Vec<Vec<T>>) -> T {
    let q = m.len();
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..q {
        let pivot_row = (k..q)
            .filter(|&r| !m[r][k].is_zero())
            .max_by(|&a, &b| m[a][k].modulus().total_cmp(&m[b][k].modulus()));
        let Some(p) = pivot_row else {
            return T::zero();
        };
        if p != k {
            m.swap(p, k);
            sign_flip = !sign_flip;
        }
        let prev_inv = prev.recip().expect("pivots are nonzero");
        for i in k + 1..q {
            for j in k + 1..q {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num * prev_inv.clone();
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[q - 1][q - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// `H_{2,1} = Γ₁Γ₃ − Γ₂² = (13a₂⁴ − 12a₂²a₃ − 12a₃² + 12a₂a₄)/48`.
pub fn h21_closed<T: Coeff>(a2: &T, a3: &T, a4: &T) -> T {
    let a2_2 = a2.clone() * a2.clone();
    let poly = T::from_ratio(13, 1) * a2_2.clone() * a2_2.clone()
        - T::from_ratio(12, 1) * a2_2 * a3.clone()
        - T::from_ratio(12, 1) * a3.clone() * a3.clone()
        + T::from_ratio(12, 1) * a2.clone() * a4.clone();
    T::from_ratio(1, 48) * poly
}

/// `T_{2,1} = Γ₁² − Γ₂² = (−9a₂⁴ + 4a₂² − 4a₃² + 12a₂²a₃)/16`.
pub fn t21_closed<T: Coeff>(a2: &T, a3: &T) -> T {
    let a2_2 = a2.clone() * a2.clone();
    let poly = T::from_ratio(-9, 1) * a2_2.clone() * a2_2.clone()
        + T::from_ratio(4, 1) * a2_2.clone()
        - T::from_ratio(4, 1) * a3.clone() * a3.clone()
        + T::from_ratio(12, 1) * a2_2 * a3.clone();
    T::from_ratio(1, 16) * poly
}

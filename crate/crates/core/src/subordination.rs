//! The classes `S*_S` (starlike w.r.t. symmetric points) and `K_S` (convex
//! w.r.t. symmetric points), parameterized by a Schwarz function `w`:
//!
//! ```text
//! S*_S:  2z f′(z)      = (f(z) − f(−z))  · (1 + w)/(1 − w)
//! K_S:   2(z f′(z))′   = (f(z) − f(−z))′ · (1 + w)/(1 − w)
//! ```

use num_complex::Complex64;
use rayon::prelude::*;

use crate::determinants::{h21_closed, t21_closed, DeterminantKind};
use crate::error::{Error, Result};
use crate::scalar::Coeff;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassTag {
    StarlikeSym,
    ConvexSym,
}

impl ClassTag {
    pub const ALL: [ClassTag; 2] = [ClassTag::StarlikeSym, ClassTag::ConvexSym];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::StarlikeSym => "starlike-sym",
            ClassTag::ConvexSym => "convex-sym",
        }
    }

    /// Weight of `aₙ` on the left side: `n` for `2zf′`, `n²` for `2(zf′)′`.
    fn lhs_weight(self, n: usize) -> i64 {
        match self {
            ClassTag::StarlikeSym => n as i64,
            ClassTag::ConvexSym => (n * n) as i64,
        }
    }

    /// Weight of odd `a_k` in the symmetric difference (or its derivative).
    fn rhs_weight(self, k: usize) -> i64 {
        match self {
            ClassTag::StarlikeSym => 1,
            ClassTag::ConvexSym => k as i64,
        }
    }
}

/// Solves the subordination identity for the normalized `f`, power by power
/// through `z^upto`; coefficients above `upto` are left zero.
///
/// With `p = (1 + w)/(1 − w) = Σ pⱼ zʲ` and weights `λ, μ` from the class,
/// matching `zⁿ` gives `λ(n) aₙ = Σ_{odd k ≤ n} μ(k) a_k p_{n−k}`; the `k = n`
/// term moves to the left, leaving the pivot `λ(n) − μ(n)[n odd]`.
pub fn coeffs_from_schwarz<T: Coeff>(
    w: &TruncatedSeries<T>,
    tag: ClassTag,
    upto: usize,
) -> Result<TruncatedSeries<T>> {
    let order = w.order();
    if upto > order {
        return Err(Error::Domain(format!(
            "upto = {upto} exceeds the truncation order {order}"
        )));
    }
    if !w.coeff(0).is_zero() {
        return Err(Error::NotSchwarz("w(0) must be 0"));
    }
    if w.coeff(1).modulus() > 1.0 + 1e-12 {
        return Err(Error::NotSchwarz("|c1| exceeds 1"));
    }
    let one = TruncatedSeries::one(order)?;
    let p = one.add(w)?.div(&one.sub(w)?)?;

    let mut a = vec![T::zero(); order + 1];
    if upto >= 1 {
        a[1] = T::one();
    }
    for n in 2..=upto {
        let mut rhs = T::zero();
        for k in (1..n).step_by(2) {
            rhs = rhs + T::from_ratio(tag.rhs_weight(k), 1) * a[k].clone() * p.coeff(n - k).clone();
        }
        let pivot = tag.lhs_weight(n) - if n % 2 == 1 { tag.rhs_weight(n) } else { 0 };
        if pivot == 0 {
            return Err(Error::ZeroPivot(n));
        }
        a[n] = rhs * T::from_ratio(1, pivot);
    }
    TruncatedSeries::new(order, a)
}

/// `a₂ = c₁, a₃ = c₂ + c₁², a₄ = (c₃ + 3c₁c₂ + 2c₁³)/2`.
pub fn coeffs_closed_starlike<T: Coeff>(c1: &T, c2: &T, c3: &T) -> (T, T, T) {
    let c1_2 = c1.clone() * c1.clone();
    let a4 = T::from_ratio(1, 2)
        * (c3.clone()
            + T::from_ratio(3, 1) * c1.clone() * c2.clone()
            + T::from_ratio(2, 1) * c1_2.clone() * c1.clone());
    (c1.clone(), c2.clone() + c1_2, a4)
}

/// `a₂ = c₁/2, a₃ = (c₂ + c₁²)/3, a₄ = (c₃ + 3c₁c₂ + 2c₁³)/8`.
pub fn coeffs_closed_convex<T: Coeff>(c1: &T, c2: &T, c3: &T) -> (T, T, T) {
    let c1_2 = c1.clone() * c1.clone();
    let a4 = T::from_ratio(1, 8)
        * (c3.clone()
            + T::from_ratio(3, 1) * c1.clone() * c2.clone()
            + T::from_ratio(2, 1) * c1_2.clone() * c1.clone());
    (
        T::from_ratio(1, 2) * c1.clone(),
        T::from_ratio(1, 3) * (c2.clone() + c1_2),
        a4,
    )
}

pub fn coeffs_closed<T: Coeff>(tag: ClassTag, c1: &T, c2: &T, c3: &T) -> (T, T, T) {
    match tag {
        ClassTag::StarlikeSym => coeffs_closed_starlike(c1, c2, c3),
        ClassTag::ConvexSym => coeffs_closed_convex(c1, c2, c3),
    }
}

/// Integer-polynomial form and prefactor denominator of `H_{2,1}` or `T_{2,1}`
/// in the Schwarz coefficients.
pub fn schwarz_prefactor_denominator(tag: ClassTag, kind: DeterminantKind) -> i64 {
    match (tag, kind) {
        (ClassTag::StarlikeSym, DeterminantKind::Hankel) => 48,
        (ClassTag::ConvexSym, DeterminantKind::Hankel) => 2304,
        (ClassTag::StarlikeSym, DeterminantKind::Toeplitz) => 16,
        (ClassTag::ConvexSym, DeterminantKind::Toeplitz) => 2304,
    }
}

/// `H_{2,1}` or `T_{2,1}` of `f⁻¹` directly in `c₁, c₂, c₃`.
pub fn determinant_in_schwarz<T: Coeff>(
    c1: &T,
    c2: &T,
    c3: &T,
    tag: ClassTag,
    kind: DeterminantKind,
) -> T {
    let k = |n: i64| T::from_ratio(n, 1);
    let c1_2 = c1.clone() * c1.clone();
    let c1_4 = c1_2.clone() * c1_2.clone();
    let c2_2 = c2.clone() * c2.clone();
    let poly = match (tag, kind) {
        (ClassTag::StarlikeSym, DeterminantKind::Hankel) => {
            c1_4 - k(18) * c1_2 * c2.clone() - k(12) * c2_2 + k(6) * c1.clone() * c3.clone()
        }
        (ClassTag::ConvexSym, DeterminantKind::Hankel) => {
            -c1_4 - k(68) * c1_2 * c2.clone() - k(64) * c2_2 + k(36) * c1.clone() * c3.clone()
        }
        (ClassTag::StarlikeSym, DeterminantKind::Toeplitz) => {
            -c1_4 + k(4) * c1_2.clone() - k(4) * c2_2 + k(4) * c1_2 * c2.clone()
        }
        (ClassTag::ConvexSym, DeterminantKind::Toeplitz) => {
            -c1_4 + k(144) * c1_2.clone() - k(64) * c2_2 + k(16) * c1_2 * c2.clone()
        }
    };
    T::from_ratio(1, schwarz_prefactor_denominator(tag, kind)) * poly
}

/// The same functional by composing the coefficient closed forms with the
/// `a`-space closed forms.
pub fn determinant_via_coeffs<T: Coeff>(
    c1: &T,
    c2: &T,
    c3: &T,
    tag: ClassTag,
    kind: DeterminantKind,
) -> T {
    let (a2, a3, a4) = coeffs_closed(tag, c1, c2, c3);
    match kind {
        DeterminantKind::Hankel => h21_closed(&a2, &a3, &a4),
        DeterminantKind::Toeplitz => t21_closed(&a2, &a3),
    }
}

/// `f(z), f′(z), f″(z)` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

/// The quantity whose real part must stay positive for membership.
pub fn class_ratio(tag: ClassTag, z: Complex64, at_z: Jet, at_minus_z: Jet) -> Complex64 {
    match tag {
        ClassTag::StarlikeSym => z * at_z.d1 / (at_z.value - at_minus_z.value),
        ClassTag::ConvexSym => (at_z.d1 + z * at_z.d2) / (at_z.d1 + at_minus_z.d1),
    }
}

/// Polar sampling grid for the numeric membership diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipGrid {
    pub radii: usize,
    pub angles: usize,
    pub max_radius: f64,
    pub tolerance: f64,
}

impl Default for MembershipGrid {
    fn default() -> Self {
        MembershipGrid {
            radii: 64,
            angles: 256,
            max_radius: 0.995,
            tolerance: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipReport {
    pub passed: bool,
    /// Smallest real part seen; `NaN` if a non-finite ratio was hit.
    pub min_real_part: f64,
    pub at: Complex64,
    pub points: usize,
}

/// Samples `Re(class_ratio)` on `radii × angles` points with radius in
/// `(0, max_radius]` and requires it to exceed `−tolerance`. A diagnostic,
/// not a proof of membership.
pub fn check_membership<F>(f: F, tag: ClassTag, grid: &MembershipGrid) -> MembershipReport
where
    F: Fn(Complex64) -> Jet + Sync,
{
    let worst = (1..=grid.radii)
        .into_par_iter()
        .flat_map_iter(|i| {
            let r = grid.max_radius * i as f64 / grid.radii as f64;
            (0..grid.angles).map(move |j| {
                Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / grid.angles as f64)
            })
        })
        .map(|z| {
            let ratio = class_ratio(tag, z, f(z), f(-z));
            let re = if ratio.re.is_finite() && ratio.im.is_finite() {
                ratio.re
            } else {
                f64::NEG_INFINITY
            };
            (re, z)
        })
        .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.re.total_cmp(&b.1.re)).then(a.1.im.total_cmp(&b.1.im)))
        .expect("grid is non-empty");
    let min_real_part = if worst.0 == f64::NEG_INFINITY { f64::NAN } else { worst.0 };
    MembershipReport {
        passed: worst.0 > -grid.tolerance,
        min_real_part,
        at: worst.1,
        points: grid.radii * grid.angles,
    }
}

//! Scalar fields used as series coefficients.
//!
//! Two modes exist. [`Exact`] is an element `p + q·√d` of a quadratic field
//! over the rationals (plain rationals are the `q = 0` case, Gaussian
//! rationals use `d = −1`). `Complex64` is the float mode used for sampling.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarMode {
    Exact,
    Float,
}

impl ScalarMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalarMode::Exact => "exact",
            ScalarMode::Float => "float",
        }
    }
}

/// A commutative field usable as a power-series coefficient.
pub trait Coeff:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const MODE: ScalarMode;

    fn zero() -> Self;
    fn one() -> Self;
    /// The rational `num/den`. Panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn recip(&self) -> Option<Self>;
    fn to_complex(&self) -> Complex64;

    fn is_finite(&self) -> bool {
        true
    }

    fn modulus(&self) -> f64 {
        self.to_complex().norm()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Coeff for Complex64 {
    const MODE: ScalarMode = ScalarMode::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn recip(&self) -> Option<Self> {
        if Coeff::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Exact element `rational + surd·√radicand` of `Q(√radicand)`.
///
/// Invariants: `radicand` is squarefree and not 0 or 1 whenever `surd ≠ 0`;
/// when `surd = 0` the radicand is stored as 0, so plain rationals compare
/// equal regardless of which field produced them. Rational parts are always
/// in lowest terms (guaranteed by `BigRational`).
///
/// Mixing two different nonzero radicands in one operation panics: every
/// computation here lives in a single quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exact {
    rational: BigRational,
    surd: BigRational,
    radicand: i64,
}

impl Exact {
    pub fn rational(value: BigRational) -> Self {
        Exact {
            rational: value,
            surd: BigRational::zero(),
            radicand: 0,
        }
    }

    pub fn integer(value: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(value)))
    }

    /// `rational + surd·√radicand`.
    pub fn new(rational: BigRational, surd: BigRational, radicand: i64) -> Result<Self> {
        if surd.is_zero() {
            return Ok(Self::rational(rational));
        }
        if !is_squarefree_radicand(radicand) {
            return Err(Error::Domain(format!(
                "radicand {radicand} is not a squarefree integer other than 0 and 1"
            )));
        }
        Ok(Exact {
            rational,
            surd,
            radicand,
        })
    }

    /// `√radicand` itself.
    pub fn sqrt(radicand: i64) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), radicand)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::sqrt(-1).expect("-1 is squarefree")
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    /// Radicand of the field, 0 for a plain rational.
    pub fn radicand(&self) -> i64 {
        self.radicand
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.surd.is_zero().then_some(&self.rational)
    }

    /// `|self|²` when it is rational: always for `Q(i)` and plain rationals,
    /// and for real surds only when one of the two parts vanishes.
    pub fn modulus_squared(&self) -> Option<BigRational> {
        let a2 = &self.rational * &self.rational;
        if self.surd.is_zero() {
            return Some(a2);
        }
        let d = BigRational::from_integer(BigInt::from(self.radicand));
        let b2d = &self.surd * &self.surd * &d;
        if self.radicand < 0 {
            Some(a2 - b2d)
        } else if self.rational.is_zero() {
            Some(b2d)
        } else {
            None
        }
    }

    fn merged_radicand(&self, other: &Exact) -> i64 {
        match (self.radicand, other.radicand) {
            (0, d) | (d, 0) => d,
            (d, e) if d == e => d,
            (d, e) => panic!("exact scalars from different fields Q(√{d}) and Q(√{e})"),
        }
    }

    fn build(rational: BigRational, surd: BigRational, radicand: i64) -> Self {
        if surd.is_zero() {
            Self::rational(rational)
        } else {
            Exact {
                rational,
                surd,
                radicand,
            }
        }
    }
}

fn is_squarefree_radicand(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let mut n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Add for Exact {
    type Output = Exact;

    fn add(self, rhs: Exact) -> Exact {
        let d = self.merged_radicand(&rhs);
        Exact::build(self.rational + rhs.rational, self.surd + rhs.surd, d)
    }
}

impl Sub for Exact {
    type Output = Exact;

    fn sub(self, rhs: Exact) -> Exact {
        let d = self.merged_radicand(&rhs);
        Exact::build(self.rational - rhs.rational, self.surd - rhs.surd, d)
    }
}

impl Mul for Exact {
    type Output = Exact;

    fn mul(self, rhs: Exact) -> Exact {
        let d = self.merged_radicand(&rhs);
        let dq = BigRational::from_integer(BigInt::from(d));
        let rational = &self.rational * &rhs.rational + &self.surd * &rhs.surd * dq;
        let surd = &self.rational * &rhs.surd + &self.surd * &rhs.rational;
        Exact::build(rational, surd, d)
    }
}

impl Neg for Exact {
    type Output = Exact;

    fn neg(self) -> Exact {
        Exact::build(-self.rational, -self.surd, self.radicand)
    }
}

impl From<BigRational> for Exact {
    fn from(value: BigRational) -> Self {
        Exact::rational(value)
    }
}

impl From<i64> for Exact {
    fn from(value: i64) -> Self {
        Exact::integer(value)
    }
}

impl Coeff for Exact {
    const MODE: ScalarMode = ScalarMode::Exact;

    fn zero() -> Self {
        Exact::rational(BigRational::zero())
    }

    fn one() -> Self {
        Exact::rational(BigRational::one())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Exact::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    fn recip(&self) -> Option<Self> {
        if Coeff::is_zero(self) {
            return None;
        }
        // 1/(a + b√d) = (a − b√d)/(a² − d b²); the norm is nonzero for squarefree d ≠ 1.
        let d = BigRational::from_integer(BigInt::from(self.radicand));
        let norm = &self.rational * &self.rational - &self.surd * &self.surd * d;
        Some(Exact::build(
            &self.rational / &norm,
            -(&self.surd / &norm),
            self.radicand,
        ))
    }

    fn to_complex(&self) -> Complex64 {
        let a = ratio_to_f64(&self.rational);
        if self.surd.is_zero() {
            return Complex64::new(a, 0.0);
        }
        let b = ratio_to_f64(&self.surd);
        let root = (self.radicand.unsigned_abs() as f64).sqrt();
        if self.radicand < 0 {
            Complex64::new(a, b * root)
        } else {
            Complex64::new(a + b * root, 0.0)
        }
    }

    fn modulus(&self) -> f64 {
        match self.modulus_squared() {
            Some(m2) => ratio_to_f64(&m2).sqrt(),
            None => self.to_complex().norm(),
        }
    }
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Exact {
    /// `p/q`, or `p/q + r/s*i`, or `p/q + r/s*sqrt(d)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", ratio_string(&self.rational))?;
        if self.surd.is_zero() {
            return Ok(());
        }
        let sign = if self.surd.is_negative() { '-' } else { '+' };
        let mag = ratio_string(&self.surd.abs());
        if self.radicand == -1 {
            write!(f, " {sign} {mag}*i")
        } else {
            write!(f, " {sign} {mag}*sqrt({})", self.radicand)
        }
    }
}

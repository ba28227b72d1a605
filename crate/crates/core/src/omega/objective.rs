//! The four majorants `M, N, P, Q` in `x = |c₁|`, `y = |c₂|`, kept in exact
//! symbolic form over terms `xᵃyᵇ` and `xᵃyᵇ/(1 + x)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::determinants::DeterminantKind;
use crate::subordination::ClassTag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectiveTag {
    M,
    N,
    P,
    Q,
}

impl ObjectiveTag {
    pub const ALL: [ObjectiveTag; 4] = [ObjectiveTag::M, ObjectiveTag::N, ObjectiveTag::P, ObjectiveTag::Q];

    pub fn as_str(self) -> &'static str {
        match self {
            ObjectiveTag::M => "M",
            ObjectiveTag::N => "N",
            ObjectiveTag::P => "P",
            ObjectiveTag::Q => "Q",
        }
    }

    /// The class and functional this objective majorizes.
    pub fn functional(self) -> (ClassTag, DeterminantKind) {
        match self {
            ObjectiveTag::M => (ClassTag::StarlikeSym, DeterminantKind::Hankel),
            ObjectiveTag::N => (ClassTag::ConvexSym, DeterminantKind::Hankel),
            ObjectiveTag::P => (ClassTag::StarlikeSym, DeterminantKind::Toeplitz),
            ObjectiveTag::Q => (ClassTag::ConvexSym, DeterminantKind::Toeplitz),
        }
    }

    pub fn for_functional(tag: ClassTag, kind: DeterminantKind) -> ObjectiveTag {
        match (tag, kind) {
            (ClassTag::StarlikeSym, DeterminantKind::Hankel) => ObjectiveTag::M,
            (ClassTag::ConvexSym, DeterminantKind::Hankel) => ObjectiveTag::N,
            (ClassTag::StarlikeSym, DeterminantKind::Toeplitz) => ObjectiveTag::P,
            (ClassTag::ConvexSym, DeterminantKind::Toeplitz) => ObjectiveTag::Q,
        }
    }

    /// `|functional| · denominator ≤ objective(|c₁|, |c₂|)`.
    pub fn prefactor_denominator(self) -> i64 {
        match self {
            ObjectiveTag::M => 48,
            ObjectiveTag::N => 2304,
            ObjectiveTag::P => 16,
            ObjectiveTag::Q => 2304,
        }
    }
}

/// `coeff · xᵃ yᵇ`, divided by `1 + x` when `over_one_plus_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub x_pow: u32,
    pub y_pow: u32,
    pub over_one_plus_x: bool,
}

const fn t(coeff: i64, x_pow: u32, y_pow: u32) -> Term {
    Term { coeff, x_pow, y_pow, over_one_plus_x: false }
}

const fn r(coeff: i64, x_pow: u32, y_pow: u32) -> Term {
    Term { coeff, x_pow, y_pow, over_one_plus_x: true }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveFunction {
    pub tag: ObjectiveTag,
    pub terms: Vec<Term>,
}

impl ObjectiveFunction {
    pub fn new(tag: ObjectiveTag) -> Self {
        // M = x⁴ + 18x²y + 12y² + 6x(1 − x² − y²/(1+x)), N likewise with 68, 64, 36
        let terms = match tag {
            ObjectiveTag::M => vec![t(1, 4, 0), t(18, 2, 1), t(12, 0, 2), t(6, 1, 0), t(-6, 3, 0), r(-6, 1, 2)],
            ObjectiveTag::N => vec![t(1, 4, 0), t(68, 2, 1), t(64, 0, 2), t(36, 1, 0), t(-36, 3, 0), r(-36, 1, 2)],
            ObjectiveTag::P => vec![t(1, 4, 0), t(4, 2, 0), t(4, 0, 2), t(4, 2, 1)],
            ObjectiveTag::Q => vec![t(1, 4, 0), t(144, 2, 0), t(64, 0, 2), t(16, 2, 1)],
        };
        ObjectiveFunction { tag, terms }
    }

    pub fn evaluate(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|term| {
                let v = term.coeff as f64 * x.powi(term.x_pow as i32) * y.powi(term.y_pow as i32);
                if term.over_one_plus_x {
                    v / (1.0 + x)
                } else {
                    v
                }
            })
            .sum()
    }

    /// Exact substitution; `None` at `x = −1`.
    pub fn evaluate_exact(&self, x: &BigRational, y: &BigRational) -> Option<BigRational> {
        let denom = BigRational::one() + x;
        let mut total = BigRational::zero();
        for term in &self.terms {
            let mut v = BigRational::from_integer(BigInt::from(term.coeff))
                * num_traits::pow(x.clone(), term.x_pow as usize)
                * num_traits::pow(y.clone(), term.y_pow as usize);
            if term.over_one_plus_x {
                if denom.is_zero() {
                    return None;
                }
                v /= &denom;
            }
            total += v;
        }
        Some(total)
    }
}

impl fmt::Display for ObjectiveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            let sign = if term.coeff < 0 { "-" } else { "+" };
            if i == 0 {
                if term.coeff < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = term.coeff.unsigned_abs();
            if mag != 1 || (term.x_pow == 0 && term.y_pow == 0) {
                write!(f, "{mag}")?;
            }
            for (var, pow) in [("x", term.x_pow), ("y", term.y_pow)] {
                match pow {
                    0 => {}
                    1 => f.write_str(var)?,
                    p => write!(f, "{var}^{p}")?,
                }
            }
            if term.over_one_plus_x {
                f.write_str("/(1+x)")?;
            }
        }
        Ok(())
    }
}

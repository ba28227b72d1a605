//! Exact and floating machinery for inverse logarithmic coefficients of
//! normalized univalent functions.
//!
//! The crate is layered bottom-up:
//!
//! - [`scalar`]: the [`Coeff`] field abstraction with an exact
//!   quadratic-field scalar ([`Exact`]) and `Complex64` for sampling.
//! - [`series`]: truncated power series, composition, compositional inverse
//!   and the principal `log(f(z)/z)`.
//! - [`log_coeffs`]: logarithmic coefficients of `f` and of `f⁻¹`, by closed
//!   form and by the series pipeline.
//! - [`determinants`]: Hankel and Toeplitz determinants of those coefficients.
//! - [`subordination`]: the classes `S*_S` and `K_S` driven by a Schwarz
//!   function.
//! - [`schwarz`]: Schur-parameter construction and seeded sampling of
//!   Schwarz coefficient triples.
//! - [`omega`]: the four majorant objectives on the region
//!   `0 ≤ x ≤ 1, 0 ≤ y ≤ 1 − x²` and their certified maxima.

pub mod determinants;
pub mod error;
pub mod log_coeffs;
pub mod omega;
pub mod scalar;
pub mod schwarz;
pub mod series;
pub mod subordination;

pub use error::Error;
pub use scalar::{Coeff, Exact, ScalarMode};
pub use series::TruncatedSeries;

//! Batch verification of the sharp inverse-logarithmic-coefficient bounds:
//! the extremal catalog, Monte Carlo falsification over Schwarz functions,
//! and certified maximization of the majorants, all emitted as JSON.

pub mod catalog;
pub mod report;
pub mod suites;

pub use report::{Check, VerificationReport};
pub use suites::{run_all, run_coeffs, run_extremal_suite, run_maximization_suite, run_sampling_suite};

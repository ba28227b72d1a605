//! JSON report model. Every map serializes with sorted keys, so equal inputs
//! give byte-identical documents apart from `timestamp`.

use std::collections::BTreeMap;

use hankel_core::scalar::ratio_string;
use hankel_core::{Coeff, Exact};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Map, Value};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplerInfo {
    pub generator: String,
    pub seed: u64,
    pub count: usize,
}

/// One named check. `fields` holds the inputs, values and bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(flatten)]
    pub fields: Map<String, Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, fields: Map::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub artifact_version: String,
    pub timestamp: String,
    pub passed: bool,
    pub mode: Option<String>,
    pub checks: Vec<Check>,
    pub sampler: Option<SamplerInfo>,
    pub tolerances: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            artifact_version: ARTIFACT_VERSION.to_string(),
            timestamp: timestamp(),
            passed: true,
            mode: None,
            checks: Vec::new(),
            sampler: None,
            tolerances: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report is serializable")
    }

    pub fn to_json(&self) -> String {
        to_json(&self.to_value())
    }
}

pub fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Pretty-printed with a trailing newline. `serde_json::Map` is ordered by
/// key, so the output is canonical.
pub fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report is serializable");
    s.push('\n');
    s
}

pub fn complex(c: Complex64) -> Value {
    json!([c.re, c.im])
}

pub fn rational(r: &BigRational) -> Value {
    json!({ "exact": ratio_string(r), "float": r.to_f64() })
}

/// Exact string plus the complex double.
pub fn exact(e: &Exact) -> Value {
    json!({ "exact": e.to_string(), "float": complex(e.to_complex()) })
}

/// A scalar that can be written into a report in either mode.
pub trait ReportScalar: Coeff {
    fn report(&self) -> Value;
}

impl ReportScalar for Exact {
    fn report(&self) -> Value {
        exact(self)
    }
}

impl ReportScalar for Complex64 {
    fn report(&self) -> Value {
        json!({ "float": complex(*self) })
    }
}

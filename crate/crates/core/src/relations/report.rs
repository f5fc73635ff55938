use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// How a single evaluation is counted by a suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The relation's premise does not hold for this case; no claim is made.
    Inapplicable,
    /// The quantity the relation is built on vanishes (e.g. zero interval width).
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ContextValue {
    Flag(bool),
    Number(f64),
    Text(String),
}

impl From<f64> for ContextValue {
    fn from(x: f64) -> Self {
        ContextValue::Number(x)
    }
}

impl From<f32> for ContextValue {
    fn from(x: f32) -> Self {
        ContextValue::Number(x as f64)
    }
}

impl From<usize> for ContextValue {
    fn from(x: usize) -> Self {
        ContextValue::Number(x as f64)
    }
}

impl From<bool> for ContextValue {
    fn from(x: bool) -> Self {
        ContextValue::Flag(x)
    }
}

impl From<&str> for ContextValue {
    fn from(x: &str) -> Self {
        ContextValue::Text(x.to_owned())
    }
}

impl From<String> for ContextValue {
    fn from(x: String) -> Self {
        ContextValue::Text(x)
    }
}

/// One inequality evaluation.
///
/// `slack` is oriented so that the inequality holds iff `slack ≥ −tolerance`,
/// and `pass` records exactly that. `status` is what suites count: a report
/// whose premise fails is `Inapplicable` regardless of `pass`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relation_id: String,
    pub status: Status,
    pub pass: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub tolerance: f64,
    pub context: BTreeMap<String, ContextValue>,
}

impl RelationReport {
    fn build(id: &str, lhs: f64, rhs: f64, slack: f64, tolerance: f64) -> Self {
        let pass = slack >= -tolerance;
        Self {
            relation_id: id.to_owned(),
            status: if pass { Status::Pass } else { Status::Fail },
            pass,
            lhs,
            rhs,
            slack,
            tolerance,
            context: BTreeMap::new(),
        }
    }

    /// Report for `lhs ≥ rhs`.
    pub fn at_least(id: &str, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let mut r = Self::build(id, lhs, rhs, lhs - rhs, tolerance);
        r.context.insert("sense".into(), ">=".into());
        r
    }

    /// Report for `lhs ≤ rhs`.
    pub fn at_most(id: &str, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let mut r = Self::build(id, lhs, rhs, rhs - lhs, tolerance);
        r.context.insert("sense".into(), "<=".into());
        r
    }

    /// A case whose premise failed. Sides are NaN (serialised as `null`).
    pub fn inapplicable(id: &str, reason: &str) -> Self {
        let mut r = Self::build(id, f64::NAN, f64::NAN, f64::NAN, 0.0);
        r.pass = false;
        r.status = Status::Inapplicable;
        r.context.insert("reason".into(), reason.into());
        r
    }

    pub fn with(mut self, key: &str, value: impl Into<ContextValue>) -> Self {
        self.context.insert(key.to_owned(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<ContextValue>) {
        self.context.insert(key.to_owned(), value.into());
    }

    pub fn mark(mut self, status: Status, reason: &str) -> Self {
        self.status = status;
        self.context.insert("reason".into(), reason.into());
        self
    }

    pub fn number(&self, key: &str) -> Option<f64> {
        match self.context.get(key) {
            Some(ContextValue::Number(x)) => Some(*x),
            _ => None,
        }
    }

    pub fn flag(&self, key: &str) -> Option<bool> {
        match self.context.get(key) {
            Some(ContextValue::Flag(x)) => Some(*x),
            _ => None,
        }
    }
}

/// Default evaluator tolerance `1e−9·max(1, |rhs|)`.
pub fn relative_tolerance(rhs: f64) -> f64 {
    1e-9 * rhs.abs().max(1.0)
}

//! Relation reports: the machine-readable outcome of every verifier.

use serde::{Deserialize, Serialize};

use crate::matrix::ResidualNorm;
use crate::scalar::Backend;

/// One verified relation: its residual, tolerance, and verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationCheck {
    pub name: String,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_zero: Option<bool>,
    pub tol: f64,
    pub pass: bool,
    /// Informational checks report a residual without asserting it.
    pub asserted: bool,
}

impl RelationCheck {
    /// Asserted check: passes when the residual vanishes symbolically or
    /// stays within `tol`.
    pub fn asserted(name: impl Into<String>, residual: &ResidualNorm, tol: f64) -> Self {
        RelationCheck {
            name: name.into(),
            residual: residual.max_abs,
            exact_zero: residual.exact_zero,
            tol,
            pass: residual.within(tol),
            asserted: true,
        }
    }

    /// Exactness check: passes only when the backend proves the residual is
    /// symbolically zero.
    pub fn exact(name: impl Into<String>, residual: &ResidualNorm) -> Self {
        RelationCheck {
            name: name.into(),
            residual: residual.max_abs,
            exact_zero: residual.exact_zero,
            tol: 0.0,
            pass: residual.exact_zero == Some(true),
            asserted: true,
        }
    }

    /// Reported-only check: never fails, just records the residual.
    pub fn informational(name: impl Into<String>, residual: &ResidualNorm) -> Self {
        RelationCheck {
            name: name.into(),
            residual: residual.max_abs,
            exact_zero: residual.exact_zero,
            tol: f64::INFINITY,
            pass: true,
            asserted: false,
        }
    }

    /// Asserted check on a bare floating residual.
    pub fn asserted_value(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        RelationCheck {
            name: name.into(),
            residual,
            exact_zero: None,
            tol,
            pass: residual <= tol,
            asserted: true,
        }
    }

    /// Reported-only check on a bare floating residual.
    pub fn informational_value(name: impl Into<String>, residual: f64) -> Self {
        RelationCheck {
            name: name.into(),
            residual,
            exact_zero: None,
            tol: f64::INFINITY,
            pass: true,
            asserted: false,
        }
    }
}

/// A named bundle of relation checks with an overall verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationReport {
    pub subject: String,
    pub backend: Backend,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn new(subject: impl Into<String>, backend: Backend) -> Self {
        RelationReport {
            subject: subject.into(),
            backend,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: RelationCheck) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

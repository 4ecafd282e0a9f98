//! Identity-check reports: both sides of an identity, the normalized
//! residual, and provenance notes.

use crate::algebra::CDNumber;

/// Result of evaluating one identity at one argument.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub lhs: CDNumber,
    pub rhs: CDNumber,
    /// `|lhs - rhs| / (1 + |rhs|)`.
    pub residual: f64,
    /// Method provenance and any diagnostic residuals.
    pub method_notes: String,
    /// Tolerances that went into the check (quadrature estimates etc.).
    pub tolerances: Vec<f64>,
}

impl IdentityReport {
    pub fn new(lhs: CDNumber, rhs: CDNumber, method_notes: String, tolerances: Vec<f64>) -> Self {
        let residual = normalized_residual(&lhs, &rhs);
        Self {
            lhs,
            rhs,
            residual,
            method_notes,
            tolerances,
        }
    }

    /// Raw distance `|lhs - rhs|`.
    pub fn absolute_residual(&self) -> f64 {
        (&self.lhs - &self.rhs).norm()
    }
}

/// `|a - b| / (1 + |b|)`.
pub fn normalized_residual(a: &CDNumber, b: &CDNumber) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

//! Shared numerical tolerances.
//!
//! One knob set governs the whole library so that rank decisions, eigenvalue
//! clustering, and residual acceptance stay mutually consistent. Absolute
//! thresholds are stated for unit-scale data; routines scale them by the
//! magnitude of their inputs where noted in their docs.

/// Tolerance configuration threaded through every decision point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tol {
    /// Absolute tolerance on each real component for scalar equality and
    /// residual acceptance at unit scale.
    pub abs: f64,
    /// Relative threshold on singular values for rank decisions
    /// (σ ≤ rank_rel·σ_max counts as zero).
    pub rank_rel: f64,
    /// Relative eigenvalue clustering radius: eigenvalues closer than
    /// cluster_rel·scale are treated as one.
    pub cluster_rel: f64,
    /// Relative residual bound for accepting a computed eigenpair of an
    /// ordinary complex matrix.
    pub eig_rel: f64,
    /// Relative residual bound for accepting a Jordan reconstruction.
    pub jordan_rel: f64,
}

impl Default for Tol {
    fn default() -> Self {
        Tol {
            abs: 1e-12,
            rank_rel: 1e-9,
            cluster_rel: 1e-6,
            eig_rel: 1e-8,
            jordan_rel: 1e-8,
        }
    }
}

impl Tol {
    /// Tolerances with the default profile.
    pub fn new() -> Self {
        Self::default()
    }

    /// True if `x` vanishes at the absolute tolerance.
    pub fn is_zero(&self, x: f64) -> bool {
        x.abs() <= self.abs
    }

    /// True if both real components of `z` vanish at the absolute tolerance.
    pub fn is_zero_cx(&self, z: crate::scalar::Complex64) -> bool {
        self.is_zero(z.re) && self.is_zero(z.im)
    }

    /// Componentwise complex equality at the absolute tolerance.
    pub fn eq_cx(&self, a: crate::scalar::Complex64, b: crate::scalar::Complex64) -> bool {
        self.is_zero_cx(a - b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Complex64;

    #[test]
    fn default_profile() {
        let t = Tol::new();
        assert_eq!(t.abs, 1e-12);
        assert_eq!(t.rank_rel, 1e-9);
        assert_eq!(t.cluster_rel, 1e-6);
    }

    #[test]
    fn zero_tests_respect_abs() {
        let t = Tol::new();
        assert!(t.is_zero(5e-13));
        assert!(!t.is_zero(5e-12));
        assert!(t.eq_cx(Complex64::new(1.0, 2.0), Complex64::new(1.0 + 1e-13, 2.0)));
        assert!(!t.eq_cx(Complex64::new(1.0, 2.0), Complex64::new(1.0, 2.1)));
    }
}

//! Dual complex linear algebra.
//!
//! A dual complex number is `a = a_s + a_d·ε` with complex components and
//! `ε² = 0`. Matrices over these numbers split into a standard part and a
//! dual part, and their eigenvalue theory is unlike the complex case: a
//! matrix may have exactly `n` eigenvalues, none at all, or infinitely many.
//! This crate classifies the three regimes, computes inverses, decides
//! diagonalizability with certificates, and produces the two known Jordan
//! canonical forms (diagonalizable standard part; Jordan-block standard
//! part), together with a JSON-speaking CLI (`dcmx`) for batch use.
//!
//! Module map:
//! - [`scalar`]: dual complex / dual number scalars, total order, square root.
//! - [`cxla`]: ordinary complex linear algebra support (solve, rank,
//!   nullspace, eigen/Jordan decomposition, polynomial determinants).
//! - [`matrix`]: dual complex matrices and vectors, inverse, norms,
//!   eigenpair verification.
//! - [`eigen`]: eigenvalue classification (per-candidate test, structured
//!   pencil, full classifier, Hermitian solver, diagonalizability).
//! - [`jordan`]: dual Jordan canonical forms.
//! - [`json`]: the wire formats used by the CLI and FFI surfaces.

pub mod cxla;
pub mod eigen;
pub mod error;
pub mod jordan;
pub mod json;
pub mod matrix;
pub mod scalar;
pub mod tol;

pub use error::{Error, Result};
pub use matrix::{DCMatrix, DCVector};
pub use scalar::{Complex64, DualComplex, DualNumber};
pub use tol::Tol;

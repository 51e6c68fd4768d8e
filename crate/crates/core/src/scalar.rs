//! Dual complex and dual number scalars.
//!
//! A dual complex number is `a = a_s + a_d·ε` with complex standard part
//! `a_s`, complex dual part `a_d`, and `ε² = 0`; multiplication is
//! commutative. A dual number has real parts and carries a lexicographic
//! total order on `(std, dual)`. The magnitude of any dual complex number is
//! a nonnegative dual number `|a| = |a_s| + |a_d|·ε`.
//!
//! `a` is *appreciable* when its standard part is nonzero; only appreciable
//! numbers (and zero, for the square root) admit inverses and roots.

use crate::error::{Error, Result};
use crate::tol::Tol;
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

pub use num_complex::Complex64;

/// Shorthand for the complex zero.
pub(crate) fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Shorthand for the complex unit.
pub(crate) fn cone() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// A dual complex number `std + dual·ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualComplex {
    /// Standard part `a_s`.
    pub std: Complex64,
    /// Dual part `a_d`.
    pub dual: Complex64,
}

/// A dual number `std + dual·ε` with real components, totally ordered.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualNumber {
    /// Standard part.
    pub std: f64,
    /// Dual part.
    pub dual: f64,
}

impl DualComplex {
    /// Builds a dual complex number from its two complex parts.
    pub fn new(std: Complex64, dual: Complex64) -> Self {
        debug_assert!(
            std.re.is_finite() && std.im.is_finite() && dual.re.is_finite() && dual.im.is_finite(),
            "dual complex components must be finite"
        );
        DualComplex { std, dual }
    }

    /// Builds from four real components `(re_s, im_s, re_d, im_d)`.
    pub fn from_parts(re_s: f64, im_s: f64, re_d: f64, im_d: f64) -> Self {
        Self::new(Complex64::new(re_s, im_s), Complex64::new(re_d, im_d))
    }

    /// The zero element.
    pub fn zero() -> Self {
        Self::new(czero(), czero())
    }

    /// The multiplicative unit.
    pub fn one() -> Self {
        Self::new(cone(), czero())
    }

    /// A purely standard (complex) number.
    pub fn from_std(std: Complex64) -> Self {
        Self::new(std, czero())
    }

    /// True when the standard part is nonzero at the configured tolerance.
    pub fn is_appreciable(&self, tol: &Tol) -> bool {
        !tol.is_zero_cx(self.std)
    }

    /// Conjugate: conjugates both parts.
    pub fn conj(&self) -> Self {
        Self::new(self.std.conj(), self.dual.conj())
    }

    /// Magnitude `|a_s| + |a_d|·ε`, a nonnegative dual number.
    pub fn magnitude(&self) -> DualNumber {
        DualNumber::new(self.std.norm(), self.dual.norm())
    }

    /// Multiplicative inverse `a_s⁻¹ − a_s⁻¹·a_d·a_s⁻¹·ε`.
    ///
    /// Errors with [`Error::NotAppreciable`] when the standard part is zero:
    /// non-appreciable numbers have no inverse.
    pub fn inv(&self, tol: &Tol) -> Result<Self> {
        if !self.is_appreciable(tol) {
            return Err(Error::NotAppreciable);
        }
        let si = cone() / self.std;
        Ok(Self::new(si, -si * self.dual * si))
    }

    /// Componentwise equality at the absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: &Tol) -> bool {
        tol.eq_cx(self.std, other.std) && tol.eq_cx(self.dual, other.dual)
    }
}

impl Add for DualComplex {
    type Output = DualComplex;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.std + rhs.std, self.dual + rhs.dual)
    }
}

impl Sub for DualComplex {
    type Output = DualComplex;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.std - rhs.std, self.dual - rhs.dual)
    }
}

impl Mul for DualComplex {
    type Output = DualComplex;
    /// `a·b = a_s·b_s + (a_s·b_d + a_d·b_s)·ε` — the ε² term vanishes.
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.std * rhs.std,
            self.std * rhs.dual + self.dual * rhs.std,
        )
    }
}

impl Neg for DualComplex {
    type Output = DualComplex;
    fn neg(self) -> Self {
        Self::new(-self.std, -self.dual)
    }
}

impl DualNumber {
    /// Builds a dual number from its real components.
    pub fn new(std: f64, dual: f64) -> Self {
        debug_assert!(
            std.is_finite() && dual.is_finite(),
            "dual number components must be finite"
        );
        DualNumber { std, dual }
    }

    /// The zero element.
    pub fn zero() -> Self {
        Self::new(0.0, 0.0)
    }

    /// Widens to a dual complex number.
    pub fn to_dual_complex(&self) -> DualComplex {
        DualComplex::from_parts(self.std, 0.0, self.dual, 0.0)
    }

    /// True when the standard part is nonzero at the configured tolerance.
    pub fn is_appreciable(&self, tol: &Tol) -> bool {
        !tol.is_zero(self.std)
    }

    /// Lexicographic comparison on `(std, dual)` — the total order.
    ///
    /// Exact (no tolerance): a fuzzy comparison would lose transitivity.
    pub fn compare(&self, other: &Self) -> Ordering {
        match self
            .std
            .partial_cmp(&other.std)
            .expect("finite by invariant")
        {
            Ordering::Equal => self
                .dual
                .partial_cmp(&other.dual)
                .expect("finite by invariant"),
            ord => ord,
        }
    }

    /// Square root `√a_s + a_d/(2√a_s)·ε`, defined for nonnegative inputs
    /// that are appreciable or exactly zero.
    ///
    /// Errors: [`Error::NegativeInput`] when `a < 0` under the total order;
    /// [`Error::NotAppreciable`] when `a_s = 0` but `a_d ≠ 0` (the
    /// construction does not define a root there).
    pub fn sqrt(&self, tol: &Tol) -> Result<Self> {
        if self.compare(&Self::zero()) == Ordering::Less {
            return Err(Error::NegativeInput);
        }
        if !self.is_appreciable(tol) {
            return if tol.is_zero(self.dual) {
                Ok(Self::zero())
            } else {
                Err(Error::NotAppreciable)
            };
        }
        let r = self.std.sqrt();
        Ok(Self::new(r, self.dual / (2.0 * r)))
    }

    /// Componentwise equality at the absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: &Tol) -> bool {
        tol.is_zero(self.std - other.std) && tol.is_zero(self.dual - other.dual)
    }
}

impl PartialOrd for DualNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl Add for DualNumber {
    type Output = DualNumber;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.std + rhs.std, self.dual + rhs.dual)
    }
}

impl Sub for DualNumber {
    type Output = DualNumber;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.std - rhs.std, self.dual - rhs.dual)
    }
}

impl Mul for DualNumber {
    type Output = DualNumber;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.std * rhs.std,
            self.std * rhs.dual + self.dual * rhs.std,
        )
    }
}

impl Neg for DualNumber {
    type Output = DualNumber;
    fn neg(self) -> Self {
        Self::new(-self.std, -self.dual)
    }
}

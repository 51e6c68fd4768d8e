//! Dual complex matrices and vectors.
//!
//! A dual complex matrix is a pair of same-shape complex matrices
//! `A = A_s + A_d·ε`. Products follow the scalar rule entrywise, so
//! `(AB)_s = A_s·B_s` and `(AB)_d = A_s·B_d + A_d·B_s`. A square matrix is
//! invertible exactly when its standard part is, with
//! `A⁻¹ = A_s⁻¹ − A_s⁻¹·A_d·A_s⁻¹·ε`; a vector is *appreciable* when its
//! standard part is nonzero, and only appreciable vectors qualify as
//! eigenvectors.

use crate::cxla::{self, CxMat, CxVec};
use crate::error::{Error, Result};
use crate::scalar::{cone, czero, DualComplex, DualNumber};
use crate::tol::Tol;

/// A dual complex matrix: standard part + dual part of identical shape.
#[derive(Debug, Clone, PartialEq)]
pub struct DCMatrix {
    std: CxMat,
    dual: CxMat,
}

/// A dual complex column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct DCVector {
    std: CxVec,
    dual: CxVec,
}

impl DCMatrix {
    /// Builds a matrix from its two parts; they must have identical shape.
    pub fn new(std: CxMat, dual: CxMat) -> Result<Self> {
        if std.shape() != dual.shape() {
            return Err(Error::ShapeMismatch(format!(
                "standard part is {}×{} but dual part is {}×{}",
                std.nrows(),
                std.ncols(),
                dual.nrows(),
                dual.ncols()
            )));
        }
        Ok(DCMatrix { std, dual })
    }

    /// A purely standard matrix (zero dual part).
    pub fn from_std(std: CxMat) -> Self {
        let dual = CxMat::zeros(std.nrows(), std.ncols());
        DCMatrix { std, dual }
    }

    /// The n×n identity.
    pub fn identity(n: usize) -> Self {
        Self::from_std(cxla::eye(n))
    }

    /// The all-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DCMatrix {
            std: CxMat::zeros(rows, cols),
            dual: CxMat::zeros(rows, cols),
        }
    }

    /// Standard part.
    pub fn std(&self) -> &CxMat {
        &self.std
    }

    /// Dual part.
    pub fn dual(&self) -> &CxMat {
        &self.dual
    }

    /// Row count.
    pub fn nrows(&self) -> usize {
        self.std.nrows()
    }

    /// Column count.
    pub fn ncols(&self) -> usize {
        self.std.ncols()
    }

    /// True for square matrices.
    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    /// Entry accessor as a dual complex scalar.
    pub fn get(&self, i: usize, j: usize) -> DualComplex {
        DualComplex::new(self.std[(i, j)], self.dual[(i, j)])
    }

    /// Flat Frobenius norm over both parts: √(‖A_s‖² + ‖A_d‖²). Used to
    /// scale residual acceptance thresholds.
    pub fn norm(&self) -> f64 {
        (cxla::fro_norm(&self.std).powi(2) + cxla::fro_norm(&self.dual).powi(2)).sqrt()
    }

    /// Matrix product with the ε² term dropped.
    pub fn matmul(&self, rhs: &DCMatrix) -> Result<DCMatrix> {
        if self.ncols() != rhs.nrows() {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.nrows(),
                self.ncols(),
                rhs.nrows(),
                rhs.ncols()
            )));
        }
        Ok(DCMatrix {
            std: &self.std * &rhs.std,
            dual: &self.std * &rhs.dual + &self.dual * &rhs.std,
        })
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, x: &DCVector) -> Result<DCVector> {
        if self.ncols() != x.dim() {
            return Err(Error::ShapeMismatch(format!(
                "cannot apply {}×{} to a vector of length {}",
                self.nrows(),
                self.ncols(),
                x.dim()
            )));
        }
        Ok(DCVector {
            std: &self.std * &x.std,
            dual: &self.std * &x.dual + &self.dual * &x.std,
        })
    }

    /// Sum; shapes must agree.
    pub fn add(&self, rhs: &DCMatrix) -> Result<DCMatrix> {
        if self.std.shape() != rhs.std.shape() {
            return Err(Error::ShapeMismatch("matrix sum of unequal shapes".into()));
        }
        Ok(DCMatrix {
            std: &self.std + &rhs.std,
            dual: &self.dual + &rhs.dual,
        })
    }

    /// Difference; shapes must agree.
    pub fn sub(&self, rhs: &DCMatrix) -> Result<DCMatrix> {
        if self.std.shape() != rhs.std.shape() {
            return Err(Error::ShapeMismatch(
                "matrix difference of unequal shapes".into(),
            ));
        }
        Ok(DCMatrix {
            std: &self.std - &rhs.std,
            dual: &self.dual - &rhs.dual,
        })
    }

    /// Scales every entry by a dual complex scalar.
    pub fn scale(&self, c: DualComplex) -> DCMatrix {
        DCMatrix {
            std: &self.std * c.std,
            dual: &self.std * c.dual + &self.dual * c.std,
        }
    }

    /// Conjugate transpose: transposes and conjugates both parts.
    pub fn conj_transpose(&self) -> DCMatrix {
        DCMatrix {
            std: self.std.adjoint(),
            dual: self.dual.adjoint(),
        }
    }

    /// Inverse `A_s⁻¹ − A_s⁻¹·A_d·A_s⁻¹·ε`.
    ///
    /// Errors with [`Error::SingularStandardPart`] when the standard part is
    /// rank deficient at the rank tolerance.
    pub fn inverse(&self, tol: &Tol) -> Result<DCMatrix> {
        let n = self.nrows();
        if !self.is_square() {
            return Err(Error::ShapeMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        let r = cxla::rank(&self.std, tol);
        if r < n {
            return Err(Error::SingularStandardPart { rank: r, n });
        }
        let si = self
            .std
            .clone()
            .lu()
            .try_inverse()
            .ok_or(Error::SingularStandardPart { rank: r, n })?;
        let dual = -(&si * &self.dual * &si);
        Ok(DCMatrix { std: si, dual })
    }

    /// True iff `A·A* = I` at the absolute tolerance (scaled by ‖A‖²).
    pub fn is_unitary(&self, tol: &Tol) -> bool {
        if !self.is_square() {
            return false;
        }
        let p = self
            .matmul(&self.conj_transpose())
            .expect("square times its adjoint");
        let diff = p
            .sub(&DCMatrix::identity(self.nrows()))
            .expect("same shape");
        diff.norm() <= tol.abs * (1.0 + self.norm().powi(2))
    }

    /// Similarity transform `P⁻¹·B·P` (eigenvalues are preserved).
    pub fn similar_transform(p: &DCMatrix, b: &DCMatrix, tol: &Tol) -> Result<DCMatrix> {
        if !p.is_square() || p.std.shape() != b.std.shape() {
            return Err(Error::ShapeMismatch(
                "similarity transform needs square matrices of one size".into(),
            ));
        }
        let pinv = p.inverse(tol)?;
        pinv.matmul(b)?.matmul(p)
    }

    /// Componentwise equality at the absolute tolerance.
    pub fn approx_eq(&self, other: &DCMatrix, tol: &Tol) -> bool {
        self.std.shape() == other.std.shape()
            && self
                .std
                .iter()
                .zip(other.std.iter())
                .all(|(a, b)| tol.eq_cx(*a, *b))
            && self
                .dual
                .iter()
                .zip(other.dual.iter())
                .all(|(a, b)| tol.eq_cx(*a, *b))
    }
}

impl DCVector {
    /// Builds a vector from its two parts; lengths must agree.
    pub fn new(std: CxVec, dual: CxVec) -> Result<Self> {
        if std.len() != dual.len() {
            return Err(Error::ShapeMismatch(format!(
                "standard part has length {} but dual part {}",
                std.len(),
                dual.len()
            )));
        }
        Ok(DCVector { std, dual })
    }

    /// A purely standard vector.
    pub fn from_std(std: CxVec) -> Self {
        let dual = CxVec::zeros(std.len());
        DCVector { std, dual }
    }

    /// The i-th unit vector of dimension n.
    pub fn unit(n: usize, i: usize) -> Self {
        Self::from_std(CxVec::from_fn(
            n,
            |k, _| if k == i { cone() } else { czero() },
        ))
    }

    /// The zero vector.
    pub fn zeros(n: usize) -> Self {
        DCVector {
            std: CxVec::zeros(n),
            dual: CxVec::zeros(n),
        }
    }

    /// Standard part.
    pub fn std(&self) -> &CxVec {
        &self.std
    }

    /// Dual part.
    pub fn dual(&self) -> &CxVec {
        &self.dual
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.std.len()
    }

    /// Entry accessor as a dual complex scalar.
    pub fn get(&self, i: usize) -> DualComplex {
        DualComplex::new(self.std[i], self.dual[i])
    }

    /// True when the standard part is nonzero at the tolerance.
    pub fn is_appreciable(&self, tol: &Tol) -> bool {
        self.std.iter().any(|z| !tol.is_zero_cx(*z))
    }

    /// Flat Euclidean norm over both parts (for residual scaling).
    pub fn flat_norm(&self) -> f64 {
        (cxla::vec_norm(&self.std).powi(2) + cxla::vec_norm(&self.dual).powi(2)).sqrt()
    }

    /// Scales by a dual complex scalar.
    pub fn scale(&self, c: DualComplex) -> DCVector {
        DCVector {
            std: &self.std * c.std,
            dual: &self.std * c.dual + &self.dual * c.std,
        }
    }

    /// Sum; dimensions must agree.
    pub fn add(&self, rhs: &DCVector) -> Result<DCVector> {
        if self.dim() != rhs.dim() {
            return Err(Error::ShapeMismatch("vector sum of unequal lengths".into()));
        }
        Ok(DCVector {
            std: &self.std + &rhs.std,
            dual: &self.dual + &rhs.dual,
        })
    }

    /// Difference; dimensions must agree.
    pub fn sub(&self, rhs: &DCVector) -> Result<DCVector> {
        if self.dim() != rhs.dim() {
            return Err(Error::ShapeMismatch(
                "vector difference of unequal lengths".into(),
            ));
        }
        Ok(DCVector {
            std: &self.std - &rhs.std,
            dual: &self.dual - &rhs.dual,
        })
    }

    /// The 2-norm as a dual number.
    ///
    /// For appreciable vectors this is `√(Σ|x_i|²)` where `|x_i|` is the
    /// dual-number magnitude of each entry (so entries with zero standard
    /// part contribute nothing, since `(|x_id|ε)² = 0`); for vectors with
    /// zero standard part it is `‖x_d‖₂·ε`.
    pub fn norm2(&self, tol: &Tol) -> DualNumber {
        if self.is_appreciable(tol) {
            let mut sum = DualNumber::zero();
            for i in 0..self.dim() {
                let m = self.get(i).magnitude();
                sum = sum + m * m;
            }
            sum.sqrt(tol).expect("appreciable nonnegative sum")
        } else {
            DualNumber::new(0.0, cxla::vec_norm(&self.dual))
        }
    }

    /// Inner product `x*y = Σ x_i* y_i`.
    pub fn inner(&self, rhs: &DCVector) -> Result<DualComplex> {
        if self.dim() != rhs.dim() {
            return Err(Error::ShapeMismatch(
                "inner product of unequal lengths".into(),
            ));
        }
        let mut acc = DualComplex::zero();
        for i in 0..self.dim() {
            acc = acc + self.get(i).conj() * rhs.get(i);
        }
        Ok(acc)
    }

    /// Canonical eigenvector scaling: the self inner product `x*x` becomes
    /// exactly 1 (so the 2-norm's standard part is 1) and the first
    /// appreciable entry's standard part becomes real positive. Errors when
    /// the vector is not appreciable.
    ///
    /// Scaling by `(x*x)^{-1/2}` rather than by the entrywise-magnitude
    /// 2-norm keeps orthonormal frames orthonormal: the inner product is
    /// what pairwise orthonormality is measured in, and its dual part is
    /// what the scaling must cancel.
    pub fn normalize(&self, tol: &Tol) -> Result<DCVector> {
        if !self.is_appreciable(tol) {
            return Err(Error::NotAppreciable);
        }
        // x*x is a nonnegative appreciable dual number: ‖x_s‖² + 2Re(x_s*x_d)ε.
        let self_inner = self.inner(self)?;
        let nrm = DualNumber::new(self_inner.std.re, self_inner.dual.re)
            .sqrt(tol)?
            .to_dual_complex();
        let mut v = self.scale(nrm.inv(tol)?);
        let lead = v
            .std
            .iter()
            .find(|z| z.norm() > tol.rank_rel)
            .copied()
            .unwrap_or_else(cone);
        let phase = lead / lead.norm();
        v = v.scale(DualComplex::from_std(phase.conj()));
        Ok(v)
    }

    /// Componentwise equality at the absolute tolerance.
    pub fn approx_eq(&self, other: &DCVector, tol: &Tol) -> bool {
        self.dim() == other.dim()
            && self
                .std
                .iter()
                .zip(other.std.iter())
                .all(|(a, b)| tol.eq_cx(*a, *b))
            && self
                .dual
                .iter()
                .zip(other.dual.iter())
                .all(|(a, b)| tol.eq_cx(*a, *b))
    }
}

/// True iff the standard parts of `xs` have full column rank at the rank
/// tolerance ("appreciably linearly independent"). Any list longer than the
/// dimension is dependent. Errors when dimensions disagree.
pub fn appreciably_linearly_independent(xs: &[DCVector], tol: &Tol) -> Result<bool> {
    if xs.is_empty() {
        return Ok(true);
    }
    let n = xs[0].dim();
    if xs.iter().any(|x| x.dim() != n) {
        return Err(Error::ShapeMismatch(
            "independence test over vectors of unequal lengths".into(),
        ));
    }
    if xs.len() > n {
        return Ok(false);
    }
    let m = CxMat::from_fn(n, xs.len(), |i, j| xs[j].std()[i]);
    Ok(cxla::rank(&m, tol) == xs.len())
}

/// Checks `A·x = λ·x` for an appreciable candidate via the two split
/// equations: the standard part `A_s·x_s = λ_s·x_s` and the dual part
/// `(A_s − λ_s·I)·x_d − λ_d·x_s = −A_d·x_s`, each within `τ_abs` scaled by
/// the magnitudes of `A` and `x`. Non-appreciable candidates are rejected
/// outright.
pub fn verify_eigenpair(
    a: &DCMatrix,
    lambda: DualComplex,
    x: &DCVector,
    tol: &Tol,
) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(
            "eigenpair check needs a square matrix".into(),
        ));
    }
    if a.ncols() != x.dim() {
        return Err(Error::ShapeMismatch(format!(
            "matrix order {} does not match vector length {}",
            a.ncols(),
            x.dim()
        )));
    }
    if !x.is_appreciable(tol) {
        return Ok(false);
    }
    let scale = tol.abs * (1.0 + a.norm()) * (1.0 + x.flat_norm() + lambda.magnitude().std);
    let standard = a.std() * x.std() - x.std() * lambda.std;
    if cxla::vec_norm(&standard) > scale {
        return Ok(false);
    }
    let n = a.nrows();
    let dual = (a.std() - cxla::eye(n) * lambda.std) * x.dual() - x.std() * lambda.dual
        + a.dual() * x.std();
    Ok(cxla::vec_norm(&dual) <= scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn r(x: f64) -> Complex64 {
        c(x, 0.0)
    }

    fn cxmat(rows: usize, cols: usize, data: &[f64]) -> CxMat {
        CxMat::from_fn(rows, cols, |i, j| r(data[i * cols + j]))
    }

    /// Example 1's matrix: standard part J_2(1), dual part with a 1 in the
    /// corner.
    fn example1() -> DCMatrix {
        DCMatrix::new(
            cxmat(2, 2, &[1.0, 1.0, 0.0, 1.0]),
            cxmat(2, 2, &[0.0, 0.0, 1.0, 0.0]),
        )
        .unwrap()
    }

    #[test]
    fn new_rejects_shape_mismatch() {
        let e = DCMatrix::new(CxMat::zeros(2, 2), CxMat::zeros(2, 3));
        assert!(matches!(e, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn matmul_identity_and_nilpotent() {
        let tol = Tol::new();
        let a = example1();
        let id = DCMatrix::identity(2);
        assert!(id.matmul(&a).unwrap().approx_eq(&a, &tol));
        // (εI)² = 0
        let eps_i = DCMatrix::new(CxMat::zeros(2, 2), cxla::eye(2)).unwrap();
        let sq = eps_i.matmul(&eps_i).unwrap();
        assert!(sq.approx_eq(&DCMatrix::zeros(2, 2), &tol));
    }

    #[test]
    fn matmul_matches_entrywise_scalar_expansion() {
        let tol = Tol::new();
        let a = example1();
        let prod = a.matmul(&a).unwrap();
        // Oracle: each product entry expanded with scalar dual arithmetic.
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = DualComplex::zero();
                for k in 0..2 {
                    acc = acc + a.get(i, k) * a.get(k, j);
                }
                assert!(prod.get(i, j).approx_eq(&acc, &tol));
            }
        }
        assert!(prod.std()[(0, 1)] == r(2.0) && prod.dual()[(1, 0)] == r(2.0));
        assert_eq!(prod.dual()[(1, 1)], r(1.0));
    }

    #[test]
    fn conj_transpose_properties() {
        let tol = Tol::new();
        // Real symmetric matrices are fixed points.
        let s = DCMatrix::from_std(cxmat(2, 2, &[2.0, 1.0, 1.0, 3.0]));
        assert!(s.conj_transpose().approx_eq(&s, &tol));
        // (iε·E_12)* = −iε·E_21.
        let mut dual = CxMat::zeros(2, 2);
        dual[(0, 1)] = c(0.0, 1.0);
        let m = DCMatrix::new(CxMat::zeros(2, 2), dual).unwrap();
        let mt = m.conj_transpose();
        assert_eq!(mt.dual()[(1, 0)], c(0.0, -1.0));
        assert!(tol.is_zero_cx(mt.dual()[(0, 1)]));
        // Involution and product reversal.
        let a = example1();
        assert!(a.conj_transpose().conj_transpose().approx_eq(&a, &tol));
        let b = DCMatrix::new(
            cxmat(2, 2, &[0.0, 2.0, 1.0, 1.0]),
            cxmat(2, 2, &[1.0, 0.0, 0.0, -1.0]),
        )
        .unwrap();
        let lhs = a.matmul(&b).unwrap().conj_transpose();
        let rhs = b.conj_transpose().matmul(&a.conj_transpose()).unwrap();
        assert!(lhs.approx_eq(&rhs, &tol));
    }

    #[test]
    fn inverse_of_example_matrix() {
        let tol = Tol::new();
        let a = example1();
        let b = a.inverse(&tol).unwrap();
        let expect = DCMatrix::new(
            cxmat(2, 2, &[1.0, -1.0, 0.0, 1.0]),
            cxmat(2, 2, &[1.0, -1.0, -1.0, 1.0]),
        )
        .unwrap();
        assert!(b.approx_eq(&expect, &tol));
        // Both products give I (the two-sided equivalence).
        let id = DCMatrix::identity(2);
        assert!(a.matmul(&b).unwrap().approx_eq(&id, &tol));
        assert!(b.matmul(&a).unwrap().approx_eq(&id, &tol));
    }

    #[test]
    fn inverse_with_identity_standard_part() {
        let tol = Tol::new();
        let ad = cxmat(2, 2, &[0.5, 2.0, -1.0, 0.25]);
        let a = DCMatrix::new(cxla::eye(2), ad.clone()).unwrap();
        let b = a.inverse(&tol).unwrap();
        let expect = DCMatrix::new(cxla::eye(2), -ad).unwrap();
        assert!(b.approx_eq(&expect, &tol));
    }

    #[test]
    fn inverse_rejects_singular_standard_part() {
        let tol = Tol::new();
        let a = DCMatrix::new(CxMat::zeros(2, 2), cxla::eye(2)).unwrap();
        match a.inverse(&tol) {
            Err(Error::SingularStandardPart { rank, n }) => {
                assert_eq!((rank, n), (0, 2));
            }
            other => panic!("expected SingularStandardPart, got {other:?}"),
        }
    }

    #[test]
    fn unitary_checks() {
        let tol = Tol::new();
        assert!(DCMatrix::identity(3).is_unitary(&tol));
        assert!(!DCMatrix::identity(3)
            .scale(DualComplex::from_parts(2.0, 0.0, 0.0, 0.0))
            .is_unitary(&tol));
        // I + A_d·ε is unitary iff A_d* = −A_d.
        let skew = cxmat(2, 2, &[0.0, 1.0, -1.0, 0.0]);
        let u = DCMatrix::new(cxla::eye(2), skew).unwrap();
        assert!(u.is_unitary(&tol));
        let not_skew = cxmat(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        assert!(!DCMatrix::new(cxla::eye(2), not_skew)
            .unwrap()
            .is_unitary(&tol));
    }

    #[test]
    fn vector_norms() {
        let tol = Tol::new();
        // (3,4) with zero dual part.
        let x = DCVector::from_std(CxVec::from_vec(vec![r(3.0), r(4.0)]));
        assert!(x.norm2(&tol).approx_eq(&DualNumber::new(5.0, 0.0), &tol));
        // Zero standard part: ε-norm branch.
        let y = DCVector::new(CxVec::zeros(2), CxVec::from_vec(vec![r(3.0), r(4.0)])).unwrap();
        assert!(y.norm2(&tol).approx_eq(&DualNumber::new(0.0, 5.0), &tol));
        // x = (1, ε): the pure-ε entry contributes nothing.
        let z = DCVector::new(
            CxVec::from_vec(vec![r(1.0), r(0.0)]),
            CxVec::from_vec(vec![r(0.0), r(1.0)]),
        )
        .unwrap();
        assert!(z.norm2(&tol).approx_eq(&DualNumber::new(1.0, 0.0), &tol));
    }

    #[test]
    fn inner_products() {
        let tol = Tol::new();
        let e1 = DCVector::unit(2, 0);
        let e2 = DCVector::unit(2, 1);
        assert!(e1.inner(&e2).unwrap().approx_eq(&DualComplex::zero(), &tol));
        assert!(e1.inner(&e1).unwrap().approx_eq(&DualComplex::one(), &tol));
        // x = (1+ε, 0): x*x = 1+2ε, matching the squared norm here.
        let x = DCVector::new(
            CxVec::from_vec(vec![r(1.0), r(0.0)]),
            CxVec::from_vec(vec![r(1.0), r(0.0)]),
        )
        .unwrap();
        let self_product = x.inner(&x).unwrap();
        assert!(self_product.approx_eq(&DualComplex::from_parts(1.0, 0.0, 2.0, 0.0), &tol));
        let nrm = x.norm2(&tol);
        assert!((nrm * nrm).approx_eq(&DualNumber::new(1.0, 2.0), &tol));
    }

    #[test]
    fn appreciable_independence() {
        let tol = Tol::new();
        let e1 = DCVector::unit(2, 0);
        let e2 = DCVector::unit(2, 1);
        assert!(appreciably_linearly_independent(&[e1.clone(), e2.clone()], &tol).unwrap());
        // Same standard part e1 twice: dual parts cannot rescue independence.
        let shadow = DCVector::new(
            CxVec::from_vec(vec![r(1.0), r(0.0)]),
            CxVec::from_vec(vec![r(0.0), r(1.0)]),
        )
        .unwrap();
        assert!(!appreciably_linearly_independent(&[e1.clone(), shadow], &tol).unwrap());
        // More vectors than the dimension is always dependent.
        assert!(
            !appreciably_linearly_independent(&[e1.clone(), e2.clone(), e1.clone()], &tol).unwrap()
        );
    }

    #[test]
    fn eigenpair_verification() {
        let tol = Tol::new();
        // The one eigenpair of the non-diagonalizable I + J-like dual part:
        // A_s = I, A_d = [[1,1],[0,1]], λ = 1+ε, x = e1.
        let a = DCMatrix::new(cxla::eye(2), cxmat(2, 2, &[1.0, 1.0, 0.0, 1.0])).unwrap();
        let lambda = DualComplex::from_parts(1.0, 0.0, 1.0, 0.0);
        assert!(verify_eigenpair(&a, lambda, &DCVector::unit(2, 0), &tol).unwrap());
        // Identity matrix: any appreciable x with λ = 1.
        let id = DCMatrix::identity(2);
        let x = DCVector::new(
            CxVec::from_vec(vec![c(0.5, 1.0), r(-2.0)]),
            CxVec::from_vec(vec![r(0.25), c(0.0, 3.0)]),
        )
        .unwrap();
        assert!(verify_eigenpair(&id, DualComplex::one(), &x, &tol).unwrap());
        // Non-appreciable candidates never verify.
        let ghost = DCVector::new(CxVec::zeros(2), CxVec::from_vec(vec![r(1.0), r(0.0)])).unwrap();
        assert!(!verify_eigenpair(&id, DualComplex::one(), &ghost, &tol).unwrap());
        // A wrong eigenvalue fails the standard part.
        assert!(!verify_eigenpair(
            &a,
            DualComplex::from_parts(2.0, 0.0, 0.0, 0.0),
            &DCVector::unit(2, 0),
            &tol
        )
        .unwrap());
    }

    #[test]
    fn similarity_preserves_eigenpairs() {
        let tol = Tol::new();
        // B = P A P⁻¹ has eigenpair (λ, P x) whenever A has (λ, x).
        let a = DCMatrix::new(cxla::eye(2), cxmat(2, 2, &[1.0, 1.0, 0.0, 1.0])).unwrap();
        let lambda = DualComplex::from_parts(1.0, 0.0, 1.0, 0.0);
        let x = DCVector::unit(2, 0);
        let p = DCMatrix::new(
            cxmat(2, 2, &[2.0, 1.0, 1.0, 1.0]),
            cxmat(2, 2, &[0.0, 1.0, -1.0, 0.5]),
        )
        .unwrap();
        // A = P⁻¹ B P, so B = P A P⁻¹.
        let b = p
            .matmul(&a)
            .unwrap()
            .matmul(&p.inverse(&tol).unwrap())
            .unwrap();
        assert!(DCMatrix::similar_transform(&p, &b, &tol)
            .unwrap()
            .approx_eq(&a, &tol));
        let px = p.mul_vec(&x).unwrap();
        assert!(verify_eigenpair(&b, lambda, &px, &tol).unwrap());
        // Scalar P acts trivially.
        let two = DCMatrix::identity(2).scale(DualComplex::from_parts(2.0, 0.0, 0.0, 0.0));
        assert!(DCMatrix::similar_transform(&two, &b, &tol)
            .unwrap()
            .approx_eq(&b, &tol));
    }

    #[test]
    fn normalize_fixes_scale_and_phase() {
        let tol = Tol::new();
        let x = DCVector::new(
            CxVec::from_vec(vec![c(0.0, 2.0), r(0.0)]),
            CxVec::from_vec(vec![r(1.0), c(3.0, 0.0)]),
        )
        .unwrap();
        let v = x.normalize(&tol).unwrap();
        assert!((v.norm2(&tol).std - 1.0).abs() < 1e-12);
        let lead = v.std()[0];
        assert!(lead.im.abs() < 1e-12 && lead.re > 0.0);
        // Not-appreciable vectors cannot be normalized.
        let ghost = DCVector::new(CxVec::zeros(2), CxVec::from_vec(vec![r(1.0), r(0.0)])).unwrap();
        assert!(matches!(ghost.normalize(&tol), Err(Error::NotAppreciable)));
    }
}

//! Eigenvalue machinery for dual complex matrices.
//!
//! A dual complex eigenpair `(λ_s + λ_dε, x_s + x_dε)` splits into a
//! standard-part eigenpair `A_s x_s = λ_s x_s` and the coupled first-order
//! equation `(A_s − λ_sI)x_d − λ_d x_s = −A_d x_s`. Depending on `A_d`, a
//! standard eigenvalue may extend to exactly one dual completion, to a
//! one-parameter family (`λ_d` free), or to none at all. This module houses:
//!
//! - [`eig_at`]: the per-candidate test at one given standard eigenpair;
//! - [`build_structured_pencil`] / [`structured_eigen_system`]: the reduced
//!   `(n₀+t)`-dimensional pencil that decides the classification for a whole
//!   standard eigenvalue from its Jordan block structure;
//! - [`eig_all`]: the exhaustive classifier over all standard eigenvalues;
//! - [`is_diagonalizable`]: the exactly-n-independent-eigenvectors decision;
//! - [`hermitian_eig`]: the Hermitian specialization (n real dual
//!   eigenvalues, orthonormal eigenvectors, definiteness verdict).

use nalgebra::SymmetricEigen;

use crate::cxla::{self, CxMat, CxVec, Solution};
use crate::error::{Error, Result};
use crate::matrix::{appreciably_linearly_independent, verify_eigenpair, DCMatrix, DCVector};
use crate::scalar::{cone, czero, Complex64, DualComplex, DualNumber};
use crate::tol::Tol;

/// Outcome of the per-candidate test at a fixed standard eigenpair.
#[derive(Debug, Clone)]
pub enum EigAt {
    /// Exactly one `λ_d` completes the pair. `x_d` is the minimum-norm dual
    /// part; the dual part stays free along `ker(A_s − λ_sI)`.
    Unique {
        /// The unique dual component of the eigenvalue.
        lambda_d: Complex64,
        /// A particular dual component of the eigenvector.
        x_d: CxVec,
    },
    /// Every complex `λ_d` completes the pair.
    Infinite(EigAtFamily),
    /// No `λ_d` completes the pair; the least-squares gap certifies it.
    NoEigenvalue {
        /// Smallest achievable residual of the completion equation.
        certificate: f64,
    },
}

/// One-parameter family of eigenpairs at a fixed `(λ_s, x_s)`: for every
/// `λ_d ∈ ℂ` the dual part `x_d(λ_d) = base + λ_d·slope` completes the pair.
#[derive(Debug, Clone)]
pub struct EigAtFamily {
    /// Standard eigenvalue shared by the family.
    pub lambda_s: Complex64,
    /// Standard eigenvector shared by the family.
    pub x_s: CxVec,
    x_d_base: CxVec,
    x_d_slope: CxVec,
}

impl EigAtFamily {
    /// The eigenvector dual part at the given free parameter.
    pub fn x_d(&self, lambda_d: Complex64) -> CxVec {
        &self.x_d_base + &self.x_d_slope * lambda_d
    }

    /// Assembles the full (unnormalized) eigenpair at the given `λ_d`.
    pub fn eigenpair(&self, lambda_d: Complex64) -> (DualComplex, DCVector) {
        let lambda = DualComplex::new(self.lambda_s, lambda_d);
        let x = DCVector::new(self.x_s.clone(), self.x_d(lambda_d))
            .expect("base and slope share the dimension of x_s");
        (lambda, x)
    }
}

/// Appends `v` as an extra column to `m`.
fn hstack_vec(m: &CxMat, v: &CxVec) -> CxMat {
    let (rows, cols) = m.shape();
    CxMat::from_fn(
        rows,
        cols + 1,
        |i, j| if j < cols { m[(i, j)] } else { v[i] },
    )
}

/// Right singular vector for the smallest singular value — the best
/// available kernel direction when the rank test refuses to call one.
fn min_singular_vector(m: &CxMat) -> CxVec {
    let svd = m.clone().svd(false, true);
    let (imin, _) =
        svd.singular_values
            .iter()
            .enumerate()
            .fold(
                (0, f64::INFINITY),
                |best, (i, &s)| {
                    if s < best.1 {
                        (i, s)
                    } else {
                        best
                    }
                },
            );
    let v_t = svd.v_t.expect("requested V^H");
    CxVec::from_fn(m.ncols(), |j, _| v_t[(imin, j)].conj())
}

/// Classifies the dual completions of one candidate standard eigenpair.
///
/// With `Q = (A_s − λ_sI | x_s)`, a completion exists iff `A_d x_s` lies in
/// the column span of `Q`; it is unique iff additionally `x_s` lies outside
/// the span of `A_s − λ_sI`, and otherwise `λ_d` ranges over all of ℂ.
/// Solutions come from the bordered system `Q·(x_d; −λ_d) = −A_d x_s`.
///
/// Errors with [`Error::NotAnEigenpair`] when `(λ_s, x_s)` is not a
/// standard-part eigenpair within the eigenpair tolerance.
pub fn eig_at(a: &DCMatrix, lambda_s: Complex64, x_s: &CxVec, tol: &Tol) -> Result<EigAt> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "eigenvalue test needs a square matrix, got {}×{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let n = a.nrows();
    if x_s.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "candidate eigenvector has length {} for a {}×{} matrix",
            x_s.len(),
            n,
            n
        )));
    }
    let x_norm = cxla::vec_norm(x_s);
    if x_norm == 0.0 {
        return Err(Error::NotAnEigenpair(
            "candidate standard eigenvector is zero".into(),
        ));
    }
    let n_mat = a.std() - cxla::eye(n) * lambda_s;
    let pair_residual = cxla::vec_norm(&(&n_mat * x_s));
    let pair_scale = tol.eig_rel * (1.0 + cxla::fro_norm(a.std()) + lambda_s.norm()) * x_norm;
    if pair_residual > pair_scale {
        return Err(Error::NotAnEigenpair(format!(
            "‖A_s x_s − λ_s x_s‖ = {pair_residual:.3e} exceeds the tolerance {pair_scale:.3e}"
        )));
    }

    let q = hstack_vec(&n_mat, x_s);
    let b = -(a.dual() * x_s);
    let particular = match cxla::solve(&q, &b, tol)? {
        Solution::Inconsistent { residual, .. } => {
            return Ok(EigAt::NoEigenvalue {
                certificate: residual,
            })
        }
        Solution::Unique(z) => z,
        Solution::Affine { particular, .. } => particular,
    };

    if cxla::in_span(x_s, &n_mat, tol)? {
        // λ_d is free: x_d(λ_d) solves (A_s − λ_sI)x_d = −A_d x_s + λ_d x_s.
        let base = consistent_particular(&n_mat, &b, tol)?;
        let slope = consistent_particular(&n_mat, x_s, tol)?;
        Ok(EigAt::Infinite(EigAtFamily {
            lambda_s,
            x_s: x_s.clone(),
            x_d_base: base,
            x_d_slope: slope,
        }))
    } else {
        let lambda_d = -particular[n];
        let x_d = particular.rows(0, n).into_owned();
        Ok(EigAt::Unique { lambda_d, x_d })
    }
}

/// Particular solution of a system the caller has already proved consistent.
fn consistent_particular(m: &CxMat, b: &CxVec, tol: &Tol) -> Result<CxVec> {
    match cxla::solve(m, b, tol)? {
        Solution::Unique(x) => Ok(x),
        Solution::Affine { particular, .. } => Ok(particular),
        Solution::Inconsistent { residual, .. } => Err(Error::ConvergenceFailure(format!(
            "span test and solve disagree near the tolerance (residual {residual:.3e})"
        ))),
    }
}

/// The reduced `(n₀+t)`-dimensional pencil deciding the dual completions of
/// one standard eigenvalue, built from its canonical block structure: `n₀`
/// scalar (1×1) copies followed by `t` Jordan blocks of sizes ≥ 2.
///
/// `C = Wᵀ A_d Z`, where `Z` selects the scalar block plus the first column
/// of each big block and `W` selects the scalar block plus the last row of
/// each big block. Admissible `λ_d` are those for which
/// `M(λ_d) = [[λ_dI − C00, −C01], [−C10, −C11]]` has a nonzero kernel.
#[derive(Debug, Clone)]
pub struct StructuredPencil {
    /// Scalar-block dimension.
    pub n0: usize,
    /// Number of big (size ≥ 2) blocks.
    pub t: usize,
    /// Sizes of the big blocks, in order.
    pub big: Vec<usize>,
    /// Compressed coupling matrix `C = Wᵀ A_d Z`, `(n₀+t)×(n₀+t)`.
    pub c: CxMat,
    /// Column selector (`n×(n₀+t)` with unit columns).
    pub z: CxMat,
    /// Row selector (`n×(n₀+t)` with unit columns).
    pub w: CxMat,
}

/// Unit-column indices picked by the selectors for a local block layout:
/// `(first-column indices for Z, last-row indices for W)`.
fn selector_indices(n0: usize, big: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut zcols: Vec<usize> = (0..n0).collect();
    let mut wrows: Vec<usize> = (0..n0).collect();
    let mut at = n0;
    for &m in big {
        zcols.push(at);
        wrows.push(at + m - 1);
        at += m;
    }
    (zcols, wrows)
}

/// 0/1 matrix with columns `e_{idx[0]}, e_{idx[1]}, …` of dimension `n`.
fn unit_columns(n: usize, idx: &[usize]) -> CxMat {
    CxMat::from_fn(
        n,
        idx.len(),
        |i, j| if i == idx[j] { cone() } else { czero() },
    )
}

impl StructuredPencil {
    /// Upper-left `n₀×n₀` block of `C` (the scalar-block compression).
    pub fn c00(&self) -> CxMat {
        self.c.view((0, 0), (self.n0, self.n0)).into_owned()
    }

    /// Upper-right `n₀×t` block of `C`.
    pub fn c01(&self) -> CxMat {
        self.c.view((0, self.n0), (self.n0, self.t)).into_owned()
    }

    /// Lower-left `t×n₀` block of `C`.
    pub fn c10(&self) -> CxMat {
        self.c.view((self.n0, 0), (self.t, self.n0)).into_owned()
    }

    /// Lower-right `t×t` block of `C`.
    pub fn c11(&self) -> CxMat {
        self.c
            .view((self.n0, self.n0), (self.t, self.t))
            .into_owned()
    }

    /// `M(λ) = [[λI − C00, −C01], [−C10, −C11]]`, the matrix whose kernel
    /// vectors generate eigenvectors.
    pub fn m_of(&self, lambda: Complex64) -> CxMat {
        let mut m = -&self.c;
        for i in 0..self.n0 {
            m[(i, i)] += lambda;
        }
        m
    }
}

/// Builds the structured pencil for one standard eigenvalue from the dual
/// block `A_d` (in canonical coordinates) and the block layout `(n₀, big)`.
///
/// Errors with [`Error::BadBlockStructure`] when a declared big block has
/// size < 2 or the sizes do not tile the matrix.
pub fn build_structured_pencil(a_d: &CxMat, n0: usize, big: &[usize]) -> Result<StructuredPencil> {
    let n = a_d.nrows();
    if a_d.ncols() != n {
        return Err(Error::BadBlockStructure(format!(
            "dual block must be square, got {}×{}",
            n,
            a_d.ncols()
        )));
    }
    if let Some(&bad) = big.iter().find(|&&m| m < 2) {
        return Err(Error::BadBlockStructure(format!(
            "declared big block of size {bad}; sizes must be ≥ 2"
        )));
    }
    let covered = n0 + big.iter().sum::<usize>();
    if covered != n {
        return Err(Error::BadBlockStructure(format!(
            "blocks cover {covered} of {n} dimensions"
        )));
    }
    let (zcols, wrows) = selector_indices(n0, big);
    let z = unit_columns(n, &zcols);
    let w = unit_columns(n, &wrows);
    let c = w.transpose() * a_d * &z;
    Ok(StructuredPencil {
        n0,
        t: big.len(),
        big: big.to_vec(),
        c,
        z,
        w,
    })
}

/// One admissible `λ_d` of a pencil with a kernel basis of `M(λ_d)`.
#[derive(Debug, Clone)]
pub struct PencilRoot {
    /// The dual eigenvalue component.
    pub lambda_d: Complex64,
    /// Orthonormal kernel basis of `M(λ_d)`; each vector yields an
    /// eigenvector.
    pub kernel: Vec<CxVec>,
}

/// Classification of the admissible `λ_d` set of a structured pencil.
#[derive(Debug, Clone)]
pub enum PencilOutcome {
    /// Finitely many admissible `λ_d`: the roots of `det M(λ)`.
    Finite {
        /// Distinct roots, lexicographically sorted.
        roots: Vec<PencilRoot>,
        /// Warnings from the independent cross-check of the two root
        /// computations (empty in the well-conditioned case).
        diagnostics: Vec<String>,
    },
    /// `det M ≡ 0`: every `λ_d` admits a kernel vector.
    Infinite,
    /// `det M` is a nonzero constant: no `λ_d` works.
    NoSolution {
        /// Magnitude of the constant determinant.
        certificate: f64,
    },
}

/// Kernel basis of `m`, falling back to the least-singular direction when
/// the rank threshold refuses to certify a kernel at a computed root.
fn kernel_or_min_singular(m: &CxMat, tol: &Tol) -> Vec<CxVec> {
    let kernel = cxla::nullspace(m, tol);
    if kernel.is_empty() {
        vec![min_singular_vector(m)]
    } else {
        kernel
    }
}

/// Characterizes all `λ_d` for which `M(λ_d)` has a nonzero kernel.
///
/// The determinant polynomial `p(λ) = det M(λ)` (degree ≤ n₀) decides the
/// regime: identically zero ⇒ [`PencilOutcome::Infinite`]; a nonzero
/// constant ⇒ [`PencilOutcome::NoSolution`]; otherwise the roots form the
/// finite `λ_d` set, each paired with a kernel basis. Root values prefer an
/// eigenvalue computation — of `C00` when `t = 0`, of the Schur complement
/// `C00 − C01·C11⁻¹·C10` when `C11` is invertible — over the interpolated
/// polynomial's companion roots, which lose half the digits at multiple
/// roots; the polynomial roots then serve as an independent cross-check.
pub fn structured_eigen_system(p: &StructuredPencil, tol: &Tol) -> Result<PencilOutcome> {
    let s = p.n0 + p.t;
    if s == 0 {
        // Empty pencil: there is no nonzero kernel vector at any λ_d.
        return Ok(PencilOutcome::NoSolution { certificate: 1.0 });
    }
    let m1 = CxMat::from_fn(
        s,
        s,
        |i, j| {
            if i == j && i < p.n0 {
                cone()
            } else {
                czero()
            }
        },
    );
    let m0 = -&p.c;
    let det = cxla::poly_det(&m0, &m1, tol);
    if det.identically_zero {
        return Ok(PencilOutcome::Infinite);
    }
    if det.coeffs.len() == 1 {
        return Ok(PencilOutcome::NoSolution {
            certificate: det.coeffs[0].norm(),
        });
    }

    let mut diagnostics = Vec::new();
    let values = if p.t == 0 {
        cxla::eigenvalues(&p.c00())?
    } else {
        let c11 = p.c11();
        if cxla::rank(&c11, tol) == p.t {
            let c11_inv = c11.lu().try_inverse().ok_or_else(|| {
                Error::ConvergenceFailure("full-rank block failed to invert".into())
            })?;
            let schur_complement = p.c00() - p.c01() * c11_inv * p.c10();
            let from_eig = cxla::eigenvalues(&schur_complement)?;
            cross_check_roots(&from_eig, &det.coeffs, &mut diagnostics)?;
            from_eig
        } else {
            cxla::poly_roots(&det.coeffs)?
        }
    };

    let scale = values.iter().map(|v| v.norm()).fold(1.0_f64, f64::max);
    let roots = cxla::cluster_members(&values, scale, tol)
        .into_iter()
        .map(|(lambda_d, _)| PencilRoot {
            lambda_d,
            kernel: kernel_or_min_singular(&p.m_of(lambda_d), tol),
        })
        .collect();
    Ok(PencilOutcome::Finite { roots, diagnostics })
}

/// Compares the eigenvalue-route roots against the interpolated
/// determinant's companion roots, recording a diagnostic on mismatch.
fn cross_check_roots(
    from_eig: &[Complex64],
    coeffs: &[Complex64],
    diagnostics: &mut Vec<String>,
) -> Result<()> {
    let from_poly = cxla::poly_roots(coeffs)?;
    if from_poly.len() != from_eig.len() {
        diagnostics.push(format!(
            "determinant degree {} disagrees with the eigenvalue count {}",
            from_poly.len(),
            from_eig.len()
        ));
        return Ok(());
    }
    let mut sorted = from_eig.to_vec();
    sorted.sort_by(cxla::cx_lex);
    let scale = sorted.iter().map(|v| v.norm()).fold(1.0_f64, f64::max);
    let gap = sorted
        .iter()
        .zip(&from_poly)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0_f64, f64::max);
    if gap > 1e-6 * scale {
        diagnostics.push(format!(
            "root cross-check gap {gap:.3e} between the eigenvalue and determinant routes"
        ));
    }
    Ok(())
}

/// One fully assembled eigenpair.
#[derive(Debug, Clone)]
pub struct Eigenpair {
    /// The dual complex eigenvalue.
    pub lambda: DualComplex,
    /// The normalized eigenvector.
    pub vector: DCVector,
}

/// Location and layout of one standard eigenvalue's canonical block.
#[derive(Debug, Clone)]
struct BlockInfo {
    lambda: Complex64,
    offset: usize,
    ones: usize,
    big: Vec<usize>,
    size: usize,
}

/// Everything needed to turn a pencil kernel vector back into an eigenpair
/// of the original matrix: the change of basis, the transformed dual part,
/// and the block layout.
#[derive(Debug, Clone)]
struct ReconstructionCtx {
    matrix: DCMatrix,
    q_s: CxMat,
    a_d: CxMat,
    blocks: Vec<BlockInfo>,
}

impl ReconstructionCtx {
    /// Builds, normalizes, and verifies the eigenpair generated by kernel
    /// vector `y` at dual value `λ_d` for the block at `index`.
    fn eigenpair(
        &self,
        index: usize,
        lambda_d: Complex64,
        y: &CxVec,
        tol: &Tol,
    ) -> Result<Eigenpair> {
        let n = self.q_s.nrows();
        let block = &self.blocks[index];
        let (zcols, _) = selector_indices(block.ones, &block.big);
        let z = unit_columns(block.size, &zcols);
        let x_is = &z * y;
        // Within the block: x_id = N_iᵀ (λ_d I − A_id) x_is, with N_i the
        // nilpotent part of the canonical block (transpose, not adjoint).
        let n_i = cxla::canonical_block(czero(), block.ones, &block.big);
        let a_id = self
            .a_d
            .view((block.offset, block.offset), (block.size, block.size))
            .into_owned();
        let rhs = &x_is * lambda_d - &a_id * &x_is;
        let x_id = n_i.transpose() * rhs;

        let mut xs = CxVec::zeros(n);
        let mut xd = CxVec::zeros(n);
        xs.rows_mut(block.offset, block.size).copy_from(&x_is);
        xd.rows_mut(block.offset, block.size).copy_from(&x_id);
        // Cross-block parts: x_kd = −(A_ks − λ_is I)⁻¹ A_kid x_is, where
        // A_ks − λ_is I is invertible because the eigenvalues are distinct.
        for (k, other) in self.blocks.iter().enumerate() {
            if k == index {
                continue;
            }
            let shifted =
                cxla::canonical_block(other.lambda - block.lambda, other.ones, &other.big);
            let inv = shifted.lu().try_inverse().ok_or_else(|| {
                Error::ConvergenceFailure("shifted canonical block failed to invert".into())
            })?;
            let a_kid = self
                .a_d
                .view((other.offset, block.offset), (other.size, block.size));
            let x_kd = -(inv * (a_kid * &x_is));
            xd.rows_mut(other.offset, other.size).copy_from(&x_kd);
        }

        let vector = DCVector::new(&self.q_s * xs, &self.q_s * xd)
            .expect("assembled parts share the matrix dimension")
            .normalize(tol)?;
        let lambda = DualComplex::new(block.lambda, lambda_d);
        if !verify_eigenpair(&self.matrix, lambda, &vector, tol)? {
            return Err(Error::ConvergenceFailure(format!(
                "reconstructed eigenpair at λ_s = {} failed verification",
                block.lambda
            )));
        }
        Ok(Eigenpair { lambda, vector })
    }
}

/// A one-parameter eigenvalue family at a fixed standard eigenvalue: every
/// `λ_d ∈ ℂ` yields an eigenpair.
#[derive(Debug, Clone)]
pub struct InfiniteFamily {
    /// Standard eigenvalue hosting the family.
    pub lambda_s: Complex64,
    /// The eigenpair sampled at `λ_d = 0`.
    pub representative: Eigenpair,
    pencil: StructuredPencil,
    ctx: ReconstructionCtx,
    block_index: usize,
}

impl InfiniteFamily {
    /// Reconstructs and verifies the eigenpair at an arbitrary `λ_d`.
    pub fn sample(&self, lambda_d: Complex64, tol: &Tol) -> Result<Eigenpair> {
        let m_at = self.pencil.m_of(lambda_d);
        let kernel = kernel_or_min_singular(&m_at, tol);
        self.ctx
            .eigenpair(self.block_index, lambda_d, &kernel[0], tol)
    }
}

/// Classification of one standard eigenvalue.
#[derive(Debug, Clone)]
pub enum LambdaClass {
    /// Finitely many eigenvalues extend this standard eigenvalue.
    Finite {
        /// The eigenpairs, sorted by dual component.
        pairs: Vec<Eigenpair>,
    },
    /// A one-parameter family of eigenvalues lives here.
    InfiniteFamily(InfiniteFamily),
    /// No dual complex eigenvalue extends this standard eigenvalue.
    NoEigenvalue {
        /// Magnitude of the obstruction (the constant determinant).
        certificate: f64,
    },
}

/// Per-standard-eigenvalue entry of an [`EigenReport`].
#[derive(Debug, Clone)]
pub struct LambdaEntry {
    /// The standard eigenvalue.
    pub lambda_s: Complex64,
    /// Its classification.
    pub class: LambdaClass,
}

/// Full eigenvalue classification of a dual complex matrix: one entry per
/// distinct standard eigenvalue, lexicographically ordered.
#[derive(Debug, Clone)]
pub struct EigenReport {
    /// Matrix order n.
    pub order: usize,
    /// Entries in lexicographic order of `λ_s`.
    pub entries: Vec<LambdaEntry>,
    /// Cross-check warnings collected from the per-eigenvalue pencils,
    /// prefixed by the standard eigenvalue they concern.
    pub diagnostics: Vec<String>,
}

impl EigenReport {
    /// Total number of finite eigenpairs across all entries.
    pub fn finite_total(&self) -> usize {
        self.entries
            .iter()
            .map(|e| match &e.class {
                LambdaClass::Finite { pairs } => pairs.len(),
                _ => 0,
            })
            .sum()
    }

    /// True when some standard eigenvalue hosts an infinite family.
    pub fn any_infinite(&self) -> bool {
        self.entries
            .iter()
            .any(|e| matches!(e.class, LambdaClass::InfiniteFamily(_)))
    }

    /// True when some standard eigenvalue admits no completion.
    pub fn any_none(&self) -> bool {
        self.entries
            .iter()
            .any(|e| matches!(e.class, LambdaClass::NoEigenvalue { .. }))
    }

    /// All finite eigenpairs in entry order.
    pub fn finite_pairs(&self) -> Vec<&Eigenpair> {
        self.entries
            .iter()
            .flat_map(|e| match &e.class {
                LambdaClass::Finite { pairs } => pairs.iter().collect::<Vec<_>>(),
                _ => Vec::new(),
            })
            .collect()
    }
}

/// Classifies every eigenvalue of a square dual complex matrix.
///
/// The standard part is brought to canonical form (`Q_s⁻¹ B_s Q_s = K`),
/// the dual part follows (`A_d = Q_s⁻¹ B_d Q_s`), and each distinct
/// standard eigenvalue is classified through its structured pencil. Finite
/// and representative eigenvectors are reconstructed per block — inside the
/// block via `x_id = N_iᵀ(λ_dI − A_id)x_is`, across blocks via
/// `x_kd = −(A_ks − λ_isI)⁻¹A_kid x_is` — mapped back through `Q_s`,
/// normalized, and verified before being emitted.
pub fn eig_all(b: &DCMatrix, tol: &Tol) -> Result<EigenReport> {
    if !b.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "eigenvalue classification needs a square matrix, got {}×{}",
            b.nrows(),
            b.ncols()
        )));
    }
    let n = b.nrows();
    if n == 0 {
        return Ok(EigenReport {
            order: 0,
            entries: Vec::new(),
            diagnostics: Vec::new(),
        });
    }
    let structure = cxla::jordan(b.std(), tol)?;
    let q_s = structure.transform.clone();
    let q_inv =
        q_s.clone().lu().try_inverse().ok_or_else(|| {
            Error::ConvergenceFailure("eigenvector-chain basis is singular".into())
        })?;
    let a_d = &q_inv * b.dual() * &q_s;

    let mut blocks = Vec::with_capacity(structure.eigenvalues.len());
    let mut offset = 0;
    for (lambda, sizes) in structure.eigenvalues.iter().zip(&structure.blocks) {
        let size = sizes.total();
        blocks.push(BlockInfo {
            lambda: *lambda,
            offset,
            ones: sizes.ones,
            big: sizes.big.clone(),
            size,
        });
        offset += size;
    }
    let ctx = ReconstructionCtx {
        matrix: b.clone(),
        q_s,
        a_d: a_d.clone(),
        blocks: blocks.clone(),
    };

    let mut entries = Vec::with_capacity(blocks.len());
    let mut diagnostics = Vec::new();
    for (i, block) in blocks.iter().enumerate() {
        let a_id = a_d
            .view((block.offset, block.offset), (block.size, block.size))
            .into_owned();
        let pencil = build_structured_pencil(&a_id, block.ones, &block.big)?;
        let class = match structured_eigen_system(&pencil, tol)? {
            PencilOutcome::Infinite => {
                let m0 = pencil.m_of(czero());
                let kernel = kernel_or_min_singular(&m0, tol);
                let representative = ctx.eigenpair(i, czero(), &kernel[0], tol)?;
                LambdaClass::InfiniteFamily(InfiniteFamily {
                    lambda_s: block.lambda,
                    representative,
                    pencil,
                    ctx: ctx.clone(),
                    block_index: i,
                })
            }
            PencilOutcome::NoSolution { certificate } => LambdaClass::NoEigenvalue { certificate },
            PencilOutcome::Finite {
                roots,
                diagnostics: pencil_diag,
            } => {
                for msg in pencil_diag {
                    diagnostics.push(format!("λ_s = {}: {msg}", block.lambda));
                }
                let mut pairs = Vec::new();
                for root in &roots {
                    for y in &root.kernel {
                        pairs.push(ctx.eigenpair(i, root.lambda_d, y, tol)?);
                    }
                }
                LambdaClass::Finite { pairs }
            }
        };
        entries.push(LambdaEntry {
            lambda_s: block.lambda,
            class,
        });
    }
    Ok(EigenReport {
        order: n,
        entries,
        diagnostics,
    })
}

/// Certificate of diagonalizability: `P⁻¹AP = D` with diagonal `D`.
#[derive(Debug, Clone)]
pub struct DiagCertificate {
    /// Eigenvector matrix (columns are the n eigenvectors).
    pub p: DCMatrix,
    /// Diagonal eigenvalue matrix.
    pub d: DCMatrix,
    /// Reconstruction residual `‖A − PDP⁻¹‖`.
    pub residual: f64,
}

/// Verdict of the diagonalizability decision.
#[derive(Debug, Clone)]
pub enum Diagonalizability {
    /// Exactly n appreciably independent eigenvectors exist.
    Diagonalizable(DiagCertificate),
    /// The matrix is not diagonalizable.
    NotDiagonalizable {
        /// Why the eigenvector count or independence test failed.
        reason: String,
    },
}

impl Diagonalizability {
    /// True for the positive verdict.
    pub fn verdict(&self) -> bool {
        matches!(self, Diagonalizability::Diagonalizable(_))
    }
}

/// Assembles a matrix whose columns are the given dual complex vectors.
fn columns_to_matrix(cols: &[DCVector]) -> DCMatrix {
    let n = cols[0].dim();
    let std = CxMat::from_fn(n, cols.len(), |i, j| cols[j].std()[i]);
    let dual = CxMat::from_fn(n, cols.len(), |i, j| cols[j].dual()[i]);
    DCMatrix::new(std, dual).expect("columns share a dimension")
}

/// Decides diagonalizability: a square dual complex matrix is
/// diagonalizable iff it has exactly n eigenvalues (counted per emitted
/// eigenvector) whose eigenvectors are appreciably linearly independent. On
/// success the certificate carries `P`, `D`, and the reconstruction
/// residual.
pub fn is_diagonalizable(a: &DCMatrix, tol: &Tol) -> Result<Diagonalizability> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "diagonalizability needs a square matrix, got {}×{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let n = a.nrows();
    let report = eig_all(a, tol)?;
    if report.any_infinite() {
        return Ok(Diagonalizability::NotDiagonalizable {
            reason: "a standard eigenvalue hosts infinitely many eigenvalues, so the matrix \
                     cannot have exactly n"
                .into(),
        });
    }
    if report.any_none() {
        return Ok(Diagonalizability::NotDiagonalizable {
            reason: "a standard eigenvalue admits no dual completion".into(),
        });
    }
    let pairs = report.finite_pairs();
    if pairs.len() != n {
        return Ok(Diagonalizability::NotDiagonalizable {
            reason: format!("found {} eigenpairs, need exactly {n}", pairs.len()),
        });
    }
    let vectors: Vec<DCVector> = pairs.iter().map(|p| p.vector.clone()).collect();
    if !appreciably_linearly_independent(&vectors, tol)? {
        return Ok(Diagonalizability::NotDiagonalizable {
            reason: "the n eigenvectors are not appreciably linearly independent".into(),
        });
    }
    let p = columns_to_matrix(&vectors);
    let mut d_std = CxMat::zeros(n, n);
    let mut d_dual = CxMat::zeros(n, n);
    for (i, pair) in pairs.iter().enumerate() {
        d_std[(i, i)] = pair.lambda.std;
        d_dual[(i, i)] = pair.lambda.dual;
    }
    let d = DCMatrix::new(d_std, d_dual).expect("square diagonal parts");
    let p_inv = p.inverse(tol)?;
    let reconstructed = p.matmul(&d)?.matmul(&p_inv)?;
    let residual = a.sub(&reconstructed)?.norm();
    Ok(Diagonalizability::Diagonalizable(DiagCertificate {
        p,
        d,
        residual,
    }))
}

/// Eigendecomposition of a Hermitian dual complex matrix: n dual-number
/// eigenvalues in ascending order with orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// The n dual-number eigenvalues, ascending in the total order.
    pub eigenvalues: Vec<DualNumber>,
    /// Matching orthonormal eigenvectors.
    pub vectors: Vec<DCVector>,
    /// All eigenvalues ≥ 0 in the total order.
    pub psd: bool,
    /// All eigenvalues > 0 in the total order.
    pub pd: bool,
}

/// Eigendecomposition of a Hermitian dual complex matrix.
///
/// The standard part is unitarily diagonalized; within each standard
/// eigenspace the compressed dual block `U_c* A_d U_c` is Hermitian-
/// diagonalized to fix the basis and the dual eigenvalue components; across
/// eigenspaces the dual correction `U_d = U·K` with
/// `K_{jl} = (U*A_dU)_{jl}/(μ_l − μ_j)` makes the eigen equations hold. `K`
/// is skew-Hermitian, so the eigenvector Gram matrix is the identity in
/// both components. Definiteness follows from comparing every eigenvalue
/// against zero in the total order.
///
/// Errors with [`Error::NotHermitian`] when `‖A − A*‖` exceeds the scaled
/// absolute tolerance.
pub fn hermitian_eig(a: &DCMatrix, tol: &Tol) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "Hermitian eigendecomposition needs a square matrix, got {}×{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let n = a.nrows();
    let deviation = a.sub(&a.conj_transpose())?.norm();
    if deviation > tol.abs * (1.0 + a.norm()) {
        return Err(Error::NotHermitian { deviation });
    }
    if n == 0 {
        return Ok(HermitianEigen {
            eigenvalues: Vec::new(),
            vectors: Vec::new(),
            psd: true,
            pd: true,
        });
    }
    // Work on the exactly Hermitian averages so the decomposition sees
    // clean input regardless of where inside the tolerance band A sits.
    let half = Complex64::new(0.5, 0.0);
    let h_s = (a.std() + a.std().adjoint()) * half;
    let h_d = (a.dual() + a.dual().adjoint()) * half;

    let es = SymmetricEigen::new(h_s.clone());
    let mu: Vec<f64> = es.eigenvalues.iter().cloned().collect();
    let scale = cxla::fro_norm(&h_s).max(1.0);
    let as_cx: Vec<Complex64> = mu.iter().map(|&m| Complex64::new(m, 0.0)).collect();
    let clusters = cxla::cluster_members(&as_cx, scale, tol);

    // Per cluster: rotate the eigenvector columns so the compressed dual
    // block becomes diagonal; record (μ, δ) per final column.
    let mut cols: Vec<CxVec> = Vec::with_capacity(n);
    let mut std_vals: Vec<f64> = Vec::with_capacity(n);
    let mut dual_vals: Vec<f64> = Vec::with_capacity(n);
    let mut cluster_of: Vec<usize> = Vec::with_capacity(n);
    for (cid, (rep, members)) in clusters.iter().enumerate() {
        let m_c = members.len();
        let u_c = CxMat::from_fn(n, m_c, |i, j| es.eigenvectors[(i, members[j])]);
        let g_c = u_c.adjoint() * &h_d * &u_c;
        let eg = SymmetricEigen::new(g_c);
        let mut order: Vec<usize> = (0..m_c).collect();
        order.sort_by(|&i, &j| {
            eg.eigenvalues[i]
                .partial_cmp(&eg.eigenvalues[j])
                .expect("finite eigenvalues")
        });
        let rotated = &u_c * &eg.eigenvectors;
        for &k in &order {
            cols.push(rotated.column(k).into_owned());
            std_vals.push(rep.re);
            dual_vals.push(eg.eigenvalues[k]);
            cluster_of.push(cid);
        }
    }
    let u = CxMat::from_columns(&cols);
    let g = u.adjoint() * &h_d * &u;
    let mut k = CxMat::zeros(n, n);
    for j in 0..n {
        for l in 0..n {
            if cluster_of[j] != cluster_of[l] {
                k[(j, l)] = g[(j, l)] / Complex64::new(std_vals[l] - std_vals[j], 0.0);
            }
        }
    }
    let u_d = &u * &k;

    let mut eigenvalues = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for i in 0..n {
        let lambda = DualNumber::new(std_vals[i], dual_vals[i]);
        let x = DCVector::new(u.column(i).into_owned(), u_d.column(i).into_owned())
            .expect("columns share the dimension")
            .normalize(tol)?;
        if !verify_eigenpair(a, lambda.to_dual_complex(), &x, tol)? {
            return Err(Error::ConvergenceFailure(format!(
                "Hermitian eigenpair at μ = {} failed verification",
                std_vals[i]
            )));
        }
        eigenvalues.push(lambda);
        vectors.push(x);
    }
    let zero = DualNumber::zero();
    let psd = eigenvalues
        .iter()
        .all(|v| v.compare(&zero) != std::cmp::Ordering::Less);
    let pd = eigenvalues
        .iter()
        .all(|v| v.compare(&zero) == std::cmp::Ordering::Greater);
    Ok(HermitianEigen {
        eigenvalues,
        vectors,
        psd,
        pd,
    })
}

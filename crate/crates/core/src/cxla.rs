//! Ordinary complex linear algebra support.
//!
//! Everything here operates on plain complex matrices (the standard parts of
//! dual complex objects): linear solves with solution classification, rank
//! and nullspace at a relative tolerance, eigenpairs, Jordan decomposition,
//! and determinants of matrix polynomials `det(λ·M1 + M0)` by evaluation and
//! interpolation. Factorizations (SVD, Schur, LU) come from `nalgebra`; the
//! Jordan structure layer on top — eigenvalue clustering, nilpotent rank
//! staircase, chain construction — is built here.

use crate::error::{Error, Result};
use crate::scalar::{cone, czero, Complex64};
use crate::tol::Tol;
use nalgebra::linalg::Schur;
use nalgebra::{DMatrix, DVector};

/// Dense complex matrix.
pub type CxMat = DMatrix<Complex64>;
/// Dense complex column vector.
pub type CxVec = DVector<Complex64>;

/// Frobenius norm of a complex matrix.
pub fn fro_norm(m: &CxMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(v: &CxVec) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// n×n complex identity.
pub fn eye(n: usize) -> CxMat {
    CxMat::identity(n, n)
}

fn singular_values(m: &CxMat) -> DVector<f64> {
    m.clone().svd(false, false).singular_values
}

/// Numerical rank: singular values above `rank_rel · σ_max` count.
pub fn rank(m: &CxMat, tol: &Tol) -> usize {
    rank_floor(m, tol, 0.0)
}

/// Rank with an additional absolute floor on the singular values, for
/// callers that know the matrix's natural scale is larger than its own
/// largest singular value (powers of a numerically nilpotent matrix).
fn rank_floor(m: &CxMat, tol: &Tol, floor: f64) -> usize {
    let sv = singular_values(m);
    let smax = sv.iter().cloned().fold(0.0_f64, f64::max);
    let thresh = (tol.rank_rel * smax).max(floor);
    sv.iter().filter(|&&s| s > thresh).count()
}

/// Orthonormal basis of the nullspace (empty when the matrix has full
/// column rank).
///
/// Wide matrices are padded with zero rows first so the thin SVD still
/// exposes all of V.
pub fn nullspace(m: &CxMat, tol: &Tol) -> Vec<CxVec> {
    nullspace_floor(m, tol, 0.0)
}

/// Nullspace with an absolute singular-value floor; see [`rank_floor`].
fn nullspace_floor(m: &CxMat, tol: &Tol, floor: f64) -> Vec<CxVec> {
    let (rows, cols) = m.shape();
    let padded;
    let work = if rows < cols {
        padded = {
            let mut p = CxMat::zeros(cols, cols);
            p.view_mut((0, 0), (rows, cols)).copy_from(m);
            p
        };
        &padded
    } else {
        m
    };
    let svd = work.clone().svd(false, true);
    let sv = &svd.singular_values;
    let smax = sv.iter().cloned().fold(0.0_f64, f64::max);
    let thresh = (tol.rank_rel * smax).max(floor);
    let r = sv.iter().filter(|&&s| s > thresh).count();
    let v_t = svd.v_t.expect("requested V^H");
    // Rows r.. of V^H, conjugated back, are the kernel directions.
    (r..cols)
        .map(|i| CxVec::from_fn(cols, |j, _| v_t[(i, j)].conj()))
        .collect()
}

/// Outcome of a linear solve `M x = b`.
#[derive(Debug, Clone)]
pub enum Solution {
    /// Exactly one solution.
    Unique(CxVec),
    /// Consistent underdetermined system: particular solution plus an
    /// orthonormal nullspace basis spanning the solution set.
    Affine {
        /// Minimum-norm particular solution.
        particular: CxVec,
        /// Orthonormal basis of the homogeneous solutions.
        nullspace: Vec<CxVec>,
    },
    /// No solution; the least-squares minimizer certifies the gap.
    Inconsistent {
        /// Least-squares residual ‖M·x − b‖₂ at the minimizer.
        residual: f64,
        /// The least-squares minimizer itself.
        least_squares: CxVec,
    },
}

fn least_squares(m: &CxMat, b: &CxVec, tol: &Tol) -> (CxVec, f64) {
    let svd = m.clone().svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    let x = svd
        .solve(b, tol.rank_rel * smax)
        .expect("SVD solve with U and V computed");
    let x = CxVec::from_column_slice(x.as_slice());
    let residual = vec_norm(&(m * &x - b));
    (x, residual)
}

/// Residual acceptance threshold for solves, scaled to data magnitude.
fn solve_threshold(m: &CxMat, b: &CxVec, x: &CxVec, tol: &Tol) -> f64 {
    tol.abs * (1.0 + vec_norm(b) + fro_norm(m) * (1.0 + vec_norm(x)))
}

/// Solves `M x = b`, classifying the solution set.
///
/// Errors with [`Error::ShapeMismatch`] when `b` does not match the row
/// count. A residual below `τ_abs` scaled by the data magnitude counts as
/// consistent.
pub fn solve(m: &CxMat, b: &CxVec, tol: &Tol) -> Result<Solution> {
    if m.nrows() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "matrix is {}×{} but right-hand side has length {}",
            m.nrows(),
            m.ncols(),
            b.len()
        )));
    }
    let (x, residual) = least_squares(m, b, tol);
    if residual <= solve_threshold(m, b, &x, tol) {
        let kernel = nullspace(m, tol);
        if kernel.is_empty() {
            Ok(Solution::Unique(x))
        } else {
            Ok(Solution::Affine {
                particular: x,
                nullspace: kernel,
            })
        }
    } else {
        Ok(Solution::Inconsistent {
            residual,
            least_squares: x,
        })
    }
}

/// True iff `v` lies in the column span of `M` (least-squares residual below
/// the scaled tolerance).
pub fn in_span(v: &CxVec, m: &CxMat, tol: &Tol) -> Result<bool> {
    if m.nrows() != v.len() {
        return Err(Error::ShapeMismatch(format!(
            "span test: matrix is {}×{} but vector has length {}",
            m.nrows(),
            m.ncols(),
            v.len()
        )));
    }
    let (x, residual) = least_squares(m, v, tol);
    Ok(residual <= solve_threshold(m, v, &x, tol))
}

fn schur_of(m: &CxMat) -> Result<Schur<Complex64, nalgebra::Dyn>> {
    let n = m.nrows();
    let max_iter = 75 * n * n + 1000;
    Schur::try_new(m.clone(), f64::EPSILON, max_iter)
        .ok_or_else(|| Error::ConvergenceFailure("Schur iteration did not converge".into()))
}

/// All eigenvalues of a square complex matrix (unsorted, with multiplicity).
pub fn eigenvalues(m: &CxMat) -> Result<Vec<Complex64>> {
    let (_, t) = schur_of(m)?.unpack();
    Ok(t.diagonal().iter().cloned().collect())
}

/// Lexicographic order on complex numbers: by real part, then imaginary.
pub fn cx_lex(a: &Complex64, b: &Complex64) -> std::cmp::Ordering {
    a.re.partial_cmp(&b.re)
        .expect("finite")
        .then(a.im.partial_cmp(&b.im).expect("finite"))
}

/// Groups values lying within `cluster_rel · scale` of each other
/// (transitively) and returns `(representative mean, member indices)` per
/// cluster, sorted lexicographically by representative.
pub(crate) fn cluster_members(
    values: &[Complex64],
    scale: f64,
    tol: &Tol,
) -> Vec<(Complex64, Vec<usize>)> {
    let n = values.len();
    let radius = tol.cluster_rel * scale;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() <= radius {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<(Complex64, Vec<usize>)> = groups
        .into_values()
        .map(|members| {
            let sum: Complex64 = members.iter().map(|&i| values[i]).sum();
            (sum / members.len() as f64, members)
        })
        .collect();
    out.sort_by(|a, b| cx_lex(&a.0, &b.0));
    out
}

/// As [`cluster_members`], reduced to `(representative, multiplicity)`.
fn cluster(values: &[Complex64], scale: f64, tol: &Tol) -> Vec<(Complex64, usize)> {
    cluster_members(values, scale, tol)
        .into_iter()
        .map(|(rep, members)| (rep, members.len()))
        .collect()
}

/// Eigenpairs of a square complex matrix: eigenvalues repeated per algebraic
/// multiplicity (lexicographically sorted), each paired with an eigenvector
/// from the eigenspace basis (the basis is cycled when the eigenvalue is
/// defective).
pub fn eig(m: &CxMat, tol: &Tol) -> Result<Vec<(Complex64, CxVec)>> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "eig requires a square matrix");
    let vals = eigenvalues(m)?;
    let scale = fro_norm(m).max(f64::EPSILON);
    let mut out = Vec::with_capacity(n);
    for (lambda, mult) in cluster(&vals, scale, tol) {
        let basis = nullspace(&(m - eye(n) * lambda), tol);
        if basis.is_empty() {
            return Err(Error::ConvergenceFailure(format!(
                "no eigenvector found for eigenvalue {lambda}"
            )));
        }
        for k in 0..mult {
            let v = basis[k % basis.len()].clone();
            let residual = vec_norm(&(m * &v - &v * lambda));
            if residual > tol.eig_rel * scale.max(1.0) {
                return Err(Error::ConvergenceFailure(format!(
                    "eigenpair residual {residual:.3e} exceeds tolerance"
                )));
            }
            out.push((lambda, v));
        }
    }
    Ok(out)
}

/// Jordan block sizes for one eigenvalue: `ones` size-1 blocks (forming the
/// scalar block λ·I) followed by the sizes ≥ 2 in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSizes {
    /// Number of 1×1 blocks (the n₀ of the canonical per-eigenvalue form).
    pub ones: usize,
    /// Sizes of the blocks of size ≥ 2, nonincreasing.
    pub big: Vec<usize>,
}

impl BlockSizes {
    /// Algebraic multiplicity: total dimension covered by this eigenvalue.
    pub fn total(&self) -> usize {
        self.ones + self.big.iter().sum::<usize>()
    }

    /// Number of Jordan blocks (= geometric multiplicity).
    pub fn count(&self) -> usize {
        self.ones + self.big.len()
    }
}

/// Jordan decomposition `M = Q · K · Q⁻¹` of a complex matrix, with the
/// canonical form `K` described by distinct eigenvalues and block sizes.
#[derive(Debug, Clone)]
pub struct JordanStructure {
    /// Similarity transform: columns are Jordan chains; `Q⁻¹ M Q = K`.
    pub transform: CxMat,
    /// Distinct eigenvalues, lexicographically sorted by (re, im).
    pub eigenvalues: Vec<Complex64>,
    /// Block sizes per eigenvalue, parallel to `eigenvalues`.
    pub blocks: Vec<BlockSizes>,
}

/// The canonical one-eigenvalue block `diag(λ·I_ones, J_big[0](λ), …)`.
pub(crate) fn canonical_block(lambda: Complex64, ones: usize, big: &[usize]) -> CxMat {
    let n = ones + big.iter().sum::<usize>();
    let mut k = CxMat::zeros(n, n);
    let mut at = 0;
    for _ in 0..ones {
        k[(at, at)] = lambda;
        at += 1;
    }
    for &m in big {
        write_jordan_block(&mut k, at, m, lambda);
        at += m;
    }
    k
}

/// Writes the m×m Jordan block J_m(λ) into `k` at diagonal offset `at`.
fn write_jordan_block(k: &mut CxMat, at: usize, m: usize, lambda: Complex64) {
    for i in 0..m {
        k[(at + i, at + i)] = lambda;
        if i + 1 < m {
            k[(at + i, at + i + 1)] = cone();
        }
    }
}

impl JordanStructure {
    /// Matrix order n.
    pub fn order(&self) -> usize {
        self.blocks.iter().map(BlockSizes::total).sum()
    }

    /// The canonical block-diagonal matrix K: per eigenvalue, λ·I then the
    /// big Jordan blocks in nonincreasing order.
    pub fn canonical(&self) -> CxMat {
        let n = self.order();
        let mut k = CxMat::zeros(n, n);
        let mut at = 0;
        for (lambda, sizes) in self.eigenvalues.iter().zip(&self.blocks) {
            for _ in 0..sizes.ones {
                k[(at, at)] = *lambda;
                at += 1;
            }
            for &m in &sizes.big {
                write_jordan_block(&mut k, at, m, *lambda);
                at += m;
            }
        }
        k
    }

    /// True when every block has size 1, i.e. the matrix is diagonalizable.
    pub fn is_diagonal(&self) -> bool {
        self.blocks.iter().all(|b| b.big.is_empty())
    }
}

/// Attempts to read `m` as an exactly canonical form (block diagonal, per
/// eigenvalue 1×1 blocks first then nonincreasing big blocks, distinct
/// eigenvalues in lexicographic order). Such inputs keep transform = I.
fn try_parse_canonical(m: &CxMat, tol: &Tol) -> Option<(Vec<Complex64>, Vec<BlockSizes>)> {
    let n = m.nrows();
    // Only the diagonal and a 0/1 superdiagonal may be populated.
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            if i == j {
                continue;
            }
            if j == i + 1 {
                if !(tol.is_zero_cx(z) || tol.eq_cx(z, cone())) {
                    return None;
                }
            } else if !tol.is_zero_cx(z) {
                return None;
            }
        }
    }
    // Cut into blocks at superdiagonal zeros; diagonals must be constant
    // within a block.
    let mut raw: Vec<(Complex64, usize)> = Vec::new();
    let mut start = 0;
    for i in 0..n {
        let linked = i + 1 < n && tol.eq_cx(m[(i, i + 1)], cone());
        if !tol.eq_cx(m[(i, i)], m[(start, start)]) {
            return None;
        }
        if !linked {
            raw.push((m[(start, start)], i - start + 1));
            start = i + 1;
        }
    }
    // Group contiguous runs of one eigenvalue; reject reappearing
    // eigenvalues, out-of-order runs, or non-canonical size patterns.
    let mut eigenvalues: Vec<Complex64> = Vec::new();
    let mut blocks: Vec<BlockSizes> = Vec::new();
    for (lambda, size) in raw {
        let is_new = match eigenvalues.last() {
            Some(prev) if tol.eq_cx(*prev, lambda) => false,
            _ => true,
        };
        if is_new {
            if eigenvalues.iter().any(|e| tol.eq_cx(*e, lambda)) {
                return None; // same eigenvalue in two separate runs
            }
            if let Some(prev) = eigenvalues.last() {
                if cx_lex(prev, &lambda) != std::cmp::Ordering::Less {
                    return None; // not lexicographically sorted
                }
            }
            eigenvalues.push(lambda);
            blocks.push(BlockSizes {
                ones: 0,
                big: Vec::new(),
            });
        }
        let b = blocks.last_mut().expect("just pushed");
        if size == 1 {
            if !b.big.is_empty() {
                return None; // a 1×1 after a big block is not canonical
            }
            b.ones += 1;
        } else {
            if let Some(&last) = b.big.last() {
                if size > last {
                    return None; // big blocks must be nonincreasing
                }
            }
            b.big.push(size);
        }
    }
    Some((eigenvalues, blocks))
}

/// Incrementally orthonormalized span used for independence tests.
struct OrthoSpan {
    basis: Vec<CxVec>,
}

impl OrthoSpan {
    fn new() -> Self {
        OrthoSpan { basis: Vec::new() }
    }

    /// Component of `v` orthogonal to the span (two Gram-Schmidt passes).
    fn residual(&self, v: &CxVec) -> CxVec {
        let mut r = v.clone();
        for _ in 0..2 {
            for u in &self.basis {
                let c = u.dotc(&r);
                r -= u * c;
            }
        }
        r
    }

    /// Adds `v`'s normalized residual to the span when it is appreciable;
    /// returns the residual norm relative to ‖v‖.
    fn add(&mut self, v: &CxVec) -> f64 {
        let r = self.residual(v);
        let rn = vec_norm(&r);
        let vn = vec_norm(v).max(f64::EPSILON);
        if rn / vn > 1e-14 {
            self.basis.push(r / Complex64::new(rn, 0.0));
        }
        rn / vn
    }
}

/// One Jordan chain under construction: its top vector and height, plus the
/// member at the level currently being swept.
struct Chain {
    top: CxVec,
    height: usize,
    cur: CxVec,
}

/// Jordan decomposition of a square complex matrix.
///
/// Exactly canonical inputs are detected first and returned with
/// transform = I. Otherwise: eigenvalues via Schur iteration, clustered
/// within `cluster_rel · ‖M‖`; per cluster, the rank staircase of
/// `(M − λI)^k` fixes the block sizes, and Jordan chains assembled top-down
/// give the transform. The reconstruction `Q·K·Q⁻¹` is verified against `M`
/// at `jordan_rel` before returning.
///
/// Errors: [`Error::ConvergenceFailure`] when the Schur iteration or chain
/// completion fails, [`Error::IllConditionedStructure`] when two clusters
/// sit close enough that the block structure is ambiguous at the tolerance.
pub fn jordan(m: &CxMat, tol: &Tol) -> Result<JordanStructure> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "jordan requires a square matrix");
    if let Some((eigenvalues, blocks)) = try_parse_canonical(m, tol) {
        return Ok(JordanStructure {
            transform: eye(n),
            eigenvalues,
            blocks,
        });
    }

    let scale = fro_norm(m).max(f64::EPSILON);
    let vals = eigenvalues(m)?;
    let clusters = cluster(&vals, scale, tol);
    // Ambiguity guard: clusters that nearly touch make the staircase
    // unreliable.
    for i in 0..clusters.len() {
        for j in i + 1..clusters.len() {
            let gap = (clusters[i].0 - clusters[j].0).norm();
            if gap < 2.0 * tol.cluster_rel * scale {
                return Err(Error::IllConditionedStructure(format!(
                    "eigenvalue clusters {:.6e} apart at clustering radius {:.6e}",
                    gap,
                    tol.cluster_rel * scale
                )));
            }
        }
    }

    let mut eigenvalues_out = Vec::with_capacity(clusters.len());
    let mut blocks_out = Vec::with_capacity(clusters.len());
    let mut columns: Vec<CxVec> = Vec::with_capacity(n);

    for (lambda, mult) in clusters {
        let nmat = m - eye(n) * lambda;
        let sigma_top = singular_values(&nmat)
            .iter()
            .cloned()
            .fold(0.0_f64, f64::max);
        if sigma_top <= tol.rank_rel * scale {
            // The matrix acts as λ·I at working precision: trivial blocks
            // with the standard basis as chains.
            if mult != n {
                return Err(Error::ConvergenceFailure(format!(
                    "eigenvalue {lambda} has multiplicity {mult} of {n} but the shifted matrix is numerically zero"
                )));
            }
            eigenvalues_out.push(lambda);
            blocks_out.push(BlockSizes {
                ones: n,
                big: Vec::new(),
            });
            columns.extend(
                (0..n).map(|i| CxVec::from_fn(n, |j, _| if i == j { cone() } else { czero() })),
            );
            continue;
        }
        // Rank staircase r_k = rank(N^k) until the kernel saturates the
        // algebraic multiplicity. Powers of a (numerically) nilpotent
        // matrix decay toward roundoff instead of reaching exact zero, so
        // each power is judged against its natural scale σ_max(N)^k rather
        // than only against its own largest singular value.
        let mut ranks = vec![n];
        let mut power = eye(n);
        let mut kernels: Vec<Vec<CxVec>> = vec![Vec::new()];
        while *ranks.last().expect("nonempty") > n - mult {
            power = &power * &nmat;
            let k = ranks.len();
            if k > mult {
                return Err(Error::ConvergenceFailure(format!(
                    "rank staircase for eigenvalue {lambda} did not saturate"
                )));
            }
            let floor = tol.rank_rel * sigma_top.powi(k as i32);
            ranks.push(rank_floor(&power, tol, floor));
            kernels.push(nullspace_floor(&power, tol, floor));
        }
        let q = ranks.len() - 1;
        // d_k = dim ker N^k − dim ker N^{k−1}; blocks of size exactly k are
        // d_k − d_{k+1}.
        let mut d = vec![0usize; q + 2];
        for k in 1..=q {
            d[k] = ranks[k - 1] - ranks[k];
        }
        let sizes_check: usize = (1..=q).map(|k| k * (d[k] - d[k + 1])).sum();
        if sizes_check != mult {
            return Err(Error::ConvergenceFailure(format!(
                "staircase block sizes sum to {sizes_check}, expected multiplicity {mult}"
            )));
        }

        let mut chains: Vec<Chain> = Vec::new();
        for k in (1..=q).rev() {
            // Descend existing chains one level.
            for c in chains.iter_mut() {
                if c.height > k {
                    c.cur = &nmat * &c.cur;
                }
            }
            let need = d[k] - d[k + 1];
            if need == 0 {
                continue;
            }
            // New tops must be independent modulo ker N^{k−1} plus the
            // level-k members of taller chains.
            let mut span = OrthoSpan::new();
            for v in &kernels[k - 1] {
                span.add(v);
            }
            for c in &chains {
                span.add(&c.cur);
            }
            for _ in 0..need {
                let (best_idx, best_res) = kernels[k]
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (i, vec_norm(&span.residual(v))))
                    .max_by(|a, b| a.1.partial_cmp(&b.1).expect("finite"))
                    .ok_or_else(|| {
                        Error::ConvergenceFailure("empty kernel basis in chain construction".into())
                    })?;
                if best_res <= 1e-6 {
                    return Err(Error::ConvergenceFailure(
                        "Jordan chain candidates are numerically dependent".into(),
                    ));
                }
                let top = kernels[k][best_idx].clone();
                span.add(&top);
                chains.push(Chain {
                    cur: top.clone(),
                    top,
                    height: k,
                });
            }
        }

        // Canonical order within the eigenvalue: height-1 chains first,
        // then taller chains by nonincreasing height.
        chains.sort_by(|a, b| match (a.height == 1, b.height == 1) {
            (true, false) => std::cmp::Ordering::Less,
            (false, true) => std::cmp::Ordering::Greater,
            _ => b.height.cmp(&a.height),
        });
        let mut sizes = BlockSizes {
            ones: 0,
            big: Vec::new(),
        };
        for c in &chains {
            if c.height == 1 {
                sizes.ones += 1;
            } else {
                sizes.big.push(c.height);
            }
            // Chain columns from the bottom of the chain upward:
            // N^{h−1}·top, …, N·top, top.
            let mut stack = vec![c.top.clone()];
            for _ in 1..c.height {
                let next = &nmat * stack.last().expect("nonempty");
                stack.push(next);
            }
            columns.extend(stack.into_iter().rev());
        }
        eigenvalues_out.push(lambda);
        blocks_out.push(sizes);
    }

    let transform = CxMat::from_columns(&columns);
    let structure = JordanStructure {
        transform,
        eigenvalues: eigenvalues_out,
        blocks: blocks_out,
    };
    // Residual acceptance: ‖Q·K·Q⁻¹ − M‖ within jordan_rel of the data scale.
    let qinv = structure
        .transform
        .clone()
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::ConvergenceFailure("Jordan transform is singular".into()))?;
    let recon = &structure.transform * structure.canonical() * qinv;
    let residual = fro_norm(&(recon - m));
    if residual > tol.jordan_rel * scale.max(1.0) {
        return Err(Error::ConvergenceFailure(format!(
            "Jordan reconstruction residual {residual:.3e} exceeds tolerance"
        )));
    }
    Ok(structure)
}

/// Coefficients of `p(λ) = det(λ·M1 + M0)`, low degree first.
#[derive(Debug, Clone)]
pub struct PolyDet {
    /// Trimmed coefficients, lowest degree first; `[0]` when identically
    /// zero.
    pub coeffs: Vec<Complex64>,
    /// True when every sampled determinant vanished at the scaled tolerance.
    pub identically_zero: bool,
}

/// Hadamard bound Π‖row_i‖₂ — an upper bound on |det|, used to scale the
/// zero test.
fn hadamard_bound(m: &CxMat) -> f64 {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .product()
}

/// Determinant of the matrix polynomial `λ·M1 + M0` by evaluation at m+1
/// nodes on a circle of radius `1 + ‖M0‖ + ‖M1‖` and inverse-DFT
/// interpolation (the scaled roots-of-unity Vandermonde is exactly a DFT).
pub fn poly_det(m0: &CxMat, m1: &CxMat, tol: &Tol) -> PolyDet {
    assert_eq!(m0.shape(), m1.shape(), "poly_det needs same-size matrices");
    assert_eq!(m0.nrows(), m0.ncols(), "poly_det needs square matrices");
    let m = m0.nrows();
    let radius = 1.0 + fro_norm(m0) + fro_norm(m1);
    let count = m + 1;
    // Offset angle keeps the node set away from axis-aligned eigenvalues.
    let phi0 = 2.0 * std::f64::consts::PI * 0.37 / count as f64;
    let mut values = Vec::with_capacity(count);
    let mut nodes = Vec::with_capacity(count);
    let mut hmax = 1.0_f64;
    for k in 0..count {
        let theta = phi0 + 2.0 * std::f64::consts::PI * k as f64 / count as f64;
        let node = Complex64::from_polar(radius, theta);
        let at = m1 * node + m0;
        hmax = hmax.max(hadamard_bound(&at));
        values.push(at.determinant());
        nodes.push(node);
    }
    let identically_zero = values.iter().all(|y| y.norm() <= tol.abs * hmax);
    if identically_zero {
        return PolyDet {
            coeffs: vec![czero()],
            identically_zero: true,
        };
    }
    // c_j = (1/count) · R^{−j} e^{−i j φ0} Σ_k ω^{−kj} y_k.
    let mut coeffs = Vec::with_capacity(count);
    for j in 0..count {
        let mut acc = czero();
        for (k, y) in values.iter().enumerate() {
            let ang = -2.0 * std::f64::consts::PI * (k * j) as f64 / count as f64;
            acc += y * Complex64::from_polar(1.0, ang);
        }
        let unscale = Complex64::from_polar(radius.powi(j as i32), j as f64 * phi0);
        coeffs.push(acc / unscale / count as f64);
    }
    // Trim trailing coefficients below their per-degree noise floor.
    while coeffs.len() > 1 {
        let j = coeffs.len() - 1;
        let floor = tol.abs * hmax / radius.powi(j as i32);
        if coeffs[j].norm() <= floor {
            coeffs.pop();
        } else {
            break;
        }
    }
    PolyDet {
        coeffs,
        identically_zero: false,
    }
}

/// Roots of a complex polynomial (coefficients low degree first) via the
/// companion matrix, lexicographically sorted.
pub fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut c = coeffs.to_vec();
    while c.len() > 1 && c.last().map(|z| z.norm()) == Some(0.0) {
        c.pop();
    }
    let deg = c.len() - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = c[deg];
    let mut comp = CxMat::zeros(deg, deg);
    for i in 1..deg {
        comp[(i, i - 1)] = cone();
    }
    for i in 0..deg {
        comp[(i, deg - 1)] = -c[i] / lead;
    }
    let mut roots = eigenvalues(&comp)?;
    roots.sort_by(cx_lex);
    Ok(roots)
}

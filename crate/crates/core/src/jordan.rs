//! Jordan-form constructions for dual complex matrices.
//!
//! Two standard-part shapes admit a canonical form with an explicit
//! transform:
//!
//! - **Block-scalar standard part** `A_s = diag(λ_1I_{n_1}, …, λ_tI_{n_t})`
//!   with distinct `λ_i` ([`jordan_diag_standard`]): the canonical form is
//!   block diagonal with constant diagonal `λ_is + λ_ijdε` and `ε` on the
//!   superdiagonal; [`jordan_form_full`] extends this to any matrix whose
//!   standard part is diagonalizable and reads off the complete eigenvalue
//!   list.
//! - **Single-Jordan-block standard part** `A_s = J_n(λ_s)`
//!   ([`jordan_block_standard`]): the dual part can be compressed to its
//!   last row, and nothing more — the corner entry is a similarity
//!   invariant. [`eig_jordan_block`] turns that corner entry into the
//!   eigenvalue verdict (none at all, or an infinite family).

use crate::cxla::{self, CxMat};
use crate::eigen::Eigenpair;
use crate::error::{Error, Result};
use crate::matrix::{verify_eigenpair, DCMatrix, DCVector};
use crate::scalar::{cone, czero, Complex64, DualComplex};
use crate::tol::Tol;

/// One constant-diagonal block of a canonical form: `λ_s + λ_dε` down the
/// diagonal, `ε` on the superdiagonal, of the given size.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalDualBlock {
    /// Standard component of the block eigenvalue.
    pub lambda_s: Complex64,
    /// Dual component of the block eigenvalue.
    pub lambda_d: Complex64,
    /// Block size.
    pub size: usize,
}

/// Block content of a [`DualJordanForm`].
#[derive(Debug, Clone, PartialEq)]
pub enum JordanBlocks {
    /// Constant-diagonal blocks, for a block-scalar standard part.
    Blocks(Vec<CanonicalDualBlock>),
    /// Last-row form, for a Jordan-block standard part: `J_s = J_n(λ_s)`
    /// and `J_d` zero except for the recorded last row.
    LastRow {
        /// The standard eigenvalue of the block.
        lambda_s: Complex64,
        /// The n last-row entries of `J_d`.
        entries: Vec<Complex64>,
    },
}

/// A canonical form `J` with invertible transform `P`: `P⁻¹AP = J` up to
/// the scaled reconstruction tolerance.
#[derive(Debug, Clone)]
pub struct DualJordanForm {
    /// The canonical form.
    pub j: DCMatrix,
    /// The transform; `P⁻¹AP = J`.
    pub p: DCMatrix,
    /// Descriptor of `J`'s block content.
    pub blocks: JordanBlocks,
}

/// Extracts column `c` of a dual complex matrix as a vector.
fn matrix_column(m: &DCMatrix, c: usize) -> DCVector {
    DCVector::new(
        m.std().column(c).into_owned(),
        m.dual().column(c).into_owned(),
    )
    .expect("matrix parts share shapes")
}

/// Checks the reconstruction invariant `‖P⁻¹AP − J‖ ≤ τ_jordan·(1+‖A‖)`.
fn check_reconstruction(a: &DCMatrix, form: &DualJordanForm, tol: &Tol) -> Result<()> {
    let p_inv = form.p.inverse(tol)?;
    let recon = p_inv.matmul(a)?.matmul(&form.p)?;
    let residual = recon.sub(&form.j)?.norm();
    if residual > tol.jordan_rel * (1.0 + a.norm()) {
        return Err(Error::ConvergenceFailure(format!(
            "canonical-form residual {residual:.3e} exceeds the scaled tolerance"
        )));
    }
    Ok(())
}

/// Canonical form of a dual complex matrix whose standard part is
/// block scalar: `A_s = diag(λ_1I_{n_1}, …, λ_tI_{n_t})` with distinct
/// `λ_i`, declared through `structure` as `(λ_i, n_i)` pairs.
///
/// Per diagonal block, the dual part `A_iid` is brought to canonical form
/// by its own complex similarity `P_is`; the off-diagonal dual transform
/// blocks `P_ijd = (λ_j − λ_i)⁻¹ A_ijd P_js` then cancel every off-diagonal
/// block of the result, leaving `J = diag(λ_iI + J_idε)`.
///
/// Errors with [`Error::StandardPartNotBlockScalar`] when `A_s` does not
/// match the declared layout, and [`Error::EigenvaluesNotDistinct`] when
/// two declared eigenvalues coincide at the clustering tolerance.
pub fn jordan_diag_standard(
    a: &DCMatrix,
    structure: &[(Complex64, usize)],
    tol: &Tol,
) -> Result<DualJordanForm> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "canonical form needs a square matrix, got {}×{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let n = a.nrows();
    let covered: usize = structure.iter().map(|&(_, ni)| ni).sum();
    if covered != n || structure.iter().any(|&(_, ni)| ni == 0) {
        return Err(Error::StandardPartNotBlockScalar(format!(
            "declared block sizes cover {covered} of {n} dimensions"
        )));
    }
    let lambda_scale = structure
        .iter()
        .map(|(l, _)| l.norm())
        .fold(1.0_f64, f64::max);
    for (i, &(li, _)) in structure.iter().enumerate() {
        for &(lj, _) in &structure[i + 1..] {
            if (li - lj).norm() <= tol.cluster_rel * lambda_scale {
                return Err(Error::EigenvaluesNotDistinct);
            }
        }
    }
    // The standard part must equal the declared layout entrywise.
    let offsets: Vec<usize> = structure
        .iter()
        .scan(0, |acc, &(_, ni)| {
            let at = *acc;
            *acc += ni;
            Some(at)
        })
        .collect();
    let block_of = |idx: usize| -> usize {
        offsets
            .iter()
            .rposition(|&off| off <= idx)
            .expect("offsets start at 0")
    };
    let entry_tol = tol.abs * (1.0 + cxla::fro_norm(a.std()));
    for r in 0..n {
        for c in 0..n {
            let expected = if r == c {
                structure[block_of(r)].0
            } else {
                czero()
            };
            if (a.std()[(r, c)] - expected).norm() > entry_tol {
                return Err(Error::StandardPartNotBlockScalar(format!(
                    "standard entry ({r}, {c}) is {} but the layout requires {expected}",
                    a.std()[(r, c)]
                )));
            }
        }
    }

    // Canonicalize each diagonal dual block independently.
    let mut p_s = CxMat::zeros(n, n);
    let mut j_d = CxMat::zeros(n, n);
    let mut j_s = CxMat::zeros(n, n);
    let mut blocks = Vec::new();
    let mut per_block_ps: Vec<CxMat> = Vec::with_capacity(structure.len());
    for (&(lambda_i, ni), &off) in structure.iter().zip(&offsets) {
        let a_iid = a.dual().view((off, off), (ni, ni)).into_owned();
        let inner = cxla::jordan(&a_iid, tol)?;
        p_s.view_mut((off, off), (ni, ni))
            .copy_from(&inner.transform);
        j_d.view_mut((off, off), (ni, ni))
            .copy_from(&inner.canonical());
        for r in 0..ni {
            j_s[(off + r, off + r)] = lambda_i;
        }
        for (lambda_d, sizes) in inner.eigenvalues.iter().zip(&inner.blocks) {
            for _ in 0..sizes.ones {
                blocks.push(CanonicalDualBlock {
                    lambda_s: lambda_i,
                    lambda_d: *lambda_d,
                    size: 1,
                });
            }
            for &m in &sizes.big {
                blocks.push(CanonicalDualBlock {
                    lambda_s: lambda_i,
                    lambda_d: *lambda_d,
                    size: m,
                });
            }
        }
        per_block_ps.push(inner.transform);
    }

    // Off-diagonal dual transform blocks cancel the dual coupling.
    let mut p_d = CxMat::zeros(n, n);
    for (i, (&(lambda_i, ni), &off_i)) in structure.iter().zip(&offsets).enumerate() {
        for (j, (&(lambda_j, nj), &off_j)) in structure.iter().zip(&offsets).enumerate() {
            if i == j {
                continue;
            }
            let a_ijd = a.dual().view((off_i, off_j), (ni, nj));
            let block = (a_ijd * &per_block_ps[j]) / (lambda_j - lambda_i);
            p_d.view_mut((off_i, off_j), (ni, nj)).copy_from(&block);
        }
    }

    let form = DualJordanForm {
        j: DCMatrix::new(j_s, j_d).expect("square parts"),
        p: DCMatrix::new(p_s, p_d).expect("square parts"),
        blocks: JordanBlocks::Blocks(blocks),
    };
    check_reconstruction(a, &form, tol)?;
    Ok(form)
}

/// Canonical form and complete eigenvalue list of a matrix whose standard
/// part is diagonalizable.
///
/// The standard part is diagonalized (`Q_s⁻¹B_sQ_s` block scalar with
/// lexicographically ordered eigenvalues), the transformed matrix is
/// handed to [`jordan_diag_standard`], and the composite transform `Q_sP`
/// is returned. One eigenpair is read off per canonical block: the block's
/// eigenvalue with the `Q_sP` column at the block's start; every emitted
/// pair is verified.
///
/// Errors with [`Error::StandardPartDefective`] when the standard part is
/// not diagonalizable.
pub fn jordan_form_full(b: &DCMatrix, tol: &Tol) -> Result<(DualJordanForm, Vec<Eigenpair>)> {
    if !b.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "canonical form needs a square matrix, got {}×{}",
            b.nrows(),
            b.ncols()
        )));
    }
    let structure = cxla::jordan(b.std(), tol)?;
    if !structure.is_diagonal() {
        return Err(Error::StandardPartDefective);
    }
    let q_s = structure.transform.clone();
    let q_inv = q_s
        .clone()
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::ConvergenceFailure("eigenvector basis is singular".into()))?;
    let a_d = &q_inv * b.dual() * &q_s;
    let layout: Vec<(Complex64, usize)> = structure
        .eigenvalues
        .iter()
        .zip(&structure.blocks)
        .map(|(lambda, sizes)| (*lambda, sizes.ones))
        .collect();
    // In the eigenvector basis the standard part is exactly block scalar;
    // the basis residual is charged to the final reconstruction check.
    let a_canon = DCMatrix::new(structure.canonical(), a_d).expect("square parts");
    let inner = jordan_diag_standard(&a_canon, &layout, tol)?;
    let form = DualJordanForm {
        j: inner.j,
        p: DCMatrix::from_std(q_s).matmul(&inner.p)?,
        blocks: inner.blocks,
    };
    check_reconstruction(b, &form, tol)?;

    let descs = match &form.blocks {
        JordanBlocks::Blocks(list) => list,
        JordanBlocks::LastRow { .. } => unreachable!("block-scalar construction"),
    };
    let mut eigenpairs = Vec::with_capacity(descs.len());
    let mut offset = 0;
    for desc in descs {
        let lambda = DualComplex::new(desc.lambda_s, desc.lambda_d);
        let vector = matrix_column(&form.p, offset);
        if !verify_eigenpair(b, lambda, &vector, tol)? {
            return Err(Error::ConvergenceFailure(format!(
                "canonical-block eigenpair at λ_s = {} failed verification",
                desc.lambda_s
            )));
        }
        eigenpairs.push(Eigenpair { lambda, vector });
        offset += desc.size;
    }
    Ok((form, eigenpairs))
}

/// Validates `A_s = J_n(λ_s)` with `n ≥ 2` and returns `λ_s`.
fn jordan_block_lambda(a_s: &CxMat, tol: &Tol) -> Result<Complex64> {
    let n = a_s.nrows();
    if n < 2 {
        return Err(Error::StandardPartNotJordanBlock(format!(
            "order {n} is below the minimum of 2"
        )));
    }
    let lambda_s = a_s[(0, 0)];
    let entry_tol = tol.abs * (1.0 + cxla::fro_norm(a_s));
    for r in 0..n {
        for c in 0..n {
            let expected = if r == c {
                lambda_s
            } else if c == r + 1 {
                cone()
            } else {
                czero()
            };
            if (a_s[(r, c)] - expected).norm() > entry_tol {
                return Err(Error::StandardPartNotJordanBlock(format!(
                    "standard entry ({r}, {c}) is {} but a single Jordan block requires {expected}",
                    a_s[(r, c)]
                )));
            }
        }
    }
    Ok(lambda_s)
}

/// Canonical form of a dual complex matrix whose standard part is a single
/// Jordan block `J_n(λ_s)`.
///
/// The standard transform is pinned to the identity, so only a dual
/// perturbation `P = I + P_dε` is available; it changes the dual part by
/// `N·P_d − P_d·N` with `N` the nilpotent part. Working diagonal by
/// diagonal, each diagonal of `P_d` clears one diagonal of `J_d` except for
/// its last-row entry; diagonals above the main are underdetermined by one
/// entry, fixed by zeroing the first row of `P_d`. The corner entry
/// `J_d(n,1) = A_d(n,1)` is untouched by every choice of `P_d` — it is
/// asserted equal, not improved. The result has `J_s = A_s` and `J_d`
/// supported on the last row only.
///
/// Errors with [`Error::StandardPartNotJordanBlock`] when `A_s` is not a
/// single Jordan block.
pub fn jordan_block_standard(a: &DCMatrix, tol: &Tol) -> Result<DualJordanForm> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "canonical form needs a square matrix, got {}×{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let lambda_s = jordan_block_lambda(a.std(), tol)?;
    let n = a.nrows();
    let a_d = a.dual();

    // One chain per diagonal of J_d below the corner: the entry
    // p[r][c] cancels J_d[r−1][c] against the previous chain entry.
    // Signed arithmetic keeps the diagonal index honest.
    let ni = n as isize;
    let mut p_d = CxMat::zeros(n, n);
    for l in (1 - ni)..=(ni - 2) {
        let j_start = 0.max(-l);
        let j_end = ni - 2 - l; // row j+l+1 must stay above the last row
        for j in j_start..=j_end.min(ni - 1) {
            let prev = if j >= 1 && j + l >= 0 {
                p_d[((j + l) as usize, (j - 1) as usize)]
            } else {
                czero()
            };
            p_d[((j + l + 1) as usize, j as usize)] = prev - a_d[((j + l) as usize, j as usize)];
        }
    }

    // J_d is exactly the last row left over by the chains:
    // f(n,1) = a(n,1) and f(n,i) = a(n,i) − p(n,i−1).
    let mut j_d = CxMat::zeros(n, n);
    let mut entries = Vec::with_capacity(n);
    for c in 0..n {
        let f = if c == 0 {
            a_d[(n - 1, 0)]
        } else {
            a_d[(n - 1, c)] - p_d[(n - 1, c - 1)]
        };
        j_d[(n - 1, c)] = f;
        entries.push(f);
    }

    let mut j_s = CxMat::zeros(n, n);
    for r in 0..n {
        j_s[(r, r)] = lambda_s;
        if r + 1 < n {
            j_s[(r, r + 1)] = cone();
        }
    }
    let form = DualJordanForm {
        j: DCMatrix::new(j_s, j_d).expect("square parts"),
        p: DCMatrix::new(cxla::eye(n), p_d).expect("square parts"),
        blocks: JordanBlocks::LastRow { lambda_s, entries },
    };
    check_reconstruction(a, &form, tol)?;
    Ok(form)
}

/// Eigenvalue verdict for a matrix whose standard part is a single Jordan
/// block.
#[derive(Debug, Clone)]
pub enum JordanBlockEig {
    /// The corner dual entry is nonzero: no eigenvalue exists at all.
    NoEigenvalue {
        /// The obstructing corner entry `A_d(n, 1)`.
        obstruction: Complex64,
    },
    /// The corner dual entry vanishes: `λ_s + λ_dε` is an eigenvalue for
    /// every complex `λ_d`.
    Infinite {
        /// The standard eigenvalue of the block.
        lambda_s: Complex64,
    },
}

/// Closed-form eigenvalue classification for a Jordan-block standard part:
/// no eigenvalue at all when the corner dual entry `A_d(n, 1)` is nonzero,
/// otherwise an infinite family with `λ_d` unconstrained.
///
/// Errors with [`Error::StandardPartNotJordanBlock`] when `A_s` is not a
/// single Jordan block.
pub fn eig_jordan_block(a: &DCMatrix, tol: &Tol) -> Result<JordanBlockEig> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "eigenvalue verdict needs a square matrix, got {}×{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let lambda_s = jordan_block_lambda(a.std(), tol)?;
    let corner = a.dual()[(a.nrows() - 1, 0)];
    if corner.norm() > tol.abs {
        Ok(JordanBlockEig::NoEigenvalue {
            obstruction: corner,
        })
    } else {
        Ok(JordanBlockEig::Infinite { lambda_s })
    }
}

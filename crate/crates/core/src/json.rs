//! JSON wire formats for matrices, scalars, and solver reports.
//!
//! The matrix format is the wire contract shared by the CLI and the C API:
//!
//! ```json
//! {"rows": 2, "cols": 2,
//!  "standard": [[1.0,0.0],[1.0,0.0],[0.0,0.0],[1.0,0.0]],
//!  "dual":     [[0.0,0.0],[0.0,0.0],[1.0,0.0],[0.0,0.0]]}
//! ```
//!
//! Both parts are row-major arrays of `[re, im]` pairs. Vectors are
//! single-column matrices. A dual complex scalar is `[re_s, im_s, re_d,
//! im_d]`; a dual number is `[std, dual]`. Every number must be finite —
//! anything else is a [`Error::ParseError`] — and negative zeros are
//! normalized away on output so equal values always serialize to the same
//! bytes.

use crate::eigen::{
    DiagCertificate, Diagonalizability, EigenReport, Eigenpair, HermitianEigen, LambdaClass,
};
use crate::error::{Error, Result};
use crate::jordan::{DualJordanForm, JordanBlocks};
use crate::matrix::{DCMatrix, DCVector};
use crate::scalar::{Complex64, DualComplex, DualNumber};
use serde_json::{json, Map, Value};

fn num(x: f64) -> f64 {
    // Flush −0.0 so equal values serialize identically.
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Serializes a complex number as `[re, im]`.
pub fn complex_to_json(z: Complex64) -> Value {
    json!([num(z.re), num(z.im)])
}

/// Serializes a dual complex scalar as `[re_s, im_s, re_d, im_d]`.
pub fn dual_complex_to_json(a: DualComplex) -> Value {
    json!([num(a.std.re), num(a.std.im), num(a.dual.re), num(a.dual.im)])
}

/// Serializes a dual number as `[std, dual]`.
pub fn dual_number_to_json(a: DualNumber) -> Value {
    json!([num(a.std), num(a.dual)])
}

/// Serializes a matrix into the wire format.
pub fn matrix_to_json(m: &DCMatrix) -> Value {
    let part = |p: &crate::cxla::CxMat| -> Value {
        let mut rows = Vec::with_capacity(m.nrows() * m.ncols());
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                rows.push(complex_to_json(p[(r, c)]));
            }
        }
        Value::Array(rows)
    };
    json!({
        "rows": m.nrows(),
        "cols": m.ncols(),
        "standard": part(m.std()),
        "dual": part(m.dual()),
    })
}

/// Serializes a vector as a single-column matrix.
pub fn vector_to_json(v: &DCVector) -> Value {
    let part = |p: &crate::cxla::CxVec| -> Value {
        Value::Array(p.iter().map(|&z| complex_to_json(z)).collect())
    };
    json!({
        "rows": v.dim(),
        "cols": 1,
        "standard": part(v.std()),
        "dual": part(v.dual()),
    })
}

fn parse_err(context: &str, detail: impl std::fmt::Display) -> Error {
    Error::ParseError(format!("{context}: {detail}"))
}

fn as_object<'v>(v: &'v Value, context: &str) -> Result<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| parse_err(context, "expected a JSON object"))
}

fn field<'v>(obj: &'v Map<String, Value>, key: &str, context: &str) -> Result<&'v Value> {
    obj.get(key)
        .ok_or_else(|| parse_err(context, format!("missing field \"{key}\"")))
}

fn finite(x: f64, context: &str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(parse_err(context, "non-finite number"))
    }
}

fn parse_f64(v: &Value, context: &str) -> Result<f64> {
    finite(
        v.as_f64()
            .ok_or_else(|| parse_err(context, "expected a number"))?,
        context,
    )
}

fn parse_usize(v: &Value, context: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(context, "expected a nonnegative integer"))
}

fn parse_complex(v: &Value, context: &str) -> Result<Complex64> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| parse_err(context, "expected an [re, im] pair"))?;
    Ok(Complex64::new(
        parse_f64(&arr[0], context)?,
        parse_f64(&arr[1], context)?,
    ))
}

fn parse_part(v: &Value, rows: usize, cols: usize, context: &str) -> Result<crate::cxla::CxMat> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err(context, "expected an array of [re, im] pairs"))?;
    if arr.len() != rows * cols {
        return Err(parse_err(
            context,
            format!("{} entries for a {rows}×{cols} matrix", arr.len()),
        ));
    }
    let mut m = crate::cxla::CxMat::zeros(rows, cols);
    for (i, entry) in arr.iter().enumerate() {
        m[(i / cols.max(1), i % cols.max(1))] = parse_complex(entry, context)?;
    }
    Ok(m)
}

/// Parses a matrix from its wire-format JSON value.
pub fn matrix_from_json(v: &Value) -> Result<DCMatrix> {
    let context = "matrix";
    let obj = as_object(v, context)?;
    let rows = parse_usize(field(obj, "rows", context)?, "matrix \"rows\"")?;
    let cols = parse_usize(field(obj, "cols", context)?, "matrix \"cols\"")?;
    let standard = parse_part(
        field(obj, "standard", context)?,
        rows,
        cols,
        "matrix \"standard\"",
    )?;
    let dual = parse_part(field(obj, "dual", context)?, rows, cols, "matrix \"dual\"")?;
    DCMatrix::new(standard, dual)
}

/// Parses a matrix from wire-format JSON text.
pub fn matrix_from_str(s: &str) -> Result<DCMatrix> {
    let v: Value = serde_json::from_str(s).map_err(|e| parse_err("matrix", e))?;
    matrix_from_json(&v)
}

/// Parses a vector (a single-column matrix) from its wire-format value.
pub fn vector_from_json(v: &Value) -> Result<DCVector> {
    let m = matrix_from_json(v)?;
    if m.ncols() != 1 {
        return Err(parse_err(
            "vector",
            format!("expected a single-column matrix, got {} columns", m.ncols()),
        ));
    }
    DCVector::new(
        m.std().column(0).into_owned(),
        m.dual().column(0).into_owned(),
    )
}

/// Parses a dual complex scalar `[re_s, im_s, re_d, im_d]`.
pub fn dual_complex_from_json(v: &Value) -> Result<DualComplex> {
    let context = "dual complex scalar";
    let arr = v
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| parse_err(context, "expected [re_s, im_s, re_d, im_d]"))?;
    let mut parts = [0.0; 4];
    for (slot, value) in parts.iter_mut().zip(arr) {
        *slot = parse_f64(value, context)?;
    }
    Ok(DualComplex::new(
        Complex64::new(parts[0], parts[1]),
        Complex64::new(parts[2], parts[3]),
    ))
}

/// Input for eigenpair verification: a matrix with a candidate pair.
#[derive(Debug, Clone)]
pub struct VerifyInput {
    /// The matrix to test against.
    pub matrix: DCMatrix,
    /// Candidate eigenvalue.
    pub lambda: DualComplex,
    /// Candidate eigenvector.
    pub vector: DCVector,
}

/// Parses a verification input: `{"matrix": …, "lambda": [4 numbers],
/// "vector": single-column matrix}`.
pub fn verify_input_from_str(s: &str) -> Result<VerifyInput> {
    let context = "verify input";
    let v: Value = serde_json::from_str(s).map_err(|e| parse_err(context, e))?;
    let obj = as_object(&v, context)?;
    Ok(VerifyInput {
        matrix: matrix_from_json(field(obj, "matrix", context)?)?,
        lambda: dual_complex_from_json(field(obj, "lambda", context)?)?,
        vector: vector_from_json(field(obj, "vector", context)?)?,
    })
}

fn eigenpair_json(pair: &Eigenpair) -> Value {
    json!({
        "lambda": dual_complex_to_json(pair.lambda),
        "vector": vector_to_json(&pair.vector),
    })
}

/// Serializes an eigenvalue classification report.
///
/// Every entry carries the standard eigenvalue and a `"classification"` of
/// `"finite"`, `"none"`, or `"infinite"`; finite entries list their pairs,
/// `"none"` entries their inconsistency certificate, and infinite entries a
/// representative pair together with the `"lambda_d": "free"` marker.
pub fn eigen_report_to_json(report: &EigenReport) -> Value {
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|entry| {
            let mut obj = json!({ "lambda_s": complex_to_json(entry.lambda_s) });
            let map = obj.as_object_mut().expect("object literal");
            match &entry.class {
                LambdaClass::Finite { pairs } => {
                    map.insert("classification".into(), json!("finite"));
                    map.insert(
                        "pairs".into(),
                        Value::Array(pairs.iter().map(eigenpair_json).collect()),
                    );
                }
                LambdaClass::NoEigenvalue { certificate } => {
                    map.insert("classification".into(), json!("none"));
                    map.insert("certificate".into(), json!(num(*certificate)));
                }
                LambdaClass::InfiniteFamily(family) => {
                    map.insert("classification".into(), json!("infinite"));
                    map.insert("lambda_d".into(), json!("free"));
                    map.insert(
                        "representative".into(),
                        eigenpair_json(&family.representative),
                    );
                }
            }
            obj
        })
        .collect();
    json!({
        "order": report.order,
        "summary": {
            "finite_total": report.finite_total(),
            "any_infinite": report.any_infinite(),
            "any_none": report.any_none(),
        },
        "entries": entries,
        "diagnostics": report.diagnostics,
    })
}

/// Serializes a canonical form as `{"J": …, "P": …, "blocks": […]}`.
pub fn jordan_form_to_json(form: &DualJordanForm) -> Value {
    let blocks = match &form.blocks {
        JordanBlocks::Blocks(list) => Value::Array(
            list.iter()
                .map(|b| {
                    json!({
                        "lambda_s": complex_to_json(b.lambda_s),
                        "lambda_d": complex_to_json(b.lambda_d),
                        "size": b.size,
                    })
                })
                .collect(),
        ),
        JordanBlocks::LastRow { lambda_s, entries } => json!([{
            "lambda_s": complex_to_json(*lambda_s),
            "last_row": entries.iter().map(|&z| complex_to_json(z)).collect::<Vec<_>>(),
        }]),
    };
    json!({
        "J": matrix_to_json(&form.j),
        "P": matrix_to_json(&form.p),
        "blocks": blocks,
    })
}

/// Serializes a diagonalizability verdict with its certificate or reason.
pub fn diagonalizability_to_json(verdict: &Diagonalizability) -> Value {
    match verdict {
        Diagonalizability::Diagonalizable(DiagCertificate { p, d, residual }) => json!({
            "diagonalizable": true,
            "p": matrix_to_json(p),
            "d": matrix_to_json(d),
            "residual": num(*residual),
        }),
        Diagonalizability::NotDiagonalizable { reason } => json!({
            "diagonalizable": false,
            "reason": reason,
        }),
    }
}

/// Serializes a Hermitian eigendecomposition with its definiteness verdict.
pub fn hermitian_to_json(h: &HermitianEigen) -> Value {
    json!({
        "eigenvalues": h.eigenvalues.iter().map(|&e| dual_number_to_json(e)).collect::<Vec<_>>(),
        "vectors": h.vectors.iter().map(vector_to_json).collect::<Vec<_>>(),
        "positive_semidefinite": h.psd,
        "positive_definite": h.pd,
    })
}

/// Serializes an eigenpair-verification outcome.
pub fn verify_to_json(verified: bool) -> Value {
    json!({ "verified": verified })
}

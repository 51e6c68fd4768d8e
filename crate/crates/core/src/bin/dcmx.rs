//! `dcmx` — command-line front end for dual complex linear algebra.
//!
//! ```text
//! dcmx <verb> <input.json> [--format text|json] [--tol-abs X]
//!      [--tol-rank X] [--tol-cluster X] [--out FILE]
//! ```
//!
//! Verbs: `eig` (classify all eigenvalues), `jordan` (canonical form with
//! auto-selected route), `diag` (diagonalizability with certificate),
//! `invert`, `verify` (check a candidate eigenpair), `hermitian`
//! (dual-number eigendecomposition with definiteness verdict).
//!
//! Every verb reads the matrix wire format documented in the library's
//! `json` module; `verify` reads `{"matrix": …, "lambda": [re_s, im_s,
//! re_d, im_d], "vector": …}`. Exit codes: 0 success, 1 mathematical
//! negative (no eigenvalue / not diagonalizable / rejected pair / not
//! Hermitian), 2 input error, 3 numerical failure.

use clap::{Parser, ValueEnum};
use dcmx::eigen::{
    self, DiagCertificate, Diagonalizability, EigenReport, HermitianEigen, LambdaClass,
};
use dcmx::jordan::{self, DualJordanForm, JordanBlockEig, JordanBlocks};
use dcmx::json::{self, complex_to_json};
use dcmx::{Complex64, DCMatrix, DCVector, DualComplex, DualNumber, Error, Tol};
use serde_json::{json as jobj, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dcmx",
    version,
    about = "Dual complex matrices: eigenvalues, Jordan forms, inverses"
)]
struct Cli {
    /// What to compute.
    #[arg(value_enum)]
    verb: Verb,
    /// Input JSON file (matrix wire format; `verify` takes matrix + pair).
    input: PathBuf,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override the absolute tolerance.
    #[arg(long = "tol-abs", value_name = "X")]
    tol_abs: Option<f64>,
    /// Override the relative rank tolerance.
    #[arg(long = "tol-rank", value_name = "X")]
    tol_rank: Option<f64>,
    /// Override the relative eigenvalue-clustering tolerance.
    #[arg(long = "tol-cluster", value_name = "X")]
    tol_cluster: Option<f64>,
    /// Write the report to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Verb {
    Eig,
    Jordan,
    Diag,
    Invert,
    Verify,
    Hermitian,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(&cli))
}

fn run(cli: &Cli) -> u8 {
    let raw = match std::fs::read_to_string(&cli.input) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.input.display());
            return 2;
        }
    };
    let mut tol = Tol::default();
    if let Some(x) = cli.tol_abs {
        tol.abs = x;
    }
    if let Some(x) = cli.tol_rank {
        tol.rank_rel = x;
    }
    if let Some(x) = cli.tol_cluster {
        tol.cluster_rel = x;
    }

    let outcome = dispatch(cli.verb, &raw, &tol);
    let (value, text, code) = match outcome {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::ParseError(_) | Error::ShapeMismatch(_) => 2,
                _ => 3,
            };
        }
    };
    let rendered = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("finite JSON");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = text;
            s.push('\n');
            s
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{rendered}"),
    }
    code
}

type Report = (Value, String, u8);

fn dispatch(verb: Verb, raw: &str, tol: &Tol) -> Result<Report, Error> {
    match verb {
        Verb::Verify => {
            let input = json::verify_input_from_str(raw)?;
            run_verify(&input, tol)
        }
        _ => {
            let a = json::matrix_from_str(raw)?;
            if !a.is_square() {
                return Err(Error::ParseError(format!(
                    "this verb needs a square matrix, got {}×{}",
                    a.nrows(),
                    a.ncols()
                )));
            }
            match verb {
                Verb::Eig => run_eig(&a, tol),
                Verb::Jordan => run_jordan(&a, tol),
                Verb::Diag => run_diag(&a, tol),
                Verb::Invert => run_invert(&a, tol),
                Verb::Hermitian => run_hermitian(&a, tol),
                Verb::Verify => unreachable!("handled above"),
            }
        }
    }
}

fn run_eig(a: &DCMatrix, tol: &Tol) -> Result<Report, Error> {
    let report = eigen::eig_all(a, tol)?;
    let code = if report.any_none() { 1 } else { 0 };
    Ok((json::eigen_report_to_json(&report), text_eig(&report), code))
}

fn run_jordan(a: &DCMatrix, tol: &Tol) -> Result<Report, Error> {
    // Route 1: the standard part is literally a single Jordan block.
    match jordan::jordan_block_standard(a, tol) {
        Ok(form) => {
            let verdict = jordan::eig_jordan_block(a, tol)?;
            let verdict_json = match &verdict {
                JordanBlockEig::NoEigenvalue { obstruction } => jobj!({
                    "classification": "none",
                    "obstruction": complex_to_json(*obstruction),
                }),
                JordanBlockEig::Infinite { lambda_s } => jobj!({
                    "classification": "infinite",
                    "lambda_s": complex_to_json(*lambda_s),
                    "lambda_d": "free",
                }),
            };
            let value = jobj!({
                "route": "jordan-block-standard",
                "form": json::jordan_form_to_json(&form),
                "eigenvalues": verdict_json,
            });
            let mut text = String::from("route: Jordan-block standard part\n");
            text.push_str(&text_form(&form));
            text.push_str(&match &verdict {
                JordanBlockEig::NoEigenvalue { obstruction } => format!(
                    "eigenvalues: none (corner dual entry {})",
                    fmt_complex(*obstruction)
                ),
                JordanBlockEig::Infinite { lambda_s } => format!(
                    "eigenvalues: infinitely many — {} + λ_d·eps for every complex λ_d",
                    fmt_complex(*lambda_s)
                ),
            });
            return Ok((value, text, 0));
        }
        Err(Error::StandardPartNotJordanBlock(_)) => {}
        Err(e) => return Err(e),
    }
    // Route 2: the standard part is diagonalizable.
    match jordan::jordan_form_full(a, tol) {
        Ok((form, pairs)) => {
            let value = jobj!({
                "route": "diagonalizable-standard",
                "form": json::jordan_form_to_json(&form),
                "eigenpairs": pairs
                    .iter()
                    .map(|p| jobj!({
                        "lambda": json::dual_complex_to_json(p.lambda),
                        "vector": json::vector_to_json(&p.vector),
                    }))
                    .collect::<Vec<_>>(),
            });
            let mut text = String::from("route: diagonalizable standard part\n");
            text.push_str(&text_form(&form));
            text.push_str("eigenpairs:\n");
            for p in &pairs {
                text.push_str(&format!(
                    "  λ = {}\n  x = {}\n",
                    fmt_dual_complex(p.lambda),
                    text_vector(&p.vector)
                ));
            }
            text.pop();
            Ok((value, text, 0))
        }
        Err(Error::StandardPartDefective) => {
            // Neither canonical route applies; classify eigenvalues only.
            let note = "the standard part is neither diagonalizable nor a single Jordan \
                        block; no canonical form is constructed";
            let report = eigen::eig_all(a, tol)?;
            let value = jobj!({
                "route": "none",
                "note": note,
                "classification": json::eigen_report_to_json(&report),
            });
            let text = format!("note: {note}\n{}", text_eig(&report));
            Ok((value, text, 0))
        }
        Err(e) => Err(e),
    }
}

fn run_diag(a: &DCMatrix, tol: &Tol) -> Result<Report, Error> {
    let verdict = eigen::is_diagonalizable(a, tol)?;
    let value = json::diagonalizability_to_json(&verdict);
    match verdict {
        Diagonalizability::Diagonalizable(DiagCertificate { p, d, residual }) => {
            let text = format!(
                "diagonalizable: yes\nP =\n{}D =\n{}residual = {}",
                text_matrix(&p),
                text_matrix(&d),
                fmt_sig(residual)
            );
            Ok((value, text, 0))
        }
        Diagonalizability::NotDiagonalizable { reason } => {
            let text = format!("diagonalizable: no\nreason: {reason}");
            Ok((value, text, 1))
        }
    }
}

fn run_invert(a: &DCMatrix, tol: &Tol) -> Result<Report, Error> {
    let inv = a.inverse(tol)?;
    // The report is the bare matrix wire object, so it can be fed back in.
    let text = format!("inverse =\n{}", text_matrix(&inv));
    Ok((json::matrix_to_json(&inv), text.trim_end().to_string(), 0))
}

fn run_verify(input: &json::VerifyInput, tol: &Tol) -> Result<Report, Error> {
    let ok = dcmx::matrix::verify_eigenpair(&input.matrix, input.lambda, &input.vector, tol)?;
    let text = format!("verified: {}", if ok { "yes" } else { "no" });
    Ok((json::verify_to_json(ok), text, if ok { 0 } else { 1 }))
}

fn run_hermitian(a: &DCMatrix, tol: &Tol) -> Result<Report, Error> {
    match eigen::hermitian_eig(a, tol) {
        Ok(h) => {
            let text = text_hermitian(&h);
            Ok((json::hermitian_to_json(&h), text, 0))
        }
        Err(Error::NotHermitian { deviation }) => {
            let value = jobj!({ "hermitian": false, "deviation": deviation });
            let text = format!(
                "not Hermitian: ‖A − A*‖ = {} exceeds the tolerance",
                fmt_sig(deviation)
            );
            Ok((value, text, 1))
        }
        Err(e) => Err(e),
    }
}

// ---- text rendering ----------------------------------------------------

/// `%g`-style formatting with 6 significant digits.
fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_fixed(&format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.5e}");
        let (mantissa, exponent) = s.split_once('e').expect("e-notation");
        format!("{}e{exponent}", trim_fixed(mantissa))
    }
}

fn trim_fixed(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_sig(z.re)
    } else if z.re == 0.0 {
        format!("{}i", fmt_sig(z.im))
    } else if z.im < 0.0 {
        format!("{}-{}i", fmt_sig(z.re), fmt_sig(-z.im))
    } else {
        format!("{}+{}i", fmt_sig(z.re), fmt_sig(z.im))
    }
}

/// Parenthesizes a complex rendering when it mixes real and imaginary
/// parts, so `(1+2i)·eps` stays unambiguous.
fn fmt_complex_grouped(z: Complex64) -> String {
    let s = fmt_complex(z);
    if z.re != 0.0 && z.im != 0.0 {
        format!("({s})")
    } else {
        s
    }
}

fn fmt_dual_complex(a: DualComplex) -> String {
    format!(
        "{} + {}·eps",
        fmt_complex_grouped(a.std),
        fmt_complex_grouped(a.dual)
    )
}

fn fmt_dual_number(a: DualNumber) -> String {
    format!("{} + {}·eps", fmt_sig(a.std), fmt_sig(a.dual))
}

fn text_vector(v: &DCVector) -> String {
    let entries: Vec<String> = (0..v.dim()).map(|i| fmt_dual_complex(v.get(i))).collect();
    format!("[ {} ]", entries.join(", "))
}

/// Multi-line matrix block, one bracketed row per line, trailing newline.
fn text_matrix(m: &DCMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|c| fmt_dual_complex(m.get(r, c)))
            .collect();
        out.push_str(&format!("  [ {} ]\n", row.join(", ")));
    }
    out
}

fn text_eig(report: &EigenReport) -> String {
    let mut out = format!(
        "classification of a {n}×{n} matrix\nfinite eigenpairs: {} | infinite families: {} | no-eigenvalue verdicts: {}\n",
        report.finite_total(),
        if report.any_infinite() { "yes" } else { "no" },
        if report.any_none() { "yes" } else { "no" },
        n = report.order,
    );
    for entry in &report.entries {
        match &entry.class {
            LambdaClass::Finite { pairs } => {
                out.push_str(&format!("λ_s = {}:\n", fmt_complex(entry.lambda_s)));
                for p in pairs {
                    out.push_str(&format!(
                        "  λ = {}\n  x = {}\n",
                        fmt_dual_complex(p.lambda),
                        text_vector(&p.vector)
                    ));
                }
            }
            LambdaClass::NoEigenvalue { certificate } => {
                out.push_str(&format!(
                    "λ_s = {}: no eigenvalue (inconsistency certificate {})\n",
                    fmt_complex(entry.lambda_s),
                    fmt_sig(*certificate)
                ));
            }
            LambdaClass::InfiniteFamily(family) => {
                out.push_str(&format!(
                    "λ_s = {}: infinitely many eigenvalues (λ_d free)\n  representative λ = {}\n  x = {}\n",
                    fmt_complex(entry.lambda_s),
                    fmt_dual_complex(family.representative.lambda),
                    text_vector(&family.representative.vector)
                ));
            }
        }
    }
    for d in &report.diagnostics {
        out.push_str(&format!("diagnostic: {d}\n"));
    }
    out.pop();
    out
}

fn text_form(form: &DualJordanForm) -> String {
    let mut out = format!("J =\n{}P =\n{}", text_matrix(&form.j), text_matrix(&form.p));
    match &form.blocks {
        JordanBlocks::Blocks(list) => {
            let descs: Vec<String> = list
                .iter()
                .map(|b| {
                    format!(
                        "(λ_s = {}, λ_d = {}, size {})",
                        fmt_complex(b.lambda_s),
                        fmt_complex(b.lambda_d),
                        b.size
                    )
                })
                .collect();
            out.push_str(&format!("blocks: {}\n", descs.join(", ")));
        }
        JordanBlocks::LastRow { lambda_s, entries } => {
            let row: Vec<String> = entries.iter().map(|&z| fmt_complex(z)).collect();
            out.push_str(&format!(
                "last row of J_d (λ_s = {}): [ {} ]\n",
                fmt_complex(*lambda_s),
                row.join(", ")
            ));
        }
    }
    out
}

fn text_hermitian(h: &HermitianEigen) -> String {
    let mut out = String::from("hermitian eigenvalues:\n");
    for (i, e) in h.eigenvalues.iter().enumerate() {
        out.push_str(&format!("  λ_{} = {}\n", i + 1, fmt_dual_number(*e)));
    }
    out.push_str(&format!(
        "positive semidefinite: {}\npositive definite: {}\neigenvectors:\n",
        if h.psd { "yes" } else { "no" },
        if h.pd { "yes" } else { "no" }
    ));
    for (i, v) in h.vectors.iter().enumerate() {
        out.push_str(&format!("  v_{} = {}\n", i + 1, text_vector(v)));
    }
    out.pop();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(1.0), "1");
        assert_eq!(fmt_sig(-1.5), "-1.5");
        assert_eq!(fmt_sig(0.001), "0.001");
        assert_eq!(fmt_sig(1234.5678), "1234.57");
        assert_eq!(fmt_sig(1.23456789e8), "1.23457e8");
        assert_eq!(fmt_sig(1e-5), "1e-5");
        assert_eq!(fmt_sig(2.0_f64.sqrt()), "1.41421");
    }

    #[test]
    fn complex_and_dual_rendering() {
        let z = Complex64::new(1.0, -2.0);
        assert_eq!(fmt_complex(z), "1-2i");
        assert_eq!(fmt_complex(Complex64::new(0.0, 3.0)), "3i");
        let a = DualComplex::new(Complex64::new(1.0, 2.0), Complex64::new(0.0, 1.0));
        assert_eq!(fmt_dual_complex(a), "(1+2i) + 1i·eps");
        let b = DualComplex::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
        assert_eq!(fmt_dual_complex(b), "1 + 1·eps");
    }
}

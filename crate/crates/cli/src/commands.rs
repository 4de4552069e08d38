//! Command bodies. Each returns the text for stdout and whether the command succeeded.

use std::fs;
use std::path::Path;

use serde::Serialize;

use hsvd::hsvd::{analyze, hsvd_left, hsvd_right, HsvdFactors, Orientation};
use hsvd::signature::cond_scale;
use hsvd::verify::{synth_case, SynthSpec};
use hsvd::{check_factors, Matrix, RealScalar, Scalar, Signature, ToleranceConfig, VerifyReport};
use num_complex::Complex64;

use crate::error::CliError;
use crate::factors_file::FactorsFile;
use crate::mm::{read_matrix_market, write_matrix_market, MmMatrix};

#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}

pub fn load_matrix(path: &Path) -> Result<MmMatrix, CliError> {
    read_matrix_market(&read(path)?, &path.display().to_string())
}

#[derive(Serialize)]
struct InvariantsOut {
    j: usize,
    l: usize,
    t: usize,
    k: usize,
    s: usize,
    rank: usize,
    eigenvalues: Vec<f64>,
}

fn invariants_of<T: Scalar>(
    b: &Matrix<T>,
    sig: Signature,
    tol: &ToleranceConfig,
) -> Result<InvariantsOut, CliError> {
    let an = analyze(b, sig, tol)?;
    let inv = an.invariants;
    Ok(InvariantsOut {
        j: inv.j,
        l: inv.l,
        t: inv.t,
        k: inv.k,
        s: inv.s,
        rank: inv.rank,
        eigenvalues: an.eigenvalues.iter().map(|v| v.as_f64()).collect(),
    })
}

/// Invariants of `B` (rows = p + q) and the spectrum of `B^H J B`.
pub fn invariants(
    matrix: &Path,
    p: usize,
    q: usize,
    tol: &ToleranceConfig,
    json: bool,
) -> Result<Outcome, CliError> {
    let sig = Signature::new(p, q)?;
    let out = match load_matrix(matrix)? {
        MmMatrix::Real(b) => invariants_of(&b, sig, tol)?,
        MmMatrix::Complex(b) => invariants_of(&b, sig, tol)?,
    };
    let stdout = if json {
        serde_json::to_string_pretty(&out).expect("plain data serializes") + "\n"
    } else {
        let eig: Vec<String> = out
            .eigenvalues
            .iter()
            .map(|v| format!("{v:.16e}"))
            .collect();
        format!(
            "j={} l={} t={} k={} s={} rank={}\neigenvalues: {}\n",
            out.j,
            out.l,
            out.t,
            out.k,
            out.s,
            out.rank,
            eig.join(" ")
        )
    };
    Ok(Outcome {
        stdout,
        success: true,
    })
}

fn residual_bound<T: Scalar>(input: &Matrix<T>, f: &HsvdFactors<T>, tol: &ToleranceConfig) -> f64 {
    tol.residual_tol * (1.0 + input.frobenius_norm().as_f64()) * cond_scale(&f.v).as_f64()
}

fn decompose_with<T: Scalar>(
    input: &Matrix<T>,
    sig: Signature,
    side: Orientation,
    tol: &ToleranceConfig,
) -> Result<(FactorsFile, f64), CliError> {
    let f = match side {
        Orientation::Right => hsvd_right(input, sig, tol)?,
        Orientation::Left => hsvd_left(input, sig, tol)?,
    };
    Ok((
        FactorsFile::from_factors(&f),
        residual_bound(input, &f, tol),
    ))
}

/// Decomposes the matrix and writes a factors file.
pub fn decompose(
    matrix: &Path,
    p: usize,
    q: usize,
    side: Orientation,
    out: &Path,
    tol: &ToleranceConfig,
) -> Result<Outcome, CliError> {
    tol.validate()?;
    let sig = Signature::new(p, q)?;
    let (file, bound) = match load_matrix(matrix)? {
        MmMatrix::Real(a) => decompose_with(&a, sig, side, tol)?,
        MmMatrix::Complex(a) => decompose_with(&a, sig, side, tol)?,
    };
    write(out, &(file.to_json() + "\n"))?;
    let ok = file.residual <= bound;
    let inv = file.invariants;
    let stdout = format!(
        "side={} j={} l={} t={} k={} s={}\nresidual={:.3e} bound={:.3e} {}\n",
        side.as_str(),
        inv.j,
        inv.l,
        inv.t,
        inv.k,
        inv.s,
        file.residual,
        bound,
        if ok { "ok" } else { "FAILED" }
    );
    Ok(Outcome {
        stdout,
        success: ok,
    })
}

#[derive(Serialize)]
struct VerifyOut {
    pass: bool,
    stored_residual: f64,
    #[serde(flatten)]
    report: VerifyReport,
}

fn verify_with<T: Scalar>(
    a: &Matrix<T>,
    file: &FactorsFile,
    path: &str,
    tol: &ToleranceConfig,
) -> Result<VerifyReport, CliError> {
    let f: HsvdFactors<T> = file.to_factors(path)?;
    Ok(check_factors(a, file.signature()?, &f, tol)?)
}

/// Checks a factors file against a matrix. Tolerances come from the file
/// unless `residual_tol` overrides the acceptance threshold.
pub fn verify(
    matrix: &Path,
    factors: &Path,
    residual_tol: Option<f64>,
) -> Result<Outcome, CliError> {
    let a = load_matrix(matrix)?;
    let fpath = factors.display().to_string();
    let file = FactorsFile::from_json(&read(factors)?, &fpath)?;
    let mut tol = file.tolerances;
    if let Some(r) = residual_tol {
        tol = tol.with_residual_tol(r);
    }
    tol.validate()?;
    let report = match (&a, file.is_complex()) {
        (MmMatrix::Real(a), false) => verify_with(a, &file, &fpath, &tol)?,
        _ => verify_with(&a.to_complex(), &file, &fpath, &tol)?,
    };
    let pass = report.passes(&tol);
    let out = VerifyOut {
        pass,
        stored_residual: file.residual,
        report,
    };
    Ok(Outcome {
        stdout: serde_json::to_string_pretty(&out).expect("plain data serializes") + "\n",
        success: pass,
    })
}

pub struct SynthArgs {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub j: usize,
    pub l: usize,
    pub t: usize,
    pub seed: u64,
    pub rapidity: f64,
    pub complex: bool,
}

/// Writes a synthetic matrix with prescribed invariants and its ground-truth factors.
pub fn synth(args: &SynthArgs, out_matrix: &Path, out_factors: &Path) -> Result<Outcome, CliError> {
    let sig = Signature::new(args.p, args.q)?;
    if !(args.rapidity >= 0.0 && args.rapidity.is_finite()) {
        return Err(hsvd::HsvdError::Infeasible(format!(
            "rapidity {} must be finite and non-negative",
            args.rapidity
        ))
        .into());
    }
    let spec = SynthSpec::sampled(
        sig,
        args.n,
        (args.j, args.l, args.t),
        args.seed,
        args.rapidity,
    )?;
    let (matrix, file) = if args.complex {
        let (b, truth) = synth_case::<Complex64>(&spec)?;
        (MmMatrix::Complex(b), FactorsFile::from_factors(&truth))
    } else {
        let (b, truth) = synth_case::<f64>(&spec)?;
        (MmMatrix::Real(b), FactorsFile::from_factors(&truth))
    };
    write(out_matrix, &write_matrix_market(&matrix))?;
    write(out_factors, &(file.to_json() + "\n"))?;
    let vals = |v: &[f64]| {
        v.iter()
            .map(|x| format!("{x:.6}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(Outcome {
        stdout: format!(
            "wrote {} ({}x{}) and {}\npos_values: {}\nneg_values: {}\n",
            out_matrix.display(),
            sig.m(),
            args.n,
            out_factors.display(),
            vals(&spec.pos_values),
            vals(&spec.neg_values)
        ),
        success: true,
    })
}

//! JSON representation of computed factors.

use serde::{Deserialize, Serialize};

use hsvd::hsvd::{HsvdFactors, HsvdInvariants, Orientation, SigmaForm};
use hsvd::{Matrix, RealScalar, Scalar, Signature, ToleranceConfig};

use crate::error::CliError;

pub const SCHEMA: &str = "hsvd-factors/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileInvariants {
    pub j: usize,
    pub l: usize,
    pub t: usize,
    pub k: usize,
    pub s: usize,
}

/// Row-major entries; complex values are `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entries {
    Real(Vec<Vec<f64>>),
    Complex(Vec<Vec<[f64; 2]>>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorsFile {
    pub schema: String,
    pub scalar: String,
    pub orientation: Orientation,
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub n: usize,
    pub invariants: FileInvariants,
    pub pos_values: Vec<f64>,
    pub neg_values: Vec<f64>,
    #[serde(rename = "U")]
    pub u: Entries,
    #[serde(rename = "V")]
    pub v: Entries,
    pub residual: f64,
    pub tolerances: ToleranceConfig,
}

fn entries<T: Scalar>(m: &Matrix<T>) -> Entries {
    let rows = 0..m.rows();
    if T::IS_COMPLEX {
        Entries::Complex(
            rows.map(|i| {
                m.row(i)
                    .iter()
                    .map(|z| [z.re().as_f64(), z.im().as_f64()])
                    .collect()
            })
            .collect(),
        )
    } else {
        Entries::Real(
            rows.map(|i| m.row(i).iter().map(|z| z.re().as_f64()).collect())
                .collect(),
        )
    }
}

impl FactorsFile {
    pub fn from_factors<T: Scalar>(f: &HsvdFactors<T>) -> Self {
        let sf = &f.sigma;
        let inv = sf.invariants;
        Self {
            schema: SCHEMA.to_string(),
            scalar: if T::IS_COMPLEX { "complex" } else { "real" }.to_string(),
            orientation: sf.orientation,
            p: sf.signature.p(),
            q: sf.signature.q(),
            m: sf.m(),
            n: sf.n,
            invariants: FileInvariants {
                j: inv.j,
                l: inv.l,
                t: inv.t,
                k: inv.k,
                s: inv.s,
            },
            pos_values: sf.pos_values.iter().map(|v| v.as_f64()).collect(),
            neg_values: sf.neg_values.iter().map(|v| v.as_f64()).collect(),
            u: entries(&f.u),
            v: entries(&f.v),
            residual: f.residual.as_f64(),
            tolerances: f.tolerances,
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self.u, Entries::Complex(_)) || matches!(self.v, Entries::Complex(_))
    }

    pub fn signature(&self) -> Result<Signature, CliError> {
        Ok(Signature::new(self.p, self.q)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("factor files always serialize")
    }

    pub fn from_json(text: &str, path: &str) -> Result<Self, CliError> {
        let f: Self = serde_json::from_str(text).map_err(|e| CliError::Parse {
            path: path.to_string(),
            line: e.line(),
            msg: e.to_string(),
        })?;
        let bad = |msg: String| CliError::BadFile {
            path: path.to_string(),
            msg,
        };
        if f.schema != SCHEMA {
            return Err(bad(format!(
                "unknown schema `{}`, expected `{SCHEMA}`",
                f.schema
            )));
        }
        if f.m != f.p + f.q {
            return Err(bad(format!("m = {} but p + q = {}", f.m, f.p + f.q)));
        }
        Ok(f)
    }

    /// Rebuilds in-memory factors. A real `T` rejects nonzero imaginary parts.
    pub fn to_factors<T: Scalar>(&self, path: &str) -> Result<HsvdFactors<T>, CliError> {
        let bad = |msg: String| CliError::BadFile {
            path: path.to_string(),
            msg,
        };
        let sig = self.signature()?;
        let fi = self.invariants;
        let inv = HsvdInvariants::new(fi.j, fi.l, fi.t, sig).map_err(|e| bad(e.to_string()))?;
        if (inv.k, inv.s) != (fi.k, fi.s) {
            return Err(bad(format!(
                "stored (k, s) = ({}, {}) disagree with (j, l, t), which give ({}, {})",
                fi.k, fi.s, inv.k, inv.s
            )));
        }
        let sigma = SigmaForm {
            orientation: self.orientation,
            signature: sig,
            n: self.n,
            invariants: inv,
            pos_values: self.pos_values.iter().map(|&v| T::Real::lit(v)).collect(),
            neg_values: self.neg_values.iter().map(|&v| T::Real::lit(v)).collect(),
        };
        let matrix = |e: &Entries, name: &str, size: usize| -> Result<Matrix<T>, CliError> {
            let rows: Vec<Vec<(f64, f64)>> = match e {
                Entries::Real(r) => r
                    .iter()
                    .map(|row| row.iter().map(|&x| (x, 0.0)).collect())
                    .collect(),
                Entries::Complex(r) => r
                    .iter()
                    .map(|row| row.iter().map(|&[a, b]| (a, b)).collect())
                    .collect(),
            };
            if rows.len() != size || rows.iter().any(|r| r.len() != size) {
                return Err(bad(format!("{name} must be {size}x{size}")));
            }
            if !T::IS_COMPLEX && rows.iter().flatten().any(|&(_, im)| im != 0.0) {
                return Err(bad(format!("{name} has complex entries")));
            }
            Ok(Matrix::from_fn(size, size, |i, j| {
                let (a, b) = rows[i][j];
                T::from_parts(T::Real::lit(a), T::Real::lit(b))
            }))
        };
        Ok(HsvdFactors {
            u: matrix(&self.u, "U", self.n)?,
            v: matrix(&self.v, "V", self.m)?,
            sigma,
            residual: T::Real::lit(self.residual),
            tolerances: self.tolerances,
        })
    }
}

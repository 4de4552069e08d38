//! Matrix Market reader and writer for dense matrices.
//!
//! Reads `array` and `coordinate` layouts with `real`, `integer`, `complex` or
//! `pattern` fields and `general`, `symmetric`, `hermitian` or
//! `skew-symmetric` symmetry. Writes `array` layout, `general` symmetry.

use std::fmt::Write as _;

use hsvd::Matrix;
use num_complex::Complex64;

use crate::error::CliError;

/// A dense matrix in whichever scalar mode its file declared.
#[derive(Debug, Clone, PartialEq)]
pub enum MmMatrix {
    Real(Matrix<f64>),
    Complex(Matrix<Complex64>),
}

impl MmMatrix {
    pub fn shape(&self) -> (usize, usize) {
        match self {
            MmMatrix::Real(m) => m.shape(),
            MmMatrix::Complex(m) => m.shape(),
        }
    }

    pub fn to_complex(&self) -> Matrix<Complex64> {
        match self {
            MmMatrix::Real(m) => m.cast(),
            MmMatrix::Complex(m) => m.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Field {
    Real,
    Integer,
    Complex,
    Pattern,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Symmetry {
    General,
    Symmetric,
    Hermitian,
    Skew,
}

struct Reader<'a> {
    path: &'a str,
}

impl Reader<'_> {
    fn err(&self, line: usize, msg: impl Into<String>) -> CliError {
        CliError::Parse {
            path: self.path.to_string(),
            line,
            msg: msg.into(),
        }
    }

    fn number(&self, line: usize, tok: &str) -> Result<f64, CliError> {
        tok.parse::<f64>()
            .map_err(|_| self.err(line, format!("invalid number `{tok}`")))
    }

    fn index(&self, line: usize, tok: &str, bound: usize, what: &str) -> Result<usize, CliError> {
        let i: usize = tok
            .parse()
            .map_err(|_| self.err(line, format!("invalid {what} index `{tok}`")))?;
        if i == 0 || i > bound {
            return Err(self.err(line, format!("{what} index {i} outside 1..={bound}")));
        }
        Ok(i - 1)
    }
}

/// Parses Matrix Market text. `path` only labels error messages.
pub fn read_matrix_market(text: &str, path: &str) -> Result<MmMatrix, CliError> {
    let rd = Reader { path };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (hline, header) = lines.next().ok_or_else(|| rd.err(1, "empty file"))?;
    let words: Vec<String> = header
        .split_whitespace()
        .map(|w| w.to_ascii_lowercase())
        .collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" || words[1] != "matrix" {
        return Err(rd.err(
            hline,
            "expected `%%MatrixMarket matrix <format> <field> <symmetry>`",
        ));
    }
    let coordinate = match words[2].as_str() {
        "array" => false,
        "coordinate" => true,
        other => return Err(rd.err(hline, format!("unsupported format `{other}`"))),
    };
    let field = match words[3].as_str() {
        "real" | "double" => Field::Real,
        "integer" => Field::Integer,
        "complex" => Field::Complex,
        "pattern" => Field::Pattern,
        other => return Err(rd.err(hline, format!("unsupported field `{other}`"))),
    };
    let symmetry = match words[4].as_str() {
        "general" => Symmetry::General,
        "symmetric" => Symmetry::Symmetric,
        "hermitian" => Symmetry::Hermitian,
        "skew-symmetric" => Symmetry::Skew,
        other => return Err(rd.err(hline, format!("unsupported symmetry `{other}`"))),
    };
    if field == Field::Pattern && !coordinate {
        return Err(rd.err(hline, "pattern field requires coordinate format"));
    }
    if symmetry == Symmetry::Hermitian && field != Field::Complex {
        return Err(rd.err(hline, "hermitian symmetry requires complex field"));
    }

    let mut body = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });
    let (sline, size) = body
        .next()
        .ok_or_else(|| rd.err(hline + 1, "missing size line"))?;
    let dims: Vec<&str> = size.split_whitespace().collect();
    let want = if coordinate { 3 } else { 2 };
    if dims.len() != want {
        return Err(rd.err(sline, format!("size line needs {want} integers")));
    }
    let parse_dim = |tok: &str| -> Result<usize, CliError> {
        tok.parse()
            .map_err(|_| rd.err(sline, format!("invalid dimension `{tok}`")))
    };
    let (rows, cols) = (parse_dim(dims[0])?, parse_dim(dims[1])?);
    if symmetry != Symmetry::General && rows != cols {
        return Err(rd.err(sline, "symmetric storage requires a square matrix"));
    }

    let per_value = if field == Field::Complex { 2 } else { 1 };
    let mut data = vec![Complex64::new(0.0, 0.0); rows * cols];
    let mut place = |i: usize, j: usize, z: Complex64| {
        data[i * cols + j] = z;
        if i != j {
            match symmetry {
                Symmetry::General => {}
                Symmetry::Symmetric => data[j * cols + i] = z,
                Symmetry::Hermitian => data[j * cols + i] = z.conj(),
                Symmetry::Skew => data[j * cols + i] = -z,
            }
        }
    };
    let value = |line: usize, toks: &[&str]| -> Result<Complex64, CliError> {
        Ok(match field {
            Field::Pattern => Complex64::new(1.0, 0.0),
            Field::Complex => Complex64::new(rd.number(line, toks[0])?, rd.number(line, toks[1])?),
            Field::Integer => {
                let v: i64 = toks[0]
                    .parse()
                    .map_err(|_| rd.err(line, format!("invalid integer `{}`", toks[0])))?;
                Complex64::new(v as f64, 0.0)
            }
            Field::Real => Complex64::new(rd.number(line, toks[0])?, 0.0),
        })
    };

    let mut last_line = sline;
    if coordinate {
        let nnz = parse_dim(dims[2])?;
        let per_line = 2 + if field == Field::Pattern {
            0
        } else {
            per_value
        };
        for k in 0..nnz {
            let (ln, l) = body.next().ok_or_else(|| {
                rd.err(last_line + 1, format!("expected {nnz} entries, found {k}"))
            })?;
            last_line = ln;
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != per_line {
                return Err(rd.err(
                    ln,
                    format!("expected {per_line} fields, found {}", toks.len()),
                ));
            }
            let i = rd.index(ln, toks[0], rows, "row")?;
            let j = rd.index(ln, toks[1], cols, "column")?;
            if symmetry != Symmetry::General && i < j {
                return Err(rd.err(ln, "entry above the diagonal in symmetric storage"));
            }
            if symmetry == Symmetry::Skew && i == j {
                return Err(rd.err(ln, "diagonal entry in skew-symmetric storage"));
            }
            place(i, j, value(ln, &toks[2..])?);
        }
    } else {
        // Column-major; symmetric kinds store the lower triangle only.
        let mut slots = Vec::new();
        for j in 0..cols {
            let start = match symmetry {
                Symmetry::General => 0,
                Symmetry::Skew => j + 1,
                _ => j,
            };
            slots.extend((start..rows).map(|i| (i, j)));
        }
        let total = slots.len();
        for (k, &(i, j)) in slots.iter().enumerate() {
            let (ln, l) = body.next().ok_or_else(|| {
                rd.err(last_line + 1, format!("expected {total} values, found {k}"))
            })?;
            last_line = ln;
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != per_value {
                return Err(rd.err(
                    ln,
                    format!("expected {per_value} fields, found {}", toks.len()),
                ));
            }
            place(i, j, value(ln, &toks)?);
        }
    }
    if let Some((ln, _)) = body.next() {
        return Err(rd.err(ln, "unexpected data after the last entry"));
    }

    let m = Matrix::from_vec(rows, cols, data);
    Ok(if field == Field::Complex {
        MmMatrix::Complex(m)
    } else {
        MmMatrix::Real(Matrix::from_fn(rows, cols, |i, j| m[(i, j)].re))
    })
}

/// Dense `array general` text with 17 significant digits per value.
pub fn write_matrix_market(m: &MmMatrix) -> String {
    let mut out = String::new();
    let (rows, cols) = m.shape();
    let field = match m {
        MmMatrix::Real(_) => "real",
        MmMatrix::Complex(_) => "complex",
    };
    let _ = writeln!(out, "%%MatrixMarket matrix array {field} general");
    let _ = writeln!(out, "{rows} {cols}");
    for j in 0..cols {
        for i in 0..rows {
            let _ = match m {
                MmMatrix::Real(a) => writeln!(out, "{:.16e}", a[(i, j)]),
                MmMatrix::Complex(a) => {
                    writeln!(out, "{:.16e} {:.16e}", a[(i, j)].re, a[(i, j)].im)
                }
            };
        }
    }
    out
}

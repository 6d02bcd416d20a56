//! JSON polynomial files.
//!
//! ```json
//! {"size": 1, "degree": 1, "coefficients": [[[[1, 0]]], [[[1, 0]]]]}
//! ```
//!
//! `coefficients[k]` is the matrix multiplying `λ^(degree − k)`, given row by
//! row, each entry a `[re, im]` pair.

use std::io::Read;
use std::path::Path;

use hankel_hurwitz::{CMat, Complex64, MatrixPolynomial};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialFile {
    pub size: usize,
    pub degree: usize,
    pub coefficients: Vec<Vec<Vec<[f64; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub column_degrees: Option<Vec<usize>>,
}

impl PolynomialFile {
    pub fn from_polynomial(f: &MatrixPolynomial) -> Self {
        let coefficients = f
            .coeffs()
            .iter()
            .map(|a| {
                a.rows()
                    .into_iter()
                    .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
                    .collect()
            })
            .collect();
        PolynomialFile {
            size: f.size(),
            degree: f.nominal_degree(),
            coefficients,
            column_degrees: f.column_degrees_override().map(|c| c.to_vec()),
        }
    }

    pub fn to_polynomial(&self) -> Result<MatrixPolynomial, CliError> {
        let p = self.size;
        if p == 0 {
            return Err(CliError::Shape("size must be at least 1".into()));
        }
        if self.coefficients.len() < self.degree + 1 {
            return Err(CliError::Shape(format!(
                "missing coefficient index {}: degree {} needs {} matrices, found {}",
                self.coefficients.len(),
                self.degree,
                self.degree + 1,
                self.coefficients.len()
            )));
        }
        if self.coefficients.len() > self.degree + 1 {
            return Err(CliError::Shape(format!(
                "degree {} needs {} matrices, found {}",
                self.degree,
                self.degree + 1,
                self.coefficients.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(self.degree + 1);
        for (k, rows) in self.coefficients.iter().enumerate() {
            if rows.len() != p {
                return Err(CliError::Shape(format!(
                    "coefficient index {k} has {} rows, expected {p}",
                    rows.len()
                )));
            }
            let mut a = CMat::zeros((p, p));
            for (i, row) in rows.iter().enumerate() {
                if row.len() != p {
                    return Err(CliError::Shape(format!(
                        "coefficient index {k}, row {i} has {} entries, expected {p}",
                        row.len()
                    )));
                }
                for (j, &[re, im]) in row.iter().enumerate() {
                    if !re.is_finite() || !im.is_finite() {
                        return Err(CliError::Shape(format!(
                            "coefficient index {k}, entry ({i}, {j}) is not finite"
                        )));
                    }
                    a[[i, j]] = Complex64::new(re, im);
                }
            }
            coeffs.push(a);
        }
        let f = MatrixPolynomial::new(coeffs)?;
        match &self.column_degrees {
            Some(cdeg) if cdeg.len() != p => Err(CliError::Shape(format!(
                "column_degrees has {} entries, expected {p}",
                cdeg.len()
            ))),
            Some(cdeg) => Ok(f.with_column_degrees(cdeg.clone())?),
            None => Ok(f),
        }
    }
}

/// Parses a polynomial document from any reader.
pub fn parse_input<R: Read>(reader: R) -> Result<MatrixPolynomial, CliError> {
    let mut de = serde_json::Deserializer::from_reader(reader);
    let file: PolynomialFile = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        CliError::Parse {
            field: describe_path(&field),
            line: inner.line(),
            column: inner.column(),
            message: inner.to_string(),
        }
    })?;
    de.end().map_err(|e| CliError::Parse {
        field: "trailing data".into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_polynomial()
}

/// Parses a polynomial document from a file, or from stdin when `path` is `-`.
pub fn parse_input_path(path: &Path) -> Result<MatrixPolynomial, CliError> {
    if path.as_os_str() == "-" {
        return parse_input(std::io::stdin().lock());
    }
    let file = std::fs::File::open(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_input(std::io::BufReader::new(file))
}

// "coefficients[2][0]" -> "coefficient index 2 (coefficients[2][0])"
fn describe_path(path: &str) -> String {
    if let Some(rest) = path.strip_prefix("coefficients[") {
        if let Some(end) = rest.find(']') {
            return format!("coefficient index {} ({path})", &rest[..end]);
        }
    }
    if path.is_empty() || path == "." {
        "document".into()
    } else {
        path.to_string()
    }
}

//! File formats: plain-text matrices, JSON code descriptors, CSV records.
//!
//! Matrix text: a header line `p nrows ncols` followed by one line of
//! space-separated entries in `[0, p)` per row. Blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use triortho::code::{CodeParams, TriorthogonalCode};
use triortho::field::PrimeModulus;
use triortho::linalg::FpMatrix;
use triortho::overhead::OverheadRecord;

use crate::error::CliError;

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn parse_matrix_text(text: &str) -> Result<FpMatrix, CliError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CliError::Format("empty matrix file".into()))?;
    let dims: Vec<u64> = parse_numbers(header)?;
    let [p, nrows, ncols] = dims[..] else {
        return Err(CliError::Format(format!(
            "header must be `p nrows ncols`, got `{header}`"
        )));
    };
    let p = PrimeModulus::new(p).map_err(|e| CliError::Format(e.to_string()))?;
    let mut rows = Vec::with_capacity(nrows as usize);
    for line in lines {
        let row: Vec<u64> = parse_numbers(line)?;
        if row.len() as u64 != ncols {
            return Err(CliError::Format(format!(
                "row {} has {} entries, expected {ncols}",
                rows.len(),
                row.len()
            )));
        }
        rows.push(checked_row(p, &row)?);
    }
    if rows.len() as u64 != nrows {
        return Err(CliError::Format(format!(
            "expected {nrows} rows, found {}",
            rows.len()
        )));
    }
    FpMatrix::from_rows(p, ncols as usize, &rows).map_err(|e| CliError::Format(e.to_string()))
}

fn parse_numbers(line: &str) -> Result<Vec<u64>, CliError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| CliError::Format(format!("not a non-negative integer: `{t}`")))
        })
        .collect()
}

fn checked_row(p: PrimeModulus, row: &[u64]) -> Result<Vec<u32>, CliError> {
    row.iter()
        .map(|&x| {
            if x < p.as_u64() {
                Ok(x as u32)
            } else {
                Err(CliError::Format(format!("entry {x} not below p = {}", p.get())))
            }
        })
        .collect()
}

pub fn matrix_text(m: &FpMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.modulus().get(), m.nrows(), m.ncols());
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_verified: bool,
}

/// JSON form of a [`TriorthogonalCode`]. `epsilon` is mod `p`, or mod 9 when
/// `p = 3`; `l` is null for codes not built from Reed-Solomon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDescriptor {
    pub p: u32,
    pub l: Option<usize>,
    pub k: usize,
    #[serde(rename = "A")]
    pub puncture: Vec<usize>,
    #[serde(rename = "H0")]
    pub h0: Vec<Vec<u32>>,
    #[serde(rename = "H1")]
    pub h1: Vec<Vec<u32>>,
    #[serde(rename = "G")]
    pub g: Vec<Vec<u32>>,
    pub epsilon: Vec<u64>,
    pub params: DescriptorParams,
}

impl CodeDescriptor {
    pub fn from_code(code: &TriorthogonalCode) -> Self {
        let params = code.params();
        CodeDescriptor {
            p: code.modulus().get(),
            l: code.l(),
            k: code.k(),
            puncture: code.puncture_set().to_vec(),
            h0: code.h0().to_rows(),
            h1: code.h1().to_rows(),
            g: code.g().to_rows(),
            epsilon: code.epsilon().to_vec(),
            params: DescriptorParams {
                n: params.n,
                k: params.k,
                d: params.d,
                d_verified: params.d_verified,
            },
        }
    }

    /// Rebuilds the code exactly as stored. Shapes and entry ranges are
    /// checked; code-theoretic claims are left to the verifier.
    pub fn to_code(&self) -> Result<TriorthogonalCode, CliError> {
        let p = PrimeModulus::new(self.p as u64).map_err(|e| CliError::Format(e.to_string()))?;
        let n = self.params.n;
        let matrix = |name: &str, rows: &[Vec<u32>]| -> Result<FpMatrix, CliError> {
            for (i, r) in rows.iter().enumerate() {
                if r.len() != n {
                    return Err(CliError::Format(format!(
                        "{name} row {i} has {} entries, expected n = {n}",
                        r.len()
                    )));
                }
                checked_row(p, &r.iter().map(|&x| x as u64).collect::<Vec<_>>())
                    .map_err(|e| CliError::Format(format!("{name} row {i}: {e}")))?;
            }
            FpMatrix::from_rows(p, n, rows).map_err(|e| CliError::Format(e.to_string()))
        };
        let h0 = matrix("H0", &self.h0)?;
        let h1 = matrix("H1", &self.h1)?;
        let g = matrix("G", &self.g)?;
        if self.epsilon.len() != h1.nrows() {
            return Err(CliError::Format(format!(
                "{} epsilon values for {} rows of H1",
                self.epsilon.len(),
                h1.nrows()
            )));
        }
        if self.puncture.iter().any(|&a| a >= n + self.puncture.len()) {
            return Err(CliError::Format("puncture position out of range".into()));
        }
        Ok(TriorthogonalCode::from_parts(
            p,
            self.l,
            self.puncture.clone(),
            h0,
            h1,
            g,
            self.epsilon.clone(),
            CodeParams {
                n,
                k: self.params.k,
                d: self.params.d,
                d_verified: self.params.d_verified,
            },
        ))
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        to_sorted_json(self)
    }
}

/// Pretty JSON with object keys in lexicographic order, newline-terminated.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    // serde_json::Value keeps object keys in a BTreeMap.
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

pub const CSV_HEADER: &str = "p,l,k,n,d,gamma";

pub fn records_csv(records: &[OverheadRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        writeln!(out, "{},{},{},{},{},{:.6}", r.p, r.l, r.k, r.n, r.d, r.gamma).expect("string write");
    }
    out
}

/// A short stable identifier for reports.
pub fn code_id(code: &TriorthogonalCode) -> String {
    match code.l() {
        Some(l) => {
            let a: Vec<String> = code.puncture_set().iter().map(usize::to_string).collect();
            format!("p{}-l{}-k{}-A{}", code.modulus().get(), l, code.k(), a.join("_"))
        }
        None => format!("p{}-n{}-k{}", code.modulus().get(), code.n(), code.k()),
    }
}

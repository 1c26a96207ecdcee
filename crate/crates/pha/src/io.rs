//! JSON document formats for algebras, matrices over them, and basis
//! changes, plus the name-or-file resolution used by the CLI.
//!
//! An algebra document carries either the full product matrix or a
//! sparse list of structure constants (1-based indices, as in
//! `c^s_{i,j}`: the coefficient of basis `s` in the product of basis
//! `i` and basis `j`):
//!
//! ```json
//! {"dim": 2, "product_matrix": [["1","0","0","-1"],["0","1","1","0"]]}
//! {"dim": 2, "structure_constants": [{"i":2,"j":2,"s":1,"value":"1"}]}
//! ```
//!
//! Structure-constant documents auto-fill the unit products
//! (1·x = x·1 = x): any product column involving basis 1 that the
//! document leaves entirely unspecified is filled with the identity
//! pattern instead of zeros. Supplying any constant for such a column
//! overrides the whole column (missing rows of it default to 0), so a
//! document can deliberately break the unit law — `verify` will flag
//! the result.

use crate::algebra::{Algebra, HyperNumber};
use crate::error::Error;
use crate::families;
use crate::matrix::Matrix;
use crate::phm::PHMatrix;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::transform::BasisChange;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    product_matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    structure_constants: Option<Vec<ConstantDoc>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantDoc {
    i: usize,
    j: usize,
    s: usize,
    value: String,
}

fn scalar_at(path: String, text: &str) -> Result<Scalar, Error> {
    parse_scalar(text).map_err(|e| match e {
        Error::Parse(msg) => Error::parse(format!("{path}: {msg}")),
        other => other,
    })
}

fn algebra_from_doc(doc: AlgebraDoc) -> Result<Algebra, Error> {
    let k = doc.dim;
    if k == 0 {
        return Err(Error::parse("dim: must be a positive integer"));
    }
    let matrix = match (doc.product_matrix, doc.structure_constants) {
        (Some(rows), None) => {
            if rows.len() != k {
                return Err(Error::parse(format!(
                    "product_matrix: expected {k} rows for dim {k}, found {}",
                    rows.len()
                )));
            }
            let mut m = Matrix::zeros(k, k * k);
            for (r, row) in rows.iter().enumerate() {
                if row.len() != k * k {
                    return Err(Error::parse(format!(
                        "product_matrix[{r}]: expected {} columns for dim {k}, found {}",
                        k * k,
                        row.len()
                    )));
                }
                for (c, cell) in row.iter().enumerate() {
                    m.set(r, c, scalar_at(format!("product_matrix[{r}][{c}]"), cell)?);
                }
            }
            m
        }
        (None, Some(constants)) => {
            let mut m = Matrix::zeros(k, k * k);
            // 0-based column ownership: true once the document has
            // touched the product of basis i and basis j.
            let mut specified = vec![false; k * k];
            let mut seen = std::collections::HashSet::new();
            for (idx, con) in constants.iter().enumerate() {
                for (field, v) in [("i", con.i), ("j", con.j), ("s", con.s)] {
                    if v == 0 || v > k {
                        return Err(Error::parse(format!(
                            "structure_constants[{idx}].{field}: index {v} out of range 1..={k}"
                        )));
                    }
                }
                if !seen.insert((con.i, con.j, con.s)) {
                    return Err(Error::parse(format!(
                        "structure_constants[{idx}]: duplicate entry for (i, j, s) = ({}, {}, {})",
                        con.i, con.j, con.s
                    )));
                }
                let value = scalar_at(format!("structure_constants[{idx}].value"), &con.value)?;
                let col = (con.i - 1) * k + (con.j - 1);
                specified[col] = true;
                m.set(con.s - 1, col, value);
            }
            for i in 0..k {
                for j in 0..k {
                    if i != 0 && j != 0 {
                        continue;
                    }
                    let col = i * k + j;
                    if !specified[col] {
                        // unit product: e_i * e_j = e_{max(i,j)}
                        m.set(i.max(j), col, crate::scalar::int(1));
                    }
                }
            }
            m
        }
        (Some(_), Some(_)) => {
            return Err(Error::parse(
                "document must contain exactly one of product_matrix / structure_constants, found both",
            ))
        }
        (None, None) => {
            return Err(Error::parse(
                "document must contain exactly one of product_matrix / structure_constants, found neither",
            ))
        }
    };
    Algebra::from_product_matrix(matrix, doc.name)
}

pub fn parse_algebra(text: &str) -> Result<Algebra, Error> {
    let doc: AlgebraDoc =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("algebra document: {e}")))?;
    algebra_from_doc(doc)
}

fn doc_from_algebra(a: &Algebra) -> AlgebraDoc {
    let k = a.dim();
    let p = a.product_matrix();
    let rows = (0..k)
        .map(|r| (0..k * k).map(|c| format_scalar(p.at(r, c))).collect())
        .collect();
    AlgebraDoc {
        name: a.name().map(str::to_owned),
        dim: k,
        product_matrix: Some(rows),
        structure_constants: None,
    }
}

/// Canonical form: always the full product matrix, entries as rational
/// strings, two-space indentation.
pub fn serialize_algebra(a: &Algebra) -> String {
    serde_json::to_string_pretty(&doc_from_algebra(a)).expect("document serializes")
}

/// Resolves a CLI algebra argument: catalog name first, then file path.
pub fn load_algebra(arg: &str) -> Result<Algebra, Error> {
    if let Ok(a) = families::builtin(arg) {
        return Ok(a);
    }
    if std::path::Path::new(arg).exists() {
        let text = std::fs::read_to_string(arg)
            .map_err(|e| Error::parse(format!("{arg}: {e}")))?;
        return parse_algebra(&text).map_err(|e| match e {
            Error::Parse(msg) => Error::parse(format!("{arg}: {msg}")),
            other => other,
        });
    }
    Err(Error::parse(format!(
        "unknown algebra '{arg}': not a catalog name (try `catalog list`) and not a readable file"
    )))
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum AlgebraRef {
    Name(String),
    Doc(AlgebraDoc),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhmDoc {
    algebra: AlgebraRef,
    rows: usize,
    cols: usize,
    /// Row-major cells; each cell is the k coordinate strings of one
    /// hypercomplex entry.
    entries: Vec<Vec<String>>,
}

pub fn parse_phm(text: &str) -> Result<PHMatrix, Error> {
    let doc: PhmDoc =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("phm document: {e}")))?;
    let algebra = match doc.algebra {
        AlgebraRef::Name(name) => families::builtin(&name)
            .map_err(|e| Error::parse(format!("algebra: {e}")))?,
        AlgebraRef::Doc(inner) => algebra_from_doc(inner)?,
    };
    let algebra = Arc::new(algebra);
    let k = algebra.dim();
    if doc.rows == 0 || doc.cols == 0 {
        return Err(Error::parse("rows/cols: must be positive"));
    }
    if doc.entries.len() != doc.rows * doc.cols {
        return Err(Error::parse(format!(
            "entries: expected {} cells for a {}x{} matrix, found {}",
            doc.rows * doc.cols,
            doc.rows,
            doc.cols,
            doc.entries.len()
        )));
    }
    let mut data = Vec::with_capacity(doc.entries.len());
    for (idx, cell) in doc.entries.iter().enumerate() {
        if cell.len() != k {
            return Err(Error::parse(format!(
                "entries[{idx}]: expected {k} coordinates, found {}",
                cell.len()
            )));
        }
        let mut coords = Vec::with_capacity(k);
        for (c, text) in cell.iter().enumerate() {
            coords.push(scalar_at(format!("entries[{idx}][{c}]"), text)?);
        }
        data.push(HyperNumber::new(algebra.clone(), coords).expect("length checked"));
    }
    PHMatrix::new(algebra, doc.rows, doc.cols, data)
}

pub fn serialize_phm(m: &PHMatrix) -> String {
    let a = m.algebra();
    // Refer to catalog algebras by name; embed anything else.
    let algebra = match a.name().map(families::builtin) {
        Some(Ok(cat)) if cat == **a => AlgebraRef::Name(a.name().unwrap().to_owned()),
        _ => AlgebraRef::Doc(doc_from_algebra(a)),
    };
    let entries = m
        .entries()
        .iter()
        .map(|x| x.coords().iter().map(format_scalar).collect())
        .collect();
    let doc = PhmDoc { algebra, rows: m.rows(), cols: m.cols(), entries };
    serde_json::to_string_pretty(&doc).expect("document serializes")
}

pub fn load_phm(path: &str) -> Result<PHMatrix, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::parse(format!("{path}: {e}")))?;
    parse_phm(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::parse(format!("{path}: {msg}")),
        other => other,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisChangeDoc {
    matrix: Vec<Vec<String>>,
}

pub fn parse_basis_change(text: &str) -> Result<BasisChange, Error> {
    let doc: BasisChangeDoc = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("basis-change document: {e}")))?;
    let k = doc.matrix.len();
    if k == 0 {
        return Err(Error::parse("matrix: must be non-empty"));
    }
    let mut m = Matrix::zeros(k, k);
    for (r, row) in doc.matrix.iter().enumerate() {
        if row.len() != k {
            return Err(Error::parse(format!(
                "matrix[{r}]: expected {k} columns, found {}",
                row.len()
            )));
        }
        for (c, cell) in row.iter().enumerate() {
            m.set(r, c, scalar_at(format!("matrix[{r}][{c}]"), cell)?);
        }
    }
    BasisChange::new(m)
}

pub fn serialize_basis_change(t: &BasisChange) -> String {
    let m = t.matrix();
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| format_scalar(m.at(r, c))).collect())
        .collect();
    serde_json::to_string_pretty(&BasisChangeDoc { matrix: rows }).expect("document serializes")
}

pub fn load_basis_change(path: &str) -> Result<BasisChange, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::parse(format!("{path}: {e}")))?;
    parse_basis_change(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::parse(format!("{path}: {msg}")),
        other => other,
    })
}

/// Comma-separated rational coordinates: "3,4" or "1/2,-5/3,0".
pub fn parse_point(text: &str) -> Result<Vec<Scalar>, Error> {
    text.split(',')
        .enumerate()
        .map(|(idx, tok)| scalar_at(format!("coordinate {idx}"), tok.trim()))
        .collect()
}

//! `DECOMP v1` decomposition-matrix files.
//!
//! ```text
//! DECOMP v1
//! <group spec>
//! <prime>
//! <sha256 of the canonical table serialization>
//! [<block label per ordinary character, comma separated>]
//! <one row of ℓ non-negative integers per irreducible, canonical order>
//! ```
//!
//! Full-line `#` comments and blank lines are skipped anywhere. The label line
//! is recognised by its commas, so a one-character table cannot carry labels.

use std::path::Path;

use num_traits::Zero;

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::linalg::{cmat_from_q, det_int, inverse_q, matmul_c, qmat_from_ints, transpose, CMatrix};
use crate::perm::FiniteGroup;

pub const HEADER: &str = "DECOMP v1";

/// The file contents, checked for syntax only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionFile {
    pub spec: String,
    pub prime: u64,
    pub table_hash: String,
    pub block_labels: Option<Vec<String>>,
    pub rows: Vec<Vec<i64>>,
}

impl DecompositionFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut next = |what: &str| {
            lines.next().ok_or_else(|| Error::Parse { line: 0, msg: format!("missing {what}") })
        };
        let (n, header) = next("header")?;
        if header != HEADER {
            return Err(Error::Parse { line: n, msg: format!("expected `{HEADER}`, found `{header}`") });
        }
        let spec = next("group spec")?.1.to_string();
        let (n, prime) = next("prime")?;
        let prime: u64 = prime.parse().map_err(|_| Error::Parse { line: n, msg: format!("bad prime `{prime}`") })?;
        let (n, hash) = next("table hash")?;
        if hash.len() != 64 || !hash.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(Error::Parse { line: n, msg: format!("bad table hash `{hash}`") });
        }
        let table_hash = hash.to_ascii_lowercase();
        let mut block_labels = None;
        let mut rows = Vec::new();
        for (n, line) in lines {
            if block_labels.is_none() && rows.is_empty() && line.contains(',') {
                block_labels = Some(line.split(',').map(|s| s.trim().to_string()).collect());
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| Error::Parse { line: n, msg: format!("bad entry `{t}`") }))
                .collect::<Result<Vec<i64>>>()?;
            rows.push(row);
        }
        Ok(DecompositionFile { spec, prime, table_hash, block_labels, rows })
    }

    pub fn render(&self) -> String {
        let mut out = format!("{HEADER}\n{}\n{}\n{}\n", self.spec, self.prime, self.table_hash);
        if let Some(labels) = &self.block_labels {
            out.push_str(&labels.join(","));
            out.push('\n');
        }
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A decomposition matrix checked against a character table.
#[derive(Clone, Debug)]
pub struct DecompositionData {
    pub spec: String,
    pub prime: u64,
    /// Indices of the p-regular classes, in class order; column k of Φ lives here.
    pub regular_classes: Vec<usize>,
    /// `d[χ][j]`, rows in canonical character order.
    pub matrix: Vec<Vec<i64>>,
    /// Block label per ordinary character, when the file supplies them.
    pub block_labels: Option<Vec<String>>,
    /// Brauer characters on the p-regular classes, one row per φ_j.
    pub phi: CMatrix,
}

impl DecompositionData {
    pub fn num_brauer(&self) -> usize {
        self.regular_classes.len()
    }

    /// `C = DᵗD`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let l = self.num_brauer();
        (0..l)
            .map(|i| (0..l).map(|j| self.matrix.iter().map(|r| r[i] * r[j]).sum()).collect())
            .collect()
    }
}

fn reject(msg: impl Into<String>) -> Error {
    Error::Decomposition(msg.into())
}

/// Check a parsed file against the table of `g` and solve for Φ.
pub fn validate(file: DecompositionFile, g: &FiniteGroup, table: &CharacterTable, p: u64) -> Result<DecompositionData> {
    if file.prime != p {
        return Err(reject(format!("file is for p = {}, expected {p}", file.prime)));
    }
    if file.table_hash != table.hash() {
        return Err(reject(format!(
            "table hash {} does not match the canonical table {}",
            file.table_hash,
            table.hash()
        )));
    }
    let regular = g.classes().pi_regular(&[p]);
    let l = regular.len();
    if file.rows.len() != table.len() {
        return Err(reject(format!("{} rows for {} irreducible characters", file.rows.len(), table.len())));
    }
    if let Some(i) = file.rows.iter().position(|r| r.len() != l) {
        return Err(reject(format!("row {i} has {} entries, expected ℓ = {l}", file.rows[i].len())));
    }
    if let Some((i, j)) = find_negative(&file.rows) {
        return Err(reject(format!("negative entry at row {i}, column {j}")));
    }
    if let Some(labels) = &file.block_labels {
        if labels.len() != table.len() {
            return Err(reject(format!("{} block labels for {} characters", labels.len(), table.len())));
        }
    }
    let d = file.rows;
    let cartan: Vec<Vec<i64>> =
        (0..l).map(|i| (0..l).map(|j| d.iter().map(|r| r[i] * r[j]).sum()).collect()).collect();
    if det_int(&cartan).is_zero() {
        return Err(reject("decomposition matrix is not of full column rank"));
    }
    let cinv = inverse_q(&qmat_from_ints(&cartan)).expect("nonzero determinant");
    // restricted ordinary table X, rows = characters, columns = p-regular classes
    let x: CMatrix =
        table.irreducibles().iter().map(|chi| regular.iter().map(|&k| chi.value(k).clone()).collect()).collect();
    let dt = cmat_from_q(&qmat_from_ints(&transpose(&d)));
    let phi = matmul_c(&cmat_from_q(&cinv), &matmul_c(&dt, &x));
    let dmat = cmat_from_q(&qmat_from_ints(&d));
    let residual = matmul_c(&dmat, &phi);
    for (i, (got, want)) in residual.iter().zip(&x).enumerate() {
        if let Some(k) = (0..l).find(|&k| got[k] != want[k]) {
            return Err(reject(format!(
                "X ≠ DΦ: character {i} at class {} has restriction {} but DΦ gives {}",
                regular[k], want[k], got[k]
            )));
        }
    }
    Ok(DecompositionData {
        spec: file.spec,
        prime: p,
        regular_classes: regular,
        matrix: d,
        block_labels: file.block_labels,
        phi,
    })
}

fn find_negative(rows: &[Vec<i64>]) -> Option<(usize, usize)> {
    rows.iter().enumerate().find_map(|(i, r)| r.iter().position(|&v| v < 0).map(|j| (i, j)))
}

pub fn load_decomposition(path: &Path, g: &FiniteGroup, table: &CharacterTable, p: u64) -> Result<DecompositionData> {
    let text = std::fs::read_to_string(path)?;
    validate(DecompositionFile::parse(&text)?, g, table, p)
}

/// The data for `p ∤ |G|`: D is the identity and Φ the whole table.
pub fn trivial_decomposition(g: &FiniteGroup, table: &CharacterTable, p: u64) -> Result<DecompositionData> {
    let n = table.len();
    let rows = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let file = DecompositionFile {
        spec: g.label().unwrap_or("").to_string(),
        prime: p,
        table_hash: table.hash().to_string(),
        block_labels: None,
        rows,
    };
    validate(file, g, table, p)
}

//! Latin squares, orthogonality, and mutually orthogonal pairs.
//!
//! Symbols are `1..=d` everywhere in this module, matching the text format.

mod search;

pub use search::{mols_search, SearchOutcome, SearchStats, DEFAULT_NODE_BUDGET};

use std::fmt;

use crate::error::{Error, Result};

/// A validated `d × d` Latin square over the symbols `1..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<usize>,
}

impl LatinSquare {
    /// Validates `rows` and wraps them. Fails with a format error if the array
    /// is not square, a symbol is out of range, or a row/column repeats a symbol.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if !is_latin(&rows)? {
            return Err(Error::format(0, "rows and columns are not all permutations of 1..d"));
        }
        let order = rows.len();
        Ok(Self {
            order,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a square from a cell function `f(j, k)` with 0-based row and column.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows = (0..order)
            .map(|j| (0..order).map(|k| f(j, k)).collect())
            .collect();
        Self::new(rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Symbol at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[usize] {
        &self.cells[row * self.order..(row + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn to_text(&self) -> String {
        write_square(self)
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_square(self))
    }
}

/// True iff every row and every column of `cells` is a permutation of `1..=d`.
///
/// A non-square array or a symbol outside `1..=d` is a format error rather
/// than `false`.
pub fn is_latin(cells: &[Vec<usize>]) -> Result<bool> {
    let d = cells.len();
    if d == 0 {
        return Err(Error::format(0, "empty array"));
    }
    for (r, row) in cells.iter().enumerate() {
        if row.len() != d {
            return Err(Error::format(
                r + 1,
                format!("row has {} entries, expected {d}", row.len()),
            ));
        }
        if let Some(&s) = row.iter().find(|&&s| s == 0 || s > d) {
            return Err(Error::format(r + 1, format!("symbol {s} out of range 1..={d}")));
        }
    }
    let mut seen = vec![false; d + 1];
    for row in cells {
        seen.fill(false);
        for &s in row {
            if std::mem::replace(&mut seen[s], true) {
                return Ok(false);
            }
        }
    }
    for c in 0..d {
        seen.fill(false);
        for row in cells {
            if std::mem::replace(&mut seen[row[c]], true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Orthogonality test: the `d²` superposed pairs `(V_jk, W_jk)` are all distinct.
pub fn are_orthogonal(v: &LatinSquare, w: &LatinSquare) -> Result<bool> {
    if v.order != w.order {
        return Err(Error::Argument(format!(
            "orders differ: {} vs {}",
            v.order, w.order
        )));
    }
    let d = v.order;
    let mut seen = vec![false; d * d];
    for (&a, &b) in v.cells.iter().zip(&w.cells) {
        if std::mem::replace(&mut seen[(a - 1) * d + (b - 1)], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A pair of Latin squares of equal order, optionally certified orthogonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolsPair {
    first: LatinSquare,
    second: LatinSquare,
    certified: bool,
}

impl MolsPair {
    /// Runs [`are_orthogonal`] and returns a certified pair, or
    /// [`Error::CertificationRequired`] if the squares are not orthogonal.
    pub fn certify(first: LatinSquare, second: LatinSquare) -> Result<Self> {
        if !are_orthogonal(&first, &second)? {
            return Err(Error::CertificationRequired);
        }
        Ok(Self {
            first,
            second,
            certified: true,
        })
    }

    /// Pairs two squares without checking orthogonality. `certified` is false.
    pub fn uncertified(first: LatinSquare, second: LatinSquare) -> Result<Self> {
        if first.order != second.order {
            return Err(Error::Argument(format!(
                "orders differ: {} vs {}",
                first.order, second.order
            )));
        }
        Ok(Self {
            first,
            second,
            certified: false,
        })
    }

    pub fn first(&self) -> &LatinSquare {
        &self.first
    }

    pub fn second(&self) -> &LatinSquare {
        &self.second
    }

    pub fn order(&self) -> usize {
        self.first.order
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }
}

/// `n mod d` with the representative taken in `1..=d`.
pub fn mod_one_based(n: i64, d: usize) -> usize {
    let d = d as i64;
    ((n - 1).rem_euclid(d) + 1) as usize
}

/// The circulant pair for odd `d ≥ 3`: `v_jk = k − j + 1 mod d`, `w_jk = j + k − 1 mod d`
/// (1-based `j`, `k`, representatives in `1..=d`).
///
/// Orthogonality holds because `k ↦ 2k − l` is a bijection mod `d` when `d` is odd.
pub fn cyclic_pair(d: usize) -> Result<MolsPair> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(Error::UnsupportedOrder {
            order: d,
            msg: "the cyclic construction needs an odd order >= 3".into(),
        });
    }
    let v = LatinSquare::from_fn(d, |j, k| mod_one_based(k as i64 - j as i64 + 1, d))?;
    let w = LatinSquare::from_fn(d, |j, k| mod_one_based(j as i64 + k as i64 + 1, d))?;
    MolsPair::certify(v, w)
}

/// Parses `d` lines of `d` whitespace-separated symbols in `1..=d`.
///
/// Blank lines are ignored. Errors carry the 1-based line number.
pub fn read_square(text: &str) -> Result<LatinSquare> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::format(i + 1, format!("not a positive integer: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push((i + 1, row));
    }
    let d = rows.len();
    if d == 0 {
        return Err(Error::format(1, "no rows"));
    }
    for (line, row) in &rows {
        if row.len() != d {
            return Err(Error::format(
                *line,
                format!("expected {d} symbols, found {}", row.len()),
            ));
        }
        if let Some(&s) = row.iter().find(|&&s| s == 0 || s > d) {
            return Err(Error::format(*line, format!("symbol {s} out of range 1..={d}")));
        }
    }
    let cells: Vec<Vec<usize>> = rows.into_iter().map(|(_, r)| r).collect();
    if !is_latin(&cells)? {
        return Err(Error::format(0, "not a Latin square (a row or column repeats a symbol)"));
    }
    LatinSquare::new(cells)
}

/// Rows in order, single spaces, one trailing newline per row.
pub fn write_square(square: &LatinSquare) -> String {
    let mut out = String::new();
    for r in 0..square.order {
        let line: Vec<String> = square.row(r).iter().map(|s| s.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

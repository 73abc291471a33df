//! `N × q` arrays of ±1 stored column-wise as packed bit vectors.
//!
//! Bit set means −1. Schur products of columns are XORs and the column mean
//! of a product is `(N − 2·popcount)/N`.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::z4::Z4Vector;

/// How rows are labelled by Z4 vectors `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowIndex {
    /// Rows carry no Z4 label.
    Plain,
    /// All `4ⁿ` vectors `u` in lexicographic order.
    Full { n: usize },
    /// The `2^{2n−1}` vectors with `uₙ ∈ {0, 1}`, lexicographic order.
    Half { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignMatrix {
    runs: usize,
    factors: usize,
    words: usize,
    bits: Vec<u64>,
    row_index: RowIndex,
    group_invariant: bool,
}

impl SignMatrix {
    /// An all-ones matrix.
    pub fn ones(runs: usize, factors: usize) -> Self {
        let words = runs.div_ceil(64);
        SignMatrix {
            runs,
            factors,
            words,
            bits: vec![0; words * factors],
            row_index: RowIndex::Plain,
            group_invariant: false,
        }
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let factors = rows.first().map_or(0, Vec::len);
        let mut m = SignMatrix::ones(rows.len(), factors);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != factors {
                return Err(Error::Parse {
                    line: r as u64 + 1,
                    message: format!("expected {factors} entries, found {}", row.len()),
                });
            }
            for (c, &x) in row.iter().enumerate() {
                match x {
                    1 => {}
                    -1 => m.set_minus(r, c),
                    _ => {
                        return Err(Error::Parse { line: r as u64 + 1, message: format!("entry {x} is not +1 or -1") })
                    }
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn with_row_index(mut self, row_index: RowIndex, group_invariant: bool) -> Self {
        self.row_index = row_index;
        self.group_invariant = group_invariant;
        self
    }

    pub fn runs(&self) -> usize {
        self.runs
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn row_index(&self) -> RowIndex {
        self.row_index
    }

    /// True when the design is known by construction to satisfy
    /// `θ′_u θ_w = σ_{u−w}`.
    pub fn is_known_group_invariant(&self) -> bool {
        self.group_invariant
    }

    #[inline]
    pub(crate) fn set_minus(&mut self, row: usize, col: usize) {
        self.bits[col * self.words + row / 64] |= 1u64 << (row % 64);
    }

    /// Packed sign bits of column `col`.
    #[inline]
    pub fn column_bits(&self, col: usize) -> &[u64] {
        &self.bits[col * self.words..(col + 1) * self.words]
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        if self.column_bits(col)[row / 64] >> (row % 64) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn row(&self, row: usize) -> Vec<i8> {
        (0..self.factors).map(|c| self.get(row, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        (0..self.runs).map(|r| self.row(r)).collect()
    }

    /// Row position of the run labelled `u`, if the matrix is Z4-indexed.
    pub fn row_of(&self, u: &Z4Vector) -> Option<usize> {
        match self.row_index {
            RowIndex::Plain => None,
            RowIndex::Full { n } => (u.len() == n).then(|| u.index()),
            RowIndex::Half { n } => (u.len() == n && u.last() < 2).then(|| (u.index() / 4) * 2 + u.last() as usize),
        }
    }

    /// Z4 label of row `row`, if the matrix is Z4-indexed.
    pub fn row_label(&self, row: usize) -> Option<Z4Vector> {
        match self.row_index {
            RowIndex::Plain => None,
            RowIndex::Full { n } => Some(Z4Vector::from_index(n, row)),
            RowIndex::Half { n } => Some(Z4Vector::from_index(n, (row / 2) * 4 + row % 2)),
        }
    }

    /// Number of −1 entries in each row.
    pub fn row_weights(&self) -> Vec<usize> {
        let mut w = vec![0usize; self.runs];
        for c in 0..self.factors {
            for (wi, &word) in self.column_bits(c).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let t = bits.trailing_zeros() as usize;
                    w[wi * 64 + t] += 1;
                    bits &= bits - 1;
                }
            }
        }
        w
    }

    /// Row-major packed copy: `factors.div_ceil(64)` words per row.
    pub(crate) fn row_packed(&self) -> (usize, Vec<u64>) {
        let rw = self.factors.div_ceil(64);
        let mut out = vec![0u64; rw * self.runs];
        for c in 0..self.factors {
            for (wi, &word) in self.column_bits(c).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let r = wi * 64 + bits.trailing_zeros() as usize;
                    out[r * rw + c / 64] |= 1u64 << (c % 64);
                    bits &= bits - 1;
                }
            }
        }
        (rw, out)
    }

    /// Keeps the listed rows in the given order.
    pub(crate) fn select_rows(&self, rows: &[usize]) -> SignMatrix {
        let mut out = SignMatrix::ones(rows.len(), self.factors);
        for c in 0..self.factors {
            for (new_r, &old_r) in rows.iter().enumerate() {
                if self.get(old_r, c) == -1 {
                    out.set_minus(new_r, c);
                }
            }
        }
        out
    }

    /// Keeps the listed columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> SignMatrix {
        let mut out = SignMatrix::ones(self.runs, cols.len());
        for (new_c, &old_c) in cols.iter().enumerate() {
            out.bits[new_c * self.words..(new_c + 1) * self.words].copy_from_slice(self.column_bits(old_c));
        }
        out
    }

    /// Writes one run per line, entries `1`/`-1` separated by commas.
    pub fn write_csv<W: Write>(&self, out: W, header: bool) -> Result<()> {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
        if header {
            w.write_record((1..=self.factors).map(|c| c.to_string())).map_err(csv_err)?;
        }
        for r in 0..self.runs {
            w.write_record(self.row(r).iter().map(|x| x.to_string())).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Reads a comma-separated ±1 matrix. A first line of bare factor
    /// indices (as written with `header = true`) is skipped.
    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut rdr =
            csv::ReaderBuilder::new().has_headers(false).flexible(true).trim(csv::Trim::All).from_reader(input);
        let mut rows: Vec<Vec<i8>> = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| Error::Parse {
                line: e.position().map_or(i as u64 + 1, |p| p.line()),
                message: e.to_string(),
            })?;
            let line = rec.position().map_or(i as u64 + 1, |p| p.line());
            if rec.iter().all(str::is_empty) {
                continue;
            }
            if i == 0 && rec.iter().enumerate().all(|(j, f)| f == (j + 1).to_string()) && rec.len() > 1 {
                continue;
            }
            let row = rec
                .iter()
                .map(|f| match f {
                    "1" | "+1" => Ok(1i8),
                    "-1" => Ok(-1i8),
                    other => Err(Error::Parse { line, message: format!("entry {other:?} is not +1 or -1") }),
                })
                .collect::<Result<Vec<i8>>>()?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected {} entries, found {}", first.len(), row.len()),
                    });
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse { line: 1, message: "no rows".into() });
        }
        SignMatrix::from_rows(&rows)
    }
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Parse { line: 0, message: format!("{other:?}") },
    }
}

/// The full `2^k` factorial in ±1 coding, rows in binary counting order
/// (first factor slowest).
pub fn full_factorial(k: usize) -> SignMatrix {
    let runs = 1usize << k;
    let mut m = SignMatrix::ones(runs, k);
    for r in 0..runs {
        for c in 0..k {
            if (r >> (k - 1 - c)) & 1 == 1 {
                m.set_minus(r, c);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_round_trip() {
        let rows = vec![vec![1, -1, 1], vec![-1, -1, 1]];
        let m = SignMatrix::from_rows(&rows).unwrap();
        assert_eq!(m.to_rows(), rows);
        assert_eq!(m.row_weights(), vec![1, 2]);
        assert!(SignMatrix::from_rows(&[vec![1, 0]]).is_err());
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let m = full_factorial(3);
        for header in [false, true] {
            let mut buf = Vec::new();
            m.write_csv(&mut buf, header).unwrap();
            let back = SignMatrix::read_csv(buf.as_slice()).unwrap();
            assert_eq!(back.to_rows(), m.to_rows());
        }
        let err = SignMatrix::read_csv("1,1\n1,-1\n1,2\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = SignMatrix::read_csv("1,1\n1\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn row_packing_matches_get() {
        let m = full_factorial(7);
        let (rw, packed) = m.row_packed();
        for r in 0..m.runs() {
            for c in 0..m.factors() {
                let bit = packed[r * rw + c / 64] >> (c % 64) & 1;
                assert_eq!(bit == 1, m.get(r, c) == -1);
            }
        }
    }

    #[test]
    fn half_row_labels() {
        let m = SignMatrix::ones(8, 1).with_row_index(RowIndex::Half { n: 2 }, true);
        for r in 0..8 {
            let u = m.row_label(r).unwrap();
            assert!(u.last() < 2);
            assert_eq!(m.row_of(&u), Some(r));
        }
        assert_eq!(m.row_of(&"02".parse().unwrap()), None);
    }
}

use std::fmt;

use super::BitVector;
use crate::error::{dim, Error, Result};

/// Sparse binary matrix stored as sorted row and column supports.
///
/// Duplicate insertions are rejected rather than cancelled; see
/// [`SparseGf2Matrix::from_entries`].
#[derive(Clone, PartialEq, Eq)]
pub struct SparseGf2Matrix {
    rows: usize,
    cols: usize,
    row_support: Vec<Vec<usize>>,
    col_support: Vec<Vec<usize>>,
}

impl SparseGf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            row_support: vec![Vec::new(); rows],
            col_support: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            row_support: (0..n).map(|i| vec![i]).collect(),
            col_support: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// Builds a matrix from `(row, col)` positions of its ones.
    ///
    /// A position given twice is an error: silently XOR-cancelling it would
    /// hide construction bugs.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut row_support = vec![Vec::new(); rows];
        for (r, c) in entries {
            if r >= rows || c >= cols {
                return Err(dim(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            row_support[r].push(c);
        }
        for (r, support) in row_support.iter_mut().enumerate() {
            support.sort_unstable();
            if let Some(w) = support.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEntry { row: r, col: w[0] });
            }
        }
        Ok(Self::from_row_support(cols, row_support))
    }

    /// Builds from dense rows, e.g. parsed from `"1101"` strings.
    pub fn from_rows(cols: usize, rows: &[BitVector]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(dim(format!("row of length {} in a {cols}-column matrix", bad.len())));
        }
        Ok(Self::from_row_support(
            cols,
            rows.iter().map(|r| r.ones().collect()).collect(),
        ))
    }

    /// Test and fixture helper: one `0`/`1` string per row.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|s| s.parse::<BitVector>())
            .collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(cols, &parsed)
    }

    /// Rows must already be sorted and duplicate-free.
    fn from_row_support(cols: usize, row_support: Vec<Vec<usize>>) -> Self {
        let mut col_support = vec![Vec::new(); cols];
        for (r, support) in row_support.iter().enumerate() {
            for &c in support {
                col_support[c].push(r);
            }
        }
        Self {
            rows: row_support.len(),
            cols,
            row_support,
            col_support,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of non-zero entries.
    pub fn nnz(&self) -> usize {
        self.row_support.iter().map(Vec::len).sum()
    }

    /// Column indices of the ones in row `r`, ascending.
    #[inline]
    pub fn row(&self, r: usize) -> &[usize] {
        &self.row_support[r]
    }

    /// Row indices of the ones in column `c`, ascending.
    #[inline]
    pub fn col(&self, c: usize) -> &[usize] {
        &self.col_support[c]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row_support[r].binary_search(&c).is_ok()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.row_support
            .iter()
            .enumerate()
            .flat_map(|(r, s)| s.iter().map(move |&c| (r, c)))
    }

    pub fn row_degrees(&self) -> Vec<usize> {
        self.row_support.iter().map(Vec::len).collect()
    }

    pub fn col_degrees(&self) -> Vec<usize> {
        self.col_support.iter().map(Vec::len).collect()
    }

    /// True when every column has weight `wc` and every row weight `wr`.
    pub fn is_regular(&self, wc: usize, wr: usize) -> bool {
        self.col_support.iter().all(|c| c.len() == wc)
            && self.row_support.iter().all(|r| r.len() == wr)
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            row_support: self.col_support.clone(),
            col_support: self.row_support.clone(),
        }
    }

    /// `M·v` over GF(2); for a parity-check matrix this is the syndrome.
    pub fn mat_vec_mul(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(dim(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(BitVector::from_bools(
            self.row_support.iter().map(|s| v.parity_of(s)),
        ))
    }

    /// Entry-wise modulo-2 sum (symmetric difference of supports).
    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(dim(format!(
                "xor of {}x{} and {}x{} matrices",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let row_support = self
            .row_support
            .iter()
            .zip(&other.row_support)
            .map(|(a, b)| symmetric_difference(a, b))
            .collect();
        Ok(Self::from_row_support(self.cols, row_support))
    }

    /// Dense copy, one packed vector per row.
    pub fn to_dense_rows(&self) -> Vec<BitVector> {
        self.row_support
            .iter()
            .map(|s| {
                let mut v = BitVector::zeros(self.cols);
                for &c in s {
                    v.set(c, true);
                }
                v
            })
            .collect()
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl fmt::Debug for SparseGf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseGf2Matrix {}x{} (nnz {})", self.rows, self.cols, self.nnz())?;
        if self.rows <= 32 && self.cols <= 64 {
            for row in self.to_dense_rows() {
                writeln!(f, "  {row}")?;
            }
        }
        Ok(())
    }
}

/// Assembles a matrix from sub-blocks placed at row/column offsets.
///
/// Overlapping ones between blocks are rejected like any other duplicate.
#[derive(Debug)]
pub struct BlockBuilder {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize)>,
}

impl BlockBuilder {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn place(mut self, row_offset: usize, col_offset: usize, block: &SparseGf2Matrix) -> Result<Self> {
        if row_offset + block.rows > self.rows || col_offset + block.cols > self.cols {
            return Err(dim(format!(
                "{}x{} block at ({row_offset}, {col_offset}) overflows {}x{} matrix",
                block.rows, block.cols, self.rows, self.cols
            )));
        }
        self.entries
            .extend(block.entries().map(|(r, c)| (r + row_offset, c + col_offset)));
        Ok(self)
    }

    pub fn build(self) -> Result<SparseGf2Matrix> {
        SparseGf2Matrix::from_entries(self.rows, self.cols, self.entries)
    }
}

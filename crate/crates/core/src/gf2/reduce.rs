use super::{BitVector, SparseGf2Matrix};
use crate::error::{Error, Result};

/// Reduced row-echelon form of a binary matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Same shape as the input; the `rank` non-zero rows come first.
    pub reduced: SparseGf2Matrix,
    pub rank: usize,
    /// Pivot column of each non-zero row of `reduced`.
    pub pivot_cols: Vec<usize>,
}

/// Gauss-Jordan elimination over GF(2).
pub fn gauss_jordan(m: &SparseGf2Matrix) -> Reduction {
    let mut rows = m.to_dense_rows();
    let pivot_cols = reduce_rows(&mut rows, m.cols());
    let rank = pivot_cols.len();
    Reduction {
        reduced: SparseGf2Matrix::from_rows(m.cols(), &rows)
            .expect("row lengths are preserved by elimination"),
        rank,
        pivot_cols,
    }
}

/// `rank_2(M)`.
pub fn rank(m: &SparseGf2Matrix) -> usize {
    gauss_jordan(m).rank
}

/// In-place RREF on packed rows; returns the pivot columns.
pub(crate) fn reduce_rows(rows: &mut [BitVector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.xor_assign(&pivot).expect("rows share a length");
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Generator matrix plus the systematic mapping recovered during elimination.
///
/// Rows of `matrix` are indexed by message bit; message bit `j` appears
/// verbatim at codeword position `info_positions[j]`. Reordering columns as
/// `info_positions ++ parity_positions` puts the generator in standard form
/// `[I(k) | A]`, but `matrix` itself stays in the original bit order so every
/// encoded word satisfies the original `H`.
#[derive(Debug, Clone)]
pub struct Generator {
    pub matrix: SparseGf2Matrix,
    pub info_positions: Vec<usize>,
    pub parity_positions: Vec<usize>,
}

impl Generator {
    /// Column permutation taking original positions to standard form.
    pub fn column_order(&self) -> Vec<usize> {
        self.info_positions
            .iter()
            .chain(&self.parity_positions)
            .copied()
            .collect()
    }
}

/// Derives a generator with `k = n - rank_2(H)` linearly independent rows
/// satisfying `G·Hᵀ = 0`.
pub fn derive_generator(h: &SparseGf2Matrix) -> Result<Generator> {
    let n = h.cols();
    let mut rows = h.to_dense_rows();
    let pivots = reduce_rows(&mut rows, n);
    if pivots.len() == n {
        return Err(Error::DegenerateCode(n));
    }
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();

    // Free column f contributes to pivot p_i exactly when R[i][f] = 1.
    let entries = free.iter().enumerate().flat_map(|(j, &f)| {
        let rows = &rows;
        std::iter::once((j, f)).chain(
            pivots
                .iter()
                .enumerate()
                .filter(move |&(i, _)| rows[i].get(f))
                .map(move |(_, &p)| (j, p)),
        )
    });
    let matrix = SparseGf2Matrix::from_entries(free.len(), n, entries)?;
    Ok(Generator {
        matrix,
        info_positions: free,
        parity_positions: pivots,
    })
}

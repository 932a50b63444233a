//! Plain-text "alist" matrix format.
//!
//! ```text
//! n m
//! max_col_degree max_row_degree
//! <n column degrees>
//! <m row degrees>
//! <n lines: 1-based row indices of each column>
//! <m lines: 1-based column indices of each row>
//! ```
//!
//! Lines starting with `#` are ignored by the reader, and zero indices (the
//! padding some tools emit for irregular matrices) are skipped. The writer
//! never pads.

use std::fmt::Write as _;

use super::SparseGf2Matrix;
use crate::error::{Error, Result};

pub fn write_alist(m: &SparseGf2Matrix) -> String {
    let mut out = String::new();
    let col_deg = m.col_degrees();
    let row_deg = m.row_degrees();
    let _ = writeln!(out, "{} {}", m.cols(), m.rows());
    let _ = writeln!(
        out,
        "{} {}",
        col_deg.iter().max().copied().unwrap_or(0),
        row_deg.iter().max().copied().unwrap_or(0)
    );
    out.push_str(&join(col_deg.iter().copied()));
    out.push('\n');
    out.push_str(&join(row_deg.iter().copied()));
    out.push('\n');
    for c in 0..m.cols() {
        out.push_str(&join(m.col(c).iter().map(|r| r + 1)));
        out.push('\n');
    }
    for r in 0..m.rows() {
        out.push_str(&join(m.row(r).iter().map(|c| c + 1)));
        out.push('\n');
    }
    out
}

fn join<I: Iterator<Item = usize>>(it: I) -> String {
    it.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn read_alist(text: &str) -> Result<SparseGf2Matrix> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.starts_with('#'));
    let mut next_line = |what: &str| -> Result<Vec<usize>> {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("alist truncated before {what}")))?;
        line.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{what}: bad integer {t:?}: {e}")))
            })
            .collect()
    };

    let header = next_line("dimensions")?;
    let [n, m] = header[..] else {
        return Err(Error::Parse(format!("expected \"n m\", got {header:?}")));
    };
    let _max_degrees = next_line("maximum degrees")?;
    let col_deg = next_line("column degrees")?;
    let row_deg = next_line("row degrees")?;
    if col_deg.len() != n || row_deg.len() != m {
        return Err(Error::Parse(format!(
            "degree lists have {} and {} entries for a {m}x{n} matrix",
            col_deg.len(),
            row_deg.len()
        )));
    }

    let mut entries = Vec::new();
    for (c, &deg) in col_deg.iter().enumerate() {
        let idx: Vec<usize> = next_line("column list")?.into_iter().filter(|&i| i != 0).collect();
        if idx.len() != deg {
            return Err(Error::Parse(format!(
                "column {} lists {} rows, degree says {deg}",
                c + 1,
                idx.len()
            )));
        }
        entries.extend(idx.into_iter().map(|r| (r - 1, c)));
    }
    let matrix = SparseGf2Matrix::from_entries(m, n, entries)?;

    for (r, &deg) in row_deg.iter().enumerate() {
        let idx: Vec<usize> = next_line("row list")?
            .into_iter()
            .filter(|&i| i != 0)
            .map(|c| c - 1)
            .collect();
        if idx.len() != deg || idx != matrix.row(r) {
            return Err(Error::Parse(format!(
                "row {} list disagrees with the column lists",
                r + 1
            )));
        }
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitVector;
    use proptest::prelude::*;

    #[test]
    fn known_layout() {
        let m = SparseGf2Matrix::from_strs(&["110", "011"]).unwrap();
        assert_eq!(write_alist(&m), "3 2\n2 2\n1 2 1\n2 2\n1\n1 2\n2\n1 2\n2 3\n");
    }

    #[test]
    fn reads_padded_and_commented() {
        let text = "# header\n3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n";
        assert_eq!(read_alist(text).unwrap(), SparseGf2Matrix::from_strs(&["110", "011"]).unwrap());
    }

    #[test]
    fn inconsistent_row_list_rejected() {
        let text = "3 2\n2 2\n1 2 1\n2 2\n1\n1 2\n2\n1 3\n2 3\n";
        assert!(matches!(read_alist(text), Err(Error::Parse(_))));
    }

    #[test]
    fn truncated_rejected() {
        assert!(read_alist("3 2\n2 2\n").is_err());
    }

    proptest! {
        #[test]
        fn roundtrip(rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 9), 1..7)) {
            let rows: Vec<_> = rows.into_iter().map(BitVector::from_bools).collect();
            let m = SparseGf2Matrix::from_rows(9, &rows).unwrap();
            prop_assert_eq!(read_alist(&write_alist(&m)).unwrap(), m);
        }
    }
}

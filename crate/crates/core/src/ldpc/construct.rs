//! Random 4-cycle-free code construction.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{LdpcCode, RegularParams};
use crate::error::{Error, Result};
use crate::gf2::SparseGf2Matrix;
use crate::seed::rng_from;

/// Column-level failures tolerated before restarting from scratch.
const MAX_COLUMN_FAILURES: usize = 100;
/// Full restarts (each with a perturbed seed) before giving up.
const MAX_RESTARTS: usize = 20;
/// Random draws per column before it counts as a failure.
const DRAWS_PER_COLUMN: usize = 16;

/// Builds a `(wc, wr)`-regular code of length `n` whose Tanner graph has no
/// 4-cycles.
///
/// Columns are filled left to right. Each column draws `wc` distinct rows,
/// preferring rows with the most remaining capacity, and is rejected if any
/// pair of its rows already appears together in an earlier column. A failed
/// column backtracks over a growing number of earlier columns; after
/// [`MAX_COLUMN_FAILURES`] the whole matrix restarts with a perturbed seed.
pub fn construct_regular(n: usize, wc: usize, wr: usize, seed: u64) -> Result<LdpcCode> {
    if wc < 2 || wr < 2 {
        return Err(Error::Parameter(format!("weights must be >= 2, got ({wc}, {wr})")));
    }
    if n == 0 || !(n * wc).is_multiple_of(wr) {
        return Err(Error::Parameter(format!("n*wc = {} not divisible by wr = {wr}", n * wc)));
    }
    let m = n * wc / wr;
    if wc > m || wr > n {
        return Err(Error::Parameter(format!(
            "column weight {wc} exceeds {m} rows or row weight {wr} exceeds {n} columns"
        )));
    }

    let mut attempts = 0;
    for restart in 0..MAX_RESTARTS as u64 {
        let mut rng = rng_from(&[seed, restart]);
        let (cols, failures) = fill_columns(n, m, wc, wr, &mut rng);
        attempts += failures;
        if let Some(cols) = cols {
            let entries = cols
                .iter()
                .enumerate()
                .flat_map(|(c, rows)| rows.iter().map(move |&r| (r, c)));
            let h = SparseGf2Matrix::from_entries(m, n, entries)?;
            return Ok(LdpcCode::from_parity_check(h)?.with_params(RegularParams { wc, wr, seed }));
        }
    }
    Err(Error::Construction {
        attempts,
        reason: format!("no 4-cycle-free ({wc}, {wr})-regular {m}x{n} matrix found"),
    })
}

struct Fill {
    m: usize,
    capacity: Vec<usize>,
    pair_used: Vec<bool>,
}

impl Fill {
    fn pair(&self, a: usize, b: usize) -> usize {
        a.min(b) * self.m + a.max(b)
    }

    fn commit(&mut self, rows: &[usize], used: bool) {
        for (i, &a) in rows.iter().enumerate() {
            if used {
                self.capacity[a] -= 1;
            } else {
                self.capacity[a] += 1;
            }
            for &b in &rows[i + 1..] {
                let idx = self.pair(a, b);
                self.pair_used[idx] = used;
            }
        }
    }

    fn draw_column<R: Rng>(&self, wc: usize, rng: &mut R) -> Option<Vec<usize>> {
        let mut chosen: Vec<usize> = Vec::with_capacity(wc);
        let mut candidates = Vec::new();
        for _ in 0..wc {
            candidates.clear();
            let mut best = 0;
            for r in 0..self.m {
                let cap = self.capacity[r];
                if cap == 0 || cap < best || chosen.contains(&r) {
                    continue;
                }
                if chosen.iter().any(|&c| self.pair_used[self.pair(r, c)]) {
                    continue;
                }
                if cap > best {
                    best = cap;
                    candidates.clear();
                }
                candidates.push(r);
            }
            chosen.push(*candidates.choose(rng)?);
        }
        chosen.sort_unstable();
        Some(chosen)
    }
}

/// Returns the column supports (or `None`) plus the number of column failures.
fn fill_columns<R: Rng>(
    n: usize,
    m: usize,
    wc: usize,
    wr: usize,
    rng: &mut R,
) -> (Option<Vec<Vec<usize>>>, usize) {
    let mut fill = Fill {
        m,
        capacity: vec![wr; m],
        pair_used: vec![false; m * m],
    };
    let mut cols: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut failures = 0;
    while cols.len() < n {
        match (0..DRAWS_PER_COLUMN).find_map(|_| fill.draw_column(wc, rng)) {
            Some(rows) => {
                fill.commit(&rows, true);
                cols.push(rows);
            }
            None => {
                failures += 1;
                if failures >= MAX_COLUMN_FAILURES {
                    return (None, failures);
                }
                let depth = failures.min(cols.len());
                for _ in 0..depth {
                    let rows = cols.pop().expect("depth bounded by len");
                    fill.commit(&rows, false);
                }
            }
        }
    }
    (Some(cols), failures)
}

/// Derives `H2` from a column-regular `H1` so that column `i` of `H2` keeps
/// all but one of the rows of column `i` of `H1`.
///
/// The replaced row is swapped for a row outside the column, chosen to keep
/// `H2` row degrees balanced and `H2` itself free of 4-cycles. `H1 ⊕ H2` then
/// has exactly two ones per column.
pub fn construct_correlated_pair(h1: &SparseGf2Matrix, seed: u64) -> Result<SparseGf2Matrix> {
    let n = h1.cols();
    let wc = h1.col(0).len();
    if n == 0 || wc < 2 || (0..n).any(|c| h1.col(c).len() != wc) {
        return Err(Error::Parameter(
            "H1 must have a uniform column weight of at least 2".into(),
        ));
    }
    let mut last = None;
    for restart in 0..MAX_RESTARTS as u64 {
        match correlated_attempt(h1, rng_from(&[seed, 0xC0_22E1, restart])) {
            Ok(h2) => return Ok(h2),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

fn correlated_attempt(h1: &SparseGf2Matrix, mut rng: ChaCha8Rng) -> Result<SparseGf2Matrix> {
    let (m, n) = (h1.rows(), h1.cols());
    let mut row_degree = h1.row_degrees();
    let mut used_pairs: HashSet<(usize, usize)> = HashSet::new();
    let mut cols: Vec<Vec<usize>> = Vec::with_capacity(n);

    for c in 0..n {
        let support = h1.col(c);
        let mut drops = support.to_vec();
        drops.shuffle(&mut rng);
        let mut outside: Vec<usize> = (0..m).filter(|r| !support.contains(r)).collect();
        outside.shuffle(&mut rng);

        let mut best: Option<(usize, usize, Vec<usize>)> = None;
        for &drop in &drops {
            for &add in &outside {
                let mut rows: Vec<usize> = support.iter().copied().filter(|&r| r != drop).collect();
                rows.push(add);
                rows.sort_unstable();
                let clash = rows.iter().enumerate().any(|(i, &a)| {
                    rows[i + 1..].iter().any(|&b| used_pairs.contains(&(a, b)))
                });
                if clash {
                    continue;
                }
                let score = row_degree[add];
                if best.as_ref().is_none_or(|(s, _, _)| score < *s) {
                    best = Some((score, drop, rows));
                }
            }
        }
        let Some((_, drop, rows)) = best else {
            return Err(Error::Construction {
                attempts: MAX_RESTARTS,
                reason: format!("no replacement row keeps column {c} free of 4-cycles"),
            });
        };
        let add = *rows.iter().find(|r| !support.contains(r)).expect("one new row");
        row_degree[drop] -= 1;
        row_degree[add] += 1;
        for (i, &a) in rows.iter().enumerate() {
            for &b in &rows[i + 1..] {
                used_pairs.insert((a, b));
            }
        }
        cols.push(rows);
    }

    SparseGf2Matrix::from_entries(
        m,
        n,
        cols.iter()
            .enumerate()
            .flat_map(|(c, rows)| rows.iter().map(move |&r| (r, c))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ldpc::count_4cycles;

    #[test]
    fn regular_3_6_at_500() {
        let code = construct_regular(500, 3, 6, 1).unwrap();
        let h = code.parity_check();
        assert_eq!((h.rows(), h.cols()), (250, 500));
        assert!(h.is_regular(3, 6));
        assert_eq!(count_4cycles(h), 0);
        assert_eq!(code.k(), 500 - crate::gf2::rank(h));
    }

    #[test]
    fn deterministic_in_seed() {
        let a = construct_regular(96, 3, 6, 5).unwrap();
        let b = construct_regular(96, 3, 6, 5).unwrap();
        let c = construct_regular(96, 3, 6, 6).unwrap();
        assert_eq!(a.parity_check(), b.parity_check());
        assert_ne!(a.parity_check(), c.parity_check());
    }

    #[test]
    fn small_weight_two_code() {
        // 6 rows admit 15 distinct row pairs, enough for 12 columns.
        let code = construct_regular(12, 2, 4, 3).unwrap();
        assert!(code.parity_check().is_regular(2, 4));
        assert_eq!(count_4cycles(code.parity_check()), 0);
        // Even column weight: rows sum to zero, so rank <= m - 1.
        assert_eq!(code.k(), 12 - crate::gf2::rank(code.parity_check()));
        assert!(code.k() > 12 - 6);
    }

    #[test]
    fn impossible_sizes_fail() {
        // Three rows: every column is {0,1,2}, so the second column repeats it.
        let err = construct_regular(6, 3, 6, 0).unwrap_err();
        assert!(matches!(err, Error::Construction { attempts, .. } if attempts > 0));
        // Four rows give only six distinct pairs for eight weight-2 columns.
        assert!(construct_regular(8, 2, 4, 0).is_err());
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(construct_regular(11, 3, 6, 0), Err(Error::Parameter(_))));
        assert!(matches!(construct_regular(10, 1, 2, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn correlated_pair_shares_all_but_one() {
        let h1 = construct_regular(100, 3, 6, 11).unwrap().parity_check().clone();
        let h2 = construct_correlated_pair(&h1, 12).unwrap();
        let diff = h1.xor(&h2).unwrap();
        for c in 0..100 {
            let shared = h1.col(c).iter().filter(|r| h2.col(c).contains(r)).count();
            assert_eq!(shared, 2);
            assert_eq!(h2.col(c).len(), 3);
            assert_eq!(diff.col(c).len(), 2);
        }
        assert_eq!(count_4cycles(&h2), 0);
    }

    #[test]
    fn correlated_pair_rejects_irregular_columns() {
        let h = SparseGf2Matrix::from_strs(&["110", "011", "001"]).unwrap();
        assert!(construct_correlated_pair(&h, 0).is_err());
    }
}

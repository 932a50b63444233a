use crate::gf2::{BitVector, SparseGf2Matrix};

/// Bipartite bit/check adjacency of a parity-check matrix, in CSR form.
///
/// Edges are numbered in check-major order: the edges of check `c` are
/// `check_ptr[c]..check_ptr[c + 1]`. `bit_edges` lists, per bit node, the
/// ids of its incident edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    bits: usize,
    check_ptr: Vec<usize>,
    edge_bit: Vec<usize>,
    bit_ptr: Vec<usize>,
    bit_edges: Vec<usize>,
}

impl TannerGraph {
    pub fn from_matrix(h: &SparseGf2Matrix) -> Self {
        let mut check_ptr = Vec::with_capacity(h.rows() + 1);
        let mut edge_bit = Vec::with_capacity(h.nnz());
        check_ptr.push(0);
        for r in 0..h.rows() {
            edge_bit.extend_from_slice(h.row(r));
            check_ptr.push(edge_bit.len());
        }

        let mut bit_ptr = vec![0; h.cols() + 1];
        for &b in &edge_bit {
            bit_ptr[b + 1] += 1;
        }
        for b in 0..h.cols() {
            bit_ptr[b + 1] += bit_ptr[b];
        }
        let mut fill = bit_ptr.clone();
        let mut bit_edges = vec![0; edge_bit.len()];
        for (e, &b) in edge_bit.iter().enumerate() {
            bit_edges[fill[b]] = e;
            fill[b] += 1;
        }

        Self {
            bits: h.cols(),
            check_ptr,
            edge_bit,
            bit_ptr,
            bit_edges,
        }
    }

    #[inline]
    pub fn bit_count(&self) -> usize {
        self.bits
    }

    #[inline]
    pub fn check_count(&self) -> usize {
        self.check_ptr.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_bit.len()
    }

    /// Edge id range of check `c`.
    #[inline]
    pub fn check_edges(&self, c: usize) -> std::ops::Range<usize> {
        self.check_ptr[c]..self.check_ptr[c + 1]
    }

    /// Bit nodes attached to check `c`.
    #[inline]
    pub fn check_bits(&self, c: usize) -> &[usize] {
        &self.edge_bit[self.check_edges(c)]
    }

    /// Edge ids incident to bit `b`.
    #[inline]
    pub fn bit_edges(&self, b: usize) -> &[usize] {
        &self.bit_edges[self.bit_ptr[b]..self.bit_ptr[b + 1]]
    }

    pub fn bit_degree(&self, b: usize) -> usize {
        self.bit_ptr[b + 1] - self.bit_ptr[b]
    }

    pub fn check_degree(&self, c: usize) -> usize {
        self.check_ptr[c + 1] - self.check_ptr[c]
    }

    /// True when every check sees even parity in `bits`.
    pub fn satisfied_by(&self, bits: &[bool]) -> bool {
        (0..self.check_count()).all(|c| {
            !self
                .check_bits(c)
                .iter()
                .fold(false, |acc, &b| acc ^ bits[b])
        })
    }

    pub fn is_codeword(&self, word: &BitVector) -> bool {
        word.len() == self.bits && (0..self.check_count()).all(|c| !word.parity_of(self.check_bits(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_matches_matrix() {
        let h = SparseGf2Matrix::from_strs(&["1101100", "1011010", "0111001"]).unwrap();
        let g = TannerGraph::from_matrix(&h);
        assert_eq!(g.bit_count(), 7);
        assert_eq!(g.check_count(), 3);
        assert_eq!(g.edge_count(), h.nnz());
        for c in 0..3 {
            assert_eq!(g.check_bits(c), h.row(c));
            assert_eq!(g.check_degree(c), 4);
        }
        for b in 0..7 {
            let checks: Vec<usize> = g
                .bit_edges(b)
                .iter()
                .map(|&e| (0..3).find(|&c| g.check_edges(c).contains(&e)).unwrap())
                .collect();
            assert_eq!(checks, h.col(b));
            assert_eq!(g.bit_degree(b), h.col(b).len());
        }
    }
}

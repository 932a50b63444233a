//! Bit-exact binary linear algebra.

mod alist;
mod bitvec;
mod reduce;
mod sparse;

pub use alist::{read_alist, write_alist};
pub use bitvec::BitVector;
pub use reduce::{derive_generator, gauss_jordan, rank, Generator, Reduction};
pub use sparse::{BlockBuilder, SparseGf2Matrix};

use crate::error::Result;

/// Free-function form of [`BitVector::xor`].
pub fn xor(a: &BitVector, b: &BitVector) -> Result<BitVector> {
    a.xor(b)
}

/// Free-function form of [`SparseGf2Matrix::mat_vec_mul`].
pub fn mat_vec_mul(m: &SparseGf2Matrix, v: &BitVector) -> Result<BitVector> {
    m.mat_vec_mul(v)
}

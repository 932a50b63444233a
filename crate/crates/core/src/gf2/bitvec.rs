use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{dim, Error, Result};

const WORD: usize = 64;

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits past `len` in the last word are always zero, so derived equality and
/// hashing only ever see the logical contents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % WORD == 0 {
                words.push(0);
            }
            if b {
                words[len / WORD] |= 1 << (len % WORD);
            }
            len += 1;
        }
        Self { words, len }
    }

    /// Builds from 0/1 bytes; any non-zero byte counts as a one.
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::from_bools(bits.iter().map(|&b| b != 0))
    }

    /// Uniformly random vector.
    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = rng.gen();
        }
        v.mask_tail();
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    /// Bitwise modulo-2 sum.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.xor_assign(other)?;
        Ok(out)
    }

    pub fn xor_assign(&mut self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(dim(format!(
                "xor of vectors with lengths {} and {}",
                self.len, other.len
            )));
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        Ok(self.xor(other)?.weight())
    }

    /// Parity of the bits at `positions`.
    #[inline]
    pub fn parity_of(&self, positions: &[usize]) -> bool {
        positions.iter().fold(false, |acc, &i| acc ^ self.get(i))
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Self) -> Result<bool> {
        if self.len != other.len {
            return Err(dim(format!("dot of lengths {} and {}", self.len, other.len)));
        }
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        Ok(ones % 2 == 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Indices of the one bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// Copy of bits `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len, "slice {start}..{end} out of range");
        Self::from_bools((start..end).map(|i| self.get(i)))
    }

    /// Gathers the bits at the given positions, in order.
    pub fn select(&self, positions: &[usize]) -> Self {
        Self::from_bools(positions.iter().map(|&i| self.get(i)))
    }

    pub fn concat(parts: &[&BitVector]) -> Self {
        Self::from_bools(parts.iter().flat_map(|p| p.iter()))
    }

    #[cfg(test)]
    fn words(&self) -> &[u64] {
        &self.words
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    /// Parses a string of `0`/`1` characters; whitespace and `_` are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() || c == '_' => {}
                c => return Err(Error::Parse(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(Self::from_bools(bits))
    }
}

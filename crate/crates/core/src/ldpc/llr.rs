use crate::error::{dim, Error, Result};
use crate::gf2::BitVector;
use crate::num::Real;

/// Per-bit log-likelihood ratios `ln(P(0)/P(1))`; positive favours 0.
#[derive(Debug, Clone, PartialEq)]
pub struct LlrVector<T> {
    values: Vec<T>,
}

impl<T: Real> LlrVector<T> {
    pub fn from_values(values: Vec<T>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Parameter(format!("non-finite LLR at bit {i}")));
        }
        Ok(Self { values })
    }

    /// Channel LLRs for a word received over a BSC with crossover `p`.
    pub fn bsc(y: &BitVector, p: T) -> Result<Self> {
        let half = T::of(0.5);
        if !(p > T::zero() && p < half) {
            return Err(Error::Parameter(format!(
                "BSC crossover must lie in (0, 0.5), got {p}"
            )));
        }
        let mag = ((T::one() - p) / p).ln();
        Ok(Self {
            values: y.iter().map(|b| if b { -mag } else { mag }).collect(),
        })
    }

    /// All-zero LLRs: bits with no channel observation.
    pub fn erased(n: usize) -> Self {
        Self {
            values: vec![T::zero(); n],
        }
    }

    pub fn concat(parts: &[&Self]) -> Self {
        Self {
            values: parts.iter().flat_map(|p| p.values.iter().copied()).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Sign decision; an LLR of exactly zero decides 0.
    pub fn hard_decision(&self) -> BitVector {
        BitVector::from_bools(self.values.iter().map(|&v| v < T::zero()))
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.values.len() != n {
            return Err(dim(format!("{} LLRs for {n} bit nodes", self.values.len())));
        }
        Ok(())
    }
}

/// `bsc_llr(y, p)` for the default scalar.
pub fn bsc_llr(y: &BitVector, p: f64) -> Result<LlrVector<f64>> {
    LlrVector::bsc(y, p)
}

/// `erased_llr(n)` for the default scalar.
pub fn erased_llr(n: usize) -> LlrVector<f64> {
    LlrVector::erased(n)
}

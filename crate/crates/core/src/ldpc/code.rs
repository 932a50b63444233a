use std::fmt::Write as _;

use super::TannerGraph;
use crate::error::{dim, Error, Result};
use crate::gf2::{derive_generator, read_alist, write_alist, BitVector, Generator, SparseGf2Matrix};

/// Construction parameters of a randomly built regular code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularParams {
    pub wc: usize,
    pub wr: usize,
    pub seed: u64,
}

/// Binary linear code given by a sparse parity-check matrix.
#[derive(Debug, Clone)]
pub struct LdpcCode {
    parity_check: SparseGf2Matrix,
    generator: Generator,
    generator_rows: Vec<BitVector>,
    graph: TannerGraph,
    params: Option<RegularParams>,
}

impl LdpcCode {
    pub fn from_parity_check(h: SparseGf2Matrix) -> Result<Self> {
        let generator = derive_generator(&h)?;
        let generator_rows = generator.matrix.to_dense_rows();
        let graph = TannerGraph::from_matrix(&h);
        Ok(Self {
            parity_check: h,
            generator,
            generator_rows,
            graph,
            params: None,
        })
    }

    pub fn with_params(mut self, params: RegularParams) -> Self {
        self.params = Some(params);
        self
    }

    /// Block length.
    pub fn n(&self) -> usize {
        self.parity_check.cols()
    }

    /// Dimension, `n - rank_2(H)`.
    pub fn k(&self) -> usize {
        self.generator_rows.len()
    }

    /// Rows of `H` (not necessarily independent).
    pub fn m(&self) -> usize {
        self.parity_check.rows()
    }

    pub fn parity_check(&self) -> &SparseGf2Matrix {
        &self.parity_check
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    pub fn graph(&self) -> &TannerGraph {
        &self.graph
    }

    pub fn params(&self) -> Option<RegularParams> {
        self.params
    }

    /// `u·G`, in the original bit order of `H`.
    pub fn encode(&self, u: &BitVector) -> Result<BitVector> {
        if u.len() != self.k() {
            return Err(dim(format!("message of length {} for k = {}", u.len(), self.k())));
        }
        let mut c = BitVector::zeros(self.n());
        for j in u.ones() {
            c.xor_assign(&self.generator_rows[j])?;
        }
        Ok(c)
    }

    /// Reads the message bits back out of a word via the systematic positions.
    pub fn extract_message(&self, c: &BitVector) -> Result<BitVector> {
        if c.len() != self.n() {
            return Err(dim(format!("word of length {} for n = {}", c.len(), self.n())));
        }
        Ok(c.select(&self.generator.info_positions))
    }

    pub fn is_codeword(&self, c: &BitVector) -> bool {
        self.graph.is_codeword(c)
    }

    /// Alist text preceded by a `#` header line recording the code parameters.
    pub fn to_alist(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "# netrelay-code n={} k={}", self.n(), self.k());
        if let Some(p) = self.params {
            let _ = write!(out, " wc={} wr={} seed={}", p.wc, p.wr, p.seed);
        }
        out.push('\n');
        out.push_str(&write_alist(&self.parity_check));
        out
    }

    /// Inverse of [`LdpcCode::to_alist`]; plain alist without a header is
    /// accepted too.
    pub fn from_alist(text: &str) -> Result<Self> {
        let code = Self::from_parity_check(read_alist(text)?)?;
        let Some(header) = text.lines().next().and_then(|l| l.strip_prefix("# netrelay-code")) else {
            return Ok(code);
        };
        let mut fields = std::collections::HashMap::new();
        for tok in header.split_whitespace() {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header field {tok:?}")))?;
            let value: u64 = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad header value {tok:?}")))?;
            fields.insert(key, value);
        }
        if fields.get("n").is_some_and(|&n| n as usize != code.n())
            || fields.get("k").is_some_and(|&k| k as usize != code.k())
        {
            return Err(Error::Parse("header n/k disagree with the matrix".into()));
        }
        Ok(match (fields.get("wc"), fields.get("wr"), fields.get("seed")) {
            (Some(&wc), Some(&wr), Some(&seed)) => code.with_params(RegularParams {
                wc: wc as usize,
                wr: wr as usize,
                seed,
            }),
            _ => code,
        })
    }
}

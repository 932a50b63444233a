use super::Strategy;
use crate::error::{dim, Result};
use crate::gf2::{BlockBuilder, SparseGf2Matrix};
use crate::ldpc::LdpcCode;

fn same_shape(ha: &SparseGf2Matrix, hb: &SparseGf2Matrix) -> Result<()> {
    if (ha.rows(), ha.cols()) != (hb.rows(), hb.cols()) {
        return Err(dim(format!(
            "parity-check shapes differ: {}x{} vs {}x{}",
            ha.rows(),
            ha.cols(),
            hb.rows(),
            hb.cols()
        )));
    }
    Ok(())
}

/// `[[HA, 0], [HA ⊕ HB, HB]]`, annihilating `[c_A, c_A ⊕ c_B]`.
///
/// Used exactly in block form: no reduction, duplicate rows are kept.
pub fn build_h_joint(ha: &SparseGf2Matrix, hb: &SparseGf2Matrix) -> Result<SparseGf2Matrix> {
    same_shape(ha, hb)?;
    let (m, n) = (ha.rows(), ha.cols());
    BlockBuilder::new(2 * m, 2 * n)
        .place(0, 0, ha)?
        .place(m, 0, &ha.xor(hb)?)?
        .place(m, n, hb)?
        .build()
}

/// `[[HA, 0, 0], [0, HB, 0], [I, I, I]]`, annihilating `[c_A, c_B, c_A ⊕ c_B]`.
pub fn build_h_extn(ha: &SparseGf2Matrix, hb: &SparseGf2Matrix) -> Result<SparseGf2Matrix> {
    same_shape(ha, hb)?;
    build_extended(&[ha, hb], &[vec![0, 1]])
}

/// Extended parity-check matrix over the variable blocks
/// `[c_0, …, c_{S-1}, x_0, …, x_{K-1}]`, where `x_j` is the XOR of the
/// source words listed in `combos[j]`.
///
/// Rows are each source's own checks followed by `n` identity checks per
/// combination tying `x_j` to its sources.
pub fn build_extended(sources: &[&SparseGf2Matrix], combos: &[Vec<usize>]) -> Result<SparseGf2Matrix> {
    let Some(first) = sources.first() else {
        return Err(dim("no source codes"));
    };
    let n = first.cols();
    if let Some(h) = sources.iter().find(|h| h.cols() != n) {
        return Err(dim(format!("source block lengths differ: {} vs {n}", h.cols())));
    }
    for combo in combos {
        if combo.len() < 2 || combo.iter().any(|&s| s >= sources.len()) {
            return Err(dim(format!("invalid combination {combo:?}")));
        }
        let mut sorted = combo.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != combo.len() {
            return Err(dim(format!("repeated source in combination {combo:?}")));
        }
    }

    let code_rows: usize = sources.iter().map(|h| h.rows()).sum();
    let blocks = sources.len() + combos.len();
    let eye = SparseGf2Matrix::identity(n);
    let mut builder = BlockBuilder::new(code_rows + combos.len() * n, blocks * n);
    let mut row = 0;
    for (s, h) in sources.iter().enumerate() {
        builder = builder.place(row, s * n, h)?;
        row += h.rows();
    }
    for (j, combo) in combos.iter().enumerate() {
        for &s in combo {
            builder = builder.place(row, s * n, &eye)?;
        }
        builder = builder.place(row, (sources.len() + j) * n, &eye)?;
        row += n;
    }
    builder.build()
}

/// Non-zero parity-check entries a strategy's decoders touch: the cost
/// measure for one decoding iteration.
pub fn nnz_accounting(strategy: Strategy, code_a: &LdpcCode, code_b: &LdpcCode) -> Result<usize> {
    let (ha, hb) = (code_a.parity_check(), code_b.parity_check());
    Ok(match strategy {
        Strategy::Independent | Strategy::Serial => ha.nnz() + hb.nnz(),
        Strategy::Joint => build_h_joint(ha, hb)?.nnz(),
        Strategy::Extended => build_h_extn(ha, hb)?.nnz(),
    })
}

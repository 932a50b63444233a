//! Invariant suites run by `netrelay verify`.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::Result;
use crate::gf2::{BitVector, SparseGf2Matrix};
use crate::ldpc::{construct_regular, count_4cycles, sum_product_decode, LdpcCode, LlrVector};
use crate::network::{butterfly, simulate, SeededRng};
use crate::rate_region::{exact_sign_check, verify_subset_chain, LinkParams};
use crate::seed::rng_from;
use crate::strategies::{build_h_extn, build_h_joint};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, failures: usize, trials: usize) -> CheckResult {
    CheckResult {
        name,
        passed: failures == 0,
        detail: format!("{failures} failures in {trials} trials"),
    }
}

fn code_pair(seed: u64) -> Result<(LdpcCode, LdpcCode)> {
    Ok((
        construct_regular(96, 3, 6, seed)?,
        construct_regular(96, 3, 6, seed ^ 0x5A5A)?,
    ))
}

fn encodings(seed: u64) -> Result<CheckResult> {
    let (a, _) = code_pair(seed)?;
    let mut rng = rng_from(&[seed, 1]);
    let mut bad = 0;
    for _ in 0..200 {
        let u = BitVector::random(a.k(), &mut rng);
        let c = a.encode(&u)?;
        if !a.is_codeword(&c) || a.extract_message(&c)? != u {
            bad += 1;
        }
    }
    Ok(check("ldpc.encode", bad, 200))
}

fn block_matrices(seed: u64) -> Result<Vec<CheckResult>> {
    let (a, b) = code_pair(seed)?;
    let joint = build_h_joint(a.parity_check(), b.parity_check())?;
    let extn = build_h_extn(a.parity_check(), b.parity_check())?;
    let mut rng = rng_from(&[seed, 2]);
    let (mut bad_j, mut bad_e) = (0, 0);
    for _ in 0..200 {
        let ca = a.encode(&BitVector::random(a.k(), &mut rng))?;
        let cb = b.encode(&BitVector::random(b.k(), &mut rng))?;
        let cab = ca.xor(&cb)?;
        bad_j += usize::from(!joint.mat_vec_mul(&BitVector::concat(&[&ca, &cab]))?.is_zero());
        bad_e += usize::from(!extn.mat_vec_mul(&BitVector::concat(&[&ca, &cb, &cab]))?.is_zero());
    }
    let cycles = count_4cycles(&extn);
    Ok(vec![
        check("strategies.h_joint_syndrome", bad_j, 200),
        check("strategies.h_extn_syndrome", bad_e, 200),
        CheckResult {
            name: "strategies.h_extn_4cycles",
            passed: cycles == 0,
            detail: format!("{cycles} four-cycles"),
        },
    ])
}

fn subset_chain(seed: u64) -> CheckResult {
    let mut rng = rng_from(&[seed, 3]);
    let mut bad = 0;
    for _ in 0..2000 {
        let mut draw = || rng.gen_range(0.0..=0.5);
        let lp = LinkParams::new(draw(), draw(), draw(), draw()).expect("in range");
        let exact = LinkParams::new(
            Rational::from_float(lp.p13).expect("finite"),
            Rational::from_float(lp.p23).expect("finite"),
            Rational::from_float(lp.p34).expect("finite"),
            Rational::from_float(lp.p14).expect("finite"),
        )
        .expect("in range");
        bad += usize::from(!verify_subset_chain(&lp).passed() || !exact_sign_check(&exact));
    }
    check("rate_region.subset_chain", bad, 2000)
}

fn transcripts(seed: u64) -> Result<CheckResult> {
    let topo = butterfly(0.05, 3.0)?;
    let rng = SeededRng::new(seed);
    let mut words = rng_from(&[seed, 4]);
    let mut bad = 0;
    for trial in 0..50 {
        let inputs = BTreeMap::from([
            ("A".to_string(), BitVector::random(200, &mut words)),
            ("B".to_string(), BitVector::random(200, &mut words)),
        ]);
        let tr = simulate(&topo, &inputs, &rng, trial)?;
        bad += usize::from(tr.check_consistency(&topo).is_err());
    }
    Ok(check("network.transcript", bad, 50))
}

/// Nearest codeword by exhaustive search; `None` on a tie.
pub fn ml_decode(code: &LdpcCode, y: &BitVector) -> Result<Option<BitVector>> {
    let k = code.k();
    let mut best: Option<(usize, BitVector)> = None;
    let mut tie = false;
    for m in 0..1u64 << k {
        let u = BitVector::from_bools((0..k).map(|i| m >> i & 1 == 1));
        let c = code.encode(&u)?;
        let d = c.hamming_distance(y)?;
        match &best {
            Some((bd, _)) if d > *bd => {}
            Some((bd, _)) if d == *bd => tie = true,
            _ => {
                best = Some((d, c));
                tie = false;
            }
        }
    }
    Ok(if tie { None } else { best.map(|(_, c)| c) })
}

/// Cycle code of `K_{3,3}`: n = 9, k = 4, d = 4, no 4-cycles.
pub fn k33_code() -> Result<LdpcCode> {
    LdpcCode::from_parity_check(SparseGf2Matrix::from_strs(&[
        "111000000",
        "000111000",
        "000000111",
        "100100100",
        "010010010",
        "001001001",
    ])?)
}

fn decoder_vs_ml() -> Result<CheckResult> {
    let code = k33_code()?;
    let (mut bad, mut total) = (0, 0);
    for m in 0..1u64 << code.k() {
        let c = code.encode(&BitVector::from_bools((0..code.k()).map(|i| m >> i & 1 == 1)))?;
        for flip in std::iter::once(None).chain((0..code.n()).map(Some)) {
            let mut y = c.clone();
            if let Some(i) = flip {
                y.flip(i);
            }
            let r = sum_product_decode(code.graph(), &LlrVector::<f64>::bsc(&y, 0.1)?, 50)?;
            total += 1;
            bad += usize::from(ml_decode(&code, &y)? != Some(r.hard_decision));
        }
    }
    Ok(check("ldpc.decoder_vs_ml", bad, total))
}

pub fn run_verify(seed: u64) -> Result<Vec<CheckResult>> {
    let mut out = vec![encodings(seed)?];
    out.extend(block_matrices(seed)?);
    out.push(subset_chain(seed));
    out.push(transcripts(seed)?);
    out.push(decoder_vs_ml()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for r in run_verify(3).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn ml_reports_ties() {
        let code = LdpcCode::from_parity_check(SparseGf2Matrix::from_strs(&["11"]).unwrap()).unwrap();
        assert_eq!(ml_decode(&code, &"10".parse().unwrap()).unwrap(), None);
        assert_eq!(ml_decode(&code, &"11".parse().unwrap()).unwrap(), Some("11".parse().unwrap()));
    }
}

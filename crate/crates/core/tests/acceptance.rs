//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every tolerance and sample size is pinned below.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use netrelay::gf2::{BitVector, BlockBuilder, SparseGf2Matrix};
use netrelay::harness::{CodeConfig, CodePair, ExperimentConfig, FrameResult, NetworkChoice, SweepSetup};
use netrelay::ldpc::{
    construct_regular, count_4cycles, sum_product_decode, LlrVector, TannerGraph,
};
use netrelay::network::{fig1_network, simulate, SeededRng};
use netrelay::rate_region::{
    bsc_capacity, exact_sign_check, p_double_prime, p_prime, region_joint, region_nc, region_serial,
    verify_subset_chain, LinkParams,
};
use netrelay::strategies::{build_h_extn, build_h_joint, nnz_accounting, Strategy};
use netrelay::Rational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{Binomial, DiscreteCDF};

const CLOSED_FORM_TOL: f64 = 1e-4;
const IDENTITY_TOL: f64 = 1e-12;
const THEOREM4_SAMPLES: usize = 10_000;
const THEOREM4_BUDGET_S: f64 = 10.0;
const ALGEBRA_CODE_PAIRS: u64 = 10;
const ALGEBRA_CODEWORD_PAIRS: usize = 1_000;
const ALGEBRA_N: usize = 100;
const FLIP_TRIALS: u64 = 100_000;
const FLIP_BITS_PER_TRIAL: usize = 100;
const FLIP_SIGMAS: f64 = 3.0;
const FLIP_BUDGET_S: f64 = 30.0;
const FIG_FRAMES: u64 = 10_000;
const FIG_N: usize = 500;
const FIG_ITERS: usize = 20;
const SIGN_ALPHA: f64 = 0.01;
const FIG4_P: [f64; 3] = [0.01, 0.02, 0.03];
const FIG5_P: [f64; 3] = [0.004, 0.005, 0.006];
const FIG5_SERIAL_FLOOR: f64 = 1e-3;
const DEGENERATE_FRAMES: u64 = 1_000;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

// ---------------------------------------------------------------- oracles

/// Binary entropy in bits, written out from its definition.
fn h2(p: f64) -> f64 {
    if p == 0.0 || p == 1.0 {
        return 0.0;
    }
    -(p * p.ln() + (1.0 - p) * (1.0 - p).ln()) / std::f64::consts::LN_2
}

fn rat(x: f64) -> Rational {
    Rational::from_float(x).expect("finite")
}

fn rat_to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.numer().to_f64().unwrap() / x.denom().to_f64().unwrap()
}

/// p' by enumerating the eight error patterns of links 1->3, 2->3, 3->4 and
/// keeping those with odd parity.
fn oracle_p_prime(p13: &Rational, p23: &Rational, p34: &Rational) -> Rational {
    let mut total = Rational::zero();
    for mask in 0u8..8 {
        if mask.count_ones() % 2 == 1 {
            let mut term = Rational::one();
            for (bit, p) in [p13, p23, p34].into_iter().enumerate() {
                term *= if mask >> bit & 1 == 1 { p.clone() } else { Rational::one() - p };
            }
            total += term;
        }
    }
    total
}

/// p'' enumerated over all sixteen patterns of the four links.
fn oracle_p_double_prime(ps: [&Rational; 4]) -> Rational {
    let mut total = Rational::zero();
    for mask in 0u8..16 {
        if mask.count_ones() % 2 == 1 {
            let mut term = Rational::one();
            for (bit, p) in ps.iter().enumerate() {
                term *= if mask >> bit & 1 == 1 { (*p).clone() } else { Rational::one() - *p };
            }
            total += term;
        }
    }
    total
}

/// One-sided sign test: probability of at least `wins` successes out of
/// `wins + losses` fair coin flips.
fn sign_p_value(wins: u64, losses: u64) -> f64 {
    let n = wins + losses;
    if n == 0 || wins == 0 {
        return 1.0;
    }
    Binomial::new(0.5, n).unwrap().sf(wins - 1)
}

// ---------------------------------------------------------------- criteria

fn c1_closed_forms() -> Outcome {
    let p = Rational::new(1.into(), 20.into());
    let lp = LinkParams::uniform(0.05).unwrap();
    let pp = oracle_p_prime(&p, &p, &p);
    let ppp = oracle_p_double_prime([&p, &p, &p, &p]);
    let (pp_f, ppp_f) = (rat_to_f64(&pp), rat_to_f64(&ppp));
    let c14 = 1.0 - h2(0.05);
    let c1 = 1.0 - h2(pp_f);
    let c2 = 1.0 - h2(ppp_f);
    let oracle = [
        ("C14", c14),
        ("p'", pp_f),
        ("C'", c1),
        ("p''", ppp_f),
        ("C''", c2),
        ("joint R_A", c14 + c1 - c2),
        ("joint R_B", c1),
        ("joint sum", c14 + c1),
    ];
    let nc = region_nc(&lp);
    let serial = region_serial(&lp);
    let joint = region_joint(&lp);
    let calc = [
        bsc_capacity(0.05),
        p_prime(&lp),
        serial.rb_max,
        p_double_prime(&lp),
        nc.rb_max,
        joint.ra_max,
        joint.rb_max,
        joint.sum_max.unwrap_or(f64::NAN),
    ];
    let quoted = [0.71360, 0.13550, 0.42760, 0.17195, 0.33770, 0.80350, 0.42760, 1.14120];
    let mut worst: f64 = 0.0;
    let mut notes = Vec::new();
    for (((name, o), c), q) in oracle.iter().zip(calc).zip(quoted) {
        worst = worst.max((o - c).abs());
        if (o - q).abs() > CLOSED_FORM_TOL {
            notes.push(format!("{name}: oracle {o:.6} vs quoted {q:.5}"));
        }
    }
    let exact_ok = pp == Rational::new(271.into(), 2000.into()) && ppp == Rational::new(3439.into(), 20000.into());
    let mut detail = format!("max |calculator - oracle| = {worst:.2e} (tol {CLOSED_FORM_TOL:e}); p' = 271/2000 and p'' = 3439/20000 exactly: {exact_ok}");
    if !notes.is_empty() {
        detail.push_str(&format!("; quoted decimals off the oracle: {}", notes.join(", ")));
    }
    outcome(worst <= CLOSED_FORM_TOL && exact_ok, detail)
}

fn c2_theorem4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7434);
    let (mut sign_bad, mut ident_bad, mut chain_bad) = (0, 0, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..THEOREM4_SAMPLES {
        let mut draw = || rng.gen_range(0.0..=0.5);
        let (p13, p23, p34, p14) = (draw(), draw(), draw(), draw());
        let lp = LinkParams::new(p13, p23, p34, p14).unwrap();
        let exact = LinkParams::new(rat(p13), rat(p23), rat(p34), rat(p14)).unwrap();
        // p'' - p' compared exactly with zero: the sign holds with no rounding.
        let diff = oracle_p_double_prime([&exact.p13, &exact.p23, &exact.p34, &exact.p14])
            - oracle_p_prime(&exact.p13, &exact.p23, &exact.p34);
        sign_bad += usize::from(diff < Rational::zero() || !exact_sign_check(&exact));
        let rhs = p14 * (1.0 - 2.0 * p13) * (1.0 - 2.0 * p23) * (1.0 - 2.0 * p34);
        let resid = (p_double_prime(&lp) - p_prime(&lp) - rhs).abs();
        worst = worst.max(resid);
        ident_bad += usize::from(resid > IDENTITY_TOL);
        let (nc, se, jo) = (region_nc(&lp), region_serial(&lp), region_joint(&lp));
        let dominated = nc.ra_max <= se.ra_max
            && nc.rb_max <= se.rb_max
            && se.ra_max <= jo.ra_max
            && se.rb_max <= jo.rb_max
            && se.ra_max + se.rb_max <= jo.sum_max.unwrap() + IDENTITY_TOL;
        chain_bad += usize::from(!dominated || !verify_subset_chain(&lp).passed());
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        sign_bad == 0 && ident_bad == 0 && chain_bad == 0 && secs < THEOREM4_BUDGET_S,
        format!(
            "{THEOREM4_SAMPLES} samples: sign violations {sign_bad}, identity violations {ident_bad} (max residual {worst:.1e}, tol {IDENTITY_TOL:e}), chain violations {chain_bad}, {secs:.1}s (budget {THEOREM4_BUDGET_S}s)"
        ),
    )
}

fn c3_matrix_algebra() -> Outcome {
    let n = ALGEBRA_N;
    let (mut syn_j, mut syn_e, mut cyc_e, mut nnz_bad) = (0, 0, 0, 0);
    let mut joint_cycles_min = u64::MAX;
    let mut joint_nnz = Vec::new();
    for trial in 0..ALGEBRA_CODE_PAIRS {
        let a = construct_regular(n, 3, 6, 1000 + 2 * trial).unwrap();
        let b = construct_regular(n, 3, 6, 1001 + 2 * trial).unwrap();
        let (ha, hb) = (a.parity_check(), b.parity_check());
        let hj = build_h_joint(ha, hb).unwrap();
        let he = build_h_extn(ha, hb).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(trial);
        for _ in 0..ALGEBRA_CODEWORD_PAIRS {
            let ca = a.encode(&BitVector::random(a.k(), &mut rng)).unwrap();
            let cb = b.encode(&BitVector::random(b.k(), &mut rng)).unwrap();
            let cab = ca.xor(&cb).unwrap();
            // Syndromes computed row by row from the matrix entries.
            let joint_word = BitVector::concat(&[&ca, &cab]);
            let ext_word = BitVector::concat(&[&ca, &cb, &cab]);
            syn_j += usize::from((0..hj.rows()).any(|r| joint_word.parity_of(hj.row(r))));
            syn_e += usize::from((0..he.rows()).any(|r| ext_word.parity_of(he.row(r))));
        }
        cyc_e += usize::from(count_4cycles(&he) != 0);
        joint_cycles_min = joint_cycles_min.min(count_4cycles(&hj));
        let ind = nnz_accounting(Strategy::Independent, &a, &b).unwrap();
        let ser = nnz_accounting(Strategy::Serial, &a, &b).unwrap();
        let ext = nnz_accounting(Strategy::Extended, &a, &b).unwrap();
        let jnt = nnz_accounting(Strategy::Joint, &a, &b).unwrap();
        joint_nnz.push(jnt);
        nnz_bad += usize::from(ind != 6 * n || ser != 6 * n || ext != 9 * n || !(6 * n..=12 * n).contains(&jnt));
    }
    let shared = construct_regular(n, 3, 6, 999).unwrap();
    let shared_joint = nnz_accounting(Strategy::Joint, &shared, &shared).unwrap();
    nnz_bad += usize::from(shared_joint != 6 * n);
    outcome(
        syn_j == 0 && syn_e == 0 && cyc_e == 0 && nnz_bad == 0,
        format!(
            "{ALGEBRA_CODE_PAIRS} pairs x {ALGEBRA_CODEWORD_PAIRS} codeword pairs: H_joint syndrome failures {syn_j}, H_extn syndrome failures {syn_e}, H_extn with 4-cycles {cyc_e}, nnz mismatches {nnz_bad} (joint nnz {:?}, shared-code joint {shared_joint}); min 4-cycles in H_joint {joint_cycles_min}",
            joint_nnz
        ),
    )
}

fn c4_decoder_vs_ml() -> Outcome {
    // Cycle code of K_{3,3}: bit (i, j) is the edge between left vertex i
    // and right vertex j; each check is a vertex.
    let mut entries = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            entries.push((i, 3 * i + j));
            entries.push((3 + j, 3 * i + j));
        }
    }
    let h = SparseGf2Matrix::from_entries(6, 9, entries).unwrap();
    let graph = TannerGraph::from_matrix(&h);
    let words: Vec<BitVector> = (0u32..1 << 9)
        .map(|m| BitVector::from_bools((0..9).map(|i| m >> i & 1 == 1)))
        .collect();
    let codewords: Vec<&BitVector> = words
        .iter()
        .filter(|w| (0..h.rows()).all(|r| !w.parity_of(h.row(r))))
        .collect();
    let (mut total, mut agree) = (0, 0);
    for c in &codewords {
        for flip in std::iter::once(None).chain((0..9).map(Some)) {
            let mut y = (*c).clone();
            if let Some(i) = flip {
                y.flip(i);
            }
            let mut dists: Vec<(usize, &BitVector)> =
                codewords.iter().map(|w| (w.hamming_distance(&y).unwrap(), *w)).collect();
            dists.sort_by_key(|d| d.0);
            let ml = (dists[0].0 < dists[1].0).then_some(dists[0].1);
            let bp = sum_product_decode(&graph, &LlrVector::<f64>::bsc(&y, 0.1).unwrap(), 50).unwrap();
            total += 1;
            agree += usize::from(ml == Some(&bp.hard_decision));
        }
    }
    outcome(
        agree == total && codewords.len() == 16,
        format!("K3,3 cycle code (n=9, {} codewords): {agree}/{total} received words agree with exhaustive ML", codewords.len()),
    )
}

fn c5_flip_rate() -> Outcome {
    let start = Instant::now();
    let topo = fig1_network(0.05, 0.05, 0.05, 0.05).unwrap();
    let rng = SeededRng::new(0xF1);
    let mut words = ChaCha8Rng::seed_from_u64(5);
    let mut flips = 0u64;
    for trial in 0..FLIP_TRIALS {
        let inputs = BTreeMap::from([
            ("A".to_string(), BitVector::random(FLIP_BITS_PER_TRIAL, &mut words)),
            ("B".to_string(), BitVector::random(FLIP_BITS_PER_TRIAL, &mut words)),
        ]);
        let tr = simulate(&topo, &inputs, &rng, trial).unwrap();
        let x_prime = tr.x(1, 3).xor(tr.x(2, 3)).unwrap();
        flips += tr.y(3, 4).hamming_distance(&x_prime).unwrap() as u64;
    }
    let bits = (FLIP_TRIALS as usize * FLIP_BITS_PER_TRIAL) as f64;
    let rate = flips as f64 / bits;
    let sigma = (0.1355 * (1.0 - 0.1355) / bits).sqrt();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        (rate - 0.1355).abs() <= FLIP_SIGMAS * sigma && secs < FLIP_BUDGET_S,
        format!(
            "{FLIP_TRIALS} trials x {FLIP_BITS_PER_TRIAL} bits: flip rate {rate:.6}, |dev| = {:.2} sigma (limit {FLIP_SIGMAS}), {secs:.1}s (budget {FLIP_BUDGET_S}s)",
            (rate - 0.1355).abs() / sigma
        ),
    )
}

fn fig_config(mult_26: f64, strategies: Vec<Strategy>, p: f64) -> ExperimentConfig {
    ExperimentConfig {
        network: NetworkChoice::Butterfly { mult_26 },
        code: CodeConfig {
            n: FIG_N,
            ..Default::default()
        },
        strategies,
        p_list: vec![p],
        max_iters: FIG_ITERS,
        min_errors: u64::MAX,
        max_frames: FIG_FRAMES,
        seed: 2024,
        ..Default::default()
    }
}

/// Per-frame results at one point, indexed `[frame][strategy]`.
fn paired_frames(mult_26: f64, strategies: &[Strategy], p: f64) -> Vec<Vec<FrameResult>> {
    let setup = SweepSetup::new(fig_config(mult_26, strategies.to_vec(), p)).unwrap();
    let ctx = setup.point(p).unwrap();
    setup.run_frames(&ctx, 0, FIG_FRAMES).unwrap()
}

#[derive(Clone, Copy)]
enum Stream {
    A,
    B,
}

fn errs(r: &FrameResult, s: Stream) -> u32 {
    match s {
        Stream::A => r.errors_a,
        Stream::B => r.errors_b,
    }
}

/// Frames where `x` has more / fewer errors than `y` on stream `s`.
fn wins(frames: &[Vec<FrameResult>], x: usize, y: usize, s: Stream) -> (u64, u64) {
    frames.iter().fold((0, 0), |(w, l), f| {
        let (ex, ey) = (errs(&f[x], s), errs(&f[y], s));
        (w + u64::from(ex > ey), l + u64::from(ex < ey))
    })
}

fn total(frames: &[Vec<FrameResult>], x: usize, s: Stream) -> u64 {
    frames.iter().map(|f| u64::from(errs(&f[x], s))).sum()
}

/// `BER(x) > BER(y)`: x worse in significantly more frames.
fn strictly_worse(frames: &[Vec<FrameResult>], x: usize, y: usize, s: Stream) -> (bool, String) {
    let (w, l) = wins(frames, x, y, s);
    let pv = sign_p_value(w, l);
    (pv < SIGN_ALPHA, format!("{w}:{l} p={pv:.2e}"))
}

/// `BER(x) >= BER(y)`: y is not significantly worse.
fn not_better(frames: &[Vec<FrameResult>], x: usize, y: usize, s: Stream) -> (bool, String) {
    let (w, l) = wins(frames, x, y, s);
    let pv = sign_p_value(l, w);
    (pv >= SIGN_ALPHA, format!("{w}:{l} p_rev={pv:.2e}"))
}

fn c6_fig4() -> Outcome {
    let (ind, ser, ext) = (0, 1, 3);
    let mut ok = true;
    let mut parts = Vec::new();
    for p in FIG4_P {
        let frames = paired_frames(3.0, &Strategy::ALL, p);
        let k = (FIG_N / 2) as f64 * FIG_FRAMES as f64;
        let (b1, d1) = strictly_worse(&frames, ind, ser, Stream::B);
        let (b2, d2) = not_better(&frames, ser, ext, Stream::B);
        let (a1, d3) = not_better(&frames, ser, ext, Stream::A);
        let a_equal = frames.iter().all(|f| f[ind].errors_a == f[ser].errors_a);
        ok &= b1 && b2 && a1 && a_equal;
        parts.push(format!(
            "p={p}: BER_B ind/ser/ext {:.3e}/{:.3e}/{:.3e} [ind>ser {} {d1}; ser>=ext {} {d2}], BER_A ser/ext {:.3e}/{:.3e} [ser>=ext {} {d3}; ser==ind exact {}]",
            total(&frames, ind, Stream::B) as f64 / k,
            total(&frames, ser, Stream::B) as f64 / k,
            total(&frames, ext, Stream::B) as f64 / k,
            verdict(b1),
            verdict(b2),
            total(&frames, ser, Stream::A) as f64 / k,
            total(&frames, ext, Stream::A) as f64 / k,
            verdict(a1),
            a_equal
        ));
    }
    outcome(ok, format!("{FIG_FRAMES} paired frames/point; {}", parts.join("; ")))
}

fn c7_fig5() -> Outcome {
    let strategies = [Strategy::Serial, Strategy::Joint, Strategy::Extended];
    let (ser, jnt, ext) = (0, 1, 2);
    let mut ok = true;
    let mut checked = 0;
    let mut parts = Vec::new();
    for p in FIG5_P {
        let frames = paired_frames(12.0, &strategies, p);
        let k = (FIG_N / 2) as f64 * FIG_FRAMES as f64;
        let ber_ser = total(&frames, ser, Stream::A) as f64 / k;
        if ber_ser < FIG5_SERIAL_FLOOR {
            parts.push(format!("p={p}: serial BER_A {ber_ser:.3e} below {FIG5_SERIAL_FLOOR:e}, not an operating point"));
            continue;
        }
        checked += 1;
        let (j, dj) = strictly_worse(&frames, ser, jnt, Stream::A);
        let (e, de) = strictly_worse(&frames, ser, ext, Stream::A);
        ok &= j && e;
        parts.push(format!(
            "p={p}: BER_A ser/joint/ext {ber_ser:.3e}/{:.3e}/{:.3e} [joint<ser {} {dj}; ext<ser {} {de}]",
            total(&frames, jnt, Stream::A) as f64 / k,
            total(&frames, ext, Stream::A) as f64 / k,
            verdict(j),
            verdict(e)
        ));
    }
    outcome(ok && checked > 0, format!("{FIG_FRAMES} paired frames/point, {checked} operating points; {}", parts.join("; ")))
}

fn c8_degenerate() -> Outcome {
    let mut cfg = fig_config(3.0, vec![Strategy::Joint], 0.02);
    cfg.code = CodeConfig {
        n: FIG_N,
        pair: CodePair::Shared,
        ..Default::default()
    };
    let setup = SweepSetup::new(cfg).unwrap();
    let ctx = setup.point(0.02).unwrap();
    let h = setup.code_a().parity_check();
    let (m, n) = (h.rows(), h.cols());
    let diag = BlockBuilder::new(2 * m, 2 * n)
        .place(0, 0, h)
        .unwrap()
        .place(m, n, h)
        .unwrap()
        .build()
        .unwrap();
    let graph = TannerGraph::from_matrix(&diag);
    let (mut identical, mut split_agree) = (0, 0);
    for trial in 0..DEGENERATE_FRAMES {
        let (_, _, _, obs) = setup.frame(&ctx, trial).unwrap();
        let joint = setup.decoder().decode::<f64>(Strategy::Joint, &obs, FIG_ITERS).unwrap();
        // Channel-decode both taps on the block-diagonal graph, then undo the network code.
        let prior = LlrVector::concat(&[
            &LlrVector::<f64>::bsc(&obs.y_direct, obs.p_direct).unwrap(),
            &LlrVector::bsc(&obs.y_combined, obs.p_combined).unwrap(),
        ]);
        let r = sum_product_decode(&graph, &prior, FIG_ITERS).unwrap();
        let c_a = r.hard_decision.slice(0, n);
        let c_b = c_a.xor(&r.hard_decision.slice(n, 2 * n)).unwrap();
        let same = joint.c_hat_a == c_a && joint.c_hat_b == c_b && joint.iterations == r.iterations_used;
        identical += usize::from(same);
        // Informational: two separate decoders with their own stopping rules.
        let g = setup.code_a().graph();
        let sa = sum_product_decode(g, &LlrVector::<f64>::bsc(&obs.y_direct, obs.p_direct).unwrap(), FIG_ITERS).unwrap();
        let sab = sum_product_decode(g, &LlrVector::<f64>::bsc(&obs.y_combined, obs.p_combined).unwrap(), FIG_ITERS).unwrap();
        split_agree += usize::from(sa.hard_decision == c_a && sab.hard_decision == r.hard_decision.slice(n, 2 * n));
    }
    outcome(
        identical as u64 == DEGENERATE_FRAMES,
        format!(
            "HA == HB, butterfly(3p) p=0.02: {identical}/{DEGENERATE_FRAMES} frames bit-identical to the block-diagonal decode; separate per-tap decoders agree on {split_agree}/{DEGENERATE_FRAMES}"
        ),
    )
}

fn c9_cli_reproducible() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_netrelay");
    let runs: [(&str, Vec<&str>); 4] = [
        (
            "ber",
            vec!["ber", "--n", "96", "--p-list", "0.01,0.03", "--max-frames", "128", "--seed", "7"],
        ),
        ("ber-fig1", vec!["ber", "--network", "fig1", "--n", "96", "--p-list", "0.02", "--max-frames", "64"]),
        ("regions", vec!["regions", "--p13", "0.05", "--p23", "0.05", "--p34", "0.05", "--p14", "0.05"]),
        ("make-code", vec!["make-code", "--n", "200", "--seed", "3"]),
    ];
    let mut bad = Vec::new();
    for (name, args) in runs {
        let outputs: Vec<_> = ["1", "2"]
            .iter()
            .map(|threads| Command::new(exe).args(&args).env("NETRELAY_THREADS", threads).output().unwrap())
            .collect();
        let ok = outputs.iter().all(|o| o.status.success() && !o.stdout.is_empty())
            && outputs[0].stdout == outputs[1].stdout;
        if !ok {
            bad.push(name);
        }
    }
    outcome(bad.is_empty(), format!("ber, ber-fig1, regions, make-code run twice (1 and 2 threads); mismatches: {bad:?}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn verdict(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "VIOLATED"
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 closed-form rate-region inputs", c1_closed_forms),
        ("2 Theorem 4 randomized verification", c2_theorem4),
        ("3 matrix algebra oracles", c3_matrix_algebra),
        ("4 decoder vs exhaustive ML", c4_decoder_vs_ml),
        ("5 channel-model flip rate", c5_flip_rate),
        ("6 Fig. 4 ordering (3p)", c6_fig4),
        ("7 Fig. 5 ordering (12p)", c7_fig5),
        ("8 shared-code joint identity", c8_degenerate),
        ("9 CLI reproducibility", c9_cli_reproducible),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("[{status}] criterion {name} ({:.1}s): {}", start.elapsed().as_secs_f64(), o.detail);
        failed += usize::from(!o.passed);
    }
    if failed > 0 {
        println!("acceptance: {failed} criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: all criteria passed");
}

//! Achievable rate regions for the four-node relay network.
//!
//! Node 1 sends `X_{1,3} = X_{1,4}` (message A), node 2 sends `X_{2,3}`
//! (message B), node 3 forwards `Y_{1,3} ⊕ Y_{2,3}` to node 4, which also
//! hears node 1 directly. The three decoding strategies at node 4 give:
//!
//! | strategy    | `R_A ≤`              | `R_B ≤` | `R_A + R_B ≤`  |
//! |-------------|----------------------|---------|----------------|
//! | independent | `C14`                | `C''`   | n/a            |
//! | serial      | `C14`                | `C'`    | n/a            |
//! | joint       | `C14 + C' − C''`     | `C'`    | `C14 + C'`     |
//!
//! with `C(p) = 1 − H(p)`, `p'` the crossover of `X_{1,3} ⊕ X_{2,3} → Y_{3,4}`
//! and `p''` that of `X_{2,3} → Y_{3,4} ⊕ Y_{1,4}`.
//!
//! The crossover formulas are generic over [`Probability`] so they can be
//! evaluated exactly over rationals; capacities need [`Real`].

use crate::error::{Error, Result};
use crate::network::bsc_convolve;
use crate::num::{two, Probability, Real};

/// Crossover probabilities of the four links.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkParams<T> {
    pub p13: T,
    pub p23: T,
    pub p34: T,
    pub p14: T,
}

impl<T: Probability> LinkParams<T> {
    pub fn new(p13: T, p23: T, p34: T, p14: T) -> Result<Self> {
        let lp = Self { p13, p23, p34, p14 };
        let half = T::one() / two();
        for (name, p) in lp.named() {
            if !(*p >= T::zero() && *p <= half) {
                return Err(Error::Parameter(format!("{name} = {p:?} outside [0, 0.5]")));
            }
        }
        Ok(lp)
    }

    pub fn uniform(p: T) -> Result<Self> {
        Self::new(p.clone(), p.clone(), p.clone(), p)
    }

    fn named(&self) -> [(&'static str, &T); 4] {
        [
            ("p13", &self.p13),
            ("p23", &self.p23),
            ("p34", &self.p34),
            ("p14", &self.p14),
        ]
    }
}

/// Base-2 binary entropy with `H(0) = H(1) = 0`.
pub fn binary_entropy<T: Real>(p: T) -> T {
    let term = |x: T| if x <= T::zero() { T::zero() } else { -x * x.log2() };
    term(p) + term(T::one() - p)
}

/// Capacity of a BSC, `1 − H(p)`.
pub fn bsc_capacity<T: Real>(p: T) -> T {
    T::one() - binary_entropy(p)
}

/// `p'`: crossover of the relayed path, in its two-term form.
pub fn p_prime<T: Probability>(lp: &LinkParams<T>) -> T {
    let one = T::one;
    let (p13, p23, p34) = (lp.p13.clone(), lp.p23.clone(), lp.p34.clone());
    let agree = (one() - p13.clone()) * (one() - p23.clone()) + p13.clone() * p23.clone();
    let differ = p13.clone() * (one() - p23.clone()) + (one() - p13) * p23;
    agree * p34.clone() + differ * (one() - p34)
}

/// `p''`: crossover of `Y_{3,4} ⊕ Y_{1,4}` against `X_{2,3}`, as the sum of
/// the eight odd-weight error patterns over the four links.
pub fn p_double_prime<T: Probability>(lp: &LinkParams<T>) -> T {
    let one = T::one;
    let (a, b, c, d) = (lp.p13.clone(), lp.p23.clone(), lp.p34.clone(), lp.p14.clone());
    let (na, nb, nc, nd) = (one() - a.clone(), one() - b.clone(), one() - c.clone(), one() - d.clone());
    let t = |w: &T, x: &T, y: &T, z: &T| w.clone() * x.clone() * y.clone() * z.clone();
    t(&a, &nb, &nc, &nd)
        + t(&na, &b, &nc, &nd)
        + t(&na, &nb, &c, &nd)
        + t(&na, &nb, &nc, &d)
        + t(&na, &b, &c, &d)
        + t(&a, &nb, &c, &d)
        + t(&a, &b, &nc, &d)
        + t(&a, &b, &c, &nd)
}

/// `p14·(1−2p13)(1−2p23)(1−2p34)`, the closed form of `p'' − p'`.
pub fn sign_identity_rhs<T: Probability>(lp: &LinkParams<T>) -> T {
    let f = |p: &T| T::one() - two::<T>() * p.clone();
    lp.p14.clone() * f(&lp.p13) * f(&lp.p23) * f(&lp.p34)
}

/// Constraint form of a region: `R_A ≤ ra_max`, `R_B ≤ rb_max`, and
/// optionally `R_A + R_B ≤ sum_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateRegion<T> {
    pub ra_max: T,
    pub rb_max: T,
    pub sum_max: Option<T>,
}

/// Independent network-then-channel decoding.
pub fn region_nc<T: Real>(lp: &LinkParams<T>) -> RateRegion<T> {
    RateRegion {
        ra_max: bsc_capacity(lp.p14),
        rb_max: bsc_capacity(p_double_prime(lp)),
        sum_max: None,
    }
}

pub fn region_serial<T: Real>(lp: &LinkParams<T>) -> RateRegion<T> {
    RateRegion {
        ra_max: bsc_capacity(lp.p14),
        rb_max: bsc_capacity(p_prime(lp)),
        sum_max: None,
    }
}

pub fn region_joint<T: Real>(lp: &LinkParams<T>) -> RateRegion<T> {
    let c14 = bsc_capacity(lp.p14);
    let c1 = bsc_capacity(p_prime(lp));
    let c2 = bsc_capacity(p_double_prime(lp));
    RateRegion {
        // C' − C'' first so a zero gap leaves ra_max == C14 exactly.
        ra_max: c14 + (c1 - c2),
        rb_max: c1,
        sum_max: Some(c14 + c1),
    }
}

pub fn region_contains<T: Real>(r: &RateRegion<T>, ra: T, rb: T) -> bool {
    ra <= r.ra_max && rb <= r.rb_max && r.sum_max.is_none_or(|s| ra + rb <= s)
}

impl<T: Real> RateRegion<T> {
    pub fn contains(&self, ra: T, rb: T) -> bool {
        region_contains(self, ra, rb)
    }

    /// Largest achievable `R_A` at a given `R_B ≤ rb_max`.
    pub fn ra_at(&self, rb: T) -> T {
        match self.sum_max {
            Some(s) => self.ra_max.min(s - rb),
            None => self.ra_max,
        }
    }

    /// Corner points of the region polygon, counter-clockwise from the origin
    /// in the `(R_A, R_B)` plane.
    pub fn vertices(&self) -> Vec<(T, T)> {
        let mut v = vec![(T::zero(), T::zero()), (self.ra_max, T::zero())];
        match self.sum_max {
            Some(s) if self.ra_max + self.rb_max > s => {
                v.push((self.ra_max, s - self.ra_max));
                v.push((s - self.rb_max, self.rb_max));
            }
            _ => v.push((self.ra_max, self.rb_max)),
        }
        v.push((T::zero(), self.rb_max));
        v
    }
}

/// Pareto frontier `(R_A, R_B)` at `samples` evenly spaced `R_B` values in
/// `[0, rb_max]`.
pub fn region_boundary<T: Real>(r: &RateRegion<T>, samples: usize) -> Result<Vec<(T, T)>> {
    if samples < 2 {
        return Err(Error::Parameter(format!("need at least 2 samples, got {samples}")));
    }
    let steps = T::from_usize(samples - 1).expect("sample count fits the scalar");
    Ok((0..samples)
        .map(|i| {
            let rb = if i == samples - 1 {
                r.rb_max
            } else {
                r.rb_max * T::from_usize(i).expect("index fits the scalar") / steps
            };
            (r.ra_at(rb), rb)
        })
        .collect())
}

/// Outcome of checking `Λ_nc ⊆ Λ_serial ⊆ Λ_joint` for one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetChainReport<T> {
    pub p_prime: T,
    pub p_double_prime: T,
    /// `(p'' − p') − p14(1−2p13)(1−2p23)(1−2p34)`.
    pub identity_residual: T,
    pub failures: Vec<String>,
}

impl<T> SubsetChainReport<T> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Absolute tolerance on the floating-point sign identity.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

pub fn verify_subset_chain<T: Real>(lp: &LinkParams<T>) -> SubsetChainReport<T> {
    let pp = p_prime(lp);
    let ppp = p_double_prime(lp);
    let residual = (ppp - pp) - sign_identity_rhs(lp);
    let mut failures = Vec::new();

    if residual.abs() > T::of(IDENTITY_TOLERANCE) {
        failures.push(format!("sign identity residual {residual}"));
    }
    if ppp < pp {
        failures.push(format!("p'' = {ppp} < p' = {pp}"));
    }

    let nc = region_nc(lp);
    let serial = region_serial(lp);
    let joint = region_joint(lp);
    if nc.ra_max > serial.ra_max {
        failures.push(format!("nc R_A bound {} exceeds serial {}", nc.ra_max, serial.ra_max));
    }
    if nc.rb_max > serial.rb_max {
        failures.push(format!("nc R_B bound {} exceeds serial {}", nc.rb_max, serial.rb_max));
    }
    for (ra, rb) in serial.vertices() {
        if !joint.contains(ra, rb) {
            failures.push(format!("serial vertex ({ra}, {rb}) outside the joint region"));
        }
    }

    SubsetChainReport {
        p_prime: pp,
        p_double_prime: ppp,
        identity_residual: residual,
        failures,
    }
}

/// Exact counterpart of the sign checks, for rational parameters: the
/// identity must hold with zero residual and `p'' ≥ p'` without rounding.
pub fn exact_sign_check<T: Probability>(lp: &LinkParams<T>) -> bool {
    let pp = p_prime(lp);
    let ppp = p_double_prime(lp);
    let diff = ppp.clone() - pp.clone();
    diff == sign_identity_rhs(lp) && ppp >= pp
}

/// `p''` through the cascade route, `p' ⊛ p14`.
pub fn p_double_prime_cascade<T: Probability>(lp: &LinkParams<T>) -> T {
    bsc_convolve(p_prime(lp), lp.p14.clone())
}

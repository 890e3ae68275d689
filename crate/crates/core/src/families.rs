//! Closed forms for two-manifold families of states.
//!
//! Each function here works directly from the family parameters, without
//! building a state or diagonalizing anything. They are fast paths for the
//! CLI and the web demo, and independent cross-checks of the general engine
//! in [`crate::polarization`].

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{check_exponent, Error, Result};
use crate::fock::{BlockDiagonalState, ManifoldBlock, PureAmplitudes, TwoModeState, UnpolarizedWeights, NORM_TOL};
use crate::linalg::{log_sum_exp, pow0, CMatrix};
use crate::minimize;
use crate::polarization::{self, BuresResult, ChernoffResult};

fn check_probability(name: &'static str, v: f64) -> Result<()> {
    if (0.0..=1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::domain(name, v, "[0, 1]"))
    }
}

fn two_weights(n1: usize, pi1: f64, n2: usize) -> UnpolarizedWeights {
    let mut map = BTreeMap::new();
    if pi1 > 0.0 {
        map.insert(n1, pi1.min(1.0));
    }
    if pi1 < 1.0 {
        map.insert(n2, (1.0 - pi1).max(0.0));
    }
    UnpolarizedWeights::new(map).expect("two complementary weights")
}

/// `√p |Ψ^(N1)⟩ + √(1-p) |Ψ^(N2)⟩` with `N1 < N2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpositionFamily {
    n1: usize,
    n2: usize,
    p: f64,
}

impl SuperpositionFamily {
    pub fn new(n1: usize, n2: usize, p: f64) -> Result<Self> {
        if n1 >= n2 {
            return Err(Error::domain("N1", n1 as f64, "[0, N2)"));
        }
        check_probability("p", p)?;
        Ok(Self { n1, n2, p })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Concrete member with `|Ψ^(N)⟩ = |N, 0⟩`. Any other choice of
    /// manifold vectors has the same degrees.
    pub fn to_state(&self) -> TwoModeState {
        let mut entries = Vec::new();
        if self.p > 0.0 {
            entries.push((self.n1, self.n1, Complex64::new(self.p.sqrt(), 0.0)));
        }
        if self.p < 1.0 {
            entries.push((self.n2, self.n2, Complex64::new((1.0 - self.p).sqrt(), 0.0)));
        }
        PureAmplitudes::new(entries).expect("distinct manifolds").into()
    }

    /// `ln` of `p (N1+1)^{1-1/s}` and `(1-p) (N2+1)^{1-1/s}`, skipping empty terms.
    fn log_terms(&self, s: f64) -> Vec<f64> {
        let e = 1.0 - 1.0 / s;
        let mut t = Vec::with_capacity(2);
        if self.p > 0.0 {
            t.push(self.p.ln() + e * ((self.n1 + 1) as f64).ln());
        }
        if self.p < 1.0 {
            t.push((1.0 - self.p).ln() + e * ((self.n2 + 1) as f64).ln());
        }
        t
    }

    /// Lowest populated manifold, which fixes the `s = 0` limit.
    fn lowest(&self) -> usize {
        if self.p > 0.0 {
            self.n1
        } else {
            self.n2
        }
    }
}

/// `Q_s(p, π1) = p^s (π1/(N1+1))^{1-s} + (1-p)^s ((1-π1)/(N2+1))^{1-s}`.
pub fn superposition_renyi(fam: &SuperpositionFamily, s: f64, pi1: f64) -> Result<f64> {
    check_exponent(s)?;
    check_probability("pi1", pi1)?;
    let d1 = (fam.n1 + 1) as f64;
    let d2 = (fam.n2 + 1) as f64;
    Ok(pow0(fam.p, s) * pow0(pi1 / d1, 1.0 - s) + pow0(1.0 - fam.p, s) * pow0((1.0 - pi1) / d2, 1.0 - s))
}

/// `max_π1 Q_s = [p (N1+1)^{1-1/s} + (1-p) (N2+1)^{1-1/s}]^s`, with the
/// `s = 0` limit `1/(N+1)` of the lowest populated manifold.
pub fn superposition_max_overlap(fam: &SuperpositionFamily, s: f64) -> Result<f64> {
    check_exponent(s)?;
    Ok(superposition_max_unchecked(fam, s))
}

fn superposition_max_unchecked(fam: &SuperpositionFamily, s: f64) -> f64 {
    if s == 0.0 {
        return 1.0 / (fam.lowest() + 1) as f64;
    }
    (s * log_sum_exp(&fam.log_terms(s))).exp()
}

/// `π̃1(s) = [1 + ((1-p)/p) ((N1+1)/(N2+1))^{1/s - 1}]^{-1}` for `s > 0`.
pub fn superposition_optimal_pi(fam: &SuperpositionFamily, s: f64) -> Result<f64> {
    check_exponent(s)?;
    if s == 0.0 {
        return Err(Error::domain("s", s, "(0, 1]"));
    }
    if fam.p == 0.0 {
        return Ok(0.0);
    }
    let ratio = ((fam.n1 + 1) as f64 / (fam.n2 + 1) as f64).ln();
    let log_odds = ((1.0 - fam.p) / fam.p).ln() + (1.0 / s - 1.0) * ratio;
    // 1 / (1 + e^x), written to stay finite for large |x|
    Ok(if log_odds > 0.0 {
        let e = (-log_odds).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + log_odds.exp())
    })
}

/// Left side of the stationarity condition for the minimum over `s`:
///
/// ```text
/// p a^{1-1/s} ln(a Q^s) + (1-p) b^{1-1/s} ln(b Q^s),   Q = p a^{1-1/s} + (1-p) b^{1-1/s}
/// ```
///
/// with `a = N1+1`, `b = N2+1`. It equals `s Q · d/ds ln(Q^s)`, so it
/// vanishes exactly at an interior minimizer.
pub fn superposition_stationarity(fam: &SuperpositionFamily, s: f64) -> f64 {
    let a = (fam.n1 + 1) as f64;
    let b = (fam.n2 + 1) as f64;
    let e = 1.0 - 1.0 / s;
    let ta = fam.p * a.powf(e);
    let tb = (1.0 - fam.p) * b.powf(e);
    let ln_qs = s * (ta + tb).ln();
    ta * (a.ln() + ln_qs) + tb * (b.ln() + ln_qs)
}

/// Chernoff degree of a superposition, branching on `p`:
///
/// * `p = 0` or `p = 1`: a single-manifold pure state, `P_C = N/(N+1)`.
/// * `1/(N1+1) <= p < 1`: plateau at `P_C = N1/(N1+1)`, minimum at `s = 0`.
/// * `0 < p < 1/(N1+1)`: interior saddle point, found by minimizing
///   [`superposition_max_overlap`] over `s`.
pub fn superposition_chernoff(fam: &SuperpositionFamily) -> ChernoffResult {
    let lowest = fam.lowest();
    let boundary = || ChernoffResult::new(0.0, 1.0 / (lowest + 1) as f64, UnpolarizedWeights::single(lowest), true);
    if fam.p == 0.0 || fam.p == 1.0 || fam.p >= 1.0 / (fam.n1 + 1) as f64 {
        return boundary();
    }
    let min = minimize::minimize_unit_interval(|s| superposition_max_unchecked(fam, s));
    if polarization::is_boundary(&min, 1.0 / (lowest + 1) as f64) {
        return boundary();
    }
    let pi1 = superposition_optimal_pi(fam, min.s).expect("interior s");
    ChernoffResult::new(min.s, min.value, two_weights(fam.n1, pi1, fam.n2), false)
}

/// `P_B = 1 - √(p/(N1+1) + (1-p)/(N2+1))`.
pub fn superposition_bures(fam: &SuperpositionFamily) -> f64 {
    1.0 - (fam.p / (fam.n1 + 1) as f64 + (1.0 - fam.p) / (fam.n2 + 1) as f64).sqrt()
}

/// `p ρ_1 + (1-p) ρ_2` with Fock-diagonal blocks `diag(α, 1-α)` on the
/// one-photon manifold and `diag(β, γ, 1-β-γ)` on the two-photon manifold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixtureFamily {
    p: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl MixtureFamily {
    pub fn new(p: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        check_probability("p", p)?;
        check_probability("alpha", alpha)?;
        check_probability("beta", beta)?;
        check_probability("gamma", gamma)?;
        if beta + gamma > 1.0 + NORM_TOL {
            return Err(Error::domain("beta + gamma", beta + gamma, "[0, 1]"));
        }
        Ok(Self { p, alpha, beta, gamma })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    fn one_photon_spectrum(&self) -> [f64; 2] {
        [self.alpha, 1.0 - self.alpha]
    }

    fn two_photon_spectrum(&self) -> [f64; 3] {
        [self.beta, self.gamma, (1.0 - self.beta - self.gamma).max(0.0)]
    }

    fn xi1(&self, s: f64) -> f64 {
        self.one_photon_spectrum().iter().map(|&l| pow0(l, s)).sum()
    }

    fn xi2(&self, s: f64) -> f64 {
        self.two_photon_spectrum().iter().map(|&l| pow0(l, s)).sum()
    }

    pub fn to_state(&self) -> TwoModeState {
        let diag = |vals: &[f64], w: f64| {
            CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
                vals.len(),
                vals.iter().map(|&v| Complex64::new(w * v, 0.0)),
            ))
        };
        let blocks = vec![
            ManifoldBlock::new(1, diag(&self.one_photon_spectrum(), self.p)).expect("2x2"),
            ManifoldBlock::new(2, diag(&self.two_photon_spectrum(), 1.0 - self.p)).expect("3x3"),
        ];
        BlockDiagonalState::new(blocks).expect("distinct manifolds").into()
    }

    /// `ln` of the two unnormalized optimal weights, skipping empty manifolds.
    fn log_terms(&self, s: f64) -> Vec<(usize, f64)> {
        let e = 1.0 - 1.0 / s;
        let mut t = Vec::with_capacity(2);
        if self.p > 0.0 {
            t.push((1, e * 2f64.ln() + self.p.ln() + self.xi1(s).ln() / s));
        }
        if self.p < 1.0 {
            t.push((2, e * 3f64.ln() + (1.0 - self.p).ln() + self.xi2(s).ln() / s));
        }
        t
    }

    fn zero_limit(&self) -> (usize, f64) {
        let mut best: Option<(usize, f64)> = None;
        let ranks = [(1, self.p, self.xi1(0.0) / 2.0), (2, 1.0 - self.p, self.xi2(0.0) / 3.0)];
        for (n, w, ratio) in ranks {
            if w > 0.0 && best.is_none_or(|(_, r)| ratio > r) {
                best = Some((n, ratio));
            }
        }
        best.expect("one manifold is populated")
    }
}

/// `Q_s(p, π1) = (π1/2)^{1-s} p^s [α^s + (1-α)^s]
///             + ((1-π1)/3)^{1-s} (1-p)^s [β^s + γ^s + (1-β-γ)^s]`.
pub fn mixture_renyi(fam: &MixtureFamily, s: f64, pi1: f64) -> Result<f64> {
    check_exponent(s)?;
    check_probability("pi1", pi1)?;
    Ok(pow0(pi1 / 2.0, 1.0 - s) * pow0(fam.p, s) * fam.xi1(s)
        + pow0((1.0 - pi1) / 3.0, 1.0 - s) * pow0(1.0 - fam.p, s) * fam.xi2(s))
}

/// `max_π1 Q_s = {2^{1-1/s} p ξ1^{1/s} + 3^{1-1/s} (1-p) ξ2^{1/s}}^s`.
pub fn mixture_max_overlap(fam: &MixtureFamily, s: f64) -> Result<f64> {
    check_exponent(s)?;
    Ok(mixture_max_unchecked(fam, s))
}

fn mixture_max_unchecked(fam: &MixtureFamily, s: f64) -> f64 {
    if s == 0.0 {
        return fam.zero_limit().1;
    }
    let logs: Vec<f64> = fam.log_terms(s).iter().map(|&(_, t)| t).collect();
    (s * log_sum_exp(&logs)).exp()
}

fn mixture_pi1(fam: &MixtureFamily, s: f64) -> f64 {
    let terms = fam.log_terms(s);
    let logs: Vec<f64> = terms.iter().map(|&(_, t)| t).collect();
    let norm = log_sum_exp(&logs);
    terms
        .iter()
        .find(|&&(n, _)| n == 1)
        .map_or(0.0, |&(_, t)| (t - norm).exp())
}

/// Chernoff and Bures degrees of a two-block Fock-diagonal mixture.
pub fn mixture_degrees(fam: &MixtureFamily) -> (ChernoffResult, BuresResult) {
    let (zero_n, zero_value) = fam.zero_limit();
    let min = minimize::minimize_unit_interval(|s| mixture_max_unchecked(fam, s));
    let chernoff = if polarization::is_boundary(&min, zero_value) {
        ChernoffResult::new(0.0, zero_value, UnpolarizedWeights::single(zero_n), true)
    } else {
        ChernoffResult::new(
            min.s,
            min.value.min(1.0),
            two_weights(1, mixture_pi1(fam, min.s), 2),
            false,
        )
    };

    let f1 = fam.p / 2.0 * fam.xi1(0.5).powi(2);
    let f2 = (1.0 - fam.p) / 3.0 * fam.xi2(0.5).powi(2);
    let fidelity = (f1 + f2).min(1.0);
    let bures = BuresResult {
        degree: 1.0 - fidelity.sqrt(),
        fidelity,
        optimal_weights: two_weights(1, f1 / (f1 + f2), 2),
    };
    (chernoff, bures)
}

/// Degrees of any state whose block-diagonal part is a mixture of pure
/// `N`-photon states with probabilities `p_N`; these are the largest degrees
/// compatible with that photon-number distribution.
///
/// Returns `(P_C, P_B)`.
pub fn pure_state_degrees(distribution: &BTreeMap<usize, f64>) -> Result<(f64, f64)> {
    // measured distributions may overshoot [0, 1] by round-off
    for &p in distribution.values() {
        if !(-NORM_TOL..=1.0 + NORM_TOL).contains(&p) {
            return Err(Error::domain("p_N", p, "[0, 1]"));
        }
    }
    let total: f64 = distribution.values().sum();
    if (total - 1.0).abs() > NORM_TOL {
        return Err(Error::domain("sum of p_N", total, "1 within 1e-9"));
    }
    let support: Vec<(f64, f64)> = distribution
        .iter()
        .filter(|&(_, &p)| p > 0.0)
        .map(|(&n, &p)| (p.ln(), ((n + 1) as f64).ln()))
        .collect();
    let lowest = *distribution
        .iter()
        .find(|&(_, &p)| p > 0.0)
        .expect("normalized distribution has support")
        .0;
    let zero_value = 1.0 / (lowest + 1) as f64;
    let objective = |s: f64| {
        if s == 0.0 {
            return zero_value;
        }
        let logs: Vec<f64> = support.iter().map(|&(lp, ld)| lp + (1.0 - 1.0 / s) * ld).collect();
        (s * log_sum_exp(&logs)).exp()
    };
    let min = minimize::minimize_unit_interval(objective);
    let q = if polarization::is_boundary(&min, zero_value) {
        zero_value
    } else {
        min.value.min(1.0)
    };
    let fidelity: f64 = distribution.iter().map(|(&n, &p)| p / (n + 1) as f64).sum();
    Ok((1.0 - q, 1.0 - fidelity.min(1.0).sqrt()))
}

//! Chernoff and Bures degrees of polarization.
//!
//! Both degrees measure how far the block-diagonal part `ρ_b` of a state is
//! from the convex set of unpolarized states `σ_b = Σ_N π_N P_N/(N+1)`.
//! Because `ρ_b` and every `σ_b` commute, the Rényi overlap
//! `Q_s = Tr(ρ_b^s σ_b^{1-s})` reduces to
//!
//! ```text
//! Q_s = Σ_N p_N^s ξ_N(s) (π_N / (N+1))^{1-s}
//! ```
//!
//! whose maximum over `π` is available in closed form for `s > 0`. The
//! Chernoff degree is `1 - min_s max_π Q_s`; the Bures degree is the same
//! construction frozen at `s = 1/2`.
//!
//! The general (non-commuting) overlaps on dense density matrices live here
//! too; they serve as independent oracles for the closed forms and power
//! the discrimination report of the CLI.

use std::collections::BTreeMap;

use crate::error::{check_exponent, Error, Result};
use crate::fock::{self, TwoModeState, UnpolarizedWeights};
use crate::linalg::{self, log_sum_exp, pow0, CMatrix, RANK_TOL};
use crate::minimize::{self, Minimum};
use crate::spectral::{self, SpectralData};

/// An interior candidate must beat the closed `s = 0` value by more than
/// this to be reported as an interior saddle point.
pub const BOUNDARY_SLACK: f64 = 1e-12;

/// Outcome of the Chernoff-degree optimization.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernoffResult {
    /// Minimizing exponent `s̃`.
    pub s_opt: f64,
    /// Chernoff overlap `Q̃` with the closest unpolarized state.
    pub overlap: f64,
    /// `P_C = 1 - Q̃`.
    pub degree: f64,
    /// Weights `π̃` of the closest unpolarized state at `s̃`.
    pub optimal_weights: UnpolarizedWeights,
    /// The minimum sits on the `s = 0` boundary.
    pub boundary_case: bool,
}

impl ChernoffResult {
    pub(crate) fn new(s_opt: f64, overlap: f64, optimal_weights: UnpolarizedWeights, boundary_case: bool) -> Self {
        Self {
            s_opt,
            overlap,
            degree: 1.0 - overlap,
            optimal_weights,
            boundary_case,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BuresResult {
    /// `P_B = 1 - √F`.
    pub degree: f64,
    /// Maximal fidelity `F(ρ_b, σ̃_b)` over unpolarized states.
    pub fidelity: f64,
    pub optimal_weights: UnpolarizedWeights,
}

/// `Q_s(ρ_b, σ_b)` for the unpolarized state with weights `π`.
///
/// Manifolds with zero probability on either side never contribute, also at
/// the endpoints `s = 0` and `s = 1`.
pub fn renyi_overlap_unpolarized(spec: &SpectralData, weights: &UnpolarizedWeights, s: f64) -> Result<f64> {
    check_exponent(s)?;
    Ok(spec
        .manifolds()
        .iter()
        .map(|m| {
            let dim = (m.photons() + 1) as f64;
            m.weight().powf(s) * m.xi_unchecked(s) * pow0(weights.get(m.photons()) / dim, 1.0 - s)
        })
        .sum())
}

/// Log of the unnormalized optimal weight `p_N ξ_N^{1/s} (N+1)^{1-1/s}`.
fn log_optimal_terms(spec: &SpectralData, s: f64) -> Vec<(usize, f64)> {
    spec.manifolds()
        .iter()
        .map(|m| {
            let ln_dim = ((m.photons() + 1) as f64).ln();
            let t = m.weight().ln() + m.xi_unchecked(s).ln() / s + (1.0 - 1.0 / s) * ln_dim;
            (m.photons(), t)
        })
        .collect()
}

/// Weights `π̃(s)` of the unpolarized state maximizing `Q_s`, for `s > 0`.
pub fn optimal_weights(spec: &SpectralData, s: f64) -> Result<UnpolarizedWeights> {
    check_exponent(s)?;
    if s == 0.0 {
        return Err(Error::domain("s", s, "(0, 1]; use optimal_weights_at_zero"));
    }
    let terms = log_optimal_terms(spec, s);
    let logs: Vec<f64> = terms.iter().map(|&(_, t)| t).collect();
    let norm = log_sum_exp(&logs);
    let weights: BTreeMap<usize, f64> = terms.into_iter().map(|(n, t)| (n, (t - norm).exp().min(1.0))).collect();
    UnpolarizedWeights::new(weights)
}

/// `Ñ = argmax_N ν_N/(N+1)` (smallest `N` on ties) and the limiting
/// overlap `ν_Ñ/(Ñ+1)` at `s = 0`.
pub fn optimal_weights_at_zero(spec: &SpectralData) -> (UnpolarizedWeights, f64) {
    let mut best: Option<(usize, f64)> = None;
    for m in spec.manifolds() {
        let ratio = m.rank() as f64 / (m.photons() + 1) as f64;
        if best.is_none_or(|(_, r)| ratio > r) {
            best = Some((m.photons(), ratio));
        }
    }
    let (n, ratio) = best.expect("spectral data is never empty");
    (UnpolarizedWeights::single(n), ratio)
}

/// `max_π Q_s(ρ_b, σ_b)`.
///
/// For `s > 0` this is `[Σ_N p_N (N+1) (ξ_N(s)/(N+1))^{1/s}]^s`, summed in
/// the log domain; at `s = 0` it is `max_N ν_N/(N+1)`, the continuous limit.
pub fn max_overlap(spec: &SpectralData, s: f64) -> Result<f64> {
    check_exponent(s)?;
    Ok(max_overlap_unchecked(spec, s))
}

fn max_overlap_unchecked(spec: &SpectralData, s: f64) -> f64 {
    if s == 0.0 {
        return optimal_weights_at_zero(spec).1;
    }
    let logs: Vec<f64> = spec
        .manifolds()
        .iter()
        .map(|m| {
            let ln_dim = ((m.photons() + 1) as f64).ln();
            m.weight().ln() + ln_dim + (m.xi_unchecked(s).ln() - ln_dim) / s
        })
        .collect();
    (s * log_sum_exp(&logs)).exp()
}

/// Whether a minimum over `s` should be reported as the `s = 0` endpoint,
/// given the closed-form value at zero. Flat objectives, such as the
/// vacuum's, tie at every `s` and go to the endpoint.
pub(crate) fn is_boundary(min: &Minimum, zero_value: f64) -> bool {
    min.s == 0.0 || min.value >= zero_value - BOUNDARY_SLACK
}

/// Chernoff degree of polarization from precomputed spectra.
pub fn chernoff_from_spectra(spec: &SpectralData) -> ChernoffResult {
    let (zero_weights, zero_value) = optimal_weights_at_zero(spec);
    let min = minimize::minimize_unit_interval(|s| max_overlap_unchecked(spec, s));
    let Minimum { s, value } = min;
    if is_boundary(&min, zero_value) {
        ChernoffResult::new(0.0, zero_value, zero_weights, true)
    } else {
        let weights = optimal_weights(spec, s).expect("s lies in (0, 1]");
        ChernoffResult::new(s, value.min(1.0), weights, false)
    }
}

/// `P_C(ρ) = 1 - min_s max_π Q_s(ρ_b, σ_b)`, with the saddle point.
pub fn chernoff_degree(state: &TwoModeState) -> Result<ChernoffResult> {
    Ok(chernoff_from_spectra(&spectral::state_spectra(state)?))
}

/// Bures degree of polarization from precomputed spectra.
pub fn bures_from_spectra(spec: &SpectralData) -> BuresResult {
    let fidelity: f64 = spec
        .manifolds()
        .iter()
        .map(|m| m.weight() / (m.photons() + 1) as f64 * m.xi_unchecked(0.5).powi(2))
        .sum::<f64>()
        .min(1.0);
    BuresResult {
        degree: 1.0 - fidelity.sqrt(),
        fidelity,
        optimal_weights: optimal_weights(spec, 0.5).expect("s = 1/2 is in range"),
    }
}

/// `P_B(ρ) = 1 - √(Σ_N p_N ξ_N(1/2)² / (N+1))`.
pub fn bures_degree(state: &TwoModeState) -> Result<BuresResult> {
    Ok(bures_from_spectra(&spectral::state_spectra(state)?))
}

/// Eigen-data of a density-matrix pair, enough to evaluate every `Q_s`.
#[derive(Debug, Clone)]
pub struct OverlapKernel {
    rho_values: Vec<f64>,
    sigma_values: Vec<f64>,
    /// `|⟨e_i|f_j⟩|²`, row-major in `(i, j)`.
    transition: Vec<f64>,
}

fn check_density_matrix(m: &CMatrix, label: &str) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            left: m.nrows(),
            right: m.ncols(),
        });
    }
    let herm = linalg::hermiticity_defect(m);
    if herm > fock::HERMITIAN_TOL {
        return Err(Error::InvalidState(format!("{label}: hermiticity defect {herm:.3e}")));
    }
    let tr = linalg::trace(m).re;
    if (tr - 1.0).abs() > fock::NORM_TOL {
        return Err(Error::InvalidState(format!(
            "{label}: trace defect {:.3e}",
            (tr - 1.0).abs()
        )));
    }
    Ok(())
}

fn positive_part(values: &[f64], label: &str) -> Result<Vec<f64>> {
    if let Some(&v) = values.iter().find(|&&v| v < -fock::PSD_TOL) {
        return Err(Error::InvalidState(format!("{label}: negative eigenvalue {v:.3e}")));
    }
    let max = values.iter().copied().fold(0.0, f64::max);
    Ok(values
        .iter()
        .map(|&v| if v <= RANK_TOL * max { 0.0 } else { v })
        .collect())
}

impl OverlapKernel {
    pub fn new(rho: &CMatrix, sigma: &CMatrix) -> Result<Self> {
        check_density_matrix(rho, "rho")?;
        check_density_matrix(sigma, "sigma")?;
        if rho.nrows() != sigma.nrows() {
            return Err(Error::DimensionMismatch {
                left: rho.nrows(),
                right: sigma.nrows(),
            });
        }
        let er = linalg::hermitian_eigen(rho);
        let es = linalg::hermitian_eigen(sigma);
        let rho_values = positive_part(&er.values, "rho")?;
        let sigma_values = positive_part(&es.values, "sigma")?;
        let overlaps = er.vectors.adjoint() * &es.vectors;
        let dim = rho.nrows();
        let transition = (0..dim * dim)
            .map(|k| overlaps[(k / dim, k % dim)].norm_sqr())
            .collect();
        Ok(Self {
            rho_values,
            sigma_values,
            transition,
        })
    }

    /// `Tr(ρ^s σ^{1-s}) = Σ_ij a_i^s b_j^{1-s} |⟨e_i|f_j⟩|²`.
    pub fn renyi(&self, s: f64) -> f64 {
        let dim = self.rho_values.len();
        let mut total = 0.0;
        for (i, &a) in self.rho_values.iter().enumerate() {
            let ai = pow0(a, s);
            if ai == 0.0 {
                continue;
            }
            for (j, &b) in self.sigma_values.iter().enumerate() {
                total += ai * pow0(b, 1.0 - s) * self.transition[i * dim + j];
            }
        }
        total
    }
}

/// Quantum Rényi overlap `Tr(ρ^s σ^{1-s})` of two density matrices.
pub fn general_renyi_overlap(rho: &CMatrix, sigma: &CMatrix, s: f64) -> Result<f64> {
    check_exponent(s)?;
    Ok(OverlapKernel::new(rho, sigma)?.renyi(s))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffOverlap {
    /// `Q = min_s Tr(ρ^s σ^{1-s})`.
    pub overlap: f64,
    pub s_opt: f64,
    /// Quantum Chernoff bound exponent `ξ_QCB = -ln Q`.
    pub exponent: f64,
}

/// Quantum Chernoff overlap of two density matrices.
pub fn chernoff_overlap_general(rho: &CMatrix, sigma: &CMatrix) -> Result<ChernoffOverlap> {
    let kernel = OverlapKernel::new(rho, sigma)?;
    let Minimum { s, value } = minimize::minimize_unit_interval(|s| kernel.renyi(s));
    let overlap = value.clamp(0.0, 1.0);
    Ok(ChernoffOverlap {
        overlap,
        s_opt: s,
        // -ln 1 would print as -0
        exponent: if overlap == 1.0 { 0.0 } else { -overlap.ln() },
    })
}

/// Minimal single-copy error probability `(1 - ‖ρ - σ‖₁/2) / 2` for
/// equiprobable hypotheses.
pub fn single_copy_error_probability(rho: &CMatrix, sigma: &CMatrix) -> Result<f64> {
    if rho.shape() != sigma.shape() {
        return Err(Error::DimensionMismatch {
            left: rho.nrows(),
            right: sigma.nrows(),
        });
    }
    let norm = linalg::trace_norm_hermitian(&(rho - sigma));
    Ok(((1.0 - norm / 2.0) / 2.0).max(0.0))
}

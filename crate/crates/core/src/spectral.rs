//! Per-manifold spectra and the sums `ξ_N(s) = Σ_n λ_{N,n}^s`.

use crate::error::{check_exponent, Error, Result};
use crate::fock::{self, BlockDiagonalState, TwoModeState, PSD_TOL};
use crate::linalg::{self, pow0, RANK_TOL};

/// Spectrum of the normalized block `ρ^(N) / p_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifoldSpectrum {
    photons: usize,
    weight: f64,
    eigenvalues: Vec<f64>,
    rank: usize,
}

impl ManifoldSpectrum {
    /// Takes raw eigenvalues of the normalized block, clamps round-off
    /// negatives, zeroes everything below the rank tolerance and sorts
    /// descending. Padded with zeros up to `N + 1` entries.
    pub fn new(photons: usize, weight: f64, eigenvalues: &[f64]) -> Result<Self> {
        if !(weight > 0.0 && weight <= 1.0 + fock::NORM_TOL) {
            return Err(Error::InvalidState(format!(
                "manifold N = {photons} has weight {weight}"
            )));
        }
        if eigenvalues.len() > photons + 1 {
            return Err(Error::DimensionMismatch {
                left: eigenvalues.len(),
                right: photons + 1,
            });
        }
        if let Some(&bad) = eigenvalues.iter().find(|&&v| v < -PSD_TOL || !v.is_finite()) {
            return Err(Error::InvalidState(format!(
                "block N = {photons}: negative eigenvalue {bad:.3e}"
            )));
        }
        let mut values: Vec<f64> = eigenvalues.iter().map(|&v| v.clamp(0.0, 1.0)).collect();
        values.resize(photons + 1, 0.0);
        values.sort_by(|a, b| b.total_cmp(a));
        let cutoff = RANK_TOL * values[0];
        for v in values.iter_mut() {
            if *v <= cutoff {
                *v = 0.0;
            }
        }
        let rank = values.iter().filter(|&&v| v > 0.0).count();
        if rank == 0 {
            return Err(Error::InvalidState(format!("block N = {photons} is zero")));
        }
        Ok(Self {
            photons,
            weight,
            eigenvalues: values,
            rank,
        })
    }

    pub fn photons(&self) -> usize {
        self.photons
    }

    /// `p_N`.
    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// `λ_{N,n}`, descending, length `N + 1`.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// `ν_N`, the number of positive eigenvalues.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `ξ_N(s)` without the range check. At `s = 0` this is the rank.
    pub fn xi_unchecked(&self, s: f64) -> f64 {
        self.eigenvalues.iter().map(|&l| pow0(l, s)).sum()
    }

    pub fn xi(&self, s: f64) -> Result<f64> {
        check_exponent(s)?;
        Ok(self.xi_unchecked(s))
    }
}

/// Photon-number distribution and block spectra of a block-diagonal state.
/// Everything the polarization degrees depend on.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    manifolds: Vec<ManifoldSpectrum>,
}

impl SpectralData {
    pub fn new(mut manifolds: Vec<ManifoldSpectrum>) -> Result<Self> {
        if manifolds.is_empty() {
            return Err(Error::InvalidState("no populated manifold".into()));
        }
        manifolds.sort_by_key(ManifoldSpectrum::photons);
        if manifolds.windows(2).any(|w| w[0].photons == w[1].photons) {
            return Err(Error::InvalidState("duplicate manifold in spectra".into()));
        }
        Ok(Self { manifolds })
    }

    pub fn manifolds(&self) -> &[ManifoldSpectrum] {
        &self.manifolds
    }

    pub fn manifold(&self, photons: usize) -> Option<&ManifoldSpectrum> {
        self.manifolds.iter().find(|m| m.photons == photons)
    }

    /// `ξ_N(s)` for a stored manifold.
    pub fn xi(&self, photons: usize, s: f64) -> Result<f64> {
        self.manifold(photons)
            .ok_or_else(|| Error::InvalidState(format!("manifold N = {photons} is not populated")))?
            .xi(s)
    }
}

/// Diagonalizes every block of a block-diagonal state.
pub fn spectra(state: &BlockDiagonalState) -> Result<SpectralData> {
    fock::validate(&state.clone().into()).into_result()?;
    let manifolds = state
        .blocks()
        .iter()
        .map(|b| {
            let p = b.weight();
            let eig = linalg::hermitian_eigen(b.matrix());
            let normalized: Vec<f64> = eig.values.iter().map(|v| v / p).collect();
            ManifoldSpectrum::new(b.photons(), p, &normalized)
        })
        .collect::<Result<Vec<_>>>()?;
    SpectralData::new(manifolds)
}

/// Block-diagonalizes any state, then diagonalizes its blocks.
pub fn state_spectra(state: &TwoModeState) -> Result<SpectralData> {
    spectra(&fock::block_diagonalize(state)?)
}

//! Stokes operators and SU(2) polarization transformations.
//!
//! A polarization transformation never mixes manifolds, so everything is
//! done one `(N+1)`-dimensional block at a time in the `|n, N-n⟩` basis.

use num_complex::Complex64;

use crate::error::Result;
use crate::fock::{self, BlockDiagonalState, ManifoldBlock, TwoModeState, UnpolarizedWeights};
use crate::linalg::{self, CMatrix};

/// Euler angles `(φ, θ, ψ)` in radians. Any finite values are allowed.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EulerAngles {
    pub phi: f64,
    pub theta: f64,
    pub psi: f64,
}

impl EulerAngles {
    pub fn new(phi: f64, theta: f64, psi: f64) -> Self {
        Self { phi, theta, psi }
    }
}

/// The three Stokes operators restricted to the `N`-photon manifold.
#[derive(Debug, Clone, PartialEq)]
pub struct StokesBlock {
    pub photons: usize,
    pub s1: CMatrix,
    pub s2: CMatrix,
    pub s3: CMatrix,
}

/// Builds `S1 = a_H† a_V + a_H a_V†`, `S2 = -i(a_H† a_V - a_H a_V†)` and
/// `S3 = a_H† a_H - a_V† a_V` on the basis `|n, N-n⟩`, `n = 0..=N`.
pub fn stokes_block(photons: usize) -> StokesBlock {
    let dim = photons + 1;
    let zero = Complex64::new(0.0, 0.0);
    let mut s1 = CMatrix::from_element(dim, dim, zero);
    let mut s2 = CMatrix::from_element(dim, dim, zero);
    let mut s3 = CMatrix::from_element(dim, dim, zero);
    for n in 0..dim {
        s3[(n, n)] = Complex64::new(2.0 * n as f64 - photons as f64, 0.0);
        if n < photons {
            // a_H† a_V |n, N-n⟩ = √((n+1)(N-n)) |n+1, N-n-1⟩
            let amp = (((n + 1) * (photons - n)) as f64).sqrt();
            s1[(n + 1, n)] = Complex64::new(amp, 0.0);
            s1[(n, n + 1)] = Complex64::new(amp, 0.0);
            s2[(n + 1, n)] = Complex64::new(0.0, -amp);
            s2[(n, n + 1)] = Complex64::new(0.0, amp);
        }
    }
    StokesBlock { photons, s1, s2, s3 }
}

/// `exp(-iφS3/2) exp(-iθS2/2) exp(-iψS3/2)` on the `N`-photon manifold.
pub fn polarization_unitary(photons: usize, angles: EulerAngles) -> CMatrix {
    let stokes = stokes_block(photons);
    // S3 is diagonal, so its exponential is taken entrywise.
    let diag_phase = |angle: f64| {
        CMatrix::from_fn(photons + 1, photons + 1, |i, j| {
            if i == j {
                Complex64::from_polar(1.0, -angle / 2.0 * stokes.s3[(i, i)].re)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    };
    let middle = linalg::unitary_exp(&stokes.s2, angles.theta / 2.0);
    diag_phase(angles.phi) * middle * diag_phase(angles.psi)
}

/// Applies `U_pol` to a state, manifold by manifold.
///
/// Pure states stay pure (amplitudes rotate as `U_N c_N`, which also carries
/// the cross-manifold coherences along); blocks go to `U_N ρ^(N) U_N†`.
pub fn transform_state(state: &TwoModeState, angles: EulerAngles) -> Result<TwoModeState> {
    fock::validate(state).into_result()?;
    Ok(match state {
        TwoModeState::Pure(p) => TwoModeState::Pure(p.map_manifolds(|n, amps| {
            let u = polarization_unitary(n, angles);
            let v = nalgebra::DVector::from_column_slice(amps);
            (u * v).iter().copied().collect()
        })),
        TwoModeState::BlockDiagonal(b) => TwoModeState::BlockDiagonal(b.map_blocks(|blk| {
            let u = polarization_unitary(blk.photons(), angles);
            &u * blk.matrix() * u.adjoint()
        })),
    })
}

/// The SU(2)-invariant state `Σ_N π_N P_N / (N+1)`.
pub fn unpolarized_state(weights: &UnpolarizedWeights) -> TwoModeState {
    let blocks = weights
        .iter()
        .filter(|&(_, w)| w > 0.0)
        .map(|(n, w)| {
            let m = CMatrix::from_diagonal_element(n + 1, n + 1, Complex64::new(w / (n + 1) as f64, 0.0));
            ManifoldBlock::new(n, m).expect("square block of the right size")
        })
        .collect();
    BlockDiagonalState::new(blocks)
        .expect("weights map has unique keys")
        .into()
}

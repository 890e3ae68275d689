//! Random states for property tests, acceptance runs and demos.
//!
//! Blocks are drawn as normalized `G G†` with a complex Gaussian
//! `(N+1)×r` matrix `G`, which gives rank exactly `r` almost surely.
//! Manifold weights are flat-Dirichlet.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::seq::index::sample;
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::fock::{BlockDiagonalState, ManifoldBlock, PureAmplitudes, TwoModeState, UnpolarizedWeights};
use crate::linalg::{self, CMatrix};
use crate::su2::EulerAngles;

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

/// Flat-Dirichlet weights of length `k`, every entry strictly positive.
pub fn dirichlet<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<f64> {
    let draws: Vec<f64> = (0..k).map(|_| Exp1.sample(rng)).map(|x: f64| x + 1e-9).collect();
    let total: f64 = draws.iter().sum();
    draws.into_iter().map(|x| x / total).collect()
}

/// Distinct sorted photon numbers in `0..=max_photons`, between 1 and
/// `max_manifolds` of them.
pub fn manifold_set<R: Rng + ?Sized>(rng: &mut R, max_manifolds: usize, max_photons: usize) -> Vec<usize> {
    let pool = max_photons + 1;
    let k = rng.random_range(1..=max_manifolds.min(pool).max(1));
    let mut ns = sample(rng, pool, k).into_vec();
    ns.sort_unstable();
    ns
}

/// Trace-one density matrix of dimension `dim` and rank `rank`.
pub fn density_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> CMatrix {
    let g = CMatrix::from_fn(dim, rank, |_, _| gaussian(rng));
    let m = &g * g.adjoint();
    let tr = linalg::trace(&m).re;
    m.unscale(tr)
}

/// Block-diagonal state on random manifolds with random block ranks.
pub fn block_state<R: Rng + ?Sized>(rng: &mut R, max_manifolds: usize, max_photons: usize) -> BlockDiagonalState {
    let ns = manifold_set(rng, max_manifolds, max_photons);
    let ws = dirichlet(rng, ns.len());
    let blocks = ns
        .iter()
        .zip(&ws)
        .map(|(&n, &w)| {
            let rank = rng.random_range(1..=n + 1);
            ManifoldBlock::new(n, density_matrix(rng, n + 1, rank).scale(w)).expect("square block")
        })
        .collect();
    BlockDiagonalState::new(blocks).expect("distinct manifolds")
}

/// Pure state with Gaussian amplitudes on a random set of manifolds.
pub fn pure_state<R: Rng + ?Sized>(rng: &mut R, max_manifolds: usize, max_photons: usize) -> PureAmplitudes {
    let ns = manifold_set(rng, max_manifolds, max_photons);
    let mut entries = Vec::new();
    for &big_n in &ns {
        for n in 0..=big_n {
            entries.push((big_n, n, gaussian(rng)));
        }
    }
    let norm = entries.iter().map(|e| e.2.norm_sqr()).sum::<f64>().sqrt();
    PureAmplitudes::new(entries.into_iter().map(|(a, b, z)| (a, b, z / norm))).expect("well-formed amplitudes")
}

pub fn euler_angles<R: Rng + ?Sized>(rng: &mut R) -> EulerAngles {
    let tau = std::f64::consts::TAU;
    EulerAngles::new(
        rng.random_range(-tau..tau),
        rng.random_range(-tau..tau),
        rng.random_range(-tau..tau),
    )
}

pub fn unpolarized_weights<R: Rng + ?Sized>(
    rng: &mut R,
    max_manifolds: usize,
    max_photons: usize,
) -> UnpolarizedWeights {
    let ns = manifold_set(rng, max_manifolds, max_photons);
    let ws = dirichlet(rng, ns.len());
    UnpolarizedWeights::new(ns.into_iter().zip(ws).collect::<BTreeMap<_, _>>()).expect("dirichlet weights sum to one")
}

/// Either a pure or a block-diagonal random state, with equal odds.
pub fn state<R: Rng + ?Sized>(rng: &mut R, max_manifolds: usize, max_photons: usize) -> TwoModeState {
    if rng.random_bool(0.5) {
        pure_state(rng, max_manifolds, max_photons).into()
    } else {
        block_state(rng, max_manifolds, max_photons).into()
    }
}

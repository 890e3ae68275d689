//! Cross-checks against independent brute-force routes: dense projections,
//! dense eigendecompositions and grid searches.

use std::collections::BTreeMap;

use num_complex::Complex64;
use qpol::fock::{self, dense_dimension, manifold_offset, TwoModeState};
use qpol::linalg::{self, max_abs_diff, CMatrix};
use qpol::polarization::{self, chernoff_overlap_general, general_renyi_overlap};
use qpol::spectral;
use qpol::su2;
use qpol::{random, UnpolarizedWeights};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Projects a dense density matrix onto each manifold by slicing.
fn dense_projection(rho: &CMatrix, truncation: usize) -> Vec<(usize, CMatrix)> {
    assert_eq!(rho.nrows(), dense_dimension(truncation));
    (0..=truncation)
        .map(|n| {
            let off = manifold_offset(n);
            (n, rho.view((off, off), (n + 1, n + 1)).into_owned())
        })
        .collect()
}

#[test]
fn block_diagonalize_matches_dense_projection() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..50 {
        // two manifolds with coherences between them
        let pure = random::pure_state(&mut rng, 2, 4);
        let state: TwoModeState = pure.clone().into();
        let t = state.truncation();
        let dense = state.to_dense(t).unwrap();
        let bd = fock::block_diagonalize(&state).unwrap();
        for (n, block) in dense_projection(&dense, t) {
            match bd.block(n) {
                Some(b) => assert!(max_abs_diff(b.matrix(), &block) < 1e-14),
                None => assert!(block.iter().all(|z| z.norm() < 1e-12)),
            }
        }
    }
}

#[test]
fn manifold_probabilities_match_amplitude_sums() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..50 {
        let pure = random::pure_state(&mut rng, 4, 6);
        let mut direct: BTreeMap<usize, f64> = BTreeMap::new();
        for (n, amps) in pure.manifolds() {
            for a in amps {
                *direct.entry(n).or_default() += a.re * a.re + a.im * a.im;
            }
        }
        let probs = fock::manifold_probabilities(&pure.into()).unwrap();
        assert_eq!(probs.len(), direct.len());
        for (n, p) in probs {
            assert!((p - direct[&n]).abs() < 1e-14);
        }
    }
}

#[test]
fn transform_preserves_block_spectra() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..50 {
        let state: TwoModeState = random::block_state(&mut rng, 4, 6).into();
        let angles = random::euler_angles(&mut rng);
        let moved = su2::transform_state(&state, angles).unwrap();
        let (TwoModeState::BlockDiagonal(a), TwoModeState::BlockDiagonal(b)) = (&state, &moved) else {
            panic!("block-diagonal stays block-diagonal")
        };
        for (x, y) in a.blocks().iter().zip(b.blocks()) {
            let ex = linalg::hermitian_eigen(x.matrix()).values;
            let ey = linalg::hermitian_eigen(y.matrix()).values;
            for (u, v) in ex.iter().zip(&ey) {
                assert!((u - v).abs() < 1e-10);
            }
            assert!((x.weight() - y.weight()).abs() < 1e-14);
        }
    }
}

#[test]
fn rotating_by_pi_twice_keeps_spectra() {
    let state = qpol::families::SuperpositionFamily::new(1, 2, 0.1).unwrap().to_state();
    let angles = qpol::EulerAngles::new(std::f64::consts::PI, 0.0, 0.0);
    let twice = su2::transform_state(&su2::transform_state(&state, angles).unwrap(), angles).unwrap();
    let a = spectral::state_spectra(&state).unwrap();
    let b = spectral::state_spectra(&twice).unwrap();
    for (x, y) in a.manifolds().iter().zip(b.manifolds()) {
        for (u, v) in x.eigenvalues().iter().zip(y.eigenvalues()) {
            assert!((u - v).abs() < 1e-12);
        }
    }
}

#[test]
fn unpolarized_states_are_invariant() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..30 {
        let w = random::unpolarized_weights(&mut rng, 5, 8);
        let state = su2::unpolarized_state(&w);
        let moved = su2::transform_state(&state, random::euler_angles(&mut rng)).unwrap();
        let t = state.truncation();
        assert!(max_abs_diff(&state.to_dense(t).unwrap(), &moved.to_dense(t).unwrap()) < 1e-10);
    }
}

#[test]
fn block_overlap_matches_dense_overlap() {
    let mut rng = StdRng::seed_from_u64(15);
    for _ in 0..50 {
        let rho_b = random::block_state(&mut rng, 4, 5);
        let spec = spectral::spectra(&rho_b).unwrap();
        let w = random::unpolarized_weights(&mut rng, 4, 5);
        let s: f64 = rng.random();
        let t = rho_b.truncation().max(w.as_map().keys().copied().max().unwrap());
        let rho = TwoModeState::from(rho_b).to_dense(t).unwrap();
        let sigma = su2::unpolarized_state(&w).to_dense(t).unwrap();
        let closed = polarization::renyi_overlap_unpolarized(&spec, &w, s).unwrap();
        let dense = general_renyi_overlap(&rho, &sigma, s).unwrap();
        assert!((closed - dense).abs() < 1e-10, "{closed} vs {dense}");
    }
}

/// Exhaustive search of max over π1 on a grid, then min over s, for
/// two-manifold states. Checks the minimax identity numerically.
#[test]
fn saddle_point_matches_grid_search() {
    let mut rng = StdRng::seed_from_u64(16);
    for _ in 0..10 {
        let n1 = rng.random_range(0..3usize);
        let n2 = n1 + rng.random_range(1..3usize);
        let p: f64 = rng.random_range(0.05..0.95);
        let r1 = rng.random_range(1..=n1 + 1);
        let r2 = rng.random_range(1..=n2 + 1);
        let b1 = qpol::ManifoldBlock::new(n1, random::density_matrix(&mut rng, n1 + 1, r1).scale(p)).unwrap();
        let b2 = qpol::ManifoldBlock::new(n2, random::density_matrix(&mut rng, n2 + 1, r2).scale(1.0 - p)).unwrap();
        let spec = spectral::spectra(&qpol::BlockDiagonalState::new(vec![b1, b2]).unwrap()).unwrap();
        let q = |s: f64, pi: f64| {
            let w = UnpolarizedWeights::new(BTreeMap::from([(n1, pi), (n2, 1.0 - pi)])).unwrap();
            polarization::renyi_overlap_unpolarized(&spec, &w, s).unwrap()
        };
        let pis: Vec<f64> = (0..=400).map(|k| k as f64 / 400.0).collect();
        let ss: Vec<f64> = (0..=400).map(|k| k as f64 / 400.0).collect();
        let min_max = ss
            .iter()
            .map(|&s| pis.iter().map(|&pi| q(s, pi)).fold(f64::MIN, f64::max))
            .fold(f64::MAX, f64::min);
        let max_min = pis
            .iter()
            .map(|&pi| ss.iter().map(|&s| q(s, pi)).fold(f64::MAX, f64::min))
            .fold(f64::MIN, f64::max);
        let r = polarization::chernoff_from_spectra(&spec);
        assert!((min_max - r.overlap).abs() < 2e-3, "{min_max} vs {}", r.overlap);
        assert!((max_min - r.overlap).abs() < 2e-3, "{max_min} vs {}", r.overlap);
    }
}

#[test]
fn chernoff_overlap_matches_scalar_grid() {
    let mut rng = StdRng::seed_from_u64(17);
    let grid: Vec<f64> = (0..=2000).map(|k| k as f64 / 2000.0).collect();
    let check = |rho: &CMatrix, sigma: &CMatrix| {
        let q = chernoff_overlap_general(rho, sigma).unwrap();
        let brute = grid
            .iter()
            .map(|&s| general_renyi_overlap(rho, sigma, s).unwrap())
            .fold(f64::MAX, f64::min);
        assert!((q.overlap - brute).abs() < 1e-6, "{} vs {brute}", q.overlap);
        assert!(q.overlap <= brute + 1e-12);
    };
    let diag = |a: f64, b: f64| {
        CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::new(a, 0.0),
            Complex64::new(b, 0.0),
        ]))
    };
    check(&diag(0.9, 0.1), &diag(0.5, 0.5));
    for _ in 0..50 {
        let r1 = rng.random_range(1..=2);
        let r2 = rng.random_range(1..=2);
        let a = random::density_matrix(&mut rng, 2, r1);
        let b = random::density_matrix(&mut rng, 2, r2);
        check(&a, &b);
    }
}

#[test]
fn closest_unpolarized_state_reproduces_chernoff_overlap() {
    // At the saddle point, min_s Q_s(ρ_b, σ̃) is the Chernoff overlap itself.
    let state = qpol::families::SuperpositionFamily::new(1, 2, 0.1).unwrap().to_state();
    let r = polarization::chernoff_degree(&state).unwrap();
    let rho_b: TwoModeState = fock::block_diagonalize(&state).unwrap().into();
    let sigma = su2::unpolarized_state(&r.optimal_weights);
    let q = chernoff_overlap_general(&rho_b.to_dense(2).unwrap(), &sigma.to_dense(2).unwrap()).unwrap();
    assert!((q.overlap - r.overlap).abs() < 1e-8);
    assert!((q.overlap - 0.431).abs() < 1e-3);
}

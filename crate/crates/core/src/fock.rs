//! Two-mode states in the photon-number-ordered Fock basis.
//!
//! The basis of the `N`-photon manifold is `|n, N-n⟩` for `n = 0..=N`, where
//! `n` counts horizontal photons. A state is either a pure amplitude vector
//! (which may carry coherences between manifolds) or a block-diagonal mixture
//! of one Hermitian block per manifold.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

/// Tolerance on `Σ p_N = 1` and on pure-state normalization.
pub const NORM_TOL: f64 = 1e-9;
/// Entrywise tolerance on `|M - M†| / 2`.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Most negative eigenvalue accepted as round-off.
pub const PSD_TOL: f64 = 1e-10;
/// Manifolds lighter than this are dropped (never renormalized).
pub const DROP_WEIGHT: f64 = 1e-12;

/// Amplitudes `c_{N,n}` of a pure two-mode state, grouped by manifold.
#[derive(Debug, Clone, PartialEq)]
pub struct PureAmplitudes {
    manifolds: BTreeMap<usize, Vec<Complex64>>,
}

impl PureAmplitudes {
    /// Builds from `(N, n, c_{N,n})` triples. Missing entries are zero.
    ///
    /// Only structure is checked here (`n <= N`, no duplicate keys);
    /// normalization is reported by [`validate`].
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Complex64)>,
    {
        let mut manifolds: BTreeMap<usize, Vec<Complex64>> = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for (big_n, n, amp) in entries {
            if n > big_n {
                return Err(Error::InvalidState(format!(
                    "amplitude index n = {n} exceeds N = {big_n}"
                )));
            }
            if !seen.insert((big_n, n)) {
                return Err(Error::InvalidState(format!(
                    "duplicate amplitude for (N, n) = ({big_n}, {n})"
                )));
            }
            if !amp.re.is_finite() || !amp.im.is_finite() {
                return Err(Error::InvalidState(format!(
                    "non-finite amplitude at (N, n) = ({big_n}, {n})"
                )));
            }
            manifolds
                .entry(big_n)
                .or_insert_with(|| vec![Complex64::new(0.0, 0.0); big_n + 1])[n] = amp;
        }
        Ok(Self { manifolds })
    }

    /// The normalized-or-not amplitude vector of one manifold.
    pub fn manifold(&self, big_n: usize) -> Option<&[Complex64]> {
        self.manifolds.get(&big_n).map(Vec::as_slice)
    }

    pub fn manifolds(&self) -> impl Iterator<Item = (usize, &[Complex64])> {
        self.manifolds.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    pub fn amplitude(&self, big_n: usize, n: usize) -> Complex64 {
        self.manifolds
            .get(&big_n)
            .and_then(|v| v.get(n).copied())
            .unwrap_or_default()
    }

    /// Largest manifold index present.
    pub fn truncation(&self) -> usize {
        self.manifolds.keys().next_back().copied().unwrap_or(0)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.manifolds.values().map(|v| manifold_weight(v)).sum()
    }

    pub(crate) fn map_manifolds(&self, mut f: impl FnMut(usize, &[Complex64]) -> Vec<Complex64>) -> Self {
        Self {
            manifolds: self.manifolds.iter().map(|(&k, v)| (k, f(k, v))).collect(),
        }
    }
}

fn manifold_weight(amps: &[Complex64]) -> f64 {
    amps.iter().map(Complex64::norm_sqr).sum()
}

/// The `(N+1)×(N+1)` block `ρ^(N)` of one excitation manifold. Its trace is
/// the manifold probability `p_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifoldBlock {
    photons: usize,
    matrix: CMatrix,
}

impl ManifoldBlock {
    pub fn new(photons: usize, matrix: CMatrix) -> Result<Self> {
        let dim = photons + 1;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::InvalidState(format!(
                "block N = {photons} must be {dim}x{dim}, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if matrix.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidState(format!(
                "block N = {photons} has non-finite entries"
            )));
        }
        Ok(Self { photons, matrix })
    }

    /// Rank-one block `|c⟩⟨c|` from an unnormalized amplitude vector.
    pub fn from_amplitudes(photons: usize, amps: &[Complex64]) -> Result<Self> {
        let v = nalgebra::DVector::from_column_slice(amps);
        Self::new(photons, &v * v.adjoint())
    }

    pub fn photons(&self) -> usize {
        self.photons
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// `p_N = Σ_n ρ_nn^(N)`.
    pub fn weight(&self) -> f64 {
        self.matrix.diagonal().iter().map(|z| z.re).sum()
    }
}

/// A block-diagonal state `ρ_b = Σ_N ρ^(N)`.
///
/// Blocks are kept sorted by photon number with at most one block per
/// manifold. Manifolds lighter than [`DROP_WEIGHT`] are removed at
/// construction and their mass is kept in `discarded_mass`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockDiagonalState {
    blocks: Vec<ManifoldBlock>,
    discarded_mass: f64,
}

impl BlockDiagonalState {
    pub fn new(mut blocks: Vec<ManifoldBlock>) -> Result<Self> {
        blocks.sort_by_key(ManifoldBlock::photons);
        if let Some(w) = blocks.windows(2).find(|w| w[0].photons == w[1].photons) {
            return Err(Error::InvalidState(format!(
                "manifold N = {} appears more than once",
                w[0].photons
            )));
        }
        let mut discarded_mass = 0.0;
        blocks.retain(|b| {
            let w = b.weight();
            if w.abs() < DROP_WEIGHT {
                discarded_mass += w;
                false
            } else {
                true
            }
        });
        Ok(Self { blocks, discarded_mass })
    }

    pub fn blocks(&self) -> &[ManifoldBlock] {
        &self.blocks
    }

    pub fn block(&self, photons: usize) -> Option<&ManifoldBlock> {
        self.blocks
            .binary_search_by_key(&photons, ManifoldBlock::photons)
            .ok()
            .map(|i| &self.blocks[i])
    }

    pub fn discarded_mass(&self) -> f64 {
        self.discarded_mass
    }

    pub fn truncation(&self) -> usize {
        self.blocks.last().map_or(0, ManifoldBlock::photons)
    }

    pub(crate) fn map_blocks(&self, mut f: impl FnMut(&ManifoldBlock) -> CMatrix) -> Self {
        Self {
            blocks: self
                .blocks
                .iter()
                .map(|b| ManifoldBlock {
                    photons: b.photons,
                    matrix: f(b),
                })
                .collect(),
            discarded_mass: self.discarded_mass,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TwoModeState {
    Pure(PureAmplitudes),
    BlockDiagonal(BlockDiagonalState),
}

impl From<BlockDiagonalState> for TwoModeState {
    fn from(s: BlockDiagonalState) -> Self {
        TwoModeState::BlockDiagonal(s)
    }
}

impl From<PureAmplitudes> for TwoModeState {
    fn from(s: PureAmplitudes) -> Self {
        TwoModeState::Pure(s)
    }
}

impl TwoModeState {
    /// The Fock state `|h, v⟩` with `h` horizontal and `v` vertical photons.
    pub fn fock(h: usize, v: usize) -> Self {
        TwoModeState::Pure(
            PureAmplitudes::new([(h + v, h, Complex64::new(1.0, 0.0))]).expect("single amplitude is well formed"),
        )
    }

    pub fn vacuum() -> Self {
        Self::fock(0, 0)
    }

    /// Largest manifold index with stored support.
    pub fn truncation(&self) -> usize {
        match self {
            TwoModeState::Pure(p) => p.truncation(),
            TwoModeState::BlockDiagonal(b) => b.truncation(),
        }
    }

    /// Full density matrix on manifolds `0..=truncation`, ordered by `N`
    /// then `n`. Pure states keep their cross-manifold coherences.
    pub fn to_dense(&self, truncation: usize) -> Result<CMatrix> {
        let required = self.truncation();
        if required > truncation {
            return Err(Error::TruncationTooSmall { truncation, required });
        }
        let dim = dense_dimension(truncation);
        match self {
            TwoModeState::Pure(p) => {
                let mut psi = nalgebra::DVector::zeros(dim);
                for (big_n, amps) in p.manifolds() {
                    let off = manifold_offset(big_n);
                    for (n, a) in amps.iter().enumerate() {
                        psi[off + n] = *a;
                    }
                }
                Ok(&psi * psi.adjoint())
            }
            TwoModeState::BlockDiagonal(b) => {
                let mut rho = CMatrix::zeros(dim, dim);
                for block in b.blocks() {
                    let off = manifold_offset(block.photons());
                    rho.view_mut((off, off), (block.photons() + 1, block.photons() + 1))
                        .copy_from(block.matrix());
                }
                Ok(rho)
            }
        }
    }
}

/// Dimension of the space spanned by manifolds `0..=truncation`.
pub fn dense_dimension(truncation: usize) -> usize {
    (truncation + 1) * (truncation + 2) / 2
}

/// Row of `|0, N⟩` in the dense ordering used by [`TwoModeState::to_dense`].
pub fn manifold_offset(photons: usize) -> usize {
    photons * (photons + 1) / 2
}

/// Photon-number distribution `{π_N}` of an SU(2)-invariant state.
#[derive(Debug, Clone, PartialEq)]
pub struct UnpolarizedWeights {
    weights: BTreeMap<usize, f64>,
}

impl UnpolarizedWeights {
    pub fn new(weights: BTreeMap<usize, f64>) -> Result<Self> {
        for (&n, &w) in &weights {
            if !(0.0..=1.0).contains(&w) {
                return Err(Error::InvalidState(format!("weight pi_{n} = {w} is outside [0, 1]")));
            }
        }
        let total: f64 = weights.values().sum();
        if (total - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!(
                "unpolarized weights sum to {total}, trace defect {:.3e}",
                (total - 1.0).abs()
            )));
        }
        Ok(Self { weights })
    }

    /// All weight on a single manifold.
    pub fn single(photons: usize) -> Self {
        Self {
            weights: BTreeMap::from([(photons, 1.0)]),
        }
    }

    /// `π_N`, zero when absent.
    pub fn get(&self, photons: usize) -> f64 {
        self.weights.get(&photons).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.weights.iter().map(|(&k, &v)| (k, v))
    }

    pub fn as_map(&self) -> &BTreeMap<usize, f64> {
        &self.weights
    }
}

/// Per-block diagnostics produced by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct BlockDiagnostics {
    pub photons: usize,
    pub weight: f64,
    pub hermiticity_defect: f64,
    pub min_eigenvalue: f64,
    /// Imaginary part of the block trace.
    pub trace_imaginary: f64,
}

impl BlockDiagnostics {
    pub fn passed(&self) -> bool {
        self.hermiticity_defect <= HERMITIAN_TOL
            && self.min_eigenvalue >= -PSD_TOL
            && self.trace_imaginary.abs() <= HERMITIAN_TOL
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub blocks: Vec<BlockDiagnostics>,
    /// `|Σ_N p_N - 1|`, including any dropped mass.
    pub trace_defect: f64,
    pub discarded_mass: f64,
    pub passed: bool,
}

impl ValidationReport {
    /// Human-readable reason for the first failing invariant.
    pub fn failure(&self) -> Option<String> {
        for b in &self.blocks {
            if b.hermiticity_defect > HERMITIAN_TOL {
                return Some(format!(
                    "block N = {}: hermiticity defect {:.3e}",
                    b.photons, b.hermiticity_defect
                ));
            }
            if b.min_eigenvalue < -PSD_TOL {
                return Some(format!(
                    "block N = {}: negative eigenvalue {:.3e}",
                    b.photons, b.min_eigenvalue
                ));
            }
            if b.trace_imaginary.abs() > HERMITIAN_TOL {
                return Some(format!(
                    "block N = {}: complex trace, imaginary part {:.3e}",
                    b.photons, b.trace_imaginary
                ));
            }
        }
        if self.trace_defect > NORM_TOL {
            return Some(format!("total trace defect {:.3e}", self.trace_defect));
        }
        None
    }

    pub fn into_result(self) -> Result<()> {
        match self.failure() {
            None => Ok(()),
            Some(msg) => Err(Error::InvalidState(msg)),
        }
    }
}

/// Checks every fock invariant without failing; see [`ValidationReport`].
pub fn validate(state: &TwoModeState) -> ValidationReport {
    let (blocks, discarded_mass) = match state {
        TwoModeState::Pure(p) => {
            let blocks = p
                .manifolds()
                .map(|(n, amps)| BlockDiagnostics {
                    photons: n,
                    weight: manifold_weight(amps),
                    hermiticity_defect: 0.0,
                    min_eigenvalue: 0.0,
                    trace_imaginary: 0.0,
                })
                .collect::<Vec<_>>();
            (blocks, 0.0)
        }
        TwoModeState::BlockDiagonal(b) => {
            let blocks = b
                .blocks()
                .iter()
                .map(|blk| {
                    let eig = linalg::hermitian_eigen(blk.matrix());
                    BlockDiagnostics {
                        photons: blk.photons(),
                        weight: blk.weight(),
                        hermiticity_defect: linalg::hermiticity_defect(blk.matrix()),
                        min_eigenvalue: eig.values.last().copied().unwrap_or(0.0),
                        trace_imaginary: linalg::trace(blk.matrix()).im,
                    }
                })
                .collect::<Vec<_>>();
            (blocks, b.discarded_mass())
        }
    };
    let total: f64 = blocks.iter().map(|b| b.weight).sum::<f64>() + discarded_mass;
    let trace_defect = (total - 1.0).abs();
    let passed = trace_defect <= NORM_TOL && blocks.iter().all(BlockDiagnostics::passed);
    ValidationReport {
        blocks,
        trace_defect,
        discarded_mass,
        passed,
    }
}

/// Applies the non-selective total-photon-number measurement
/// `ρ ↦ Σ_N P_N ρ P_N`, discarding every cross-manifold coherence.
///
/// Block-diagonal inputs come back unchanged.
pub fn block_diagonalize(state: &TwoModeState) -> Result<BlockDiagonalState> {
    validate(state).into_result()?;
    match state {
        TwoModeState::BlockDiagonal(b) => Ok(b.clone()),
        TwoModeState::Pure(p) => {
            let blocks = p
                .manifolds()
                .map(|(n, amps)| ManifoldBlock::from_amplitudes(n, amps))
                .collect::<Result<Vec<_>>>()?;
            BlockDiagonalState::new(blocks)
        }
    }
}

/// `p_N = Tr(ρ P_N)` for every manifold above [`DROP_WEIGHT`].
pub fn manifold_probabilities(state: &TwoModeState) -> Result<BTreeMap<usize, f64>> {
    Ok(block_diagonalize(state)?
        .blocks()
        .iter()
        .map(|b| (b.photons(), b.weight()))
        .collect())
}

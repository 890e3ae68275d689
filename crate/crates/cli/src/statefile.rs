//! State files: JSON documents tagged by `kind`.
//!
//! ```json
//! { "kind": "pure",
//!   "amplitudes": [ { "N": 1, "n": 1, "re": 0.316, "im": 0.0 } ] }
//!
//! { "kind": "block-diagonal",
//!   "blocks": [ { "N": 1, "matrix": [[[0.5, 0.0], [0.0, 0.0]],
//!                                    [[0.0, 0.0], [0.5, 0.0]]] } ] }
//! ```
//!
//! Block matrices are unnormalized, with trace `p_N`. `n` counts photons in
//! the first mode. Unknown fields are rejected.

use std::path::Path;

use num_complex::Complex64;
use qpol::linalg::CMatrix;
use qpol::{fock, BlockDiagonalState, ManifoldBlock, PureAmplitudes, TwoModeState};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum StateFile {
    #[serde(rename = "pure")]
    Pure { amplitudes: Vec<AmplitudeEntry> },
    #[serde(rename = "block-diagonal")]
    BlockDiagonal { blocks: Vec<BlockEntry> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmplitudeEntry {
    #[serde(rename = "N")]
    pub photons: usize,
    pub n: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockEntry {
    #[serde(rename = "N")]
    pub photons: usize,
    /// Rows of `[re, im]` pairs.
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl StateFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("state files always serialize");
        s.push('\n');
        s
    }

    /// Builds the state, reporting malformed structure as a parse error.
    /// Physical invariants are not checked here; see [`load_state`].
    pub fn to_state(&self) -> CliResult<TwoModeState> {
        let structural = |e: qpol::Error| CliError::Parse(e.to_string());
        match self {
            StateFile::Pure { amplitudes } => {
                let entries = amplitudes.iter().map(|a| (a.photons, a.n, Complex64::new(a.re, a.im)));
                Ok(PureAmplitudes::new(entries).map_err(structural)?.into())
            }
            StateFile::BlockDiagonal { blocks } => {
                let blocks = blocks
                    .iter()
                    .map(|b| {
                        let dim = b.photons + 1;
                        if b.matrix.len() != dim || b.matrix.iter().any(|row| row.len() != dim) {
                            return Err(CliError::Parse(format!(
                                "block N = {} must be a {dim}x{dim} matrix",
                                b.photons
                            )));
                        }
                        let m = CMatrix::from_fn(dim, dim, |i, j| {
                            let [re, im] = b.matrix[i][j];
                            Complex64::new(re, im)
                        });
                        ManifoldBlock::new(b.photons, m).map_err(structural)
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(BlockDiagonalState::new(blocks).map_err(structural)?.into())
            }
        }
    }

    pub fn from_state(state: &TwoModeState) -> Self {
        match state {
            TwoModeState::Pure(p) => StateFile::Pure {
                amplitudes: p
                    .manifolds()
                    .flat_map(|(big_n, amps)| {
                        amps.iter().enumerate().map(move |(n, a)| AmplitudeEntry {
                            photons: big_n,
                            n,
                            re: a.re,
                            im: a.im,
                        })
                    })
                    .collect(),
            },
            TwoModeState::BlockDiagonal(b) => StateFile::BlockDiagonal {
                blocks: b
                    .blocks()
                    .iter()
                    .map(|blk| BlockEntry {
                        photons: blk.photons(),
                        matrix: blk
                            .matrix()
                            .row_iter()
                            .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
                            .collect(),
                    })
                    .collect(),
            },
        }
    }
}

/// Reads, parses and validates a state file.
pub fn load_state(path: &Path) -> CliResult<TwoModeState> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let state = StateFile::parse(&text)
        .and_then(|f| f.to_state())
        .map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })?;
    if let Some(msg) = fock::validate(&state).failure() {
        return Err(CliError::Invariant(format!("{}: {msg}", path.display())));
    }
    Ok(state)
}

pub fn write_state(path: &Path, state: &TwoModeState) -> CliResult<()> {
    std::fs::write(path, StateFile::from_state(state).to_json())
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

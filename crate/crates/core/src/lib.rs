//! Distance-type degrees of polarization for two-mode quantum light.
//!
//! A two-mode state is first reduced to its block-diagonal part `ρ_b`, one
//! block per total photon number. Its degree of polarization is one minus
//! the largest overlap it can have with an unpolarized (SU(2)-invariant)
//! state, where the overlap is either the quantum Chernoff overlap
//! (`P_C`) or the square root of the Uhlmann fidelity (`P_B`). Both only
//! depend on the photon-number distribution `p_N` and the eigenvalues of
//! each normalized block, and always satisfy `P_C >= P_B`.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`fock`] | states, blocks, the block-diagonalizing channel, validation |
//! | [`su2`] | Stokes operators, polarization unitaries, unpolarized states |
//! | [`spectral`] | block spectra, ranks and `ξ_N(s)` |
//! | [`polarization`] | Rényi/Chernoff overlaps, `P_C`, `P_B`, dense oracles |
//! | [`families`] | closed forms for two-manifold superpositions and mixtures |
//!
//! ```
//! use qpol::{families::SuperpositionFamily, polarization::chernoff_degree};
//!
//! let state = SuperpositionFamily::new(1, 2, 0.1).unwrap().to_state();
//! let r = chernoff_degree(&state).unwrap();
//! assert!((r.degree - 0.569).abs() < 1e-3);
//! ```

pub mod error;
pub mod families;
pub mod fock;
pub mod linalg;
pub mod minimize;
pub mod polarization;
pub mod random;
pub mod spectral;
pub mod su2;

pub use error::{Error, Result};
pub use fock::{BlockDiagonalState, ManifoldBlock, PureAmplitudes, TwoModeState, UnpolarizedWeights};
pub use polarization::{BuresResult, ChernoffResult};
pub use spectral::SpectralData;
pub use su2::EulerAngles;

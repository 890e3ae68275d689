//! WebAssembly bindings for the static demo page in `www/`.
//!
//! A [`Family`] is built from the page's form and answers three queries:
//! the Rényi surface `Q(s, π1)`, the degree sweep over `p`, and the saddle
//! point. Results cross the boundary as flat `f64` arrays.

use qpol::families::{self, MixtureFamily, SuperpositionFamily};
use qpol::ChernoffResult;
use wasm_bindgen::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind {
    Superposition { n1: usize, n2: usize },
    Mixture { alpha: f64, beta: f64, gamma: f64 },
}

enum Member {
    Superposition(SuperpositionFamily),
    Mixture(MixtureFamily),
}

/// Width of one [`Family::sweep`] row: `p, P_C, P_B, s_opt, boundary`.
pub const SWEEP_COLUMNS: usize = 5;

/// A worked family at a fixed mixing probability `p`.
#[wasm_bindgen]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Family {
    kind: Kind,
    p: f64,
}

fn member(kind: Kind, p: f64) -> Result<Member, String> {
    let err = |e: qpol::Error| e.to_string();
    Ok(match kind {
        Kind::Superposition { n1, n2 } => Member::Superposition(SuperpositionFamily::new(n1, n2, p).map_err(err)?),
        Kind::Mixture { alpha, beta, gamma } => {
            Member::Mixture(MixtureFamily::new(p, alpha, beta, gamma).map_err(err)?)
        }
    })
}

impl Member {
    fn renyi(&self, s: f64, pi1: f64) -> f64 {
        match self {
            Member::Superposition(f) => families::superposition_renyi(f, s, pi1),
            Member::Mixture(f) => families::mixture_renyi(f, s, pi1),
        }
        .expect("grid nodes lie in [0, 1]")
    }

    fn degrees(&self) -> (ChernoffResult, f64, usize) {
        match self {
            Member::Superposition(f) => (
                families::superposition_chernoff(f),
                families::superposition_bures(f),
                f.n1(),
            ),
            Member::Mixture(f) => {
                let (c, b) = families::mixture_degrees(f);
                (c, b.degree, 1)
            }
        }
    }
}

impl Family {
    pub fn try_superposition(n1: usize, n2: usize, p: f64) -> Result<Family, String> {
        let kind = Kind::Superposition { n1, n2 };
        member(kind, p)?;
        Ok(Family { kind, p })
    }

    pub fn try_mixture(p: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Family, String> {
        let kind = Kind::Mixture { alpha, beta, gamma };
        member(kind, p)?;
        Ok(Family { kind, p })
    }

    fn current(&self) -> Member {
        member(self.kind, self.p).expect("validated at construction")
    }

    /// `Q(s_i, π1_j)` at index `i * grid + j`, both axes uniform on `[0, 1]`.
    pub fn surface_values(&self, grid: usize) -> Result<Vec<f64>, String> {
        if grid < 2 {
            return Err(format!("grid must be at least 2, got {grid}"));
        }
        let m = self.current();
        let step = 1.0 / (grid - 1) as f64;
        Ok((0..grid * grid)
            .map(|k| m.renyi((k / grid) as f64 * step, (k % grid) as f64 * step))
            .collect())
    }

    /// Rows of [`SWEEP_COLUMNS`] values over `points` uniform `p ∈ [0, 1]`;
    /// the family's own `p` is ignored.
    pub fn sweep_values(&self, points: usize) -> Result<Vec<f64>, String> {
        if points < 2 {
            return Err(format!("points must be at least 2, got {points}"));
        }
        let mut out = Vec::with_capacity(points * SWEEP_COLUMNS);
        for k in 0..points {
            let p = k as f64 / (points - 1) as f64;
            let (c, pb, _) = member(self.kind, p)?.degrees();
            out.extend([p, c.degree, pb, c.s_opt, f64::from(u8::from(c.boundary_case))]);
        }
        Ok(out)
    }

    /// `[s̃, π̃1, Q̃, P_C, P_B, boundary]`.
    pub fn saddle_values(&self) -> Vec<f64> {
        let (c, pb, n1) = self.current().degrees();
        vec![
            c.s_opt,
            c.optimal_weights.get(n1),
            c.overlap,
            c.degree,
            pb,
            f64::from(u8::from(c.boundary_case)),
        ]
    }
}

#[wasm_bindgen]
impl Family {
    /// `√p |N1, 0⟩ + √(1-p) |N2, 0⟩`.
    pub fn superposition(n1: usize, n2: usize, p: f64) -> Result<Family, JsError> {
        Family::try_superposition(n1, n2, p).map_err(|e| JsError::new(&e))
    }

    /// `p diag(α, 1-α) ⊕ (1-p) diag(β, γ, 1-β-γ)`.
    pub fn mixture(p: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Family, JsError> {
        Family::try_mixture(p, alpha, beta, gamma).map_err(|e| JsError::new(&e))
    }

    pub fn surface(&self, grid: usize) -> Result<Vec<f64>, JsError> {
        self.surface_values(grid).map_err(|e| JsError::new(&e))
    }

    pub fn sweep(&self, points: usize) -> Result<Vec<f64>, JsError> {
        self.sweep_values(points).map_err(|e| JsError::new(&e))
    }

    pub fn saddle(&self) -> Vec<f64> {
        self.saddle_values()
    }
}

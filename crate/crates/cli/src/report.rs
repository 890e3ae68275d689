//! Structured reports behind `--json`. Shapes are pinned by the schemas in
//! `schemas/`.

use qpol::{BuresResult, ChernoffResult, UnpolarizedWeights};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Weight {
    #[serde(rename = "N")]
    pub photons: usize,
    pub weight: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Probability {
    #[serde(rename = "N")]
    pub photons: usize,
    pub p: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChernoffReport {
    pub degree: f64,
    pub s_opt: f64,
    pub overlap: f64,
    pub boundary_case: bool,
    pub optimal_weights: Vec<Weight>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BuresReport {
    pub degree: f64,
    pub fidelity: f64,
    pub optimal_weights: Vec<Weight>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub manifold_probabilities: Vec<Probability>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chernoff: Option<ChernoffReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bures: Option<BuresReport>,
}

/// `exponent` is `null` when the states are perfectly distinguishable.
#[derive(Debug, Clone, Serialize)]
pub struct DiscriminateReport {
    pub truncation: usize,
    pub error_probability: f64,
    pub chernoff_overlap: f64,
    pub exponent: Option<f64>,
    pub s_opt: f64,
}

pub fn weights(w: &UnpolarizedWeights) -> Vec<Weight> {
    w.iter().map(|(photons, weight)| Weight { photons, weight }).collect()
}

impl From<&ChernoffResult> for ChernoffReport {
    fn from(r: &ChernoffResult) -> Self {
        ChernoffReport {
            degree: r.degree,
            s_opt: r.s_opt,
            overlap: r.overlap,
            boundary_case: r.boundary_case,
            optimal_weights: weights(&r.optimal_weights),
        }
    }
}

impl From<&BuresResult> for BuresReport {
    fn from(r: &BuresResult) -> Self {
        BuresReport {
            degree: r.degree,
            fidelity: r.fidelity,
            optimal_weights: weights(&r.optimal_weights),
        }
    }
}

/// Fixed 12-decimal rendering for human-readable output, without `-0`.
pub fn fixed(x: f64) -> String {
    let s = format!("{x:.12}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

impl DegreeReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let probs: Vec<String> = self
            .manifold_probabilities
            .iter()
            .map(|p| format!("p[{}] = {}", p.photons, fixed(p.p)))
            .collect();
        out.push_str(&format!("manifolds: {}\n", probs.join(", ")));
        let list = |ws: &[Weight]| {
            ws.iter()
                .map(|w| format!("pi[{}] = {}", w.photons, fixed(w.weight)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        if let Some(c) = &self.chernoff {
            out.push_str(&format!("P_C = {}, s = {}\n", fixed(c.degree), fixed(c.s_opt)));
            out.push_str(&format!("  Q = {}, boundary = {}\n", fixed(c.overlap), c.boundary_case));
            out.push_str(&format!("  closest unpolarized: {}\n", list(&c.optimal_weights)));
        }
        if let Some(b) = &self.bures {
            out.push_str(&format!("P_B = {}, F = {}\n", fixed(b.degree), fixed(b.fidelity)));
            out.push_str(&format!(
                "  closest unpolarized (s = 1/2): {}\n",
                list(&b.optimal_weights)
            ));
        }
        out
    }
}

impl DiscriminateReport {
    pub fn to_text(&self) -> String {
        let exponent = self.exponent.map_or_else(|| "inf".to_string(), fixed);
        format!(
            "error probability = {}\nQ = {}\nxi_QCB = {}\ns = {}\n",
            fixed(self.error_probability),
            fixed(self.chernoff_overlap),
            exponent,
            fixed(self.s_opt)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_drops_negative_zero() {
        assert_eq!(fixed(-0.0), "0.000000000000");
        assert_eq!(fixed(-1e-16), "0.000000000000");
        assert_eq!(fixed(-0.25), "-0.250000000000");
    }
}

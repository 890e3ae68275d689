//! Minimization of a scalar function over `s ∈ [0, 1]`.
//!
//! A uniform scan picks the best grid node, then golden-section search
//! refines inside the two neighbouring cells. The endpoints take part in the
//! scan as ordinary candidates, so monotone objectives end on the boundary.

/// Grid nodes of the initial scan, endpoints included.
pub const SCAN_POINTS: usize = 201;
/// Golden-section stops once the bracket is narrower than this.
pub const BRACKET_TOL: f64 = 1e-10;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub s: f64,
    pub value: f64,
}

/// Minimizes `f` on `[0, 1]`. Ties keep the smallest `s` seen by the scan.
///
/// Global for unimodal objectives (every Rényi overlap here is log-convex
/// in `s`); otherwise a local minimum near the best scan node.
pub fn minimize_unit_interval(f: impl Fn(f64) -> f64) -> Minimum {
    minimize_with(f, SCAN_POINTS, BRACKET_TOL)
}

pub fn minimize_with(f: impl Fn(f64) -> f64, scan_points: usize, tol: f64) -> Minimum {
    assert!(scan_points >= 2, "scan needs both endpoints");
    let last = scan_points - 1;
    let node = |k: usize| k as f64 / last as f64;

    let mut best = Minimum { s: 0.0, value: f(0.0) };
    let mut best_k = 0;
    for k in 1..scan_points {
        let v = f(node(k));
        if v < best.value {
            best = Minimum { s: node(k), value: v };
            best_k = k;
        }
    }

    let mut lo = node(best_k.saturating_sub(1));
    let mut hi = node((best_k + 1).min(last));
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    for (x, v) in [(x1, f1), (x2, f2)] {
        if v < best.value {
            best = Minimum { s: x, value: v };
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_parabola() {
        let m = minimize_unit_interval(|s| (s - 0.3712).powi(2) + 1.0);
        assert!((m.s - 0.3712).abs() < 1e-7);
        assert!((m.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn increasing_function_stays_at_zero() {
        let m = minimize_unit_interval(|s| 0.5 + s);
        assert_eq!(m.s, 0.0);
        assert_eq!(m.value, 0.5);
    }

    #[test]
    fn decreasing_function_reaches_one() {
        let m = minimize_unit_interval(|s| 2.0 - s * s);
        assert!((1.0 - m.s) < 1e-9);
        assert!((m.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn constant_function_prefers_zero() {
        let m = minimize_unit_interval(|_| 0.25);
        assert_eq!(m.s, 0.0);
    }

    #[test]
    fn minimum_between_scan_nodes() {
        // Narrow well centred between two nodes of the 201-point scan.
        let c = 0.5025;
        let m = minimize_unit_interval(|s| ((s - c) / 1e-3).powi(2));
        assert!((m.s - c).abs() < 1e-8);
    }
}

//! CSV grids for the worked families: the Rényi surface over `(s, π1)` and
//! the degree sweep over `p`.
//!
//! Rows are computed on a rayon pool and collected in order, so the output
//! is identical for any thread count.

use qpol::families::{self, MixtureFamily, SuperpositionFamily};
use qpol::ChernoffResult;
use rayon::prelude::*;

use crate::error::{CliError, CliResult};

/// Decimal with 16 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.15e}")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Superposition { n1: usize, n2: usize },
    Mixture { alpha: f64, beta: f64, gamma: f64 },
}

impl Family {
    fn describe(&self) -> String {
        match *self {
            Family::Superposition { n1, n2 } => format!("# family=superposition,n1={n1},n2={n2}"),
            Family::Mixture { alpha, beta, gamma } => {
                format!("# family=mixture,alpha={alpha},beta={beta},gamma={gamma}")
            }
        }
    }

    /// Checks the parameters once, at `p = 0.5`, before any grid work.
    pub fn check(&self) -> CliResult<()> {
        self.at(0.5).map(|_| ())
    }

    fn at(&self, p: f64) -> CliResult<Member> {
        Ok(match *self {
            Family::Superposition { n1, n2 } => Member::Superposition(SuperpositionFamily::new(n1, n2, p)?),
            Family::Mixture { alpha, beta, gamma } => Member::Mixture(MixtureFamily::new(p, alpha, beta, gamma)?),
        })
    }
}

enum Member {
    Superposition(SuperpositionFamily),
    Mixture(MixtureFamily),
}

impl Member {
    fn renyi(&self, s: f64, pi1: f64) -> f64 {
        match self {
            Member::Superposition(f) => families::superposition_renyi(f, s, pi1),
            Member::Mixture(f) => families::mixture_renyi(f, s, pi1),
        }
        .expect("grid nodes lie in [0, 1]")
    }

    /// Chernoff result, Bures degree, and the photon number carrying `π1`.
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

fn pool(threads: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Io(e.to_string()))
}

fn node(k: usize, count: usize) -> f64 {
    k as f64 / (count - 1) as f64
}

/// `s,pi1,Q` over an `m × m` grid on `[0, 1]²`, `s` varying slowest, then
/// a comment row with the saddle point.
pub fn surface(family: Family, p: f64, m: usize, threads: usize) -> CliResult<String> {
    if m < 2 {
        return Err(CliError::InvalidParams(format!("--grid must be at least 2, got {m}")));
    }
    let member = family.at(p)?;
    let rows: Vec<String> = pool(threads)?.install(|| {
        (0..m * m)
            .into_par_iter()
            .map(|k| {
                let s = node(k / m, m);
                let pi1 = node(k % m, m);
                format!("{},{},{}", num(s), num(pi1), num(member.renyi(s, pi1)))
            })
            .collect()
    });
    let (c, _, n1) = member.degrees();
    let mut out = String::from("s,pi1,Q\n");
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out.push_str(&family.describe());
    out.push_str(&format!(",p={p}\n"));
    out.push_str(&format!(
        "# saddle s={},pi1={},Q={},P_C={},boundary={}\n",
        num(c.s_opt),
        num(c.optimal_weights.get(n1)),
        num(c.overlap),
        num(c.degree),
        c.boundary_case
    ));
    Ok(out)
}

/// `p,P_C,P_B,s_opt,boundary_flag` at `k` uniform values of `p ∈ [0, 1]`.
pub fn sweep(family: Family, k: usize, threads: usize) -> CliResult<String> {
    if k < 2 {
        return Err(CliError::InvalidParams(format!("--points must be at least 2, got {k}")));
    }
    family.check()?;
    let rows: Vec<CliResult<String>> = pool(threads)?.install(|| {
        (0..k)
            .into_par_iter()
            .map(|i| {
                let p = node(i, k);
                let (c, pb, _) = family.at(p)?.degrees();
                Ok(format!(
                    "{},{},{},{},{}",
                    num(p),
                    num(c.degree),
                    num(pb),
                    num(c.s_opt),
                    u8::from(c.boundary_case)
                ))
            })
            .collect()
    });
    let mut out = String::from("p,P_C,P_B,s_opt,boundary_flag\n");
    for r in rows {
        out.push_str(&r?);
        out.push('\n');
    }
    out.push_str(&family.describe());
    out.push('\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG: Family = Family::Superposition { n1: 1, n2: 2 };

    #[test]
    fn corners_only_for_grid_two() {
        let out = surface(FIG, 0.1, 2, 1).unwrap();
        let data: Vec<&str> = out.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
        assert_eq!(data.len(), 4);
    }

    #[test]
    fn sweep_endpoints_are_exact() {
        let out = sweep(FIG, 11, 1).unwrap();
        let rows: Vec<Vec<f64>> = out
            .lines()
            .skip(1)
            .filter(|l| !l.starts_with('#'))
            .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows.len(), 11);
        assert!((rows[0][1] - 2.0 / 3.0).abs() < 1e-15);
        assert!((rows[10][1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_small_grids() {
        assert!(matches!(surface(FIG, 0.1, 1, 1), Err(CliError::InvalidParams(_))));
        assert!(matches!(sweep(FIG, 1, 1), Err(CliError::InvalidParams(_))));
    }

    #[test]
    fn numbers_carry_sixteen_digits() {
        assert_eq!(num(0.1), "1.000000000000000e-1");
    }
}

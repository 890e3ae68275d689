//! Acceptance suite: one PASS/FAIL line per criterion, failing sub-checks
//! listed underneath. Exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use qpol::families::{self, MixtureFamily, SuperpositionFamily};
use qpol::fock::{self, PureAmplitudes, TwoModeState};
use qpol::linalg::CMatrix;
use qpol::polarization::{self, chernoff_overlap_general, general_renyi_overlap};
use qpol::spectral::{self, SpectralData};
use qpol::{random, su2};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Check {
    label: String,
    ok: bool,
    detail: String,
}

#[derive(Default)]
struct Criterion {
    checks: Vec<Check>,
}

impl Criterion {
    fn check(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            ok,
            detail: detail.into(),
        });
    }

    /// `|got - want| <= tol`.
    fn near(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        self.check(
            label,
            (got - want).abs() <= tol,
            format!("{got:.9} vs {want} ± {tol:e}"),
        );
    }

    fn within(&mut self, label: &str, elapsed: Duration, limit: Duration) {
        self.check(label, elapsed < limit, format!("{elapsed:?} (limit {limit:?})"));
    }

    /// Records the worst case of a repeated check as one entry.
    fn worst(&mut self, label: &str, worst: f64, tol: f64) {
        self.check(label, worst < tol, format!("worst {worst:.3e} (limit {tol:e})"));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

fn time<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn spectra_of(state: &TwoModeState) -> SpectralData {
    spectral::state_spectra(state).expect("valid state")
}

fn degrees(state: &TwoModeState) -> (f64, f64) {
    let spec = spectra_of(state);
    (
        polarization::chernoff_from_spectra(&spec).degree,
        polarization::bures_from_spectra(&spec).degree,
    )
}

fn superposition_saddle() -> Criterion {
    let mut c = Criterion::default();
    let (r, elapsed) = time(|| {
        let state = SuperpositionFamily::new(1, 2, 0.1).unwrap().to_state();
        polarization::chernoff_degree(&state).unwrap()
    });
    c.near("s~", r.s_opt, 0.124, 1e-3);
    c.near("pi1~", r.optimal_weights.get(1), 0.634, 1e-3);
    c.near("Q~", r.overlap, 0.431, 1e-3);
    c.near("P_C", r.degree, 0.569, 1e-3);
    c.within("runtime", elapsed, Duration::from_secs(1));
    c
}

fn mixture_saddle() -> Criterion {
    let mut c = Criterion::default();
    let ((r, b), elapsed) = time(|| {
        let state = MixtureFamily::new(0.1, 0.1, 0.01, 0.04).unwrap().to_state();
        let spec = spectra_of(&state);
        (
            polarization::chernoff_from_spectra(&spec),
            polarization::bures_from_spectra(&spec),
        )
    });
    c.near("s~", r.s_opt, 0.434, 1e-3);
    c.near("pi1~", r.optimal_weights.get(1), 0.209, 1e-3);
    c.near("Q~", r.overlap, 0.544, 1e-3);
    c.near("P_C", r.degree, 0.251, 1e-3);
    c.near("P_B", b.degree, 0.247, 1e-3);
    c.within("runtime", elapsed, Duration::from_secs(1));
    c
}

fn closed_form_exactness() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = StdRng::seed_from_u64(3);
    let (mut worst_c, mut worst_b) = (0.0f64, 0.0f64);
    let mut all_boundary = true;
    for big_n in 0..=10usize {
        let want_c = big_n as f64 / (big_n + 1) as f64;
        let want_b = 1.0 - 1.0 / ((big_n + 1) as f64).sqrt();
        // every Fock state of the manifold plus random superpositions in it
        let mut states: Vec<TwoModeState> = (0..=big_n).map(|n| TwoModeState::fock(n, big_n - n)).collect();
        for _ in 0..5 {
            let amps: Vec<Complex64> = (0..=big_n)
                .map(|_| Complex64::new(rng.random(), rng.random()))
                .collect();
            let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            let entries = amps.iter().enumerate().map(|(n, a)| (big_n, n, a / norm));
            states.push(PureAmplitudes::new(entries).unwrap().into());
        }
        for s in &states {
            let spec = spectra_of(s);
            let r = polarization::chernoff_from_spectra(&spec);
            all_boundary &= r.boundary_case;
            worst_c = worst_c.max((r.degree - want_c).abs());
            worst_b = worst_b.max((polarization::bures_from_spectra(&spec).degree - want_b).abs());
        }
    }
    c.worst("P_C = N/(N+1)", worst_c, 1e-9);
    c.check("boundary_case", all_boundary, "set for every N-photon pure state");
    c.worst("P_B = 1 - (N+1)^-1/2", worst_b, 1e-12);
    c
}

fn plateau() -> Criterion {
    let mut c = Criterion::default();
    let points: Vec<(f64, f64, f64)> = (0..=1000)
        .map(|k| {
            let p = k as f64 / 1000.0;
            let fam = SuperpositionFamily::new(1, 2, p).unwrap();
            (
                p,
                families::superposition_chernoff(&fam).degree,
                families::superposition_bures(&fam),
            )
        })
        .collect();
    let plateau = points
        .iter()
        .filter(|(p, _, _)| (0.5..=0.999).contains(p))
        .map(|(_, pc, _)| (pc - 0.5).abs())
        .fold(0.0, f64::max);
    c.worst("max|P_C - 1/2| on [0.5, 0.999]", plateau, 1e-9);
    let outside: Vec<f64> = points
        .iter()
        .filter(|(p, pc, _)| *p > 0.0 && *p < 0.5 && !(*pc > 0.5 && *pc < 2.0 / 3.0))
        .map(|(p, _, _)| *p)
        .collect();
    c.check(
        "P_C in (1/2, 2/3) for p in (0, 0.5)",
        outside.is_empty(),
        format!("violations at p = {outside:?}"),
    );
    let rising = points.windows(2).filter(|w| w[1].2 >= w[0].2).count();
    c.check(
        "P_B strictly decreasing",
        rising == 0,
        format!("{rising} non-decreasing steps"),
    );
    c
}

fn ordering() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = StdRng::seed_from_u64(5);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..1000 {
        let (pc, pb) = degrees(&random::block_state(&mut rng, 5, 8).into());
        worst = worst.max(pb - pc);
    }
    c.check(
        "P_C >= P_B - 1e-9 on 1000 states",
        worst <= 1e-9,
        format!("max(P_B - P_C) = {worst:.3e}"),
    );
    c
}

fn invariance() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = StdRng::seed_from_u64(6);
    let (mut worst_c, mut worst_b) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let state = random::state(&mut rng, 5, 8);
        let moved = su2::transform_state(&state, random::euler_angles(&mut rng)).unwrap();
        let (a, b) = (degrees(&state), degrees(&moved));
        worst_c = worst_c.max((a.0 - b.0).abs());
        worst_b = worst_b.max((a.1 - b.1).abs());
    }
    c.worst("|dP_C|", worst_c, 1e-9);
    c.worst("|dP_B|", worst_b, 1e-9);
    c
}

fn oracle_equivalence() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = StdRng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let rho_b = random::block_state(&mut rng, 4, 5);
        let spec = spectral::spectra(&rho_b).unwrap();
        let t = rho_b.truncation();
        let rho = TwoModeState::from(rho_b).to_dense(t).unwrap();
        for k in 0..=20 {
            let s = k as f64 / 20.0;
            let w = if s == 0.0 {
                polarization::optimal_weights_at_zero(&spec).0
            } else {
                polarization::optimal_weights(&spec, s).unwrap()
            };
            let sigma = su2::unpolarized_state(&w).to_dense(t).unwrap();
            let dense = general_renyi_overlap(&rho, &sigma, s).unwrap();
            worst = worst.max((polarization::max_overlap(&spec, s).unwrap() - dense).abs());
        }
    }
    c.worst("max_overlap vs dense overlap with sigma~(s)", worst, 1e-10);

    let grid: Vec<f64> = (0..=2000).map(|k| k as f64 / 2000.0).collect();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let r1 = rng.random_range(1..=2);
        let r2 = rng.random_range(1..=2);
        let a: CMatrix = random::density_matrix(&mut rng, 2, r1);
        let b: CMatrix = random::density_matrix(&mut rng, 2, r2);
        let q = chernoff_overlap_general(&a, &b).unwrap().overlap;
        let brute = grid
            .iter()
            .map(|&s| general_renyi_overlap(&a, &b, s).unwrap())
            .fold(f64::INFINITY, f64::min);
        worst = worst.max((q - brute).abs());
    }
    c.worst("chernoff_overlap_general vs 2001-point grid", worst, 1e-6);
    c
}

fn coherence_independence() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = StdRng::seed_from_u64(8);
    let (mut worst_drop, mut worst_phase) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let pure = random::pure_state(&mut rng, 4, 6);
        let state: TwoModeState = pure.clone().into();
        let base = degrees(&state);

        let dropped: TwoModeState = fock::block_diagonalize(&state).unwrap().into();
        let d = degrees(&dropped);
        worst_drop = worst_drop.max((d.0 - base.0).abs()).max((d.1 - base.1).abs());

        let phases: BTreeMap<usize, Complex64> = pure
            .manifolds()
            .map(|(n, _)| {
                (
                    n,
                    Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)),
                )
            })
            .collect();
        let entries: Vec<_> = pure
            .manifolds()
            .flat_map(|(big_n, amps)| amps.iter().enumerate().map(move |(n, a)| (big_n, n, *a)))
            .map(|(big_n, n, a)| (big_n, n, a * phases[&big_n]))
            .collect();
        let rephased: TwoModeState = PureAmplitudes::new(entries).unwrap().into();
        let r = degrees(&rephased);
        worst_phase = worst_phase.max((r.0 - base.0).abs()).max((r.1 - base.1).abs());
    }
    c.worst("coherences deleted", worst_drop, 1e-12);
    c.worst("coherences re-phased", worst_phase, 1e-12);
    c
}

/// `Σ_N p_N · ½ Σ_n |λ_{N,n} - 1/(N+1)|`.
fn distance_from_uniform(spec: &SpectralData) -> f64 {
    spec.manifolds()
        .iter()
        .map(|m| {
            let u = 1.0 / (m.photons() + 1) as f64;
            m.weight() * 0.5 * m.eigenvalues().iter().map(|l| (l - u).abs()).sum::<f64>()
        })
        .sum()
}

fn zero_iff_unpolarized() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = StdRng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let w = random::unpolarized_weights(&mut rng, 5, 8);
        worst = worst.max(degrees(&su2::unpolarized_state(&w)).0);
    }
    c.worst("P_C of unpolarized states", worst, 1e-9);

    let (mut smallest, mut accepted) = (f64::INFINITY, 0);
    while accepted < 100 {
        let state: TwoModeState = random::state(&mut rng, 5, 8);
        let spec = spectra_of(&state);
        if distance_from_uniform(&spec) < 1e-2 {
            continue;
        }
        accepted += 1;
        smallest = smallest.min(polarization::chernoff_from_spectra(&spec).degree);
    }
    c.check(
        "P_C > 1e-4 when spectra are 1e-2 from uniform",
        smallest > 1e-4,
        format!("smallest P_C {smallest:.3e}"),
    );
    c
}

fn cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_qpol"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn cli_determinism() -> Criterion {
    let mut c = Criterion::default();
    let commands: [&[&str]; 4] = [
        &[
            "sweep",
            "--family",
            "superposition",
            "--n1",
            "1",
            "--n2",
            "2",
            "--points",
            "201",
        ],
        &[
            "sweep", "--family", "mixture", "--alpha", "0.1", "--beta", "0.01", "--gamma", "0.04", "--points", "201",
        ],
        &[
            "surface",
            "--family",
            "superposition",
            "--n1",
            "1",
            "--n2",
            "2",
            "--p",
            "0.1",
            "--grid",
            "61",
        ],
        &[
            "surface", "--family", "mixture", "--p", "0.1", "--alpha", "0.1", "--beta", "0.01", "--gamma", "0.04",
            "--grid", "61",
        ],
    ];
    for args in commands {
        let run = |threads: &str| {
            let mut full = args.to_vec();
            full.extend(["--threads", threads]);
            cli(&full)
        };
        let first = run("1");
        let identical = first == run("1") && first == run("4") && first == run("0");
        c.check(
            format!("{} {}", args[0], args[2]),
            identical,
            "1, 1, 4 and default threads",
        );
    }
    c
}

type CriterionFn = fn() -> Criterion;

fn main() {
    let criteria: [(&str, CriterionFn); 10] = [
        ("superposition saddle regression", superposition_saddle),
        ("mixture saddle regression", mixture_saddle),
        ("closed-form exactness", closed_form_exactness),
        ("plateau property", plateau),
        ("ordering property", ordering),
        ("SU(2) invariance", invariance),
        ("oracle equivalence", oracle_equivalence),
        ("coherence independence", coherence_independence),
        ("zero iff unpolarized", zero_iff_unpolarized),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let c = run();
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        println!("{verdict} {:>2}. {name}", k + 1);
        for check in &c.checks {
            let mark = if check.ok { "ok  " } else { "MISS" };
            println!("       {mark} {}: {}", check.label, check.detail);
        }
        failed += usize::from(!c.passed());
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

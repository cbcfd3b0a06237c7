//! Scaling benchmark: random dense systems over a grid of degrees and
//! coefficient sizes, one CSV row per solved system.

use std::io::Write;

use bisolve_core::arith::Integer;
use bisolve_core::bisolve::{preprocess, solve_with_clock, Clock, NoClock, SolveConfig};
use bisolve_core::poly::BiPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;

/// Largest supported coefficient bitlength.
pub const MAX_TAU: u32 = 62;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n_min: u32,
    pub n_max: u32,
    pub taus: Vec<u32>,
    pub count: u32,
    pub seed: u64,
    pub solve: SolveConfig,
    /// Measure wall time; otherwise the time columns are zero and the CSV is
    /// a pure function of the configuration.
    pub timings: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: u32,
    pub tau: u32,
    pub res_degree: u32,
    pub res_bitlength: u64,
    /// Empty when `R_x` has fewer than two real roots.
    pub min_sep_lower_bound: Option<f64>,
    pub t_project_ms: f64,
    pub t_isolate_ms: f64,
    pub t_validate_ms: f64,
    pub max_depth: u32,
    pub certified: usize,
    pub undecided: usize,
}

/// Dense polynomial of total degree exactly `n`, coefficients uniform in
/// `(-2^tau, 2^tau)`.
pub fn random_dense_poly<R: Rng>(rng: &mut R, n: u32, tau: u32) -> BiPoly {
    assert!((1..=MAX_TAU).contains(&tau), "tau out of range");
    let bound = (1i64 << tau) - 1;
    loop {
        let mut terms = Vec::new();
        for i in 0..=n {
            for j in 0..=(n - i) {
                terms.push(((i, j), Integer::from(rng.random_range(-bound..=bound))));
            }
        }
        let p = BiPoly::from_terms(terms);
        if p.total_degree() == n {
            return p;
        }
    }
}

/// A random pair that passes preprocessing (coprime, nonconstant).
pub fn random_system<R: Rng>(rng: &mut R, n: u32, tau: u32) -> (BiPoly, BiPoly) {
    loop {
        let f = random_dense_poly(rng, n, tau);
        let g = random_dense_poly(rng, n, tau);
        if preprocess(&f, &g).is_ok() {
            return (f, g);
        }
    }
}

pub fn run_bench(cfg: &BenchConfig, clock: &dyn Clock) -> Result<Vec<BenchRow>, CliError> {
    if cfg.n_min == 0 || cfg.n_min > cfg.n_max {
        return Err(CliError::Input("need 1 <= n-min <= n-max".into()));
    }
    if let Some(t) = cfg.taus.iter().find(|t| !(1..=MAX_TAU).contains(*t)) {
        return Err(CliError::Input(format!("tau {t} outside 1..={MAX_TAU}")));
    }
    let clock: &dyn Clock = if cfg.timings { clock } else { &NoClock };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rows = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        for &tau in &cfg.taus {
            for _ in 0..cfg.count {
                let (f, g) = random_system(&mut rng, n, tau);
                let r = solve_with_clock(&f, &g, &cfg.solve, clock)?;
                let s = &r.stats;
                rows.push(BenchRow {
                    n,
                    tau,
                    res_degree: s.rx.n,
                    res_bitlength: s.rx.tau,
                    min_sep_lower_bound: s.min_sep_lower_bound.as_ref().map(|d| d.to_f64()),
                    t_project_ms: s.timings.project_ms,
                    t_isolate_ms: s.timings.isolate_ms,
                    t_validate_ms: s.timings.validate_ms,
                    max_depth: s.max_depth,
                    certified: s.certified_unique + s.certified_fiber,
                    undecided: s.undecided,
                });
            }
        }
    }
    Ok(rows)
}

/// Writes the rows with the fixed header.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Io(e.to_string()))?;
    }
    if rows.is_empty() {
        w.write_record(HEADER).map_err(|e| CliError::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}

pub const HEADER: [&str; 11] = [
    "n",
    "tau",
    "res_degree",
    "res_bitlength",
    "min_sep_lower_bound",
    "t_project_ms",
    "t_isolate_ms",
    "t_validate_ms",
    "max_depth",
    "certified",
    "undecided",
];

//! Executable monotonicity, log-concavity and shift-preservation checks.
//!
//! For co-monotone data (`x` and `y` both sorted):
//!
//! * Gasser–Müller curves are nondecreasing for every kernel;
//! * Nadaraya–Watson curves are nondecreasing on their domain exactly when
//!   the kernel is log-concave. The two-point configuration
//!   `x = (0, (v−u)/2)`, `y = (0, 1)` evaluated at `(u+v)/2` and `v` turns
//!   any pair with `K((u+v)/2)² < K(u)K(v)` into a decreasing step;
//! * Priestley–Chao curves are integrable, so unless identically zero they
//!   must decrease somewhere.
//!
//! The `*_suite` functions run seeded fuzz campaigns over these claims.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::estimators::{
    default_grid, eval_grid, nw_eval, pc_eval, CurveSample, Dataset, EstimatorSpec, Method,
};
use crate::kernels::{Kernel, ScaledKernel};
use crate::{Error, Result};

/// Pairs sampled by [`check_log_concave`] unless told otherwise.
pub const DEFAULT_PROBES: usize = 10_000;
/// Multiplicative slack in the midpoint inequality.
pub const MIDPOINT_SLACK: f64 = 1e-12;
/// Tail mass cut from each side of an unbounded kernel before sweeping.
pub const SWEEP_TAIL: f64 = 1e-6;
pub const NW_VIOLATION_MARGIN: f64 = 1e-9;
pub const PC_DROP_THRESHOLD: f64 = 1e-12;
pub const PC_POINTS_PER_PASS: usize = 4096;
pub const PC_MAX_PASSES: usize = 6;
pub const DEFAULT_SEED: u64 = 0x6b72_6567;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub is_nondecreasing: bool,
    /// Largest drop between consecutive defined samples, 0 if none.
    pub worst_violation: f64,
    /// Abscissae of the worst drop.
    pub witness: Option<(f64, f64)>,
    pub tolerance: f64,
}

/// Scans consecutive defined samples for drops. Undefined samples are
/// skipped, so comparisons bridge gaps in the NW domain.
pub fn check_monotone(curve: &CurveSample, tol: f64) -> MonotonicityReport {
    let mut worst = 0.0;
    let mut witness = None;
    let mut prev: Option<(f64, f64)> = None;
    for (x, v) in curve.defined_points() {
        if let Some((px, pv)) = prev {
            let drop = pv - v;
            if drop > worst {
                worst = drop;
                witness = Some((px, x));
            }
        }
        prev = Some((x, v));
    }
    MonotonicityReport { is_nondecreasing: worst <= tol, worst_violation: worst, witness, tolerance: tol }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LogConcavityReport {
    pub passed: bool,
    /// `(u, v, (u+v)/2)` with the largest ratio `K(u)K(v) / K(mid)²`.
    pub witness: Option<(f64, f64, f64)>,
    pub probes: usize,
}

impl LogConcavityReport {
    /// Re-evaluates the witness; true iff it still violates the midpoint
    /// inequality.
    pub fn witness_violates(&self, k: &Kernel) -> bool {
        self.witness.is_some_and(|(u, v, m)| midpoint_violated(k, u, v, m))
    }
}

fn midpoint_violated(k: &Kernel, u: f64, v: f64, m: f64) -> bool {
    let km = k.pdf(m);
    km * km < k.pdf(u) * k.pdf(v) * (1.0 - MIDPOINT_SLACK)
}

/// Tests `K((u+v)/2)² ≥ K(u)K(v)` on `probes` pairs drawn from a
/// two-dimensional low-discrepancy sequence over the effective support.
/// A pass is evidence of log-concavity, not a proof.
pub fn check_log_concave(k: &Kernel, probes: usize) -> Result<LogConcavityReport> {
    if probes < 2 {
        return Err(Error::invalid(format!("need at least 2 probes, got {probes}")));
    }
    let (a, b) = k.effective_support(SWEEP_TAIL)?;
    // R2 sequence (generalised golden ratio in two dimensions).
    const G: f64 = 1.324_717_957_244_746;
    let (a1, a2) = (1.0 / G, 1.0 / (G * G));
    let mut worst: Option<(f64, (f64, f64, f64))> = None;
    for i in 1..=probes {
        let r1 = (0.5 + a1 * i as f64).fract();
        let r2 = (0.5 + a2 * i as f64).fract();
        let (p, q) = (a + (b - a) * r1, a + (b - a) * r2);
        let (u, v) = if p < q { (p, q) } else { (q, p) };
        if u == v {
            continue;
        }
        let m = 0.5 * (u + v);
        if !midpoint_violated(k, u, v, m) {
            continue;
        }
        let km = k.pdf(m);
        let ratio = k.pdf(u) * k.pdf(v) / (km * km);
        if worst.is_none_or(|(r, _)| ratio > r) {
            worst = Some((ratio, (u, v, m)));
        }
    }
    Ok(LogConcavityReport { passed: worst.is_none(), witness: worst.map(|w| w.1), probes })
}

/// A two-point dataset whose NW curve decreases between `x` and `z`.
#[derive(Debug, Clone, Serialize)]
pub struct NwViolation {
    pub dataset: Dataset,
    pub bandwidth: f64,
    pub x: f64,
    pub z: f64,
    pub value_x: f64,
    pub value_z: f64,
}

/// Turns a log-concavity witness of `k` into a co-monotone dataset on which
/// the NW estimator decreases. Errors if `k` passes the log-concavity
/// sweep; returns `None` if the witness does not yield a drop above
/// [`NW_VIOLATION_MARGIN`].
pub fn find_nw_violation(k: &Kernel) -> Result<Option<NwViolation>> {
    let report = check_log_concave(k, DEFAULT_PROBES)?;
    let Some((u, v, _)) = report.witness else {
        return Err(Error::Precondition(format!(
            "kernel '{}' passed the log-concavity sweep",
            k.name()
        )));
    };
    let dataset = Dataset::new(vec![0.0, 0.5 * (v - u)], vec![0.0, 1.0])?;
    let sk = k.scale(1.0)?;
    let (x, z) = (0.5 * (u + v), v);
    let (Some(value_x), Some(value_z)) = (nw_eval(&dataset, &sk, x), nw_eval(&dataset, &sk, z)) else {
        return Ok(None);
    };
    Ok((value_z < value_x - NW_VIOLATION_MARGIN).then_some(NwViolation {
        dataset,
        bandwidth: 1.0,
        x,
        z,
        value_x,
        value_z,
    }))
}

/// Consecutive search-grid points where the PC curve drops.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PcViolation {
    pub left: f64,
    pub right: f64,
    pub value_left: f64,
    pub value_right: f64,
    pub drop: f64,
}

impl PcViolation {
    /// Recomputes both values and checks the drop still exceeds the
    /// threshold.
    pub fn reverify(&self, data: &Dataset, k: &ScaledKernel, x0: f64) -> Result<bool> {
        let l = pc_eval(data, k, x0, self.left)?;
        let r = pc_eval(data, k, x0, self.right)?;
        Ok(l - r > PC_DROP_THRESHOLD && ((l - r) - self.drop).abs() <= 1e-12)
    }
}

/// Searches for a decrease of the PC curve on grids of
/// [`PC_POINTS_PER_PASS`] points over `[x₁ − m, xₙ + m]`, with the margin
/// `m` starting at `8h` and doubling for up to [`PC_MAX_PASSES`] passes.
/// The first pass with any drop returns its largest one.
/// `Err(NotFound)` means the budget ran out, not that the curve is
/// monotone.
pub fn find_pc_violation(data: &Dataset, k: &ScaledKernel, x0: f64) -> Result<PcViolation> {
    if !data.comonotone() {
        return Err(Error::Precondition("dataset is not co-monotone".into()));
    }
    if x0 > data.first_x() {
        return Err(Error::Precondition(format!(
            "pc x0 = {x0} exceeds the first abscissa {}",
            data.first_x()
        )));
    }
    if data.is_pc_trivial(x0) {
        return Err(Error::Precondition(
            "every y_i (x_i - x_{i-1}) vanishes; the PC curve is identically zero".into(),
        ));
    }
    let mut margin = 8.0 * k.h;
    for _ in 0..PC_MAX_PASSES {
        let lo = data.first_x() - margin;
        let hi = data.last_x() + margin;
        let step = (hi - lo) / (PC_POINTS_PER_PASS - 1) as f64;
        let mut prev = (lo, pc_eval(data, k, x0, lo)?);
        let mut best: Option<PcViolation> = None;
        for i in 1..PC_POINTS_PER_PASS {
            let x = if i + 1 == PC_POINTS_PER_PASS { hi } else { lo + step * i as f64 };
            let v = pc_eval(data, k, x0, x)?;
            let drop = prev.1 - v;
            if drop > PC_DROP_THRESHOLD && best.is_none_or(|b| drop > b.drop) {
                best = Some(PcViolation { left: prev.0, right: x, value_left: prev.1, value_right: v, drop });
            }
            prev = (x, v);
        }
        if let Some(w) = best {
            return Ok(w);
        }
        margin *= 2.0;
    }
    Err(Error::NotFound)
}

/// `max |f̂(y + c) − (f̂(y) + c)|` over grid points where both are defined.
pub fn check_shift_preservation(
    data: &Dataset,
    spec: &EstimatorSpec,
    c: f64,
    grid: &[f64],
) -> Result<f64> {
    let base = eval_grid(data, spec, grid)?;
    let shifted = eval_grid(&data.shifted(c), spec, grid)?;
    Ok(base
        .values
        .iter()
        .zip(&shifted.values)
        .filter_map(|(a, b)| Some((b.as_ref()? - (a.as_ref()? + c)).abs()))
        .fold(0.0, f64::max))
}

/// Settings shared by the fuzz suites.
#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_n: usize,
    pub bandwidths: Vec<f64>,
    pub grid_points: usize,
    pub tol: f64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: DEFAULT_SEED,
            cases: 1000,
            max_n: 30,
            bandwidths: vec![0.3, 1.0, 3.0],
            grid_points: 2001,
            tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// Largest monotonicity violation or shift deviation seen.
    pub worst: f64,
    pub passed: bool,
}

/// Independent per-case seed (SplitMix64 of `seed + case`).
pub fn case_seed(seed: u64, case: usize) -> u64 {
    let mut z = seed.wrapping_add((case as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Sorted values on `[-10, 10]` with roughly one in six entries tied to its
/// predecessor.
fn sorted_with_ties<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n).map(|_| rng.random_range(-10.0..10.0)).collect();
    v.sort_by(f64::total_cmp);
    for i in 1..n {
        if rng.random_bool(1.0 / 6.0) {
            v[i] = v[i - 1];
        }
    }
    v
}

/// A co-monotone dataset with `1..=max_n` points and ties in both
/// coordinates.
pub fn random_comonotone<R: Rng>(rng: &mut R, max_n: usize) -> Dataset {
    let n = rng.random_range(1..=max_n.max(1));
    let xs = sorted_with_ties(rng, n);
    let ys = sorted_with_ties(rng, n);
    Dataset::new(xs, ys).expect("finite sorted values")
}

/// Random responses (not necessarily monotone) on random abscissae.
pub fn random_dataset<R: Rng>(rng: &mut R, max_n: usize) -> Dataset {
    let n = rng.random_range(1..=max_n.max(1));
    let xs = sorted_with_ties(rng, n);
    let ys = (0..n).map(|_| rng.random_range(-10.0..10.0)).collect();
    Dataset::new(xs, ys).expect("finite values")
}

/// Fits `method` to random co-monotone datasets for every kernel and
/// bandwidth and counts curves whose worst drop exceeds `cfg.tol`.
pub fn monotonicity_suite(method: Method, kernels: &[Kernel], cfg: &FuzzConfig) -> Result<SuiteReport> {
    let outcomes = (0..cfg.cases)
        .into_par_iter()
        .map(|case| -> Result<(usize, f64)> {
            let mut rng = ChaCha8Rng::seed_from_u64(case_seed(cfg.seed, case));
            let data = random_comonotone(&mut rng, cfg.max_n);
            let mut failures = 0;
            let mut worst: f64 = 0.0;
            for k in kernels {
                for &h in &cfg.bandwidths {
                    let sk = k.scale(h)?;
                    let grid = default_grid(&data, &sk, cfg.grid_points)?;
                    let curve = eval_grid(&data, &EstimatorSpec::new(method, sk), &grid)?;
                    let report = check_monotone(&curve, cfg.tol);
                    worst = worst.max(report.worst_violation);
                    failures += usize::from(!report.is_nondecreasing);
                }
            }
            Ok((failures, worst))
        })
        .collect::<Result<Vec<_>>>()?;
    let cases = cfg.cases * kernels.len() * cfg.bandwidths.len();
    let failures = outcomes.iter().map(|o| o.0).sum();
    let worst = outcomes.iter().map(|o| o.1).fold(0.0, f64::max);
    Ok(SuiteReport {
        name: format!("{method} monotonicity"),
        cases,
        failures,
        worst,
        passed: failures == 0,
    })
}

/// Runs [`find_pc_violation`] on random nontrivial co-monotone datasets
/// (with `x₀ = x₁ − h`). A case fails when no witness is found or the
/// witness does not re-verify. Passes when at least `min_rate` of the cases
/// succeed.
pub fn pc_violation_suite(kernels: &[Kernel], cfg: &FuzzConfig, min_rate: f64) -> Result<SuiteReport> {
    let outcomes = (0..cfg.cases)
        .into_par_iter()
        .map(|case| -> Result<usize> {
            let mut rng = ChaCha8Rng::seed_from_u64(case_seed(cfg.seed, case));
            let h = cfg.bandwidths[case % cfg.bandwidths.len()];
            let data = loop {
                let d = random_comonotone(&mut rng, cfg.max_n);
                if !d.is_pc_trivial(d.first_x() - h) {
                    break d;
                }
            };
            let x0 = data.first_x() - h;
            let mut failures = 0;
            for k in kernels {
                let sk = k.scale(h)?;
                let ok = match find_pc_violation(&data, &sk, x0) {
                    Ok(w) => w.reverify(&data, &sk, x0)?,
                    Err(Error::NotFound) => false,
                    Err(e) => return Err(e),
                };
                failures += usize::from(!ok);
            }
            Ok(failures)
        })
        .collect::<Result<Vec<_>>>()?;
    let cases = cfg.cases * kernels.len();
    let failures: usize = outcomes.iter().sum();
    let rate = (cases - failures) as f64 / cases as f64;
    Ok(SuiteReport {
        name: "pc violation search".into(),
        cases,
        failures,
        worst: 1.0 - rate,
        passed: rate >= min_rate,
    })
}

/// Checks shift and constant preservation of `method` on random
/// (not necessarily monotone) datasets with random shifts in `[-20, 20]`.
pub fn shift_suite(method: Method, kernels: &[Kernel], cfg: &FuzzConfig) -> Result<SuiteReport> {
    let outcomes = (0..cfg.cases)
        .into_par_iter()
        .map(|case| -> Result<(usize, f64)> {
            let mut rng = ChaCha8Rng::seed_from_u64(case_seed(cfg.seed, case));
            let data = random_dataset(&mut rng, cfg.max_n);
            let c = rng.random_range(-20.0..20.0);
            let level = rng.random_range(-20.0..20.0);
            let constant = data.with_ys(vec![level; data.len()])?;
            let mut failures = 0;
            let mut worst: f64 = 0.0;
            for k in kernels {
                for &h in &cfg.bandwidths {
                    let sk = k.scale(h)?;
                    let grid = default_grid(&data, &sk, cfg.grid_points)?;
                    let spec = EstimatorSpec::new(method, sk);
                    let dev = check_shift_preservation(&data, &spec, c, &grid)?;
                    let flat = eval_grid(&constant, &spec, &grid)?
                        .defined_points()
                        .map(|(_, v)| (v - level).abs())
                        .fold(0.0, f64::max);
                    let w = dev.max(flat);
                    worst = worst.max(w);
                    failures += usize::from(w > cfg.tol);
                }
            }
            Ok((failures, worst))
        })
        .collect::<Result<Vec<_>>>()?;
    let cases = cfg.cases * kernels.len() * cfg.bandwidths.len();
    let failures = outcomes.iter().map(|o| o.0).sum();
    let worst = outcomes.iter().map(|o| o.1).fold(0.0, f64::max);
    Ok(SuiteReport {
        name: format!("{method} shift/constant preservation"),
        cases,
        failures,
        worst,
        passed: failures == 0,
    })
}

//! The `kreg` command line driver.
//!
//! [`RunConfig`] is a plain description of one invocation; the binary fills
//! it from command line flags and hands it to [`run`]. Exit statuses come
//! from [`Error::exit_code`]: 0 ok, 2 configuration, 3 parse, 4 numeric,
//! 5 I/O.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use crate::applications::{
    counting_dataset, ecdf_dataset, gm_derivative, qq_dataset, quantile_dataset, OrderedSample,
};
use crate::estimators::{default_grid, eval_grid, Dataset, EstimatorSpec, Method, PcOrigin};
use crate::fixture::{load_dataset, paper_dataset, PAPER_FIXTURE};
use crate::io::{parse_curve_csv, parse_sample_csv, write_curve_csv, write_dataset_csv, write_json};
use crate::isotonic::{is_pipeline, si_pipeline};
use crate::kernels::{Kernel, ScaledKernel};
use crate::model_selection::{default_bandwidth_range, minimize_cw, CvProfile, DEFAULT_GRID_POINTS};
use crate::properties::{
    check_log_concave, check_monotone, check_shift_preservation, find_pc_violation,
    monotonicity_suite, FuzzConfig, LogConcavityReport, MonotonicityReport, PcViolation,
    SuiteReport, DEFAULT_PROBES, DEFAULT_SEED,
};
use crate::quad::DEFAULT_TOL;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Fit,
    Cv,
    Check,
    Isotonic,
    App,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bandwidth {
    Fixed(f64),
    /// Minimize the leave-one-out score.
    Cv,
}

impl FromStr for Bandwidth {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "cv" {
            return Ok(Bandwidth::Cv);
        }
        let h: f64 = s
            .parse()
            .map_err(|_| Error::invalid(format!("bandwidth must be a number or 'cv', got '{s}'")))?;
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::invalid(format!("bandwidth must be positive, got {h}")));
        }
        Ok(Bandwidth::Fixed(h))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AppKind {
    Ecdf,
    Quantile,
    Qq,
    Counting,
}

impl FromStr for AppKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ecdf" => Ok(AppKind::Ecdf),
            "quantile" => Ok(AppKind::Quantile),
            "qq" => Ok(AppKind::Qq),
            "counting" => Ok(AppKind::Counting),
            _ => Err(Error::invalid(format!("unknown application '{s}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    /// A CSV path or `fixture:paper`.
    pub input: String,
    /// Second sample for Q-Q curves.
    pub input_y: Option<String>,
    pub method: Method,
    pub kernel: String,
    pub bandwidth: Bandwidth,
    pub grid_points: usize,
    pub pc_x0: Option<f64>,
    /// Added to every response before anything else happens.
    pub shift: f64,
    /// Shift used by the shift-preservation check.
    pub shift_c: f64,
    pub h_range: Option<(f64, f64)>,
    pub cv_points: usize,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub tol: f64,
    pub monotone_tol: f64,
    pub app: Option<AppKind>,
    /// `check` an existing curve file instead of fitting.
    pub curve: Option<PathBuf>,
    /// Fuzz cases for `check --suite`; 0 disables the suites.
    pub suite_cases: usize,
}

impl RunConfig {
    pub fn new(command: Command, input: impl Into<String>) -> Self {
        RunConfig {
            command,
            input: input.into(),
            input_y: None,
            method: Method::Gm,
            kernel: "gaussian".into(),
            bandwidth: Bandwidth::Cv,
            grid_points: 401,
            pc_x0: None,
            shift: 0.0,
            shift_c: 10.0,
            h_range: None,
            cv_points: DEFAULT_GRID_POINTS,
            output: None,
            seed: DEFAULT_SEED,
            tol: DEFAULT_TOL,
            monotone_tol: 1e-9,
            app: None,
            curve: None,
            suite_cases: 0,
        }
    }

    fn mother(&self) -> Result<Kernel> {
        self.kernel.parse()
    }

    fn dataset(&self) -> Result<Dataset> {
        Ok(load_dataset(&self.input)?.shifted(self.shift))
    }

    fn pc_origin(&self) -> PcOrigin {
        self.pc_x0.map_or(PcOrigin::FirstMinusBandwidth, PcOrigin::At)
    }
}

/// Executes one command. Primary output goes to `--output` when given and
/// to `out` otherwise; summaries are always written to `out`.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    if cfg.grid_points < 2 {
        return Err(Error::invalid("grid needs at least 2 points"));
    }
    match cfg.command {
        Command::Fit => run_fit(cfg, out),
        Command::Cv => run_cv(cfg, out),
        Command::Check => run_check(cfg, out),
        Command::Isotonic => run_isotonic(cfg, out),
        Command::App => run_app(cfg, out),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    path.with_file_name(format!("{stem}{suffix}"))
}

fn profile(cfg: &RunConfig, data: &Dataset, mother: &Kernel) -> Result<CvProfile> {
    let (lo, hi) = match cfg.h_range {
        Some(r) => r,
        None => default_bandwidth_range(data)?,
    };
    minimize_cw(data, cfg.method, mother, lo, hi, cfg.cv_points)
}

fn fitted_spec(cfg: &RunConfig, data: &Dataset) -> Result<EstimatorSpec> {
    let mother = cfg.mother()?;
    let h = match cfg.bandwidth {
        Bandwidth::Fixed(h) => h,
        Bandwidth::Cv => profile(cfg, data, &mother)?.h_star,
    };
    Ok(EstimatorSpec::new(cfg.method, mother.scale(h)?)
        .with_pc_x0(cfg.pc_origin())
        .with_tol(cfg.tol))
}

fn run_fit(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let data = cfg.dataset()?;
    let spec = fitted_spec(cfg, &data)?;
    let grid = default_grid(&data, &spec.kernel, cfg.grid_points)?;
    let curve = eval_grid(&data, &spec, &grid)?;
    match &cfg.output {
        Some(p) => write_curve_csv(&curve, &[], create(p)?),
        None => write_curve_csv(&curve, &[], out),
    }
}

#[derive(Serialize)]
struct CvSummary<'a> {
    method: Method,
    kernel: &'a str,
    shift: f64,
    h_lo: f64,
    h_hi: f64,
    grid_points: usize,
    h_star: f64,
    cw_star: f64,
}

fn run_cv(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let data = cfg.dataset()?;
    let mother = cfg.mother()?;
    let p = profile(cfg, &data, &mother)?;
    let summary = CvSummary {
        method: cfg.method,
        kernel: mother.name(),
        shift: cfg.shift,
        h_lo: p.hs[0],
        h_hi: p.hs[p.hs.len() - 1],
        grid_points: p.hs.len(),
        h_star: p.h_star,
        cw_star: p.cw_star,
    };
    if let Some(path) = &cfg.output {
        p.write_csv(create(path)?)?;
        write_json(&summary, create(&path.with_extension("json"))?)?;
    }
    write_json(&summary, out)
}

#[derive(Serialize)]
struct CheckReport {
    method: Option<Method>,
    kernel: Option<String>,
    bandwidth: Option<f64>,
    monotonicity: MonotonicityReport,
    log_concavity: Option<LogConcavityReport>,
    shift_c: Option<f64>,
    shift_deviation: Option<f64>,
    pc_violation: Option<PcSearch>,
    suites: Vec<SuiteReport>,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum PcSearch {
    Found(PcViolation),
    NotFound,
    Skipped { reason: String },
}

fn run_check(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let report = match &cfg.curve {
        Some(path) => {
            let curve = parse_curve_csv(path)?;
            CheckReport {
                method: None,
                kernel: None,
                bandwidth: None,
                monotonicity: check_monotone(&curve, cfg.monotone_tol),
                log_concavity: None,
                shift_c: None,
                shift_deviation: None,
                pc_violation: None,
                suites: Vec::new(),
            }
        }
        None => check_fit(cfg)?,
    };
    match &cfg.output {
        Some(p) => write_json(&report, create(p)?),
        None => write_json(&report, out),
    }
}

fn check_fit(cfg: &RunConfig) -> Result<CheckReport> {
    let data = cfg.dataset()?;
    let spec = fitted_spec(cfg, &data)?;
    let grid = default_grid(&data, &spec.kernel, cfg.grid_points)?;
    let curve = eval_grid(&data, &spec, &grid)?;
    let pc_violation = match cfg.method {
        Method::Pc => {
            let x0 = spec.pc_x0.resolve(&data, spec.kernel.h)?;
            Some(match find_pc_violation(&data, &spec.kernel, x0) {
                Ok(w) => PcSearch::Found(w),
                Err(Error::NotFound) => PcSearch::NotFound,
                Err(Error::Precondition(reason)) => PcSearch::Skipped { reason },
                Err(e) => return Err(e),
            })
        }
        _ => None,
    };
    let mut suites = Vec::new();
    if cfg.suite_cases > 0 {
        let fuzz = FuzzConfig { seed: cfg.seed, cases: cfg.suite_cases, ..FuzzConfig::default() };
        suites.push(monotonicity_suite(cfg.method, std::slice::from_ref(&spec.kernel.mother), &fuzz)?);
    }
    Ok(CheckReport {
        method: Some(cfg.method),
        kernel: Some(spec.kernel.mother.name().to_owned()),
        bandwidth: Some(spec.kernel.h),
        monotonicity: check_monotone(&curve, cfg.monotone_tol),
        log_concavity: Some(check_log_concave(&spec.kernel.mother, DEFAULT_PROBES)?),
        shift_c: Some(cfg.shift_c),
        shift_deviation: Some(check_shift_preservation(&data, &spec, cfg.shift_c, &grid)?),
        pc_violation,
        suites,
    })
}

fn run_isotonic(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let data = cfg.dataset()?;
    let spec = fitted_spec(cfg, &data)?;
    let grid = default_grid(&data, &spec.kernel, cfg.grid_points)?;
    let is = is_pipeline(&data, &spec, &grid)?;
    let si = si_pipeline(&data, &spec, &grid)?;
    match &cfg.output {
        Some(p) => {
            write_curve_csv(&is, &[], create(&sibling(p, "_is.csv"))?)?;
            write_curve_csv(&si, &[], create(&sibling(p, "_si.csv"))?)
        }
        None => {
            writeln!(out, "x,is,si")?;
            let cell = |v: Option<f64>| v.map(crate::io::fmt_num).unwrap_or_default();
            for ((x, a), b) in grid.iter().zip(&is.values).zip(&si.values) {
                writeln!(out, "{},{},{}", crate::io::fmt_num(*x), cell(*a), cell(*b))?;
            }
            Ok(())
        }
    }
}

fn load_sample(input: &str) -> Result<OrderedSample> {
    if input == PAPER_FIXTURE {
        return OrderedSample::new(paper_dataset().xs().to_vec());
    }
    parse_sample_csv(Path::new(input))
}

fn run_app(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let kind = cfg.app.ok_or_else(|| Error::invalid("app needs --app ecdf|quantile|qq|counting"))?;
    let sample = load_sample(&cfg.input)?;
    let data = match kind {
        AppKind::Ecdf => ecdf_dataset(&sample),
        AppKind::Quantile => quantile_dataset(&sample),
        AppKind::Counting => counting_dataset(&sample),
        AppKind::Qq => {
            let other = cfg
                .input_y
                .as_deref()
                .ok_or_else(|| Error::invalid("qq needs --input-y"))?;
            qq_dataset(&sample, &load_sample(other)?)?
        }
    }
    .shifted(cfg.shift);
    let spec = fitted_spec(cfg, &data)?;
    let grid = default_grid(&data, &spec.kernel, cfg.grid_points)?;
    let curve = eval_grid(&data, &spec, &grid)?;
    let intensity: Vec<f64> = match (kind, cfg.method) {
        (AppKind::Counting, Method::Gm) => grid.iter().map(|&x| gm_derivative(&data, &spec.kernel, x)).collect(),
        _ => Vec::new(),
    };
    let extra: Vec<(&str, &[f64])> = if intensity.is_empty() { vec![] } else { vec![("intensity", &intensity)] };
    match &cfg.output {
        Some(p) => {
            write_dataset_csv(&data, create(&sibling(p, "_data.csv"))?)?;
            write_curve_csv(&curve, &extra, create(&sibling(p, "_curve.csv"))?)
        }
        None => write_curve_csv(&curve, &extra, out),
    }
}

/// Convenience for callers that already hold a fitted kernel.
pub fn curve_for(data: &Dataset, method: Method, kernel: ScaledKernel, points: usize) -> Result<crate::estimators::CurveSample> {
    let grid = default_grid(data, &kernel, points)?;
    eval_grid(data, &EstimatorSpec::new(method, kernel), &grid)
}

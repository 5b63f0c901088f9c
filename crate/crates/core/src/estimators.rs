//! Nadaraya–Watson, Priestley–Chao and Gasser–Müller point estimators.
//!
//! The Gasser–Müller estimator is evaluated through its telescoping form
//!
//! ```text
//! f̂(x) = y₁ + Σ_{j=2}^{n} (yⱼ − yⱼ₋₁) · F(x − sⱼ₋₁),   sⱼ = (xⱼ + xⱼ₊₁)/2,
//! ```
//!
//! where `F` is the kernel CDF. It needs one CDF call per nonzero increment
//! and makes the monotonicity of the estimator on co-monotone data evident.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::kernels::ScaledKernel;
use crate::quad::DEFAULT_TOL;
use crate::{Error, Result};

/// NW denominators below this are treated as zero.
pub const NW_DENOMINATOR_FLOOR: f64 = 1e-300;

/// Paired observations sorted by `x` (stable on ties).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dataset {
    xs: Vec<f64>,
    ys: Vec<f64>,
    comonotone: bool,
}

impl Dataset {
    /// Builds a dataset, sorting the pairs jointly by `x`. Rejects empty,
    /// mismatched or non-finite input.
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::invalid("dataset must contain at least one point"));
        }
        if xs.len() != ys.len() {
            return Err(Error::invalid(format!(
                "x and y lengths differ ({} vs {})",
                xs.len(),
                ys.len()
            )));
        }
        if let Some(v) = xs.iter().chain(&ys).find(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("dataset values must be finite, found {v}")));
        }
        let (xs, ys) = if xs.windows(2).all(|w| w[0] <= w[1]) {
            (xs, ys)
        } else {
            let mut pairs: Vec<(f64, f64)> = xs.into_iter().zip(ys).collect();
            pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
            pairs.into_iter().unzip()
        };
        let comonotone = ys.windows(2).all(|w| w[0] <= w[1]);
        Ok(Dataset { xs, ys, comonotone })
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// True iff `y₁ ≤ … ≤ yₙ`.
    pub fn comonotone(&self) -> bool {
        self.comonotone
    }

    pub fn first_x(&self) -> f64 {
        self.xs[0]
    }

    pub fn last_x(&self) -> f64 {
        self.xs[self.xs.len() - 1]
    }

    pub fn span(&self) -> f64 {
        self.last_x() - self.first_x()
    }

    pub fn y_range(&self) -> (f64, f64) {
        self.ys
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &y| (lo.min(y), hi.max(y)))
    }

    /// Number of points whose `x` repeats the previous one.
    pub fn duplicate_x_count(&self) -> usize {
        self.xs.windows(2).filter(|w| w[0] == w[1]).count()
    }

    /// Same abscissae with new responses.
    pub fn with_ys(&self, ys: Vec<f64>) -> Result<Self> {
        if ys.len() != self.xs.len() {
            return Err(Error::invalid("replacement y has the wrong length"));
        }
        if let Some(v) = ys.iter().find(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("dataset values must be finite, found {v}")));
        }
        let comonotone = ys.windows(2).all(|w| w[0] <= w[1]);
        Ok(Dataset { xs: self.xs.clone(), ys, comonotone })
    }

    /// `y + c`.
    pub fn shifted(&self, c: f64) -> Self {
        Dataset {
            xs: self.xs.clone(),
            ys: self.ys.iter().map(|y| y + c).collect(),
            comonotone: self.comonotone,
        }
    }

    /// The dataset with point `j` removed, or `None` for a single point.
    pub fn leave_one_out(&self, j: usize) -> Option<Self> {
        if self.len() < 2 || j >= self.len() {
            return None;
        }
        let mut xs = self.xs.clone();
        let mut ys = self.ys.clone();
        xs.remove(j);
        ys.remove(j);
        let comonotone = ys.windows(2).all(|w| w[0] <= w[1]);
        Some(Dataset { xs, ys, comonotone })
    }

    /// True iff `yᵢ(xᵢ − xᵢ₋₁) = 0` for every `i`, with `x₀ = x0`; the
    /// Priestley–Chao curve is then identically zero.
    pub fn is_pc_trivial(&self, x0: f64) -> bool {
        let mut prev = x0;
        self.xs.iter().zip(&self.ys).all(|(&x, &y)| {
            let t = y * (x - prev);
            prev = x;
            t == 0.0
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Nw,
    Pc,
    Gm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Nw, Method::Pc, Method::Gm];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Nw => "nw",
            Method::Pc => "pc",
            Method::Gm => "gm",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "nw" | "nadaraya-watson" => Ok(Method::Nw),
            "pc" | "priestley-chao" => Ok(Method::Pc),
            "gm" | "gasser-muller" => Ok(Method::Gm),
            _ => Err(Error::invalid(format!("unknown method '{s}' (expected nw, pc or gm)"))),
        }
    }
}

/// Where the Priestley–Chao gap `x₁ − x₀` starts.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum PcOrigin {
    /// `x₀ = x₁ − h`, resolved against whichever dataset is being fitted.
    #[default]
    FirstMinusBandwidth,
    At(f64),
}

impl PcOrigin {
    pub fn resolve(self, data: &Dataset, h: f64) -> Result<f64> {
        match self {
            PcOrigin::FirstMinusBandwidth => Ok(data.first_x() - h),
            PcOrigin::At(x0) if x0 <= data.first_x() => Ok(x0),
            PcOrigin::At(x0) => Err(Error::Precondition(format!(
                "pc x0 = {x0} exceeds the first abscissa {}",
                data.first_x()
            ))),
        }
    }
}

/// Which estimator to apply, with which kernel.
#[derive(Debug, Clone)]
pub struct EstimatorSpec {
    pub method: Method,
    pub kernel: ScaledKernel,
    pub pc_x0: PcOrigin,
    /// Tolerance for quadrature-backed kernel CDFs (GM only).
    pub tol: f64,
}

impl EstimatorSpec {
    pub fn new(method: Method, kernel: ScaledKernel) -> Self {
        EstimatorSpec { method, kernel, pc_x0: PcOrigin::default(), tol: DEFAULT_TOL }
    }

    pub fn with_pc_x0(mut self, x0: PcOrigin) -> Self {
        self.pc_x0 = x0;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    /// Point estimate at `x`; `None` where NW is undefined.
    pub fn eval(&self, data: &Dataset, x: f64) -> Result<Option<f64>> {
        match self.method {
            Method::Nw => Ok(nw_eval(data, &self.kernel, x)),
            Method::Pc => {
                let x0 = self.pc_x0.resolve(data, self.kernel.h)?;
                pc_eval(data, &self.kernel, x0, x).map(Some)
            }
            Method::Gm => gm_eval(data, &self.kernel, x, self.tol).map(Some),
        }
    }
}

/// Nadaraya–Watson estimate, or `None` outside its domain.
pub fn nw_eval(data: &Dataset, k: &ScaledKernel, x: f64) -> Option<f64> {
    let (mut num, mut den) = (0.0, 0.0);
    for (&xi, &yi) in data.xs.iter().zip(&data.ys) {
        let w = k.pdf(x - xi);
        num += yi * w;
        den += w;
    }
    if den < NW_DENOMINATOR_FLOOR {
        return None;
    }
    // Clamp rounding spill-over; the exact value is a convex combination.
    let (lo, hi) = data.y_range();
    Some((num / den).clamp(lo, hi))
}

/// Priestley–Chao estimate with `x₀ = x0`.
pub fn pc_eval(data: &Dataset, k: &ScaledKernel, x0: f64, x: f64) -> Result<f64> {
    if x0 > data.first_x() {
        return Err(Error::Precondition(format!(
            "pc x0 = {x0} exceeds the first abscissa {}",
            data.first_x()
        )));
    }
    let mut prev = x0;
    let mut acc = 0.0;
    for (&xi, &yi) in data.xs.iter().zip(&data.ys) {
        let gap = xi - prev;
        prev = xi;
        if gap != 0.0 {
            acc += yi * gap * k.pdf(x - xi);
        }
    }
    Ok(acc)
}

/// Gasser–Müller estimate via the telescoping CDF form.
pub fn gm_eval(data: &Dataset, k: &ScaledKernel, x: f64, tol: f64) -> Result<f64> {
    let (xs, ys) = (&data.xs, &data.ys);
    let mut acc = ys[0];
    for j in 1..xs.len() {
        let dy = ys[j] - ys[j - 1];
        if dy != 0.0 {
            let s = 0.5 * (xs[j - 1] + xs[j]);
            acc += dy * k.kernel_cdf(x - s, tol)?;
        }
    }
    let (lo, hi) = data.y_range();
    Ok(acc.clamp(lo, hi))
}

/// Estimator values over a grid of abscissae.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSample {
    pub grid: Vec<f64>,
    pub values: Vec<Option<f64>>,
}

impl CurveSample {
    pub fn new(grid: Vec<f64>, values: Vec<Option<f64>>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::invalid("curve grid and values differ in length"));
        }
        Ok(CurveSample { grid, values })
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn defined_mask(&self) -> Vec<bool> {
        self.values.iter().map(Option::is_some).collect()
    }

    pub fn all_defined(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    /// `(x, value)` for defined points only.
    pub fn defined_points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.iter().zip(&self.values).filter_map(|(&x, v)| v.map(|v| (x, v)))
    }
}

pub(crate) fn check_grid(grid: &[f64]) -> Result<()> {
    if let Some(v) = grid.iter().find(|v| !v.is_finite()) {
        return Err(Error::invalid(format!("grid values must be finite, found {v}")));
    }
    if let Some(i) = grid.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::invalid(format!(
            "grid must be strictly increasing (position {}: {} >= {})",
            i,
            grid[i],
            grid[i + 1]
        )));
    }
    Ok(())
}

/// Applies `spec` at every grid point.
pub fn eval_grid(data: &Dataset, spec: &EstimatorSpec, grid: &[f64]) -> Result<CurveSample> {
    check_grid(grid)?;
    let values = grid.iter().map(|&x| spec.eval(data, x)).collect::<Result<Vec<_>>>()?;
    Ok(CurveSample { grid: grid.to_vec(), values })
}

/// `points` equally spaced abscissae over `[x₁ − 3w, xₙ + 3w]`, where `w`
/// is the kernel's effective width.
pub fn default_grid(data: &Dataset, k: &ScaledKernel, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::invalid(format!("grid needs at least 2 points, got {points}")));
    }
    let w = k.effective_width();
    let lo = data.first_x() - 3.0 * w;
    let hi = data.last_x() + 3.0 * w;
    let step = (hi - lo) / (points - 1) as f64;
    let mut grid: Vec<f64> = (0..points).map(|i| lo + step * i as f64).collect();
    grid[points - 1] = hi;
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::Kernel;

    fn ds(xs: &[f64], ys: &[f64]) -> Dataset {
        Dataset::new(xs.to_vec(), ys.to_vec()).unwrap()
    }

    #[test]
    fn dataset_sorts_and_flags() {
        let d = ds(&[2.0, 0.0, 1.0, 1.0], &[5.0, 1.0, 2.0, 3.0]);
        assert_eq!(d.xs(), &[0.0, 1.0, 1.0, 2.0]);
        assert_eq!(d.ys(), &[1.0, 2.0, 3.0, 5.0]);
        assert!(d.comonotone());
        assert_eq!(d.duplicate_x_count(), 1);
        let d = ds(&[0.0, 1.0], &[1.0, 0.0]);
        assert!(!d.comonotone());
        assert!(Dataset::new(vec![], vec![]).is_err());
        assert!(Dataset::new(vec![0.0], vec![]).is_err());
        assert!(Dataset::new(vec![f64::NAN], vec![1.0]).is_err());
    }

    #[test]
    fn nw_examples() {
        let g = Kernel::gaussian().scale(1.0).unwrap();
        let single = ds(&[3.0], &[7.5]);
        assert_eq!(nw_eval(&single, &g, 4.2), Some(7.5));

        let d = ds(&[0.0, 1.0], &[0.0, 1.0]);
        // φ(1)/(φ(0)+φ(1)) with φ(0) = 0.398942280401, φ(1) = 0.241970724519
        let expected = 0.241_970_724_519_143_37 / (0.398_942_280_401_432_7 + 0.241_970_724_519_143_37);
        assert!((nw_eval(&d, &g, 0.0).unwrap() - expected).abs() < 1e-15);
        assert!((expected - 0.37754).abs() < 1e-5);

        let r = Kernel::rectangular().scale(1.0).unwrap();
        let far = ds(&[0.0, 10.0], &[0.0, 1.0]);
        assert_eq!(nw_eval(&far, &r, 5.0), None);
    }

    #[test]
    fn pc_examples() {
        let r = Kernel::rectangular().scale(1.0).unwrap();
        let zeros = ds(&[0.0, 1.0, 3.0], &[0.0, 0.0, 0.0]);
        assert_eq!(pc_eval(&zeros, &r, -1.0, 0.2).unwrap(), 0.0);

        let d = ds(&[0.0, 1.0], &[1.0, 2.0]);
        assert_eq!(pc_eval(&d, &r, -1.0, 0.9).unwrap(), 2.0);

        let tied = ds(&[0.0, 0.0], &[5.0, 7.0]);
        let g = Kernel::gaussian().scale(1.0).unwrap();
        for x in [-1.0, 0.0, 0.3, 2.0] {
            assert_eq!(pc_eval(&tied, &g, 0.0, x).unwrap(), 0.0);
        }
        assert!(pc_eval(&d, &r, 0.5, 0.0).is_err());
    }

    #[test]
    fn gm_examples() {
        let g = Kernel::gaussian().scale(1.0).unwrap();
        let single = ds(&[3.0], &[-2.0]);
        for x in [-100.0, 0.0, 3.0, 50.0] {
            assert_eq!(gm_eval(&single, &g, x, 1e-10).unwrap(), -2.0);
        }
        let d = ds(&[0.0, 1.0], &[0.0, 1.0]);
        for h in [0.1, 1.0, 7.0] {
            let k = Kernel::gaussian().scale(h).unwrap();
            assert_eq!(gm_eval(&d, &k, 0.5, 1e-10).unwrap(), 0.5);
        }
        // Φ(1)
        assert!((gm_eval(&d, &g, 1.5, 1e-10).unwrap() - 0.841_344_746_068_542_9).abs() < 1e-14);
    }

    #[test]
    fn pc_origin_resolution() {
        let d = ds(&[2.0, 3.0], &[1.0, 1.0]);
        assert_eq!(PcOrigin::FirstMinusBandwidth.resolve(&d, 0.5).unwrap(), 1.5);
        assert_eq!(PcOrigin::At(1.0).resolve(&d, 0.5).unwrap(), 1.0);
        assert!(PcOrigin::At(2.5).resolve(&d, 0.5).is_err());
    }

    #[test]
    fn grid_eval_masks() {
        let r = Kernel::rectangular().scale(1.0).unwrap();
        let d = ds(&[0.0, 10.0], &[0.0, 1.0]);
        let nw = EstimatorSpec::new(Method::Nw, r.clone());
        let c = eval_grid(&d, &nw, &[0.0, 5.0, 10.0]).unwrap();
        assert_eq!(c.defined_mask(), vec![true, false, true]);

        let gm = EstimatorSpec::new(Method::Gm, r.clone());
        let grid = default_grid(&d, &r, 101).unwrap();
        assert!(eval_grid(&d, &gm, &grid).unwrap().all_defined());

        assert!(eval_grid(&d, &gm, &[1.0, 1.0]).is_err());
        assert!(eval_grid(&d, &gm, &[2.0, 1.0]).is_err());
    }

    #[test]
    fn constant_preservation() {
        let d = ds(&[-1.0, 0.0, 0.5, 3.0], &[4.25; 4]);
        for k in [Kernel::gaussian(), Kernel::rectangular(), Kernel::bump()] {
            let sk = k.scale(0.7).unwrap();
            let grid = default_grid(&d, &sk, 57).unwrap();
            for m in [Method::Nw, Method::Gm] {
                let c = eval_grid(&d, &EstimatorSpec::new(m, sk.clone()), &grid).unwrap();
                for (_, v) in c.defined_points() {
                    assert!((v - 4.25).abs() < 1e-12, "{m} {k}: {v}");
                }
            }
        }
    }

    #[test]
    fn default_grid_shape() {
        let d = ds(&[0.0, 2.0], &[0.0, 1.0]);
        let g = Kernel::gaussian().scale(0.5).unwrap();
        assert_eq!(default_grid(&d, &g, 2).unwrap(), vec![-1.5, 3.5]);
        let r = Kernel::rectangular().scale(2.0).unwrap();
        let grid = default_grid(&d, &r, 50).unwrap();
        assert_eq!(grid[0], -3.0);
        assert_eq!(grid[49], 5.0);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
        assert!(default_grid(&d, &g, 1).is_err());
    }
}

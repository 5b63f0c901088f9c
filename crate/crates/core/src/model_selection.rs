//! Leave-one-out cross-validation of the bandwidth.
//!
//! `CW(h) = Σⱼ (yⱼ − f̂_{h; x⁽ʲ⁾, y⁽ʲ⁾}(xⱼ))²`, where `(x⁽ʲ⁾, y⁽ʲ⁾)` drops
//! the `j`-th pair. A held-out prediction that is undefined (NW outside its
//! domain) makes the whole score `+∞`.
//!
//! [`minimize_cw`] scans a log-spaced bandwidth grid, then refines around
//! the best grid point by golden-section search.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::estimators::{Dataset, EstimatorSpec, Method};
use crate::io::fmt_num;
use crate::kernels::Kernel;
use crate::{Error, Result};

pub const DEFAULT_GRID_POINTS: usize = 64;
pub const H_REL_TOL: f64 = 1e-4;

/// CW values over a bandwidth grid plus the refined minimizer.
#[derive(Debug, Clone, Serialize)]
pub struct CvProfile {
    pub hs: Vec<f64>,
    #[serde(serialize_with = "serialize_extended")]
    pub cw: Vec<f64>,
    pub h_star: f64,
    pub cw_star: f64,
    /// Grid neighbours of the best grid point; `h_star` lies between them.
    pub bracket: (f64, f64),
}

fn serialize_extended<S: serde::Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        if x.is_finite() {
            seq.serialize_element(x)?;
        } else {
            seq.serialize_element(&Option::<f64>::None)?;
        }
    }
    seq.end()
}

impl CvProfile {
    /// Rows `h,cw` (with `inf` for infinite scores) followed by a
    /// `h_star,cw_star` summary row.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "h,cw")?;
        for (h, c) in self.hs.iter().zip(&self.cw) {
            writeln!(out, "{},{}", fmt_num(*h), fmt_num(*c))?;
        }
        writeln!(out, "h_star,cw_star")?;
        writeln!(out, "{},{}", fmt_num(self.h_star), fmt_num(self.cw_star))?;
        Ok(())
    }
}

/// `[span/(2n), 2·span]`.
pub fn default_bandwidth_range(data: &Dataset) -> Result<(f64, f64)> {
    let span = data.span();
    if !(span > 0.0) {
        return Err(Error::Precondition(
            "bandwidth range needs at least two distinct abscissae".into(),
        ));
    }
    Ok((span / (2.0 * data.len() as f64), 2.0 * span))
}

/// Leave-one-out score at bandwidth `h`.
pub fn cw(data: &Dataset, method: Method, mother: &Kernel, h: f64) -> Result<f64> {
    if data.len() < 2 {
        return Err(Error::Precondition("cross-validation needs at least 2 points".into()));
    }
    let spec = EstimatorSpec::new(method, mother.scale(h)?);
    let mut total = 0.0;
    for j in 0..data.len() {
        let held_out = data.leave_one_out(j).expect("n >= 2");
        match spec.eval(&held_out, data.xs()[j])? {
            Some(pred) => total += (data.ys()[j] - pred).powi(2),
            None => return Ok(f64::INFINITY),
        }
    }
    Ok(total)
}

/// Log-spaced scan of `cw` over `[h_lo, h_hi]` followed by golden-section
/// refinement around the grid minimum.
pub fn minimize_cw(
    data: &Dataset,
    method: Method,
    mother: &Kernel,
    h_lo: f64,
    h_hi: f64,
    grid_points: usize,
) -> Result<CvProfile> {
    if !(h_lo > 0.0 && h_lo < h_hi && h_hi.is_finite()) {
        return Err(Error::invalid(format!("bandwidth range must satisfy 0 < h_lo < h_hi, got [{h_lo}, {h_hi}]")));
    }
    if grid_points < 8 {
        return Err(Error::invalid(format!("bandwidth grid needs at least 8 points, got {grid_points}")));
    }
    let hs = log_grid(h_lo, h_hi, grid_points);
    let scores = hs
        .par_iter()
        .map(|&h| cw(data, method, mother, h))
        .collect::<Result<Vec<_>>>()?;

    // Strict `<` keeps the smallest h among ties.
    let mut best: Option<usize> = None;
    for (i, &c) in scores.iter().enumerate() {
        if c.is_finite() && best.is_none_or(|b| c < scores[b]) {
            best = Some(i);
        }
    }
    let i = best.ok_or(Error::AllInfiniteCv { h_lo, h_hi })?;
    let a = hs[i.saturating_sub(1)];
    let b = hs[(i + 1).min(hs.len() - 1)];
    let (h_ref, cw_ref) = golden_section(|h| cw(data, method, mother, h), a, b, H_REL_TOL)?;
    let (h_star, cw_star) = if cw_ref < scores[i] { (h_ref, cw_ref) } else { (hs[i], scores[i]) };
    Ok(CvProfile { hs, cw: scores, h_star, cw_star, bracket: (a, b) })
}

/// [`minimize_cw`] over [`default_bandwidth_range`] with 64 grid points.
pub fn minimize_cw_default(data: &Dataset, method: Method, mother: &Kernel) -> Result<CvProfile> {
    let (lo, hi) = default_bandwidth_range(data)?;
    minimize_cw(data, method, mother, lo, hi, DEFAULT_GRID_POINTS)
}

pub fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    let mut hs: Vec<f64> = (0..points)
        .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
        .collect();
    hs[0] = lo;
    hs[points - 1] = hi;
    hs
}

/// Golden-section search for a minimum of `f` on `[a, b]`, stopping when
/// the bracket is narrower than `rel_tol` times its midpoint. Returns the
/// best point evaluated.
pub fn golden_section<F>(f: F, mut a: f64, mut b: f64, rel_tol: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    let mut best = if fd < fc { (d, fd) } else { (c, fc) };
    for _ in 0..200 {
        if b - a <= rel_tol * 0.5 * (a + b).abs() {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
            if fc < best.1 || (fc == best.1 && c < best.0) {
                best = (c, fc);
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
            if fd < best.1 {
                best = (d, fd);
            }
        }
    }
    Ok(best)
}

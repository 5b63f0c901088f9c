//! Pool-adjacent-violators isotonization and the isotonize/smooth
//! pipelines.
//!
//! * IS: isotonize the responses, then smooth the monotone data;
//! * SI: smooth the raw data, then isotonize the sampled curve.

use serde::Serialize;

use crate::estimators::{check_grid, eval_grid, CurveSample, Dataset, EstimatorSpec};
use crate::{Error, Result};

/// A maximal run of equal fitted values, `start..end` (end exclusive).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Block {
    pub start: usize,
    pub end: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsotonicFit {
    pub ys_iso: Vec<f64>,
    pub blocks: Vec<Block>,
}

/// Weighted least-squares projection of `ys` onto nondecreasing sequences.
pub fn pava(ys: &[f64], weights: &[f64]) -> Result<IsotonicFit> {
    if ys.is_empty() {
        return Err(Error::invalid("isotonic regression needs at least one value"));
    }
    if ys.len() != weights.len() {
        return Err(Error::invalid("values and weights differ in length"));
    }
    if let Some(w) = weights.iter().find(|w| !(**w > 0.0 && w.is_finite())) {
        return Err(Error::invalid(format!("weights must be positive and finite, found {w}")));
    }
    if let Some(y) = ys.iter().find(|y| !y.is_finite()) {
        return Err(Error::invalid(format!("values must be finite, found {y}")));
    }

    // Stack of pooled blocks: (start, weight sum, weighted sum).
    let mut stack: Vec<(usize, f64, f64)> = Vec::with_capacity(ys.len());
    for (i, (&y, &w)) in ys.iter().zip(weights).enumerate() {
        let mut cur = (i, w, w * y);
        while let Some(&(start, pw, ps)) = stack.last() {
            if ps / pw <= cur.2 / cur.1 {
                break;
            }
            stack.pop();
            cur = (start, pw + cur.1, ps + cur.2);
        }
        stack.push(cur);
    }

    let mut ys_iso = Vec::with_capacity(ys.len());
    let mut blocks = Vec::with_capacity(stack.len());
    for (k, &(start, w, s)) in stack.iter().enumerate() {
        let end = stack.get(k + 1).map_or(ys.len(), |b| b.0);
        let value = if end - start == 1 { ys[start] } else { s / w };
        ys_iso.extend(std::iter::repeat_n(value, end - start));
        blocks.push(Block { start, end, value });
    }
    Ok(IsotonicFit { ys_iso, blocks })
}

/// [`pava`] with unit weights.
pub fn pava_unit(ys: &[f64]) -> Result<IsotonicFit> {
    pava(ys, &vec![1.0; ys.len()])
}

/// Isotonize the responses, then smooth.
pub fn is_pipeline(data: &Dataset, spec: &EstimatorSpec, grid: &[f64]) -> Result<CurveSample> {
    let iso = pava_unit(data.ys())?;
    let monotone = data.with_ys(iso.ys_iso)?;
    eval_grid(&monotone, spec, grid)
}

/// Smooth, then isotonize the defined curve samples. Undefined samples are
/// left out of the pooling and stay undefined.
pub fn si_pipeline(data: &Dataset, spec: &EstimatorSpec, grid: &[f64]) -> Result<CurveSample> {
    check_grid(grid)?;
    let raw = eval_grid(data, spec, grid)?;
    let defined: Vec<f64> = raw.values.iter().flatten().copied().collect();
    if defined.is_empty() {
        return Ok(raw);
    }
    let mut iso = pava_unit(&defined)?.ys_iso.into_iter();
    let values = raw.values.iter().map(|v| v.and_then(|_| iso.next())).collect();
    CurveSample::new(raw.grid, values)
}

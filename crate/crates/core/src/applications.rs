//! Co-monotone constructions from samples and event times.
//!
//! Order statistics paired with ranks, with each other or with counts are
//! automatically co-monotone, so a monotonicity-preserving smoother (GM, or
//! NW with a log-concave kernel) turns them into nondecreasing estimates of
//! a CDF, a quantile function, a Q-Q function or a cumulative intensity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::estimators::Dataset;
use crate::kernels::ScaledKernel;
use crate::{Error, Result};

/// Sample values sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedSample {
    values: Vec<f64>,
}

impl OrderedSample {
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("sample must contain at least one value"));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("sample values must be finite, found {v}")));
        }
        values.sort_by(f64::total_cmp);
        Ok(OrderedSample { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn ranks(&self) -> Vec<f64> {
        let n = self.len() as f64;
        (1..=self.len()).map(|i| i as f64 / n).collect()
    }
}

/// `(x_{n:i}, i/n)`.
pub fn ecdf_dataset(s: &OrderedSample) -> Dataset {
    Dataset::new(s.values.clone(), s.ranks()).expect("sorted finite sample")
}

/// `(i/n, x_{n:i})`.
pub fn quantile_dataset(s: &OrderedSample) -> Dataset {
    Dataset::new(s.ranks(), s.values.clone()).expect("sorted finite sample")
}

/// `(x_{n:i}, y_{n:i})`.
pub fn qq_dataset(sx: &OrderedSample, sy: &OrderedSample) -> Result<Dataset> {
    if sx.len() != sy.len() {
        return Err(Error::invalid(format!(
            "Q-Q samples differ in size ({} vs {})",
            sx.len(),
            sy.len()
        )));
    }
    Dataset::new(sx.values.clone(), sy.values.clone())
}

/// `(x_{n:i}, i)` for event times of one realization.
pub fn counting_dataset(event_times: &OrderedSample) -> Dataset {
    let counts = (1..=event_times.len()).map(|i| i as f64).collect();
    Dataset::new(event_times.values.clone(), counts).expect("sorted finite sample")
}

/// Pools `m` realizations: all event times sorted together, paired with
/// `i/m`, the average number of events up to the `i`-th pooled time.
pub fn pooled_counting_dataset(realizations: &[OrderedSample]) -> Result<Dataset> {
    if realizations.is_empty() {
        return Err(Error::invalid("need at least one realization"));
    }
    let m = realizations.len() as f64;
    let mut times: Vec<f64> = realizations.iter().flat_map(|r| r.values.iter().copied()).collect();
    times.sort_by(f64::total_cmp);
    let counts = (1..=times.len()).map(|i| i as f64 / m).collect();
    Dataset::new(times, counts)
}

/// Derivative of the Gasser–Müller curve, `Σⱼ (yⱼ − yⱼ₋₁) K(x − sⱼ₋₁)`.
/// Applied to a counting dataset it estimates the intensity. For kernels
/// with jumps (rectangular) this is the derivative away from the jump set.
pub fn gm_derivative(data: &Dataset, k: &ScaledKernel, x: f64) -> f64 {
    let (xs, ys) = (data.xs(), data.ys());
    (1..xs.len())
        .map(|j| {
            let dy = ys[j] - ys[j - 1];
            if dy == 0.0 {
                0.0
            } else {
                dy * k.pdf(x - 0.5 * (xs[j - 1] + xs[j]))
            }
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrueCurve {
    Linear,
    Logistic,
    Step,
}

impl TrueCurve {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            TrueCurve::Linear => x,
            TrueCurve::Logistic => 10.0 / (1.0 + (-(x - 5.0)).exp()),
            TrueCurve::Step => {
                if x < 5.0 {
                    0.0
                } else {
                    5.0
                }
            }
        }
    }
}

impl std::str::FromStr for TrueCurve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(TrueCurve::Linear),
            "logistic" => Ok(TrueCurve::Logistic),
            "step" => Ok(TrueCurve::Step),
            _ => Err(Error::invalid(format!("unknown curve '{s}'"))),
        }
    }
}

/// `n` points with `x` uniform on `[0, 10]` and `y = f(x) + N(0, noise_sd²)`.
pub fn synth_regression(f: TrueCurve, n: usize, noise_sd: f64, seed: u64) -> Result<Dataset> {
    if n == 0 {
        return Err(Error::invalid("need at least one point"));
    }
    if !(noise_sd >= 0.0) {
        return Err(Error::invalid(format!("noise sd must be nonnegative, got {noise_sd}")));
    }
    let noise = Normal::new(0.0, noise_sd)
        .map_err(|_| Error::invalid(format!("noise sd must be nonnegative, got {noise_sd}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..10.0)).collect();
    xs.sort_by(f64::total_cmp);
    let ys = xs.iter().map(|&x| f.eval(x) + noise.sample(&mut rng)).collect();
    Dataset::new(xs, ys)
}

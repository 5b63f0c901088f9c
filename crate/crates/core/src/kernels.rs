//! Kernel densities and bandwidth scaling.
//!
//! A [`Kernel`] is a probability density on the real line. Built-in families
//! cover the normal density, the uniform density on `(-1/2, 1/2)`, the
//! compactly supported bump `b·exp(-1/(1-u²))`, the exponential-power family
//! `c_p·exp(-|u|^p)` and a two-component normal mixture (which is not
//! log-concave once the components separate). Arbitrary, possibly
//! asymmetric, densities can be supplied with [`Kernel::custom`].
//!
//! [`ScaledKernel`] is `K_h(u) = κ(u/h)/h` for a mother kernel `κ`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use libm::{erf, erfc};
use statrs::function::gamma::{gamma, gamma_lr};

use crate::quad::{self, DEFAULT_TOL};
use crate::{Error, Result};

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Number of cached CDF anchors for compactly supported kernels that lack a
/// closed-form CDF.
const CDF_ANCHORS: usize = 256;

/// Tolerance used when building construction-time constants.
const CONSTRUCTION_TOL: f64 = 1e-14;

pub type PdfFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Closed interval `[lo, hi]`; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Support {
    pub lo: f64,
    pub hi: f64,
}

impl Support {
    pub const REAL_LINE: Support = Support { lo: f64::NEG_INFINITY, hi: f64::INFINITY };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::invalid(format!("invalid support [{lo}, {hi}]")));
        }
        Ok(Support { lo, hi })
    }

    pub fn is_compact(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// True when `u` lies in the open interior.
    #[inline]
    pub fn contains_open(&self, u: f64) -> bool {
        u > self.lo && u < self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

#[derive(Clone)]
enum Family {
    Gaussian,
    Rectangular,
    Bump { b: f64 },
    ExpPower { p: f64, c: f64 },
    GaussMix { mu1: f64, mu2: f64, w: f64 },
    Custom { pdf: PdfFn, cdf: Option<PdfFn> },
}

/// Cumulative integrals of the pdf at equally spaced points of a compact
/// support. `values[k] = ∫_lo^{lo + k·step} pdf`.
#[derive(Debug)]
struct CdfAnchors {
    lo: f64,
    step: f64,
    values: Vec<f64>,
}

/// A probability density on ℝ.
#[derive(Clone)]
pub struct Kernel {
    name: String,
    family: Family,
    support: Support,
    anchors: Option<Arc<CdfAnchors>>,
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Kernel")
            .field("name", &self.name)
            .field("support", &self.support)
            .finish()
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[inline]
fn std_normal_pdf(u: f64) -> f64 {
    INV_SQRT_2PI * (-0.5 * u * u).exp()
}

#[inline]
fn std_normal_cdf(u: f64) -> f64 {
    0.5 * erfc(-u * FRAC_1_SQRT_2)
}

#[inline]
fn bump_shape(u: f64) -> f64 {
    if u > -1.0 && u < 1.0 {
        (-1.0 / ((1.0 - u) * (1.0 + u))).exp()
    } else {
        0.0
    }
}

impl Kernel {
    /// Standard normal density.
    pub fn gaussian() -> Self {
        Self::builtin("gaussian", Family::Gaussian, Support::REAL_LINE)
    }

    /// Uniform density on `(-1/2, 1/2)`. The endpoints evaluate to 0.
    pub fn rectangular() -> Self {
        Self::builtin("rectangular", Family::Rectangular, Support { lo: -0.5, hi: 0.5 })
    }

    /// `b·exp(-1/(1-u²))` on `(-1, 1)`, with `b` found by quadrature.
    pub fn bump() -> Self {
        let mass = quad::integrate(bump_shape, -1.0, 1.0, CONSTRUCTION_TOL)
            .expect("bump normalization integral converges");
        Self::builtin("bump", Family::Bump { b: 1.0 / mass }, Support { lo: -1.0, hi: 1.0 })
    }

    /// `c_p·exp(-|u|^p)` for `p ≥ 1`, with `c_p = 1/(2Γ(1 + 1/p))`.
    pub fn exp_power(p: f64) -> Result<Self> {
        if !(p.is_finite() && p >= 1.0) {
            return Err(Error::invalid(format!("exp_power requires p >= 1, got {p}")));
        }
        let c = 1.0 / (2.0 * gamma(1.0 + 1.0 / p));
        Ok(Self::builtin(
            &format!("exp_power:p={p}"),
            Family::ExpPower { p, c },
            Support::REAL_LINE,
        ))
    }

    /// `w·φ(u−mu1) + (1−w)·φ(u−mu2)`.
    pub fn gaussian_mixture(mu1: f64, mu2: f64, w: f64) -> Result<Self> {
        if !(w > 0.0 && w < 1.0) {
            return Err(Error::invalid(format!("mixture weight must lie in (0, 1), got {w}")));
        }
        if !(mu1.is_finite() && mu2.is_finite()) || mu1 == mu2 {
            return Err(Error::invalid(format!(
                "mixture means must be finite and distinct, got {mu1} and {mu2}"
            )));
        }
        Ok(Self::builtin(
            &format!("gauss_mix:mu1={mu1},mu2={mu2},w={w}"),
            Family::GaussMix { mu1, mu2, w },
            Support::REAL_LINE,
        ))
    }

    /// A user-supplied density. The pdf must vanish outside `support` and
    /// integrate to one within `1e-8`; `cdf`, when given, must be its
    /// distribution function.
    pub fn custom(
        name: impl Into<String>,
        support: Support,
        pdf: impl Fn(f64) -> f64 + Send + Sync + 'static,
        cdf: Option<PdfFn>,
    ) -> Result<Self> {
        let kernel = Kernel {
            name: name.into(),
            family: Family::Custom { pdf: Arc::new(pdf), cdf },
            support,
            anchors: None,
        }
        .with_anchors();
        let err = kernel.normalization_error()?;
        if err > 1e-8 {
            return Err(Error::invalid(format!(
                "kernel '{}' integrates to 1{:+e}",
                kernel.name, err
            )));
        }
        Ok(kernel)
    }

    fn builtin(name: &str, family: Family, support: Support) -> Self {
        let kernel = Kernel { name: name.to_owned(), family, support, anchors: None }.with_anchors();
        debug_assert!(
            kernel.normalization_error().is_ok_and(|e| e <= 1e-8),
            "built-in kernel {name} is not normalized"
        );
        kernel
    }

    fn with_anchors(mut self) -> Self {
        if self.has_closed_cdf() || !self.support.is_compact() {
            return self;
        }
        let lo = self.support.lo;
        let step = self.support.width() / CDF_ANCHORS as f64;
        let mut values = Vec::with_capacity(CDF_ANCHORS + 1);
        let mut acc = 0.0;
        values.push(0.0);
        for k in 0..CDF_ANCHORS {
            let a = lo + k as f64 * step;
            let b = if k + 1 == CDF_ANCHORS { self.support.hi } else { a + step };
            acc += self.integrate_pdf(a, b, CONSTRUCTION_TOL).unwrap_or(f64::NAN);
            values.push(acc);
        }
        self.anchors = Some(Arc::new(CdfAnchors { lo, step, values }));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn support(&self) -> Support {
        self.support
    }

    /// Density value; exactly 0 outside the open support.
    #[inline]
    pub fn pdf(&self, u: f64) -> f64 {
        match &self.family {
            Family::Gaussian => std_normal_pdf(u),
            Family::Rectangular => {
                if u > -0.5 && u < 0.5 {
                    1.0
                } else {
                    0.0
                }
            }
            Family::Bump { b } => b * bump_shape(u),
            Family::ExpPower { p, c } => c * (-u.abs().powf(*p)).exp(),
            Family::GaussMix { mu1, mu2, w } => {
                w * std_normal_pdf(u - mu1) + (1.0 - w) * std_normal_pdf(u - mu2)
            }
            Family::Custom { pdf, .. } => {
                if self.support.contains_open(u) {
                    pdf(u)
                } else {
                    0.0
                }
            }
        }
    }

    pub fn has_closed_cdf(&self) -> bool {
        match &self.family {
            Family::Bump { .. } => false,
            Family::Custom { cdf, .. } => cdf.is_some(),
            _ => true,
        }
    }

    /// Closed-form CDF, when the family has one.
    pub fn closed_cdf(&self, u: f64) -> Option<f64> {
        let v = match &self.family {
            Family::Gaussian => std_normal_cdf(u),
            Family::Rectangular => (u + 0.5).clamp(0.0, 1.0),
            Family::Bump { .. } => return None,
            Family::ExpPower { p, .. } => {
                let a = u.abs();
                let half_mass = if a == 0.0 {
                    0.0
                } else if a.is_infinite() {
                    1.0
                } else if *p == 1.0 {
                    -(-a).exp_m1()
                } else if *p == 2.0 {
                    erf(a)
                } else {
                    gamma_lr(1.0 / p, a.powf(*p))
                };
                0.5 + 0.5 * u.signum() * half_mass
            }
            Family::GaussMix { mu1, mu2, w } => {
                w * std_normal_cdf(u - mu1) + (1.0 - w) * std_normal_cdf(u - mu2)
            }
            Family::Custom { cdf, .. } => cdf.as_ref()?(u),
        };
        Some(v.clamp(0.0, 1.0))
    }

    /// `F(x) = ∫_{-∞}^x pdf`, closed form when available and adaptive
    /// quadrature (absolute error ≤ `tol`) otherwise.
    pub fn kernel_cdf(&self, x: f64, tol: f64) -> Result<f64> {
        if !(tol > 0.0) {
            return Err(Error::invalid(format!("cdf tolerance must be positive, got {tol}")));
        }
        if let Some(v) = self.closed_cdf(x) {
            return Ok(v);
        }
        if x <= self.support.lo {
            return Ok(0.0);
        }
        if x >= self.support.hi {
            return Ok(1.0);
        }
        let v = match &self.anchors {
            Some(anchors) => {
                let k = (((x - anchors.lo) / anchors.step).floor() as usize).min(CDF_ANCHORS - 1);
                let a = anchors.lo + k as f64 * anchors.step;
                anchors.values[k] + self.integrate_pdf(a, x, tol)?
            }
            None => self.integrate_pdf(self.support.lo, x, tol)?,
        };
        Ok(v.clamp(0.0, 1.0))
    }

    /// CDF by direct quadrature from the lower support end, ignoring any
    /// closed form or cached anchors.
    pub fn quadrature_cdf(&self, x: f64, tol: f64) -> Result<f64> {
        if x <= self.support.lo {
            return Ok(0.0);
        }
        let hi = x.min(self.support.hi);
        Ok(self.integrate_pdf(self.support.lo, hi, tol)?.clamp(0.0, 1.0))
    }

    /// `∫_a^b pdf` over a sub-interval of the support. Finite support
    /// endpoints are nudged inward so the integrand sees the open interval.
    fn integrate_pdf(&self, a: f64, b: f64, tol: f64) -> Result<f64> {
        let a = if a == self.support.lo && a.is_finite() { a.next_up() } else { a };
        let b = if b == self.support.hi && b.is_finite() { b.next_down() } else { b };
        if a >= b {
            return Ok(0.0);
        }
        quad::integrate(|u| self.pdf(u), a, b, tol)
    }

    /// `|∫ pdf − 1|` by adaptive quadrature over the support.
    pub fn normalization_error(&self) -> Result<f64> {
        let mass = match self.support.is_compact() {
            true => self.integrate_pdf(self.support.lo, self.support.hi, DEFAULT_TOL)?,
            // Split at the origin so the mapped half lines stay well resolved.
            false => {
                let lo = self.support.lo;
                let hi = self.support.hi;
                let mid = if lo < 0.0 && hi > 0.0 { 0.0 } else if lo.is_finite() { lo + 1.0 } else { hi - 1.0 };
                self.integrate_pdf(lo, mid, DEFAULT_TOL / 2.0)?
                    + self.integrate_pdf(mid, hi, DEFAULT_TOL / 2.0)?
            }
        };
        Ok((mass - 1.0).abs())
    }

    /// Smallest `x` with `F(x) ≥ p`, by bisection.
    pub fn quantile(&self, p: f64, tol: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::invalid(format!("quantile level must lie in (0, 1), got {p}")));
        }
        let mut lo = if self.support.lo.is_finite() { self.support.lo } else { -1.0 };
        let mut hi = if self.support.hi.is_finite() { self.support.hi } else { 1.0 };
        while self.kernel_cdf(lo, tol)? >= p {
            lo -= 2.0 * (hi - lo);
        }
        while self.kernel_cdf(hi, tol)? < p {
            hi += 2.0 * (hi - lo);
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.kernel_cdf(mid, tol)? >= p {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(hi)
    }

    /// Interval carrying all but `tail` of the mass on each side (the
    /// support itself when compact).
    pub fn effective_support(&self, tail: f64) -> Result<(f64, f64)> {
        let lo = match self.support.lo.is_finite() {
            true => self.support.lo,
            false => self.quantile(tail, DEFAULT_TOL)?,
        };
        let hi = match self.support.hi.is_finite() {
            true => self.support.hi,
            false => self.quantile(1.0 - tail, DEFAULT_TOL)?,
        };
        Ok((lo, hi))
    }

    /// `K_h(u) = κ(u/h)/h`.
    pub fn scale(&self, h: f64) -> Result<ScaledKernel> {
        ScaledKernel::new(self.clone(), h)
    }
}

impl FromStr for Kernel {
    type Err = Error;

    /// Parses `gaussian`, `rectangular`, `bump`, `exp_power:p=<v>` or
    /// `gauss_mix:mu1=<v>,mu2=<v>,w=<v>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, args) = match s.split_once(':') {
            Some((h, a)) => (h, a),
            None => (s, ""),
        };
        let params = parse_params(args)?;
        let get = |key: &str| -> Result<f64> {
            params
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::invalid(format!("kernel '{s}' is missing parameter '{key}'")))
        };
        let expect = |keys: &[&str]| -> Result<()> {
            match params.iter().find(|(k, _)| !keys.contains(&k.as_str())) {
                Some((k, _)) => Err(Error::invalid(format!("kernel '{s}' has unknown parameter '{k}'"))),
                None => Ok(()),
            }
        };
        match head {
            "gaussian" | "rectangular" | "bump" => {
                expect(&[])?;
                Ok(match head {
                    "gaussian" => Kernel::gaussian(),
                    "rectangular" => Kernel::rectangular(),
                    _ => Kernel::bump(),
                })
            }
            "exp_power" => {
                expect(&["p"])?;
                Kernel::exp_power(get("p")?)
            }
            "gauss_mix" => {
                expect(&["mu1", "mu2", "w"])?;
                Kernel::gaussian_mixture(get("mu1")?, get("mu2")?, get("w")?)
            }
            _ => Err(Error::invalid(format!("unknown kernel '{s}'"))),
        }
    }
}

fn parse_params(args: &str) -> Result<Vec<(String, f64)>> {
    args.split(',')
        .map(str::trim)
        .filter(|a| !a.is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("expected key=value, got '{kv}'")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("parameter '{k}' is not a number: '{v}'")))?;
            Ok((k.trim().to_owned(), v))
        })
        .collect()
}

/// A mother kernel rescaled by a bandwidth `h > 0`.
#[derive(Clone, Debug)]
pub struct ScaledKernel {
    pub mother: Kernel,
    pub h: f64,
}

impl ScaledKernel {
    pub fn new(mother: Kernel, h: f64) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::invalid(format!("bandwidth must be positive and finite, got {h}")));
        }
        Ok(ScaledKernel { mother, h })
    }

    #[inline]
    pub fn pdf(&self, u: f64) -> f64 {
        self.mother.pdf(u / self.h) / self.h
    }

    pub fn closed_cdf(&self, u: f64) -> Option<f64> {
        self.mother.closed_cdf(u / self.h)
    }

    pub fn kernel_cdf(&self, u: f64, tol: f64) -> Result<f64> {
        self.mother.kernel_cdf(u / self.h, tol)
    }

    pub fn support(&self) -> Support {
        let s = self.mother.support();
        Support { lo: s.lo * self.h, hi: s.hi * self.h }
    }

    /// `h` for unbounded kernels, half the scaled support width otherwise.
    pub fn effective_width(&self) -> f64 {
        let s = self.support();
        if s.is_compact() {
            0.5 * s.width()
        } else {
            self.h
        }
    }
}

/// `1/√(2π)`, exposed for tests and examples.
pub const STD_NORMAL_PEAK: f64 = INV_SQRT_2PI;

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn builtins() -> Vec<Kernel> {
        vec![
            Kernel::gaussian(),
            Kernel::rectangular(),
            Kernel::bump(),
            Kernel::exp_power(1.0).unwrap(),
            Kernel::exp_power(2.0).unwrap(),
            Kernel::exp_power(3.0).unwrap(),
            Kernel::gaussian_mixture(-3.0, 3.0, 0.5).unwrap(),
            Kernel::gaussian_mixture(0.0, 1e-4, 0.5).unwrap(),
        ]
    }

    #[test]
    fn gaussian_values() {
        let g = Kernel::gaussian();
        assert!((g.pdf(0.0) - 0.398_942_280_401_432_7).abs() < 1e-15);
        assert_eq!(g.closed_cdf(0.0), Some(0.5));
        for u in [0.3, 1.0, 2.5, 7.0] {
            assert_eq!(g.pdf(u), g.pdf(-u));
        }
    }

    #[test]
    fn rectangular_values() {
        let r = Kernel::rectangular();
        assert_eq!(r.pdf(0.0), 1.0);
        assert_eq!(r.pdf(0.75), 0.0);
        assert_eq!(r.pdf(0.5), 0.0);
        assert_eq!(r.pdf(-0.5), 0.0);
        assert_eq!(r.closed_cdf(0.0), Some(0.5));
        assert_eq!(r.kernel_cdf(0.25, 1e-10).unwrap(), 0.75);
    }

    #[test]
    fn bump_values() {
        let k = Kernel::bump();
        let b = match k.family {
            Family::Bump { b } => b,
            _ => unreachable!(),
        };
        // 1 / ∫ exp(-1/(1-u²)) du, checked against Gauss–Legendre in tests/kernels.rs.
        assert!((b - 2.252_283_6).abs() < 1e-6, "b = {b}");
        assert_eq!(k.pdf(1.0), 0.0);
        assert_eq!(k.pdf(-1.0), 0.0);
        assert!((k.pdf(0.0) - b * (-1f64).exp()).abs() < 1e-15);
        assert!(k.closed_cdf(0.0).is_none());
        assert!((k.kernel_cdf(0.0, 1e-10).unwrap() - 0.5).abs() < 1e-10);
    }

    #[test]
    fn exp_power_values() {
        let k2 = Kernel::exp_power(2.0).unwrap();
        assert!((k2.pdf(0.0) - 1.0 / PI.sqrt()).abs() < 1e-14);
        let k1 = Kernel::exp_power(1.0).unwrap();
        assert!((k1.pdf(0.0) - 0.5).abs() < 1e-14);
        assert!(Kernel::exp_power(0.5).is_err());
        assert!(Kernel::exp_power(f64::NAN).is_err());
    }

    #[test]
    fn mixture_preconditions() {
        assert!(Kernel::gaussian_mixture(0.0, 1.0, 1.5).is_err());
        assert!(Kernel::gaussian_mixture(0.0, 1.0, 0.0).is_err());
        assert!(Kernel::gaussian_mixture(1.0, 1.0, 0.5).is_err());
    }

    #[test]
    fn normalization_of_builtins() {
        for k in builtins() {
            let err = k.normalization_error().unwrap();
            assert!(err <= 1e-8, "{k}: {err}");
        }
    }

    #[test]
    fn support_containment() {
        for k in builtins() {
            let s = k.support();
            if s.is_compact() {
                for d in [1e-12, 0.1, 1.0, 10.0] {
                    assert_eq!(k.pdf(s.lo - d), 0.0);
                    assert_eq!(k.pdf(s.hi + d), 0.0);
                }
            }
        }
    }

    #[test]
    fn closed_and_quadrature_cdf_agree() {
        for k in builtins().into_iter().filter(Kernel::has_closed_cdf) {
            let (lo, hi) = k.effective_support(1e-9).unwrap();
            for i in 0..100 {
                let x = lo + (hi - lo) * (i as f64 + 0.5) / 100.0;
                let closed = k.closed_cdf(x).unwrap();
                let quad = k.quadrature_cdf(x, 1e-10).unwrap();
                assert!((closed - quad).abs() <= 1e-8, "{k} at {x}: {closed} vs {quad}");
            }
        }
    }

    #[test]
    fn anchored_cdf_matches_direct_quadrature() {
        let k = Kernel::bump();
        for i in 0..=64 {
            let x = -1.1 + 2.2 * i as f64 / 64.0;
            let a = k.kernel_cdf(x, 1e-10).unwrap();
            let b = k.quadrature_cdf(x, 1e-12).unwrap();
            assert!((a - b).abs() < 1e-9, "{x}: {a} vs {b}");
        }
    }

    #[test]
    fn cdf_is_nondecreasing_and_matches_pdf() {
        for k in builtins() {
            let (lo, hi) = k.effective_support(1e-6).unwrap();
            let mut prev = 0.0;
            for i in 0..=400 {
                let x = lo + (hi - lo) * i as f64 / 400.0;
                let f = k.kernel_cdf(x, 1e-10).unwrap();
                assert!(f >= prev - 1e-12, "{k} decreasing at {x}");
                prev = f;
            }
            let d = 1e-5;
            for i in 1..20 {
                let x = lo + (hi - lo) * i as f64 / 20.0;
                let fd = (k.kernel_cdf(x + d, 1e-12).unwrap() - k.kernel_cdf(x - d, 1e-12).unwrap())
                    / (2.0 * d);
                assert!((fd - k.pdf(x)).abs() < 1e-5, "{k} at {x}: {fd} vs {}", k.pdf(x));
            }
        }
    }

    #[test]
    fn cdf_limits() {
        for k in builtins() {
            assert!(k.kernel_cdf(-1e6, 1e-10).unwrap() <= 1e-10);
            assert!((k.kernel_cdf(1e6, 1e-10).unwrap() - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn scaling() {
        let g = Kernel::gaussian().scale(2.0).unwrap();
        assert!((g.pdf(0.0) - 0.199_471_140_200_716_35).abs() < 1e-15);
        let r = Kernel::rectangular().scale(4.0).unwrap();
        assert_eq!(r.support(), Support { lo: -2.0, hi: 2.0 });
        assert_eq!(r.effective_width(), 2.0);
        for k in builtins() {
            let s = k.scale(1.0).unwrap();
            for u in [-2.0, -0.3, 0.0, 0.4, 1.7] {
                assert_eq!(s.pdf(u), k.pdf(u));
            }
        }
        assert!(Kernel::gaussian().scale(0.0).is_err());
        assert!(Kernel::gaussian().scale(-1.0).is_err());
    }

    #[test]
    fn parse_names() {
        for name in ["gaussian", "rectangular", "bump", "exp_power:p=2", "gauss_mix:mu1=-3,mu2=3,w=0.5"] {
            let k: Kernel = name.parse().unwrap();
            assert_eq!(k.name(), name);
        }
        assert!("triangle".parse::<Kernel>().is_err());
        assert!("exp_power".parse::<Kernel>().is_err());
        assert!("exp_power:p=0.5".parse::<Kernel>().is_err());
        assert!("exp_power:q=2".parse::<Kernel>().is_err());
        assert!("gauss_mix:mu1=0,mu2=1,w=1.5".parse::<Kernel>().is_err());
    }

    #[test]
    fn custom_asymmetric_kernel() {
        // Shifted gamma(2, 1) density: u e^{-u} on (0, ∞), recentred at -1.
        let k = Kernel::custom(
            "gamma2",
            Support::new(-1.0, f64::INFINITY).unwrap(),
            |u| (u + 1.0) * (-(u + 1.0)).exp(),
            None,
        )
        .unwrap();
        assert!(k.normalization_error().unwrap() < 1e-8);
        let f = k.kernel_cdf(0.0, 1e-10).unwrap();
        assert!((f - (1.0 - 2.0 * (-1f64).exp())).abs() < 1e-9);

        let bad = Kernel::custom("half", Support::new(0.0, 1.0).unwrap(), |_| 0.5, None);
        assert!(bad.is_err());
    }
}

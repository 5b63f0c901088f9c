//! Kernel regression with monotonicity guarantees.
//!
//! This crate implements the three classical kernel regression smoothers
//!
//! * Nadaraya–Watson: `Σ yᵢ K(x−xᵢ) / Σ K(x−xᵢ)`, defined where the denominator is positive;
//! * Priestley–Chao: `Σ yᵢ (xᵢ−xᵢ₋₁) K(x−xᵢ)`;
//! * Gasser–Müller: `Σ yᵢ ∫_{sᵢ₋₁}^{sᵢ} K(x−t) dt` with midpoints `sᵢ = (xᵢ+xᵢ₊₁)/2`,
//!
//! together with the tools needed to study when they map co-monotone data
//! (`x` and `y` both sorted) to a nondecreasing curve:
//!
//! * [`kernels`]: kernel densities, their CDFs and bandwidth scaling;
//! * [`estimators`]: datasets, point estimators and grid evaluation;
//! * [`model_selection`]: leave-one-out cross-validation of the bandwidth;
//! * [`isotonic`]: pool-adjacent-violators and the isotonize/smooth pipelines;
//! * [`properties`]: executable checks for monotonicity, log-concavity and
//!   shift preservation;
//! * [`applications`]: ECDF, quantile, Q-Q and point-process constructions;
//! * [`io`] and [`cli`]: CSV/JSON formats and the `kreg` command line driver.
//!
//! ```
//! use kernreg::prelude::*;
//!
//! let data = fixture::paper_dataset();
//! let spec = EstimatorSpec::new(Method::Gm, Kernel::gaussian().scale(1.3)?);
//! let grid = default_grid(&data, &spec.kernel, 201)?;
//! let curve = eval_grid(&data, &spec, &grid)?;
//! assert!(check_monotone(&curve, 1e-9).is_nondecreasing);
//! # Ok::<(), kernreg::Error>(())
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod applications;
pub mod cli;
mod error;
pub mod estimators;
pub mod fixture;
pub mod io;
pub mod isotonic;
pub mod kernels;
pub mod model_selection;
pub mod properties;
pub mod quad;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::applications::{
        counting_dataset, ecdf_dataset, gm_derivative, pooled_counting_dataset,
        quantile_dataset, qq_dataset, synth_regression, OrderedSample, TrueCurve,
    };
    pub use crate::estimators::{
        default_grid, eval_grid, gm_eval, nw_eval, pc_eval, CurveSample, Dataset, EstimatorSpec,
        Method, PcOrigin,
    };
    pub use crate::fixture;
    pub use crate::isotonic::{is_pipeline, pava, pava_unit, si_pipeline, IsotonicFit};
    pub use crate::kernels::{Kernel, ScaledKernel, Support};
    pub use crate::model_selection::{cw, default_bandwidth_range, minimize_cw, CvProfile};
    pub use crate::properties::{
        check_log_concave, check_monotone, check_shift_preservation, find_nw_violation,
        find_pc_violation, LogConcavityReport, MonotonicityReport,
    };
    pub use crate::{Error, Result};
}

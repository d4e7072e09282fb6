//! Parameter sweeps, randomized agreement studies, threshold bisection and the
//! closed-form regression suite.

mod batch;
mod bisect;
mod selftest;
mod sweep;

pub use batch::{compare_batch, replay, sample_state, AgreementStats, Disagreement, Ensemble};
pub use bisect::bisect_threshold;
pub use selftest::{run_selftest, run_selftest_with_metric, CheckResult};
pub use sweep::{grid_point, sweep, SweepRow};

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::states::{
    rudolph_state, singlet_polarized_mixture, werner, DensityMatrix, RudolphParams,
};

/// A one-parameter state family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family<T: Real> {
    /// Werner states, parameter α ∈ [0, 1].
    Werner,
    /// The (r, s, t) family at fixed r and s, parameter t with t² ≤ (1 − s)(1 + r).
    Rudolph { r: T, s: T },
    /// x|S⟩⟨S| + (1 − x)|↑↑⟩⟨↑↑|, parameter x ∈ [0, 1].
    SingletPolarized,
}

impl<T: Real> Family<T> {
    pub fn state(&self, param: T) -> Result<DensityMatrix<T>> {
        match *self {
            Family::Werner => werner(param),
            Family::Rudolph { r, s } => rudolph_state(RudolphParams::new(r, s, param)),
            Family::SingletPolarized => singlet_polarized_mixture(param),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Werner => "werner",
            Family::Rudolph { .. } => "rudolph",
            Family::SingletPolarized => "singlet_polarized",
        }
    }

    /// Checks that every parameter in [lo, hi] gives a valid state.
    ///
    /// Each validity region is an interval, so checking the endpoints suffices.
    pub fn validate_range(&self, lo: T, hi: T) -> Result<()> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::out_of_range("range", format!("need lo < hi, got [{lo}, {hi}]")));
        }
        self.state(lo)?;
        self.state(hi)?;
        Ok(())
    }
}

impl<T: Real> fmt::Display for Family<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Rudolph { r, s } => write!(f, "rudolph(r={r}, s={s})"),
            other => f.write_str(other.name()),
        }
    }
}

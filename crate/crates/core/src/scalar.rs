//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar the library is generic over (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Widens to `f64` for reporting.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// A tolerance of at least `factor` machine epsilons, or `value`, whichever is larger.
    ///
    /// Keeps the `f64` defaults at their nominal values while giving `f32` a usable floor.
    fn tol(value: f64, factor: f64) -> Self {
        Self::lit(value).max(Self::epsilon() * Self::lit(factor))
    }
}

impl Real for f32 {}
impl Real for f64 {}

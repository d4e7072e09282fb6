use super::Family;
use crate::config::Tolerances;
use crate::criteria::{lorentz_square, metric_square, pauli_coefficients, plt_spectrum};
use crate::error::{Error, Result};
use crate::linalg::RealMatrix4;
use crate::scalar::Real;

pub(crate) fn statistic<T: Real>(
    family: &Family<T>,
    param: T,
    metric: Option<&RealMatrix4<T>>,
    cfg: &Tolerances<T>,
) -> Result<T> {
    let a = pauli_coefficients(&family.state(param)?)?;
    let b = match metric {
        Some(g) => metric_square(&a, g),
        None => lorentz_square(&a),
    };
    Ok(plt_spectrum(&b, cfg.imag, cfg.neg)?.t)
}

/// Locates the zero crossing of T on [lo, hi] to within `tol` by bisection.
pub fn bisect_threshold<T: Real>(
    family: Family<T>,
    lo: T,
    hi: T,
    tol: T,
    cfg: &Tolerances<T>,
) -> Result<T> {
    bisect_with(family, lo, hi, tol, None, cfg)
}

pub(crate) fn bisect_with<T: Real>(
    family: Family<T>,
    mut lo: T,
    mut hi: T,
    tol: T,
    metric: Option<&RealMatrix4<T>>,
    cfg: &Tolerances<T>,
) -> Result<T> {
    if tol.is_nan() || tol <= T::zero() {
        return Err(Error::out_of_range("tol", format!("must be positive, got {tol}")));
    }
    family.validate_range(lo, hi)?;
    let t_lo = statistic(&family, lo, metric, cfg)?;
    let t_hi = statistic(&family, hi, metric, cfg)?;
    if t_lo == T::zero() {
        return Ok(lo);
    }
    if t_hi == T::zero() {
        return Ok(hi);
    }
    if (t_lo > T::zero()) == (t_hi > T::zero()) {
        return Err(Error::NoSignChange {
            lo: lo.to_f64_lossy(),
            hi: hi.to_f64_lossy(),
            t_lo: t_lo.to_f64_lossy(),
            t_hi: t_hi.to_f64_lossy(),
        });
    }
    let lo_positive = t_lo > T::zero();
    let half = T::lit(0.5);
    while hi - lo > tol {
        let mid = lo + (hi - lo) * half;
        if mid <= lo || mid >= hi {
            break;
        }
        let t_mid = statistic(&family, mid, metric, cfg)?;
        if t_mid == T::zero() {
            return Ok(mid);
        }
        if (t_mid > T::zero()) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) * half)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn werner_threshold_is_one_third() {
        let p = bisect_threshold(Family::Werner, 0.0_f64, 1.0, 1e-12, &Tolerances::default()).unwrap();
        assert!((p - 1.0 / 3.0).abs() <= 1e-12, "{p}");
    }

    #[test]
    fn entangled_intervals_have_no_sign_change() {
        let cfg = Tolerances::default();
        assert!(matches!(
            bisect_threshold(Family::SingletPolarized, 1e-6, 1.0, 1e-12, &cfg),
            Err(Error::NoSignChange { .. })
        ));
        assert!(matches!(
            bisect_threshold(Family::Werner, 0.5, 1.0, 1e-12, &cfg),
            Err(Error::NoSignChange { .. })
        ));
        assert!(bisect_threshold(Family::Werner, 0.0, 1.0, 0.0, &cfg).is_err());
    }
}

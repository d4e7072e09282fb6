use super::Family;
use crate::config::Tolerances;
use crate::criteria::{analyze, Classification, CriteriaReport};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// One grid point of a parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow<T: Real> {
    pub param: T,
    pub t: T,
    pub t_normalized: T,
    pub plt_verdict: Classification,
    pub ppt_min_eig: T,
    pub ppt_verdict: Classification,
    pub ccn_norm: T,
    pub concurrence: T,
}

impl<T: Real> SweepRow<T> {
    pub fn from_report(param: T, report: &CriteriaReport<T>) -> Self {
        Self {
            param,
            t: report.plt.spectrum.t,
            t_normalized: report.plt.spectrum.t_normalized(),
            plt_verdict: report.plt.verdict.class,
            ppt_min_eig: report.ppt.min_eigenvalue,
            ppt_verdict: report.ppt.verdict.class,
            ccn_norm: report.ccn.norm,
            concurrence: report.concurrence.value,
        }
    }
}

/// Point `i` of a uniform grid with `steps` points on [lo, hi], endpoints exact.
pub fn grid_point<T: Real>(lo: T, hi: T, steps: usize, i: usize) -> T {
    let n = T::lit((steps - 1) as f64);
    let k = T::lit(i as f64);
    if i == 0 {
        lo
    } else if i == steps - 1 {
        hi
    } else {
        (lo * (n - k) + hi * k) / n
    }
}

/// Full criteria report at each of `steps` uniformly spaced parameters in [lo, hi].
pub fn sweep<T: Real>(
    family: Family<T>,
    lo: T,
    hi: T,
    steps: usize,
    cfg: &Tolerances<T>,
) -> Result<Vec<SweepRow<T>>> {
    if steps < 2 {
        return Err(Error::out_of_range("steps", format!("need at least 2, got {steps}")));
    }
    family.validate_range(lo, hi)?;
    (0..steps)
        .map(|i| {
            let param = grid_point(lo, hi, steps, i);
            let rho = family.state(param)?;
            Ok(SweepRow::from_report(param, &analyze(&rho, cfg)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_hits_endpoints_and_tenths() {
        assert_eq!(grid_point(0.0, 1.0, 11, 0), 0.0);
        assert_eq!(grid_point(0.0, 1.0, 11, 10), 1.0);
        assert_eq!(grid_point(0.0, 1.0, 11, 3), 0.3);
        assert_eq!(grid_point(0.0, 1.0, 101, 33), 0.33);
    }

    #[test]
    fn rejects_bad_ranges_before_rows() {
        let cfg = Tolerances::default();
        assert!(sweep(Family::Werner, 0.0, 1.0, 1, &cfg).is_err());
        assert!(sweep(Family::Werner, 0.5, 0.5, 3, &cfg).is_err());
        assert!(sweep(Family::Werner, 0.0, 1.5, 3, &cfg).is_err());
        let rudolph = Family::Rudolph { r: 0.25, s: 0.5 };
        assert!(sweep(rudolph, 0.0, 0.9, 3, &cfg).is_err());
        assert!(sweep(Family::Rudolph { r: 0.5, s: 0.25 }, 0.0, 0.1, 3, &cfg).is_err());
    }

    #[test]
    fn werner_sweep_matches_closed_form() {
        let rows = sweep(Family::Werner, 0.0_f64, 1.0, 101, &Tolerances::default()).unwrap();
        assert_eq!(rows.len(), 101);
        for w in rows.windows(2) {
            assert!(w[1].param > w[0].param);
            assert!(w[1].t < w[0].t);
        }
        for row in &rows {
            assert!((row.t - (1.0 - 3.0 * row.param)).abs() < 1e-10);
            assert!((row.ppt_min_eig - (1.0 - 3.0 * row.param) / 4.0).abs() < 1e-10);
        }
        let changes = rows
            .windows(2)
            .filter(|w| w[0].plt_verdict != w[1].plt_verdict)
            .count();
        assert_eq!(changes, 1);
    }
}

//! Closed-form regression checks for the worked state families.
//!
//! The suite is parameterized by the metric used to square the coefficient
//! matrix, so it can be run against a deliberately wrong metric to confirm the
//! checks are sensitive to it.

use super::bisect::bisect_with;
use super::Family;
use crate::config::Tolerances;
use crate::criteria::{
    ccn_verdict, metric_square, pauli_coefficients, plt_spectrum, plt_verdict, ppt_verdict,
    Classification, PltSpectrum,
};
use crate::error::Result;
use crate::linalg::RealMatrix4;
use crate::states::{
    maximally_mixed, rudolph_state, singlet, singlet_polarized_mixture, werner, DensityMatrix,
    RudolphParams,
};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs the suite with the Minkowski metric.
pub fn run_selftest() -> Vec<CheckResult> {
    run_selftest_with_metric(&RealMatrix4::minkowski())
}

struct Ctx<'a> {
    metric: &'a RealMatrix4<f64>,
    cfg: Tolerances<f64>,
}

impl Ctx<'_> {
    fn spectrum(&self, rho: &DensityMatrix<f64>) -> Result<PltSpectrum<f64>> {
        let a = pauli_coefficients(rho)?;
        plt_spectrum(&metric_square(&a, self.metric), self.cfg.imag, self.cfg.neg)
    }

    fn square(&self, rho: &DensityMatrix<f64>) -> Result<RealMatrix4<f64>> {
        Ok(*metric_square(&pauli_coefficients(rho)?, self.metric).matrix())
    }
}

fn grid(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> {
    (0..steps).map(move |i| super::grid_point(lo, hi, steps, i))
}

/// Largest deviation over a grid, or the first error.
fn worst(values: impl Iterator<Item = Result<f64>>) -> Result<f64> {
    values.into_iter().try_fold(0.0, |acc: f64, v| Ok(acc.max(v?)))
}

fn check(name: &'static str, tol: f64, deviation: Result<f64>) -> CheckResult {
    match deviation {
        Ok(d) => CheckResult {
            name,
            passed: d <= tol,
            detail: format!("max deviation {d:.3e} (tolerance {tol:.0e})"),
        },
        Err(e) => CheckResult {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn flag(name: &'static str, outcome: Result<(bool, String)>) -> CheckResult {
    match outcome {
        Ok((passed, detail)) => CheckResult { name, passed, detail },
        Err(e) => CheckResult {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

const RUDOLPH_R: f64 = 0.25;
const RUDOLPH_S: f64 = 0.5;

/// Runs the suite with an arbitrary metric.
pub fn run_selftest_with_metric(metric: &RealMatrix4<f64>) -> Vec<CheckResult> {
    let ctx = Ctx {
        metric,
        cfg: Tolerances::default(),
    };
    let mut out = Vec::new();

    out.push(check(
        "werner: A = diag(1, -a, -a, -a)",
        1e-14,
        worst(grid(0.0, 1.0, 11).map(|a| {
            let coeffs = pauli_coefficients(&werner(a)?)?;
            Ok(coeffs.matrix().max_abs_diff(&RealMatrix4::diagonal([1.0, -a, -a, -a])))
        })),
    ));
    out.push(check(
        "werner: B = diag(1, a^2, a^2, a^2)",
        1e-14,
        worst(grid(0.0, 1.0, 11).map(|a| {
            Ok(ctx.square(&werner(a)?)?.max_abs_diff(&RealMatrix4::diagonal([1.0, a * a, a * a, a * a])))
        })),
    ));
    out.push(check(
        "werner: T = 1 - 3a on 101 points",
        1e-10,
        worst(grid(0.0, 1.0, 101).map(|a| Ok((ctx.spectrum(&werner(a)?)?.t - (1.0 - 3.0 * a)).abs()))),
    ));
    out.push(check(
        "werner: PPT min eigenvalue = (1 - 3a)/4",
        1e-10,
        worst(grid(0.0, 1.0, 101).map(|a| {
            Ok((ppt_verdict(&werner(a)?, ctx.cfg.boundary)?.min_eigenvalue - (1.0 - 3.0 * a) / 4.0).abs())
        })),
    ));
    out.push(check(
        "werner: threshold bisects to 1/3",
        1e-12,
        bisect_with(Family::Werner, 0.0, 1.0, 1e-12, Some(metric), &ctx.cfg).map(|p| (p - 1.0 / 3.0).abs()),
    ));

    let rudolph = |t: f64| rudolph_state(RudolphParams::new(RUDOLPH_R, RUDOLPH_S, t));
    out.push(check(
        "rudolph: A matches the (r, s, t) coefficient matrix",
        0.0,
        worst(grid(0.0, 0.25, 6).map(|t| {
            let p = RudolphParams::new(RUDOLPH_R, RUDOLPH_S, t);
            Ok(pauli_coefficients(&rudolph(t)?)?.matrix().max_abs_diff(&p.coefficients()))
        })),
    ));
    out.push(check(
        "rudolph: B closed form",
        1e-14,
        worst(grid(0.0, 0.25, 26).map(|t| {
            let (r, s) = (RUDOLPH_R, RUDOLPH_S);
            let want = RealMatrix4::new([
                [1.0 - s * s, 0.0, 0.0, (s - r) * (1.0 - s)],
                [0.0, t * t, 0.0, 0.0],
                [0.0, 0.0, t * t, 0.0],
                [-(s - r) * (1.0 - s), 0.0, 0.0, -(2.0 * r - s + 1.0) * (s - 1.0)],
            ])?;
            Ok(ctx.square(&rudolph(t)?)?.max_abs_diff(&want))
        })),
    ));
    out.push(check(
        "rudolph: spectrum (h^2, h^2, t^2, t^2)",
        1e-8,
        worst(grid(0.0, 0.25, 26).map(|t| {
            let sp = ctx.spectrum(&rudolph(t)?)?;
            let h2 = (1.0 - RUDOLPH_S) * (1.0 + RUDOLPH_R);
            let want = [h2, h2, t * t, t * t];
            Ok(sp.lambda.iter().zip(want).fold(0.0_f64, |m, (l, w)| m.max((l - w).abs())))
        })),
    ));
    out.push(check(
        "rudolph: T = -2t",
        1e-8,
        worst(grid(0.0, 0.25, 26).map(|t| Ok((ctx.spectrum(&rudolph(t)?)?.t + 2.0 * t).abs()))),
    ));
    out.push(check(
        "rudolph: T/mu0 = -4 sqrt(2/5) t",
        1e-8,
        worst(grid(0.0, 0.25, 26).map(|t| {
            Ok((ctx.spectrum(&rudolph(t)?)?.t_normalized() + 4.0 * (0.4_f64).sqrt() * t).abs())
        })),
    ));
    out.push(flag(
        "rudolph: realignment inconclusive at t = 1/16 while PLT and PPT detect",
        (|| {
            let rho = rudolph(1.0 / 16.0)?;
            let ccn = ccn_verdict(&rho, ctx.cfg.boundary)?;
            let sp = ctx.spectrum(&rho)?;
            let plt = plt_verdict(&sp, ctx.cfg.boundary).class;
            let ppt = ppt_verdict(&rho, ctx.cfg.boundary)?;
            let passed = ccn.verdict.class == Classification::Inconclusive
                && ccn.norm <= 1.0
                && plt == Classification::Entangled
                && ppt.verdict.class == Classification::Entangled;
            Ok((
                passed,
                format!("ccn norm {:.12}, T {:.6e}, PPT min eig {:.6e}", ccn.norm, sp.t, ppt.min_eigenvalue),
            ))
        })(),
    ));

    out.push(check(
        "singlet/up-up mixture: A closed form",
        1e-14,
        worst(grid(0.0, 1.0, 11).map(|x| {
            let want = RealMatrix4::new([
                [1.0, 0.0, 0.0, 1.0 - x],
                [0.0, -x, 0.0, 0.0],
                [0.0, 0.0, -x, 0.0],
                [1.0 - x, 0.0, 0.0, 1.0 - 2.0 * x],
            ])?;
            Ok(pauli_coefficients(&singlet_polarized_mixture(x)?)?.matrix().max_abs_diff(&want))
        })),
    ));
    out.push(check(
        "singlet/up-up mixture: B closed form",
        1e-14,
        worst(grid(0.0, 1.0, 11).map(|x| {
            let want = RealMatrix4::new([
                [-(x - 2.0) * x, 0.0, 0.0, 2.0 * (x - 1.0) * x],
                [0.0, x * x, 0.0, 0.0],
                [0.0, 0.0, x * x, 0.0],
                [-2.0 * (x - 1.0) * x, 0.0, 0.0, x * (3.0 * x - 2.0)],
            ])?;
            Ok(ctx.square(&singlet_polarized_mixture(x)?)?.max_abs_diff(&want))
        })),
    ));
    out.push(check(
        "singlet/up-up mixture: T = -2x",
        1e-10,
        worst(grid(0.0, 1.0, 11).map(|x| Ok((ctx.spectrum(&singlet_polarized_mixture(x)?)?.t + 2.0 * x).abs()))),
    ));
    out.push(check(
        "singlet/up-up mixture: all eigenvalues equal x^2",
        1e-7,
        worst(grid(0.0, 1.0, 11).map(|x| {
            let sp = ctx.spectrum(&singlet_polarized_mixture(x)?)?;
            Ok(sp.lambda.iter().fold(0.0_f64, |m, l| m.max((l - x * x).abs())))
        })),
    ));

    out.push(check(
        "singlet: T = -2",
        1e-12,
        ctx.spectrum(&singlet()).map(|sp| (sp.t + 2.0).abs()),
    ));
    out.push(check(
        "maximally mixed: T = 1",
        1e-12,
        ctx.spectrum(&maximally_mixed()).map(|sp| (sp.t - 1.0).abs()),
    ));
    out
}

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::config::Tolerances;
use crate::criteria::{
    analyze, ccn_verdict, concurrence_verdict, plt_test, ppt_verdict, Classification,
    CriteriaReport,
};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::states::{derive_seed, random_ginibre, random_pure, random_separable, DensityMatrix, RngSeed};

/// Random-state ensemble for agreement studies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ensemble {
    /// ρ = M M† with Gaussian M.
    Ginibre,
    /// Mixtures of `k` random product states.
    Separable { k: usize },
    /// Haar-random pure states.
    Pure,
}

impl Ensemble {
    pub const DEFAULT_SEPARABLE_TERMS: usize = 4;

    pub fn name(&self) -> &'static str {
        match self {
            Ensemble::Ginibre => "ginibre",
            Ensemble::Separable { .. } => "separable",
            Ensemble::Pure => "pure",
        }
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ensemble {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ginibre" => Ok(Ensemble::Ginibre),
            "separable" => Ok(Ensemble::Separable {
                k: Ensemble::DEFAULT_SEPARABLE_TERMS,
            }),
            "pure" => Ok(Ensemble::Pure),
            other => Err(Error::out_of_range(
                "ensemble",
                format!("unknown ensemble {other:?} (expected ginibre, separable or pure)"),
            )),
        }
    }
}

/// Draws the state with per-state seed `seed` from `ensemble`.
pub fn sample_state<T: Real>(ensemble: Ensemble, seed: RngSeed) -> Result<DensityMatrix<T>> {
    match ensemble {
        Ensemble::Ginibre => Ok(random_ginibre(seed)),
        Ensemble::Separable { k } => random_separable(seed, k),
        Ensemble::Pure => Ok(random_pure(seed)),
    }
}

/// Full report for one state of a batch, identified by its per-state seed.
pub fn replay<T: Real>(ensemble: Ensemble, seed: RngSeed, cfg: &Tolerances<T>) -> Result<CriteriaReport<T>> {
    analyze(&sample_state(ensemble, seed)?, cfg)
}

/// A state on which PLT and PPT disagreed or could not be evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub index: u64,
    pub seed: RngSeed,
    pub plt: Option<Classification>,
    pub ppt: Option<Classification>,
    /// Error message when a criterion failed.
    pub error: Option<String>,
}

/// Aggregate of a PLT-versus-PPT agreement study.
///
/// `total = agree + disagree + boundary_excluded`; states where a criterion failed
/// count as disagreements.
#[derive(Debug, Clone, PartialEq)]
pub struct AgreementStats<T: Real> {
    pub ensemble: Ensemble,
    pub seed: RngSeed,
    pub total: u64,
    pub agree: u64,
    pub disagree: u64,
    pub boundary_excluded: u64,
    pub positivity_violations: u64,
    pub numerical_failures: u64,
    pub plt_entangled: u64,
    pub ppt_entangled: u64,
    /// Decisive states where the concurrence sign disagreed with PPT.
    pub concurrence_mismatches: u64,
    /// States flagged by realignment but not by PPT.
    pub ccn_unsound: u64,
    /// min over states of min Re λ(B) / ‖B‖_max.
    pub min_re_ratio: T,
    /// max over states of max |Im λ(B)| / ‖B‖_max.
    pub max_abs_imag_ratio: T,
    /// min over states of T / max(μ₀, μ_floor).
    pub min_t_ratio: T,
    pub disagreements: Vec<Disagreement>,
}

impl<T: Real> AgreementStats<T> {
    /// True when the study supports the PLT claims: no disagreements and no
    /// positivity violations.
    pub fn claims_hold(&self) -> bool {
        self.disagree == 0 && self.positivity_violations == 0
    }
}

struct Outcome<T: Real> {
    index: u64,
    seed: RngSeed,
    plt: Option<Classification>,
    ppt: Option<Classification>,
    concurrence: Option<Classification>,
    ccn_entangled: bool,
    positivity_violation: bool,
    error: Option<String>,
    min_re_ratio: Option<T>,
    max_imag_ratio: Option<T>,
    t_ratio: Option<T>,
}

fn evaluate<T: Real>(ensemble: Ensemble, master: RngSeed, index: u64, cfg: &Tolerances<T>) -> Outcome<T> {
    let seed = derive_seed(master, index);
    let mut out = Outcome {
        index,
        seed,
        plt: None,
        ppt: None,
        concurrence: None,
        ccn_entangled: false,
        positivity_violation: false,
        error: None,
        min_re_ratio: None,
        max_imag_ratio: None,
        t_ratio: None,
    };
    let rho = match sample_state::<T>(ensemble, seed) {
        Ok(rho) => rho,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    let mut errors = Vec::new();
    match plt_test(&rho, cfg) {
        Ok(r) => {
            out.plt = Some(r.verdict.class);
            out.min_re_ratio = Some(r.spectrum.min_re_ratio());
            out.max_imag_ratio = Some(r.spectrum.max_imag_ratio());
            out.t_ratio = Some(r.spectrum.t / r.verdict.scale.max(T::min_positive_value()));
        }
        Err(e) => {
            out.positivity_violation = matches!(e, Error::EigenvaluePositivityViolation { .. });
            errors.push(format!("PLT: {e}"));
        }
    }
    match ppt_verdict(&rho, cfg.boundary) {
        Ok(r) => out.ppt = Some(r.verdict.class),
        Err(e) => errors.push(format!("PPT: {e}")),
    }
    match concurrence_verdict(&rho, cfg.boundary) {
        Ok(r) => out.concurrence = Some(r.verdict.class),
        Err(e) => errors.push(format!("concurrence: {e}")),
    }
    match ccn_verdict(&rho, cfg.boundary) {
        Ok(r) => out.ccn_entangled = r.verdict.class == Classification::Entangled,
        Err(e) => errors.push(format!("CCN: {e}")),
    }
    if !errors.is_empty() {
        out.error = Some(errors.join("; "));
    }
    out
}

/// Runs PLT, PPT, concurrence and realignment on `n` states of `ensemble`.
///
/// State `i` uses `derive_seed(seed, i)`, so results do not depend on evaluation
/// order or thread count, and any state can be replayed on its own.
pub fn compare_batch<T: Real>(
    ensemble: Ensemble,
    n: u64,
    seed: RngSeed,
    cfg: &Tolerances<T>,
) -> Result<AgreementStats<T>> {
    if n == 0 {
        return Err(Error::out_of_range("n", "batch size must be at least 1"));
    }
    let outcomes: Vec<Outcome<T>> = (0..n)
        .into_par_iter()
        .map(|i| evaluate(ensemble, seed, i, cfg))
        .collect();

    let mut stats = AgreementStats {
        ensemble,
        seed,
        total: n,
        agree: 0,
        disagree: 0,
        boundary_excluded: 0,
        positivity_violations: 0,
        numerical_failures: 0,
        plt_entangled: 0,
        ppt_entangled: 0,
        concurrence_mismatches: 0,
        ccn_unsound: 0,
        min_re_ratio: T::infinity(),
        max_abs_imag_ratio: T::zero(),
        min_t_ratio: T::infinity(),
        disagreements: Vec::new(),
    };

    for o in outcomes {
        if let Some(v) = o.min_re_ratio {
            stats.min_re_ratio = stats.min_re_ratio.min(v);
        }
        if let Some(v) = o.max_imag_ratio {
            stats.max_abs_imag_ratio = stats.max_abs_imag_ratio.max(v);
        }
        if let Some(v) = o.t_ratio {
            stats.min_t_ratio = stats.min_t_ratio.min(v);
        }
        stats.positivity_violations += u64::from(o.positivity_violation);
        stats.plt_entangled += u64::from(o.plt == Some(Classification::Entangled));
        stats.ppt_entangled += u64::from(o.ppt == Some(Classification::Entangled));
        if o.ccn_entangled && o.ppt != Some(Classification::Entangled) {
            stats.ccn_unsound += 1;
        }

        match (o.plt, o.ppt) {
            (Some(plt), Some(ppt)) if o.error.is_none() => {
                if !plt.is_decisive() || !ppt.is_decisive() {
                    stats.boundary_excluded += 1;
                } else if plt == ppt {
                    stats.agree += 1;
                    if let Some(c) = o.concurrence {
                        if c.is_decisive() && c != ppt {
                            stats.concurrence_mismatches += 1;
                        }
                    }
                } else {
                    stats.disagree += 1;
                    stats.disagreements.push(Disagreement {
                        index: o.index,
                        seed: o.seed,
                        plt: Some(plt),
                        ppt: Some(ppt),
                        error: None,
                    });
                }
            }
            _ => {
                if !o.positivity_violation {
                    stats.numerical_failures += 1;
                }
                stats.disagree += 1;
                stats.disagreements.push(Disagreement {
                    index: o.index,
                    seed: o.seed,
                    plt: o.plt,
                    ppt: o.ppt,
                    error: o.error,
                });
            }
        }
    }
    Ok(stats)
}

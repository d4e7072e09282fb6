//! Entanglement criteria for two-qubit states.
//!
//! The PLT test is the subject of this crate; PPT is the reference criterion,
//! realignment is sufficient-only, and the concurrence is an independent sign
//! oracle. PLT and PPT work on unnormalized states; realignment and concurrence
//! normalize internally.

mod concurrence;
mod plt;
mod ppt;
mod realignment;

use std::fmt;

pub use concurrence::{concurrence, concurrence_verdict, ConcurrenceResult};
pub use plt::{
    lorentz_square, metric_square, pauli_coefficients, plt_spectrum, plt_verdict,
    reconstruct_density, LorentzSquare, PauliCoefficients, PltSpectrum,
};
pub use ppt::{partial_transpose, ppt_verdict, PptResult};
pub use realignment::{ccn_verdict, realignment, CcnResult};

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::states::DensityMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Separable,
    Entangled,
    /// Within the tolerance band around the decision surface.
    Boundary,
    /// The criterion cannot certify either way (realignment only).
    Inconclusive,
}

impl Classification {
    /// Lowercase token used in CSV and JSON output.
    pub fn token(self) -> &'static str {
        match self {
            Classification::Separable => "separable",
            Classification::Entangled => "entangled",
            Classification::Boundary => "boundary",
            Classification::Inconclusive => "inconclusive",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        match token {
            "separable" => Some(Classification::Separable),
            "entangled" => Some(Classification::Entangled),
            "boundary" => Some(Classification::Boundary),
            "inconclusive" => Some(Classification::Inconclusive),
            _ => None,
        }
    }

    /// Separable or Entangled.
    pub fn is_decisive(self) -> bool {
        matches!(self, Classification::Separable | Classification::Entangled)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.token())
    }
}

/// A classification with the statistic and band it was derived from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict<T: Real> {
    pub class: Classification,
    pub statistic: T,
    pub tolerance_used: T,
    /// Scale multiplying `tolerance_used` to give the band half-width.
    pub scale: T,
}

impl<T: Real> Verdict<T> {
    /// Separable above `+eps·scale`, Entangled below `−eps·scale`, Boundary between.
    pub fn classify(statistic: T, eps: T, scale: T) -> Self {
        let band = eps * scale;
        let class = if statistic > band {
            Classification::Separable
        } else if statistic < -band {
            Classification::Entangled
        } else {
            Classification::Boundary
        };
        Self {
            class,
            statistic,
            tolerance_used: eps,
            scale,
        }
    }
}

/// Everything the PLT test computes for one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PltResult<T: Real> {
    pub coefficients: PauliCoefficients<T>,
    pub square: LorentzSquare<T>,
    pub spectrum: PltSpectrum<T>,
    pub verdict: Verdict<T>,
}

/// Runs the whole PLT pipeline on ρ.
pub fn plt_test<T: Real>(rho: &DensityMatrix<T>, cfg: &Tolerances<T>) -> Result<PltResult<T>> {
    let coefficients = pauli_coefficients(rho)?;
    let square = lorentz_square(&coefficients);
    let spectrum = plt_spectrum(&square, cfg.imag, cfg.neg)?;
    let verdict = plt_verdict(&spectrum, cfg.boundary);
    Ok(PltResult {
        coefficients,
        square,
        spectrum,
        verdict,
    })
}

/// Results of all four criteria on one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriteriaReport<T: Real> {
    pub plt: PltResult<T>,
    pub ppt: PptResult<T>,
    pub ccn: CcnResult<T>,
    pub concurrence: ConcurrenceResult<T>,
}

fn label<V>(criterion: &'static str, r: Result<V>) -> Result<V> {
    r.map_err(|e| Error::Criterion {
        criterion,
        source: Box::new(e),
    })
}

/// Runs PLT, PPT, realignment and concurrence on ρ.
pub fn analyze<T: Real>(rho: &DensityMatrix<T>, cfg: &Tolerances<T>) -> Result<CriteriaReport<T>> {
    Ok(CriteriaReport {
        plt: label("PLT", plt_test(rho, cfg))?,
        ppt: label("PPT", ppt_verdict(rho, cfg.boundary))?,
        ccn: label("CCN", ccn_verdict(rho, cfg.boundary))?,
        concurrence: label("concurrence", concurrence_verdict(rho, cfg.boundary))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{maximally_mixed, werner};

    #[test]
    fn classify_bands() {
        assert_eq!(Verdict::classify(1.0, 1e-9, 1.0).class, Classification::Separable);
        assert_eq!(Verdict::classify(-1.0, 1e-9, 1.0).class, Classification::Entangled);
        assert_eq!(Verdict::classify(5e-10, 1e-9, 1.0).class, Classification::Boundary);
        assert_eq!(Verdict::classify(0.0, 1e-9, 0.0).class, Classification::Boundary);
    }

    #[test]
    fn tokens_round_trip() {
        for c in [
            Classification::Separable,
            Classification::Entangled,
            Classification::Boundary,
            Classification::Inconclusive,
        ] {
            assert_eq!(Classification::from_token(c.token()), Some(c));
        }
        assert_eq!(Classification::from_token("Separable"), None);
    }

    #[test]
    fn werner_point_nine_is_entangled_everywhere() {
        let r = analyze(&werner(0.9).unwrap(), &Tolerances::default()).unwrap();
        assert_eq!(r.plt.verdict.class, Classification::Entangled);
        assert_eq!(r.ppt.verdict.class, Classification::Entangled);
        assert_eq!(r.concurrence.verdict.class, Classification::Entangled);
        assert_eq!(r.ccn.verdict.class, Classification::Entangled);
    }

    #[test]
    fn maximally_mixed_report() {
        let r = analyze(&maximally_mixed::<f64>(), &Tolerances::default()).unwrap();
        assert_eq!(r.plt.spectrum.t, 1.0);
        assert_eq!(r.plt.verdict.class, Classification::Separable);
        assert_eq!(r.ppt.verdict.class, Classification::Separable);
        assert_eq!(r.ccn.verdict.class, Classification::Inconclusive);
        assert!((r.ccn.norm - 0.5).abs() < 1e-7);
        assert_eq!(r.concurrence.value, 0.0);
    }
}

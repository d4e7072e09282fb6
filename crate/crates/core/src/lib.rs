//! Separability tests for two-qubit density matrices.
//!
//! The central test expands a state in the Pauli product basis, squares the
//! coefficient matrix against the Minkowski metric and decides separability from
//! the square roots of its eigenvalues. PPT, realignment and concurrence are
//! provided as reference criteria, along with random-state ensembles, parameter
//! sweeps and a closed-form regression suite.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the `*F64` and
//! `*F32` aliases below name the common concrete types.
//!
//! ```
//! use qubit_plt::{analyze, werner, Classification, Tolerances};
//!
//! let rho = werner(0.5_f64).unwrap();
//! let report = analyze(&rho, &Tolerances::default()).unwrap();
//! assert_eq!(report.plt.verdict.class, Classification::Entangled);
//! assert!((report.plt.spectrum.t + 0.5).abs() < 1e-12);
//! ```

// Negated comparisons are how NaN inputs get rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::op_ref)]

pub mod config;
pub mod criteria;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod pauli;
pub mod scalar;
pub mod states;

pub use config::Tolerances;
pub use criteria::{
    analyze, ccn_verdict, concurrence, concurrence_verdict, lorentz_square, partial_transpose,
    pauli_coefficients, plt_spectrum, plt_test, plt_verdict, ppt_verdict, realignment,
    reconstruct_density, CcnResult, Classification, ConcurrenceResult, CriteriaReport,
    LorentzSquare, PauliCoefficients, PltResult, PltSpectrum, PptResult, Verdict,
};
pub use error::{Error, Result};
pub use harness::{
    bisect_threshold, compare_batch, replay, run_selftest, sweep, AgreementStats, CheckResult,
    Ensemble, Family, SweepRow,
};
pub use linalg::{ComplexMatrix4, RealMatrix4};
pub use scalar::Real;
pub use states::{
    apply_local_unitary, maximally_mixed, product_mixture, product_state, pure_state,
    random_ginibre, random_pure, random_separable, rudolph_state, singlet,
    singlet_polarized_mixture, werner, BlochVector, DensityMatrix, RngSeed, RudolphParams,
};

pub type DensityMatrixF64 = DensityMatrix<f64>;
pub type DensityMatrixF32 = DensityMatrix<f32>;
pub type ComplexMatrix4F64 = ComplexMatrix4<f64>;
pub type RealMatrix4F64 = RealMatrix4<f64>;
pub type TolerancesF64 = Tolerances<f64>;
pub type TolerancesF32 = Tolerances<f32>;
pub type CriteriaReportF64 = CriteriaReport<f64>;
pub type PltResultF64 = PltResult<f64>;
pub type SweepRowF64 = SweepRow<f64>;
pub type AgreementStatsF64 = AgreementStats<f64>;
pub type FamilyF64 = Family<f64>;

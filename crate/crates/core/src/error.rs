use thiserror::Error;

/// Errors raised by the linear algebra kernels, state constructors and criteria.
///
/// Residuals are widened to `f64` so the error type does not depend on the scalar.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("matrix is not Hermitian: relative residual {residual:.3e} exceeds {tolerance:.3e}")]
    NonHermitianInput { residual: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite: minimum eigenvalue {min_eigenvalue:.3e} below {bound:.3e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64, bound: f64 },

    #[error("trace must be positive, got {trace:.3e}")]
    NonPositiveTrace { trace: f64 },

    #[error("operator is not unitary: residual {residual:.3e}")]
    NonUnitaryInput { residual: f64 },

    #[error("parameter {param} out of range: {reason}")]
    ParamOutOfRange { param: &'static str, reason: String },

    #[error("Pauli coefficient ({mu}, {nu}) has imaginary residue {residue:.3e}")]
    NonRealCoefficient { mu: usize, nu: usize, residue: f64 },

    #[error("coefficients do not describe a density matrix: {0}")]
    NotADensityMatrix(Box<Error>),

    #[error("eigenvalue {re:.6e}{im:+.6e}i of B violates positivity (norm {norm:.3e})")]
    EigenvaluePositivityViolation { re: f64, im: f64, norm: f64 },

    #[error("{algorithm} did not converge within {iterations} iterations")]
    ConvergenceFailure { algorithm: &'static str, iterations: usize },

    #[error("statistic does not change sign on [{lo}, {hi}]: T(lo) = {t_lo:.6e}, T(hi) = {t_hi:.6e}")]
    NoSignChange { lo: f64, hi: f64, t_lo: f64, t_hi: f64 },

    #[error("{criterion} criterion failed: {source}")]
    Criterion {
        criterion: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for failures of the numerical kernels rather than of the input.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::ConvergenceFailure { .. } | Error::EigenvaluePositivityViolation { .. } => true,
            Error::Criterion { source, .. } => source.is_numerical(),
            _ => false,
        }
    }

    /// Strips `Criterion` labels.
    pub fn root(&self) -> &Error {
        match self {
            Error::Criterion { source, .. } => source.root(),
            other => other,
        }
    }

    pub(crate) fn out_of_range(param: &'static str, reason: impl Into<String>) -> Self {
        Error::ParamOutOfRange {
            param,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use crate::scalar::Real;

/// Numerical tolerances used by state validation and the entanglement criteria.
///
/// All values are relative: Hermiticity to ‖ρ‖_max, positivity to Tr ρ, the
/// Lorentz-square spectrum to ‖B‖_max, and boundary bands to each criterion's
/// own scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T: Real> {
    /// Allowed ‖ρ − ρ†‖_max / ‖ρ‖_max.
    pub hermitian: T,
    /// Allowed negative eigenvalue of ρ relative to Tr ρ.
    pub psd: T,
    /// Half-width of the boundary band around each decision surface.
    pub boundary: T,
    /// Imaginary parts of B eigenvalues up to `imag·‖B‖` are discarded.
    pub imag: T,
    /// Negative real parts of B eigenvalues down to `−neg·‖B‖` are clamped to zero.
    pub neg: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            hermitian: T::tol(1e-10, 64.0),
            psd: T::tol(1e-10, 64.0),
            boundary: T::tol(1e-9, 64.0),
            imag: T::tol(1e-6, 1e3),
            neg: T::tol(1e-8, 256.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_defaults_are_nominal() {
        let t = Tolerances::<f64>::default();
        assert_eq!(t.hermitian, 1e-10);
        assert_eq!(t.psd, 1e-10);
        assert_eq!(t.boundary, 1e-9);
        assert_eq!(t.imag, 1e-6);
        assert_eq!(t.neg, 1e-8);
    }

    #[test]
    fn f32_defaults_sit_above_rounding() {
        let t = Tolerances::<f32>::default();
        assert!(t.hermitian > 64.0 * f32::EPSILON * 0.99);
        assert!(t.boundary >= t.hermitian);
    }
}

//! Wootters concurrence, used here only through its sign.
//!
//! With ρ = W W† and Y = σ₂⊗σ₂ (real), the spectrum of ρ·Y·ρ*·Y equals that of
//! X†X for the complex-symmetric X = Wᵀ Y W. The square roots of those eigenvalues
//! are therefore the singular values of X, which only needs Hermitian solvers.

use super::Verdict;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, hermitian_eigenvalues, ComplexMatrix4};
use crate::pauli;
use crate::scalar::Real;
use crate::states::DensityMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceResult<T: Real> {
    /// C = max(0, s₀ − s₁ − s₂ − s₃)
    pub value: T,
    /// s₀ − s₁ − s₂ − s₃ before clamping at zero.
    pub raw: T,
    pub verdict: Verdict<T>,
}

/// Concurrence of ρ / Tr ρ.
pub fn concurrence<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    Ok(concurrence_verdict(rho, T::zero())?.value)
}

/// Concurrence with a three-way sign classification at band `boundary_eps`.
pub fn concurrence_verdict<T: Real>(
    rho: &DensityMatrix<T>,
    boundary_eps: T,
) -> Result<ConcurrenceResult<T>> {
    let unit = rho.normalized();
    let eig = hermitian_eigen(unit.matrix(), T::tol(1e-10, 64.0))?;
    let sqrt_d = eig.values.map(|d| d.max(T::zero()).sqrt());
    let w = ComplexMatrix4::from_fn(|i, k| eig.vectors[(i, k)] * sqrt_d[k]);
    let y = pauli::sigma_product::<T>(2, 2);
    let x = w.transpose() * y * w;
    let gram = (x.adjoint() * x).hermitian_part();
    let nu = hermitian_eigenvalues(&gram, T::tol(1e-10, 64.0))?;

    let neg_bound = -(T::tol(1e-8, 256.0) * nu[3].abs() + T::lit(64.0) * T::epsilon());
    if nu[0] < neg_bound {
        return Err(Error::EigenvaluePositivityViolation {
            re: nu[0].to_f64_lossy(),
            im: 0.0,
            norm: nu[3].to_f64_lossy(),
        });
    }
    let s = [nu[3], nu[2], nu[1], nu[0]].map(|v| v.max(T::zero()).sqrt());
    let raw = s[0] - s[1] - s[2] - s[3];
    // Positive raw means entangled, the opposite orientation to PLT and PPT.
    let verdict = Verdict::classify(-raw, boundary_eps, T::one());
    Ok(ConcurrenceResult {
        value: raw.max(T::zero()),
        raw,
        verdict: Verdict { statistic: raw, ..verdict },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::Classification;
    use crate::states::{product_state, singlet, werner, BlochVector};
    use approx::assert_abs_diff_eq;

    #[test]
    fn singlet_is_maximally_entangled() {
        let c = concurrence_verdict(&singlet::<f64>(), 1e-9).unwrap();
        assert_abs_diff_eq!(c.value, 1.0, epsilon = 1e-14);
        assert_eq!(c.verdict.class, Classification::Entangled);
        // Scaling the state does not change the normalized concurrence.
        let scaled = singlet::<f64>().scaled(7.5).unwrap();
        assert_abs_diff_eq!(concurrence(&scaled).unwrap(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn product_states_have_zero_concurrence() {
        let a = BlochVector::new([0.6, 0.0, 0.8]).unwrap();
        let b = BlochVector::new([0.1, -0.2, 0.3]).unwrap();
        let c = concurrence(&product_state(a, b)).unwrap();
        assert_abs_diff_eq!(c, 0.0, epsilon = 1e-7);
    }

    #[test]
    fn werner_closed_form() {
        for i in 0..=20 {
            let alpha = i as f64 / 20.0;
            let c = concurrence(&werner(alpha).unwrap()).unwrap();
            assert_abs_diff_eq!(c, (0.5 * (3.0 * alpha - 1.0)).max(0.0), epsilon = 1e-12);
        }
    }
}

//! Peres–Horodecki positive partial transpose test.

use super::Verdict;
use crate::error::Result;
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix4};
use crate::scalar::Real;
use crate::states::DensityMatrix;

/// Transpose on the second qubit: ((a,b),(a′,b′)) ← ((a,b′),(a′,b)).
pub fn partial_transpose<T: Real>(rho: &DensityMatrix<T>) -> ComplexMatrix4<T> {
    partial_transpose_matrix(rho.matrix())
}

pub(crate) fn partial_transpose_matrix<T: Real>(m: &ComplexMatrix4<T>) -> ComplexMatrix4<T> {
    ComplexMatrix4::from_fn(|row, col| {
        let (a, b) = (row / 2, row % 2);
        let (a2, b2) = (col / 2, col % 2);
        m[(2 * a + b2, 2 * a2 + b)]
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptResult<T: Real> {
    /// Smallest eigenvalue of the partial transpose.
    pub min_eigenvalue: T,
    /// Band scale is Tr ρ.
    pub verdict: Verdict<T>,
}

/// Entangled iff the partial transpose has an eigenvalue below −ε·Tr ρ.
pub fn ppt_verdict<T: Real>(rho: &DensityMatrix<T>, boundary_eps: T) -> Result<PptResult<T>> {
    let pt = partial_transpose(rho);
    let ev = hermitian_eigenvalues(&pt, T::tol(1e-10, 64.0))?;
    let min_eigenvalue = ev[0];
    Ok(PptResult {
        min_eigenvalue,
        verdict: Verdict::classify(min_eigenvalue, boundary_eps, rho.trace()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::Classification;
    use crate::states::{maximally_mixed, product_state, random_ginibre, singlet, BlochVector, RngSeed};
    use approx::assert_abs_diff_eq;

    #[test]
    fn involution_preserving_trace() {
        for i in 0..20 {
            let rho = random_ginibre::<f64>(RngSeed(i));
            let pt = partial_transpose(&rho);
            assert_eq!(partial_transpose_matrix(&pt), *rho.matrix());
            assert_eq!(pt.trace(), rho.matrix().trace());
            assert_eq!(pt.hermiticity_residual(), 0.0);
        }
    }

    #[test]
    fn product_state_stays_positive() {
        let a = BlochVector::new([0.3, -0.4, 0.5]).unwrap();
        let b = BlochVector::new([0.0, 0.9, 0.1]).unwrap();
        let r = ppt_verdict(&product_state(a, b), 1e-9).unwrap();
        assert!(r.min_eigenvalue > 0.0);
        assert_eq!(r.verdict.class, Classification::Separable);
    }

    #[test]
    fn singlet_minimum_is_minus_half() {
        let r = ppt_verdict(&singlet::<f64>(), 1e-9).unwrap();
        assert_abs_diff_eq!(r.min_eigenvalue, -0.5, epsilon = 1e-15);
        assert_eq!(r.verdict.class, Classification::Entangled);
    }

    #[test]
    fn maximally_mixed_is_separable() {
        let r = ppt_verdict(&maximally_mixed::<f64>(), 1e-9).unwrap();
        assert_eq!(r.min_eigenvalue, 0.25);
        assert_eq!(r.verdict.class, Classification::Separable);
    }
}

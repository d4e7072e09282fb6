//! Realignment (computable cross norm) test. It can only detect entanglement.

use super::{Classification, Verdict};
use crate::error::Result;
use crate::linalg::{singular_values, ComplexMatrix4};
use crate::scalar::Real;
use crate::states::DensityMatrix;

/// R_{(a,a′),(b,b′)} = ρ_{(a,b),(a′,b′)}.
pub fn realignment<T: Real>(rho: &DensityMatrix<T>) -> ComplexMatrix4<T> {
    let m = rho.matrix();
    ComplexMatrix4::from_fn(|row, col| {
        let (a, a2) = (row / 2, row % 2);
        let (b, b2) = (col / 2, col % 2);
        m[(2 * a + b, 2 * a2 + b2)]
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CcnResult<T: Real> {
    /// Trace norm of the realigned unit-trace state.
    pub norm: T,
    /// Entangled or Inconclusive.
    pub verdict: Verdict<T>,
}

/// Entangled if ‖R(ρ/Tr ρ)‖₁ > 1 + ε, otherwise Inconclusive.
pub fn ccn_verdict<T: Real>(rho: &DensityMatrix<T>, boundary_eps: T) -> Result<CcnResult<T>> {
    let sv = singular_values(&realignment(&rho.normalized()))?;
    let norm = sv.iter().fold(T::zero(), |s, &x| s + x);
    let excess = norm - T::one();
    let class = if excess > boundary_eps {
        Classification::Entangled
    } else {
        Classification::Inconclusive
    };
    Ok(CcnResult {
        norm,
        verdict: Verdict {
            class,
            statistic: excess,
            tolerance_used: boundary_eps,
            scale: T::one(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{maximally_mixed, product_state, singlet, BlochVector};
    use approx::assert_abs_diff_eq;

    #[test]
    fn maximally_mixed_realigns_to_rank_one() {
        let sv = singular_values(&realignment(&maximally_mixed::<f64>())).unwrap();
        assert_abs_diff_eq!(sv[0], 0.5, epsilon = 1e-15);
        for s in &sv[1..] {
            assert_abs_diff_eq!(*s, 0.0, epsilon = 1e-7);
        }
        let r = ccn_verdict(&maximally_mixed::<f64>(), 1e-9).unwrap();
        assert_eq!(r.verdict.class, Classification::Inconclusive);
    }

    #[test]
    fn singlet_has_trace_norm_two() {
        let r = ccn_verdict(&singlet::<f64>(), 1e-9).unwrap();
        assert_abs_diff_eq!(r.norm, 2.0, epsilon = 1e-14);
        assert_eq!(r.verdict.class, Classification::Entangled);
    }

    #[test]
    fn pure_product_state_has_trace_norm_one() {
        let a = BlochVector::new([0.6, 0.0, 0.8]).unwrap();
        let b = BlochVector::new([0.0, -1.0, 0.0]).unwrap();
        let r = ccn_verdict(&product_state(a, b), 1e-9).unwrap();
        assert_abs_diff_eq!(r.norm, 1.0, epsilon = 1e-7);
    }
}

//! Fixed-size dense linear algebra for the two-qubit pipeline.

mod general;
mod hermitian;
mod matrix;

pub use general::{
    default_imag_tol, general_eigenvalues_with_noise, general_real_eigenvalues, EigenResult,
};
pub use hermitian::{
    default_hermitian_tol, hermitian_eigen, hermitian_eigenvalues, HermitianEigen,
};
pub use matrix::{ComplexMatrix4, Matrix2, RealMatrix4};

use crate::error::Result;
use crate::scalar::Real;

/// Singular values of `m` in descending order, as √eig(M†M).
pub fn singular_values<T: Real>(m: &ComplexMatrix4<T>) -> Result<[T; 4]> {
    let gram = &m.adjoint() * m;
    let ev = hermitian_eigenvalues(&gram.hermitian_part(), default_hermitian_tol())?;
    Ok([ev[3], ev[2], ev[1], ev[0]].map(|x| x.max(T::zero()).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_values_of_identity_and_zero() {
        assert_eq!(singular_values(&ComplexMatrix4::<f64>::identity()).unwrap(), [1.0; 4]);
        assert_eq!(singular_values(&ComplexMatrix4::<f64>::zeros()).unwrap(), [0.0; 4]);
    }

    #[test]
    fn singular_values_descend() {
        let m = ComplexMatrix4::from_real_diagonal([0.5, -3.0, 0.0, 2.0]);
        assert_eq!(singular_values(&m).unwrap(), [3.0, 2.0, 0.5, 0.0]);
    }
}

//! Cyclic Jacobi diagonalization of 4×4 Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot element and then applies
//! the classical real Jacobi rotation, so the iteration is the same as the real
//! symmetric case and inherits its unconditional convergence.

use num_complex::Complex;

use super::matrix::ComplexMatrix4;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues (ascending) and the matching orthonormal eigenvectors, stored as columns.
#[derive(Debug, Clone, Copy)]
pub struct HermitianEigen<T: Real> {
    pub values: [T; 4],
    pub vectors: ComplexMatrix4<T>,
}

impl<T: Real> HermitianEigen<T> {
    /// Column `k` of the eigenvector matrix.
    pub fn vector(&self, k: usize) -> [Complex<T>; 4] {
        std::array::from_fn(|i| self.vectors[(i, k)])
    }
}

/// Default relative Hermiticity tolerance.
pub fn default_hermitian_tol<T: Real>() -> T {
    T::tol(1e-10, 64.0)
}

fn check_hermitian<T: Real>(m: &ComplexMatrix4<T>, tol: T) -> Result<()> {
    let scale = m.max_abs();
    let residual = m.hermiticity_residual();
    if residual > tol * scale {
        let rel = if scale > T::zero() { residual / scale } else { residual };
        return Err(Error::NonHermitianInput {
            residual: rel.to_f64_lossy(),
            tolerance: tol.to_f64_lossy(),
        });
    }
    Ok(())
}

/// Spectrum of the Hermitian part of `m`, ascending.
///
/// Fails with `NonHermitianInput` if `‖m − m†‖_max > tol·‖m‖_max`.
pub fn hermitian_eigenvalues<T: Real>(m: &ComplexMatrix4<T>, tol: T) -> Result<[T; 4]> {
    check_hermitian(m, tol)?;
    Ok(jacobi(m.hermitian_part(), false)?.values)
}

/// Eigenvalues and eigenvectors of the Hermitian part of `m`.
pub fn hermitian_eigen<T: Real>(m: &ComplexMatrix4<T>, tol: T) -> Result<HermitianEigen<T>> {
    check_hermitian(m, tol)?;
    jacobi(m.hermitian_part(), true)
}

fn off_diagonal_sq<T: Real>(a: &ComplexMatrix4<T>) -> T {
    let mut s = T::zero();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                s = s + a[(i, j)].norm_sqr();
            }
        }
    }
    s
}

fn jacobi<T: Real>(mut a: ComplexMatrix4<T>, want_vectors: bool) -> Result<HermitianEigen<T>> {
    let zero = T::zero();
    let mut v = ComplexMatrix4::identity();
    for i in 0..4 {
        a[(i, i)].im = zero;
    }

    let total_sq = a.entries().iter().flatten().fold(zero, |s, z| s + z.norm_sqr());
    let target = total_sq * T::epsilon() * T::epsilon();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_sq(&a);
        if off <= target || off == zero {
            converged = true;
            break;
        }
        for p in 0..3 {
            for q in p + 1..4 {
                rotate(&mut a, &mut v, p, q, want_vectors);
            }
        }
    }
    if !converged {
        let off = off_diagonal_sq(&a);
        if off > target * T::lit(1e4) {
            return Err(Error::ConvergenceFailure {
                algorithm: "Hermitian Jacobi",
                iterations: MAX_SWEEPS,
            });
        }
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let values = order.map(|k| a[(k, k)].re);
    let vectors = ComplexMatrix4::from_fn(|i, k| v[(i, order[k])]);
    Ok(HermitianEigen { values, vectors })
}

/// Annihilates `a[p][q]` with the unitary J = diag(1, e^{−iφ}) · R(θ) acting on (p, q).
fn rotate<T: Real>(
    a: &mut ComplexMatrix4<T>,
    v: &mut ComplexMatrix4<T>,
    p: usize,
    q: usize,
    want_vectors: bool,
) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == T::zero() {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Skip rotations that cannot change the diagonal in working precision.
    let hundred_g = T::lit(100.0) * g;
    if app.abs() + hundred_g == app.abs() && aqq.abs() + hundred_g == aqq.abs() {
        a[(p, q)] = Complex::new(T::zero(), T::zero());
        a[(q, p)] = Complex::new(T::zero(), T::zero());
        return;
    }

    let phase = apq / g; // e^{iφ}
    let theta = (aqq - app) / (T::lit(2.0) * g);
    let t = {
        let t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    let phase_conj = phase.conj();

    // A ← A J
    for k in 0..4 {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * phase_conj * s;
        a[(k, q)] = akp * s + akq * phase_conj * c;
    }
    // A ← J† A
    for k in 0..4 {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * phase * s;
        a[(q, k)] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = Complex::new(T::zero(), T::zero());
    a[(q, p)] = Complex::new(T::zero(), T::zero());
    a[(p, p)] = Complex::new(app - t * g, T::zero());
    a[(q, q)] = Complex::new(aqq + t * g, T::zero());

    if want_vectors {
        for k in 0..4 {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * c - vkq * phase_conj * s;
            v[(k, q)] = vkp * s + vkq * phase_conj * c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn identity_spectrum() {
        let ev = hermitian_eigenvalues(&ComplexMatrix4::<f64>::identity(), 1e-10).unwrap();
        assert_eq!(ev, [1.0; 4]);
    }

    #[test]
    fn diagonal_entries_are_returned_exactly() {
        let m = ComplexMatrix4::from_real_diagonal([1.0, -0.5, 0.0, 2.0]);
        let ev = hermitian_eigenvalues(&m, 1e-10).unwrap();
        assert_eq!(ev, [-0.5, 0.0, 1.0, 2.0]);
    }

    #[test]
    fn singlet_projector_is_rank_one() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let psi = [c(0.0, 0.0), c(r, 0.0), c(-r, 0.0), c(0.0, 0.0)];
        let ev = hermitian_eigenvalues(&ComplexMatrix4::outer(&psi), 1e-10).unwrap();
        for (got, want) in ev.iter().zip([0.0, 0.0, 0.0, 1.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-15);
        }
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let mut m = ComplexMatrix4::<f64>::identity();
        m[(0, 1)] = c(0.5, 0.0);
        assert!(matches!(
            hermitian_eigenvalues(&m, 1e-10),
            Err(Error::NonHermitianInput { .. })
        ));
    }

    #[test]
    fn eigenvectors_diagonalize_complex_hermitian_matrix() {
        let m = ComplexMatrix4::from_raw([
            [c(2.0, 0.0), c(0.3, 0.7), c(-1.0, 0.2), c(0.0, -0.4)],
            [c(0.3, -0.7), c(-1.0, 0.0), c(0.5, 0.5), c(0.1, 0.0)],
            [c(-1.0, -0.2), c(0.5, -0.5), c(0.25, 0.0), c(0.0, 1.5)],
            [c(0.0, 0.4), c(0.1, 0.0), c(0.0, -1.5), c(3.0, 0.0)],
        ]);
        let eig = hermitian_eigen(&m, 1e-10).unwrap();
        let d = &(&eig.vectors.adjoint() * &m) * &eig.vectors;
        let expected = ComplexMatrix4::from_real_diagonal(eig.values);
        assert!(d.max_abs_diff(&expected) < 1e-13);
        let gram = &eig.vectors.adjoint() * &eig.vectors;
        assert!(gram.max_abs_diff(&ComplexMatrix4::identity()) < 1e-14);
    }
}

//! Two-qubit density matrices and the state families used to exercise the criteria.
//!
//! Basis convention: |a⟩ ⊗ |b⟩ is stored at index 2a + b, with |0⟩ = |↑⟩ and
//! σ₃|↑⟩ = +|↑⟩.

mod random;

pub use random::{derive_seed, random_ginibre, random_pure, random_separable, RngSeed, StateRng};

use num_complex::Complex;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix4, Matrix2, RealMatrix4};
use crate::pauli;
use crate::scalar::Real;

/// A two-qubit density matrix: Hermitian, positive semidefinite, positive trace.
///
/// Normalization is not required.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix<T: Real> {
    matrix: ComplexMatrix4<T>,
}

impl<T: Real> DensityMatrix<T> {
    /// Validates `matrix` against the default tolerances.
    pub fn new(matrix: ComplexMatrix4<T>) -> Result<Self> {
        Self::with_tolerances(matrix, &Tolerances::default())
    }

    /// Validates `matrix` and stores its Hermitian part.
    pub fn with_tolerances(matrix: ComplexMatrix4<T>, tol: &Tolerances<T>) -> Result<Self> {
        let ev = hermitian_eigenvalues(&matrix, tol.hermitian)?;
        let trace = matrix.trace().re;
        if !(trace > T::zero()) {
            return Err(Error::NonPositiveTrace {
                trace: trace.to_f64_lossy(),
            });
        }
        let bound = -tol.psd * trace;
        if ev[0] < bound {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: ev[0].to_f64_lossy(),
                bound: bound.to_f64_lossy(),
            });
        }
        Ok(Self {
            matrix: matrix.hermitian_part(),
        })
    }

    /// Wraps a matrix that is Hermitian PSD by construction.
    pub(crate) fn from_hermitian(matrix: ComplexMatrix4<T>) -> Self {
        Self {
            matrix: matrix.hermitian_part(),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix4<T> {
        &self.matrix
    }

    pub fn trace(&self) -> T {
        self.matrix.trace().re
    }

    /// Ascending spectrum of ρ.
    pub fn eigenvalues(&self) -> Result<[T; 4]> {
        hermitian_eigenvalues(&self.matrix, T::tol(1e-10, 64.0))
    }

    /// c·ρ for c > 0.
    pub fn scaled(&self, c: T) -> Result<Self> {
        if !(c > T::zero()) || !c.is_finite() {
            return Err(Error::out_of_range("scale", format!("must be positive and finite, got {c}")));
        }
        Ok(Self {
            matrix: self.matrix.scale(c),
        })
    }

    /// ρ / Tr ρ
    pub fn normalized(&self) -> Self {
        Self {
            matrix: self.matrix.scale(T::one() / self.trace()),
        }
    }
}

/// Parameters of the three-parameter family
/// ρ = ¼[(r−s+1)σ₃⊗σ₃ + r σ₃⊗I + s I⊗σ₃ + t(σ₁⊗σ₁ − σ₂⊗σ₂) + I⊗I].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RudolphParams<T: Real> {
    pub r: T,
    pub s: T,
    pub t: T,
}

impl<T: Real> RudolphParams<T> {
    pub fn new(r: T, s: T, t: T) -> Self {
        Self { r, s, t }
    }

    /// h² = (1 − s)(1 + r)
    pub fn h_squared(&self) -> T {
        (T::one() - self.s) * (T::one() + self.r)
    }

    /// Checks s − r ≥ 0, |r| ≤ 1, |s| ≤ 1 and t² ≤ h², naming the first violated clause.
    pub fn validate(&self) -> Result<()> {
        let slack = T::tol(1e-12, 16.0);
        let Self { r, s, t } = *self;
        if !(r.is_finite() && s.is_finite() && t.is_finite()) {
            return Err(Error::out_of_range("rudolph", "parameters must be finite"));
        }
        if s - r < -slack {
            return Err(Error::out_of_range("s", format!("s - r >= 0 violated (r = {r}, s = {s})")));
        }
        if r.abs() > T::one() + slack {
            return Err(Error::out_of_range("r", format!("|r| <= 1 violated (r = {r})")));
        }
        if s.abs() > T::one() + slack {
            return Err(Error::out_of_range("s", format!("|s| <= 1 violated (s = {s})")));
        }
        let h2 = self.h_squared();
        if t * t > h2 + slack {
            return Err(Error::out_of_range(
                "t",
                format!("t^2 <= (1 - s)(1 + r) violated (t^2 = {}, h^2 = {h2})", t * t),
            ));
        }
        Ok(())
    }

    /// The Pauli coefficient matrix of the family.
    pub fn coefficients(&self) -> RealMatrix4<T> {
        let Self { r, s, t } = *self;
        let o = T::zero();
        RealMatrix4::from_raw([
            [T::one(), o, o, s],
            [o, t, o, o],
            [o, o, -t, o],
            [r, o, o, r - s + T::one()],
        ])
    }
}

/// A single-qubit Bloch vector with |n| ≤ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector<T: Real>([T; 3]);

impl<T: Real> BlochVector<T> {
    pub fn new(n: [T; 3]) -> Result<Self> {
        let norm = Self::norm_of(&n);
        if !norm.is_finite() || norm > T::one() + T::tol(1e-12, 16.0) {
            return Err(Error::out_of_range("bloch", format!("|n| = {norm} exceeds 1")));
        }
        Ok(Self(n))
    }

    pub fn zero() -> Self {
        Self([T::zero(); 3])
    }

    fn norm_of(n: &[T; 3]) -> T {
        (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt()
    }

    pub fn components(&self) -> [T; 3] {
        self.0
    }

    pub fn norm(&self) -> T {
        Self::norm_of(&self.0)
    }

    /// ½(I + n·σ)
    pub fn qubit_matrix(&self) -> Matrix2<T> {
        pauli::qubit_state(self.0)
    }
}

fn real<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

fn check_unit_interval<T: Real>(param: &'static str, x: T) -> Result<()> {
    if !(x >= T::zero() && x <= T::one()) {
        return Err(Error::out_of_range(param, format!("must lie in [0, 1], got {x}")));
    }
    Ok(())
}

/// |S⟩⟨S| for the singlet (|↑↓⟩ − |↓↑⟩)/√2.
pub fn singlet<T: Real>() -> DensityMatrix<T> {
    let mut m = ComplexMatrix4::zeros();
    let half = T::lit(0.5);
    m[(1, 1)] = real(half);
    m[(2, 2)] = real(half);
    m[(1, 2)] = real(-half);
    m[(2, 1)] = real(-half);
    DensityMatrix::from_hermitian(m)
}

/// I/4
pub fn maximally_mixed<T: Real>() -> DensityMatrix<T> {
    DensityMatrix::from_hermitian(ComplexMatrix4::from_real_diagonal([T::lit(0.25); 4]))
}

/// (1 − α)/4 · I + α |S⟩⟨S| for 0 ≤ α ≤ 1.
pub fn werner<T: Real>(alpha: T) -> Result<DensityMatrix<T>> {
    check_unit_interval("alpha", alpha)?;
    let noise = maximally_mixed::<T>().matrix.scale(T::one() - alpha);
    let s = singlet::<T>().matrix.scale(alpha);
    Ok(DensityMatrix::from_hermitian(noise + s))
}

/// The three-parameter family described by [`RudolphParams`].
pub fn rudolph_state<T: Real>(p: RudolphParams<T>) -> Result<DensityMatrix<T>> {
    p.validate()?;
    Ok(DensityMatrix::from_hermitian(pauli::expand(&p.coefficients())))
}

/// x |S⟩⟨S| + (1 − x) |↑↑⟩⟨↑↑| for 0 ≤ x ≤ 1.
pub fn singlet_polarized_mixture<T: Real>(x: T) -> Result<DensityMatrix<T>> {
    check_unit_interval("x", x)?;
    let mut m = singlet::<T>().matrix.scale(x);
    m[(0, 0)] = real(T::one() - x);
    Ok(DensityMatrix::from_hermitian(m))
}

/// ½(I + a·σ) ⊗ ½(I + b·σ)
pub fn product_state<T: Real>(a: BlochVector<T>, b: BlochVector<T>) -> DensityMatrix<T> {
    DensityMatrix::from_hermitian(ComplexMatrix4::kron(&a.qubit_matrix(), &b.qubit_matrix()))
}

/// Σᵢ wᵢ τᵢ¹ ⊗ τᵢ² for positive weights and Bloch vector pairs.
pub fn product_mixture<T: Real>(
    terms: &[(T, BlochVector<T>, BlochVector<T>)],
) -> Result<DensityMatrix<T>> {
    if terms.is_empty() {
        return Err(Error::out_of_range("terms", "at least one product term required"));
    }
    let mut m = ComplexMatrix4::zeros();
    for &(w, a, b) in terms {
        if !(w > T::zero()) || !w.is_finite() {
            return Err(Error::out_of_range("weight", format!("must be positive, got {w}")));
        }
        m = m + product_state(a, b).matrix.scale(w);
    }
    Ok(DensityMatrix::from_hermitian(m))
}

/// |ψ⟩⟨ψ| for an arbitrary (not necessarily normalized) nonzero vector.
pub fn pure_state<T: Real>(psi: [Complex<T>; 4]) -> Result<DensityMatrix<T>> {
    let norm_sq = psi.iter().fold(T::zero(), |s, z| s + z.norm_sqr());
    if !(norm_sq > T::zero()) || !norm_sq.is_finite() {
        return Err(Error::out_of_range("psi", "state vector must be nonzero and finite"));
    }
    Ok(DensityMatrix::from_hermitian(ComplexMatrix4::outer(&psi)))
}

fn unitarity_residual<T: Real>(u: &Matrix2<T>) -> T {
    let mut worst = T::zero();
    for i in 0..2 {
        for j in 0..2 {
            let acc = u[i][0] * u[j][0].conj() + u[i][1] * u[j][1].conj();
            let target = if i == j { T::one() } else { T::zero() };
            worst = worst.max((acc - real(target)).norm());
        }
    }
    worst
}

/// (u ⊗ v) ρ (u ⊗ v)†
pub fn apply_local_unitary<T: Real>(
    rho: &DensityMatrix<T>,
    u: &Matrix2<T>,
    v: &Matrix2<T>,
) -> Result<DensityMatrix<T>> {
    let tol = T::tol(1e-10, 64.0);
    for op in [u, v] {
        let residual = unitarity_residual(op);
        if !(residual <= tol) {
            return Err(Error::NonUnitaryInput {
                residual: residual.to_f64_lossy(),
            });
        }
    }
    let w = ComplexMatrix4::kron(u, v);
    let out = &(&w * &rho.matrix) * &w.adjoint();
    Ok(DensityMatrix::from_hermitian(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn assert_valid(rho: &DensityMatrix<f64>) {
        DensityMatrix::new(*rho.matrix()).expect("constructor output must validate");
    }

    #[test]
    fn werner_endpoints() {
        assert_eq!(werner(0.0).unwrap(), maximally_mixed());
        assert_eq!(werner(1.0).unwrap(), singlet());
        for a in [0.0, 0.2, 1.0 / 3.0, 0.7, 1.0] {
            let rho = werner(a).unwrap();
            assert_valid(&rho);
            assert!((rho.trace() - 1.0).abs() < 1e-15);
        }
        assert!(werner(1.2).is_err());
        assert!(werner(-0.1).is_err());
        assert!(werner(f64::NAN).is_err());
    }

    #[test]
    fn rudolph_zero_parameters() {
        let rho = rudolph_state(RudolphParams::new(0.0, 0.0, 0.0)).unwrap();
        // (σ₃⊗σ₃ + I⊗I)/4 = diag(1/2, 0, 0, 1/2)
        let want = ComplexMatrix4::from_real_diagonal([0.5, 0.0, 0.0, 0.5]);
        assert_eq!(*rho.matrix(), want);
    }

    #[test]
    fn rudolph_entries_match_block_form() {
        let p = RudolphParams::new(0.25, 0.5, 1.0 / 16.0);
        let rho = rudolph_state(p).unwrap();
        assert_valid(&rho);
        let m = rho.matrix();
        assert_eq!(m[(0, 0)], c(0.625, 0.0));
        assert_eq!(m[(1, 1)], c(0.0, 0.0));
        assert_eq!(m[(2, 2)], c(0.125, 0.0));
        assert_eq!(m[(3, 3)], c(0.25, 0.0));
        assert_eq!(m[(0, 3)], c(1.0 / 32.0, 0.0));
        assert_eq!(m[(1, 2)], c(0.0, 0.0));
        assert_eq!(rho.trace(), 1.0);
    }

    #[test]
    fn rudolph_rejects_each_clause() {
        let reason = |p: RudolphParams<f64>| match rudolph_state(p).unwrap_err() {
            Error::ParamOutOfRange { param, reason } => (param, reason),
            e => panic!("unexpected {e:?}"),
        };
        assert!(reason(RudolphParams::new(0.5, 0.25, 0.0)).1.contains("s - r"));
        assert!(reason(RudolphParams::new(-1.5, 0.5, 0.0)).1.contains("|r|"));
        assert!(reason(RudolphParams::new(0.5, 1.5, 0.0)).1.contains("|s|"));
        let (param, why) = reason(RudolphParams::new(0.25, 0.5, 0.8));
        assert_eq!(param, "t");
        assert!(why.contains("t^2"));
    }

    #[test]
    fn singlet_polarized_endpoints() {
        let up_up = product_state(
            BlochVector::new([0.0, 0.0, 1.0]).unwrap(),
            BlochVector::new([0.0, 0.0, 1.0]).unwrap(),
        );
        assert_eq!(singlet_polarized_mixture(0.0).unwrap(), up_up);
        assert_eq!(singlet_polarized_mixture(1.0).unwrap(), singlet());
        assert_valid(&singlet_polarized_mixture(0.3).unwrap());
        assert!(singlet_polarized_mixture(1.01).is_err());
    }

    #[test]
    fn product_state_cases() {
        let z = BlochVector::<f64>::zero();
        assert_eq!(product_state(z, z), maximally_mixed());
        let up = BlochVector::new([0.0, 0.0, 1.0]).unwrap();
        let down = BlochVector::new([0.0, 0.0, -1.0]).unwrap();
        let m = *product_state(up, down).matrix();
        assert_eq!(m, ComplexMatrix4::from_real_diagonal([0.0, 1.0, 0.0, 0.0]));
        assert!(BlochVector::new([1.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn mixture_of_zero_bloch_vectors_is_maximally_mixed() {
        let z = BlochVector::<f64>::zero();
        assert_eq!(product_mixture(&[(1.0, z, z)]).unwrap(), maximally_mixed());
        assert!(product_mixture::<f64>(&[]).is_err());
        assert!(product_mixture(&[(-1.0, z, z)]).is_err());
    }

    #[test]
    fn local_unitary_cases() {
        let id: Matrix2<f64> = pauli::sigma(0);
        let x: Matrix2<f64> = pauli::sigma(1);
        let rho = werner(0.4).unwrap();
        assert_eq!(apply_local_unitary(&rho, &id, &id).unwrap(), rho);

        let up_up = singlet_polarized_mixture(0.0).unwrap();
        let flipped = apply_local_unitary(&up_up, &x, &x).unwrap();
        assert_eq!(
            *flipped.matrix(),
            ComplexMatrix4::from_real_diagonal([0.0, 0.0, 0.0, 1.0])
        );

        let mut bad = id;
        bad[0][0] = c(2.0, 0.0);
        assert!(matches!(
            apply_local_unitary(&rho, &bad, &id),
            Err(Error::NonUnitaryInput { .. })
        ));
    }

    #[test]
    fn werner_is_invariant_under_identical_local_unitaries() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u: Matrix2<f64> = [[c(h, 0.0), c(0.0, h)], [c(0.0, h), c(h, 0.0)]];
        let theta: f64 = 0.83;
        let v: Matrix2<f64> = [
            [c(theta.cos(), 0.0), c(-theta.sin(), 0.0)],
            [c(0.0, theta.sin()), c(0.0, theta.cos())],
        ];
        for op in [u, v] {
            let rho = werner(0.6).unwrap();
            let out = apply_local_unitary(&rho, &op, &op).unwrap();
            assert!(out.matrix().max_abs_diff(rho.matrix()) < 1e-15);
        }
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        let mut m = ComplexMatrix4::<f64>::identity();
        m[(0, 1)] = c(0.3, 0.0);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NonHermitianInput { .. })));
        let neg = ComplexMatrix4::from_real_diagonal([1.0, 1.0, 1.0, -0.5]);
        assert!(matches!(
            DensityMatrix::new(neg),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix4::<f64>::zeros()),
            Err(Error::NonPositiveTrace { .. })
        ));
        assert!(maximally_mixed::<f64>().scaled(-1.0).is_err());
    }
}

//! The Partial Lorentz Transformation test.
//!
//! ρ is expanded in the two-qubit Pauli basis, the real coefficient matrix A is
//! squared against the Minkowski metric G = diag(1, −1, −1, −1) as B = A·G·Aᵀ·G,
//! and the square roots μ₀ ≥ μ₁ ≥ μ₂ ≥ μ₃ of the eigenvalues of B give the
//! statistic T = μ₀ − μ₁ − μ₂ − μ₃. The state is separable iff T ≥ 0.

use num_complex::Complex;

use super::Verdict;
use crate::error::{Error, Result};
use crate::linalg::{general_eigenvalues_with_noise, RealMatrix4};
use crate::pauli;
use crate::scalar::Real;
use crate::states::DensityMatrix;

/// Eigenvalues of B below `ROUNDING_FLOOR_FACTOR·ε·‖A‖²` cannot be told apart from zero.
const ROUNDING_FLOOR_FACTOR: f64 = 64.0;

/// A_{μν} = Tr(ρ σ_μ ⊗ σ_ν).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliCoefficients<T: Real> {
    a: RealMatrix4<T>,
}

impl<T: Real> PauliCoefficients<T> {
    pub fn new(a: RealMatrix4<T>) -> Self {
        Self { a }
    }

    pub fn matrix(&self) -> &RealMatrix4<T> {
        &self.a
    }

    /// A₀₀ = Tr ρ
    pub fn trace(&self) -> T {
        self.a[(0, 0)]
    }
}

/// Pauli-basis coefficients of ρ.
///
/// Fails with `NonRealCoefficient` if any Tr(ρ σ_μ⊗σ_ν) has an imaginary part above
/// 1e−12·Tr ρ.
pub fn pauli_coefficients<T: Real>(rho: &DensityMatrix<T>) -> Result<PauliCoefficients<T>> {
    let m = rho.matrix();
    let bound = T::tol(1e-12, 64.0) * rho.trace().abs();
    let mut a = RealMatrix4::zeros();
    for mu in 0..4 {
        for nu in 0..4 {
            let basis = pauli::sigma_product::<T>(mu, nu);
            let mut acc = Complex::new(T::zero(), T::zero());
            for i in 0..4 {
                for j in 0..4 {
                    acc = acc + m[(i, j)] * basis[(j, i)];
                }
            }
            if acc.im.abs() > bound {
                return Err(Error::NonRealCoefficient {
                    mu,
                    nu,
                    residue: acc.im.to_f64_lossy(),
                });
            }
            a[(mu, nu)] = acc.re;
        }
    }
    Ok(PauliCoefficients { a })
}

/// ρ = ¼ Σ A_{μν} σ_μ ⊗ σ_ν, validated as a density matrix.
pub fn reconstruct_density<T: Real>(a: &PauliCoefficients<T>) -> Result<DensityMatrix<T>> {
    DensityMatrix::new(pauli::expand(&a.a)).map_err(|e| Error::NotADensityMatrix(Box::new(e)))
}

/// B = A·G·Aᵀ·G together with the data needed to judge its rounding level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzSquare<T: Real> {
    b: RealMatrix4<T>,
    metric: RealMatrix4<T>,
    coeff_scale: T,
}

impl<T: Real> LorentzSquare<T> {
    pub fn matrix(&self) -> &RealMatrix4<T> {
        &self.b
    }

    pub fn metric(&self) -> &RealMatrix4<T> {
        &self.metric
    }

    /// ‖B·G − (B·G)ᵀ‖_max, zero in exact arithmetic.
    pub fn metric_asymmetry(&self) -> T {
        (self.b * self.metric).asymmetry()
    }

    /// Absolute rounding level of the entries of B.
    fn entry_noise(&self) -> T {
        T::lit(4.0) * T::epsilon() * self.coeff_scale * self.coeff_scale
    }

    /// Eigenvalue magnitude indistinguishable from zero.
    fn rounding_floor(&self) -> T {
        T::lit(ROUNDING_FLOOR_FACTOR) * T::epsilon() * self.coeff_scale * self.coeff_scale
    }
}

/// B = A·G·Aᵀ·G with the Minkowski metric.
pub fn lorentz_square<T: Real>(a: &PauliCoefficients<T>) -> LorentzSquare<T> {
    metric_square(a, &RealMatrix4::minkowski())
}

/// B = A·G·Aᵀ·G for an arbitrary diagonal metric G.
///
/// Only the Minkowski metric yields the entanglement test; other metrics exist to
/// check that regression suites are sensitive to the choice.
pub fn metric_square<T: Real>(a: &PauliCoefficients<T>, metric: &RealMatrix4<T>) -> LorentzSquare<T> {
    let ag = &a.a * metric;
    let b = &(ag * a.a.transpose()) * metric;
    LorentzSquare {
        b,
        metric: *metric,
        coeff_scale: a.a.max_abs(),
    }
}

/// The clamped spectrum of B and the statistic T.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PltSpectrum<T: Real> {
    /// λ₀ ≥ λ₁ ≥ λ₂ ≥ λ₃ ≥ 0
    pub lambda: [T; 4],
    /// μₐ = √λₐ
    pub mu: [T; 4],
    /// T = μ₀ − μ₁ − μ₂ − μ₃
    pub t: T,
    /// Largest |Im λ| discarded.
    pub imag_residue: T,
    /// Eigenvalues as returned by the solver, before clamping.
    pub raw: [Complex<T>; 4],
    /// ‖B‖_max
    pub norm: T,
    /// Lower bound on the verdict scale, √(rounding floor of B).
    pub mu_floor: T,
}

impl<T: Real> PltSpectrum<T> {
    /// T / μ₀, or zero when B vanishes.
    pub fn t_normalized(&self) -> T {
        if self.mu[0] > T::zero() {
            self.t / self.mu[0]
        } else {
            T::zero()
        }
    }

    /// min Re λ / ‖B‖ over the raw eigenvalues (zero when B = 0).
    pub fn min_re_ratio(&self) -> T {
        let min = self.raw.iter().fold(T::infinity(), |m, z| m.min(z.re));
        if self.norm > T::zero() {
            min / self.norm
        } else {
            T::zero()
        }
    }

    /// max |Im λ| / ‖B‖ over the raw eigenvalues (zero when B = 0).
    pub fn max_imag_ratio(&self) -> T {
        if self.norm > T::zero() {
            self.imag_residue / self.norm
        } else {
            T::zero()
        }
    }
}

/// Eigenvalues of B, clamped and sorted, with μ and T.
///
/// Imaginary parts up to `imag_tol·‖B‖` and negative real parts down to
/// `−neg_tol·‖B‖` are treated as rounding (together with an absolute floor of
/// order ε‖A‖², below which eigenvalues are set to zero). Anything larger is an
/// `EigenvaluePositivityViolation`.
pub fn plt_spectrum<T: Real>(bm: &LorentzSquare<T>, imag_tol: T, neg_tol: T) -> Result<PltSpectrum<T>> {
    let eig = general_eigenvalues_with_noise(&bm.b, bm.entry_noise())?;
    let norm = bm.b.max_abs();
    let floor = bm.rounding_floor();
    let imag_bound = imag_tol * norm + floor;
    let neg_bound = -(neg_tol * norm + floor);

    let mut imag_residue = T::zero();
    let mut lambda = [T::zero(); 4];
    for (slot, z) in lambda.iter_mut().zip(eig.values) {
        if z.im.abs() > imag_bound || z.re < neg_bound || !z.re.is_finite() {
            return Err(Error::EigenvaluePositivityViolation {
                re: z.re.to_f64_lossy(),
                im: z.im.to_f64_lossy(),
                norm: norm.to_f64_lossy(),
            });
        }
        imag_residue = imag_residue.max(z.im.abs());
        *slot = if z.re <= floor { T::zero() } else { z.re };
    }
    lambda.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mu = lambda.map(|l| l.sqrt());
    let t = mu[0] - mu[1] - mu[2] - mu[3];
    Ok(PltSpectrum {
        lambda,
        mu,
        t,
        imag_residue,
        raw: eig.values,
        norm,
        mu_floor: floor.sqrt(),
    })
}

/// Separable if T > ε·scale, Entangled if T < −ε·scale, Boundary otherwise,
/// with scale = max(μ₀, μ_floor).
pub fn plt_verdict<T: Real>(spec: &PltSpectrum<T>, boundary_eps: T) -> Verdict<T> {
    let scale = spec.mu[0].max(spec.mu_floor);
    Verdict::classify(spec.t, boundary_eps, scale)
}

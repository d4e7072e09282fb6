//! The single-qubit Pauli basis (I, σ₁, σ₂, σ₃) and its two-qubit products.

use num_complex::Complex;

use crate::linalg::{ComplexMatrix4, Matrix2, RealMatrix4};
use crate::scalar::Real;

/// σ_μ for μ ∈ {0, 1, 2, 3}, with σ₀ = I and σ₃|0⟩ = +|0⟩.
pub fn sigma<T: Real>(mu: usize) -> Matrix2<T> {
    let o = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let i = Complex::new(T::zero(), T::one());
    match mu {
        0 => [[one, o], [o, one]],
        1 => [[o, one], [one, o]],
        2 => [[o, -i], [i, o]],
        3 => [[one, o], [o, -one]],
        _ => panic!("Pauli index {mu} out of range"),
    }
}

/// σ_μ ⊗ σ_ν
pub fn sigma_product<T: Real>(mu: usize, nu: usize) -> ComplexMatrix4<T> {
    ComplexMatrix4::kron(&sigma(mu), &sigma(nu))
}

/// ¼ Σ_{μν} A_{μν} σ_μ ⊗ σ_ν
pub fn expand<T: Real>(a: &RealMatrix4<T>) -> ComplexMatrix4<T> {
    let quarter = T::lit(0.25);
    let mut rho = ComplexMatrix4::zeros();
    for mu in 0..4 {
        for nu in 0..4 {
            let coeff = a[(mu, nu)];
            if coeff == T::zero() {
                continue;
            }
            let basis = sigma_product::<T>(mu, nu);
            for i in 0..4 {
                for j in 0..4 {
                    rho[(i, j)] = rho[(i, j)] + basis[(i, j)] * coeff;
                }
            }
        }
    }
    rho.scale(quarter)
}

/// ½(I + n·σ) for a Bloch vector `n`.
pub fn qubit_state<T: Real>(n: [T; 3]) -> Matrix2<T> {
    let half = T::lit(0.5);
    let c = |re: T, im: T| Complex::new(re * half, im * half);
    [
        [c(T::one() + n[2], T::zero()), c(n[0], -n[1])],
        [c(n[0], n[1]), c(T::one() - n[2], T::zero())],
    ]
}

//! Independent reference implementations built on nalgebra.
#![allow(dead_code)]

use nalgebra::{Complex, Matrix4, SymmetricEigen};
use qubit_plt::states::StateRng;
use qubit_plt::{ComplexMatrix4, DensityMatrix};

pub type C64 = Complex<f64>;
pub type M4 = Matrix4<C64>;

pub fn to_na(m: &ComplexMatrix4<f64>) -> M4 {
    M4::from_fn(|i, j| m[(i, j)])
}

pub fn rho_na(rho: &DensityMatrix<f64>) -> M4 {
    to_na(rho.matrix())
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn herm_eigs(m: &M4) -> [f64; 4] {
    let h = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let mut v: Vec<f64> = SymmetricEigen::new(h).eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    [v[0], v[1], v[2], v[3]]
}

/// ρ^{T_B} by explicit index bookkeeping: ⟨ij|ρ^{T_B}|kl⟩ = ⟨il|ρ|kj⟩.
pub fn partial_transpose(m: &M4) -> M4 {
    let mut out = M4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + j, 2 * k + l)] = m[(2 * i + l, 2 * k + j)];
                }
            }
        }
    }
    out
}

/// R(ρ)_{(ik),(jl)} = ρ_{(ij),(kl)}.
pub fn realign(m: &M4) -> M4 {
    let mut out = M4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + k, 2 * j + l)] = m[(2 * i + j, 2 * k + l)];
                }
            }
        }
    }
    out
}

pub fn trace_norm(m: &M4) -> f64 {
    m.svd(false, false).singular_values.iter().sum()
}

/// Hermitian square root through the spectral decomposition.
pub fn sqrt_psd(m: &M4) -> M4 {
    let h = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(h);
    let d = M4::from_diagonal(&eig.eigenvalues.map(|l| C64::new(l.max(0.0).sqrt(), 0.0)));
    eig.eigenvectors * d * eig.eigenvectors.adjoint()
}

/// Wootters concurrence of ρ/Tr ρ from the eigenvalues of √(√ρ ρ̃ √ρ).
pub fn wootters(m: &M4) -> f64 {
    let tr = m.trace().re;
    let rho = m * C64::new(1.0 / tr, 0.0);
    let y = {
        let mut y = M4::zeros();
        y[(0, 3)] = C64::new(-1.0, 0.0);
        y[(1, 2)] = C64::new(1.0, 0.0);
        y[(2, 1)] = C64::new(1.0, 0.0);
        y[(3, 0)] = C64::new(-1.0, 0.0);
        y
    };
    let tilde = y * rho.conjugate() * y;
    let s = sqrt_psd(&rho);
    let r = sqrt_psd(&(s * tilde * s));
    let mut l = herm_eigs(&r);
    l.reverse();
    (l[0] - l[1] - l[2] - l[3]).max(0.0)
}

/// Haar-random element of SU(2).
pub fn random_su2(rng: &mut StateRng) -> [[Complex<f64>; 2]; 2] {
    let mut q = [0.0; 4];
    for x in &mut q {
        *x = rng.gaussian();
    }
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [a, b, c, d] = q.map(|x| x / n);
    [
        [Complex::new(a, b), Complex::new(c, d)],
        [Complex::new(-c, d), Complex::new(a, -b)],
    ]
}

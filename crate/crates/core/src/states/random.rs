//! Seeded random two-qubit states.
//!
//! The stream is ChaCha8 seeded through `SeedableRng::seed_from_u64`; uniforms take
//! the top 53 bits of each `u64`, and Gaussians come from Box–Muller using `libm`
//! so that every platform produces identical bits for a given seed.

use num_complex::Complex;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{product_mixture, BlochVector, DensityMatrix};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix4;
use crate::scalar::Real;

/// Seed for a reproducible random state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RngSeed(pub u64);

/// Per-state seed for item `index` of a batch seeded with `master` (splitmix64 finalizer).
pub fn derive_seed(master: RngSeed, index: u64) -> RngSeed {
    let mut z = master
        .0
        .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    RngSeed(z ^ (z >> 31))
}

/// Deterministic sampler over a ChaCha8 stream.
pub struct StateRng {
    inner: ChaCha8Rng,
    spare: Option<f64>,
}

impl StateRng {
    pub fn new(seed: RngSeed) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed.0),
            spare: None,
        }
    }

    /// Uniform on [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal N(0, 1).
    pub fn gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // 1 − U lies in (0, 1], keeping the logarithm finite.
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let radius = libm::sqrt(-2.0 * libm::log(u1));
        let angle = 2.0 * std::f64::consts::PI * u2;
        self.spare = Some(radius * libm::sin(angle));
        radius * libm::cos(angle)
    }

    /// Complex Gaussian with E|z|² = 1.
    pub fn complex_gaussian<T: Real>(&mut self) -> Complex<T> {
        let scale = std::f64::consts::FRAC_1_SQRT_2;
        let re = self.gaussian() * scale;
        let im = self.gaussian() * scale;
        Complex::new(T::lit(re), T::lit(im))
    }

    /// Uniform point in the closed unit ball.
    pub fn ball_point(&mut self) -> [f64; 3] {
        loop {
            let g = [self.gaussian(), self.gaussian(), self.gaussian()];
            let norm = libm::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
            if norm == 0.0 {
                continue;
            }
            let radius = libm::cbrt(self.uniform());
            return g.map(|x| x / norm * radius);
        }
    }

    /// Uniform point on the probability simplex with `k` vertices.
    pub fn simplex_point(&mut self, k: usize) -> Vec<f64> {
        let draws: Vec<f64> = (0..k).map(|_| -libm::log(1.0 - self.uniform())).collect();
        let total: f64 = draws.iter().sum();
        if total == 0.0 {
            return vec![1.0 / k as f64; k];
        }
        draws.into_iter().map(|d| d / total).collect()
    }
}

/// ρ = M M† with M a 4×4 matrix of independent standard complex Gaussians.
pub fn random_ginibre<T: Real>(seed: RngSeed) -> DensityMatrix<T> {
    let mut rng = StateRng::new(seed);
    let m = ComplexMatrix4::from_fn(|_, _| rng.complex_gaussian::<T>());
    DensityMatrix::from_hermitian(&m * &m.adjoint())
}

/// Σᵢ wᵢ τᵢ¹ ⊗ τᵢ² with `k` terms, weights uniform on the simplex and Bloch vectors
/// uniform in the unit ball. Requires 1 ≤ k ≤ 16.
pub fn random_separable<T: Real>(seed: RngSeed, k: usize) -> Result<DensityMatrix<T>> {
    if !(1..=16).contains(&k) {
        return Err(Error::out_of_range("k", format!("must lie in 1..=16, got {k}")));
    }
    let mut rng = StateRng::new(seed);
    let weights = rng.simplex_point(k);
    let mut terms = Vec::with_capacity(k);
    for w in weights {
        let a = rng.ball_point().map(T::lit);
        let b = rng.ball_point().map(T::lit);
        // Weights can underflow to zero for extreme draws; such a term contributes nothing.
        if w > 0.0 {
            terms.push((T::lit(w), BlochVector::new(a)?, BlochVector::new(b)?));
        }
    }
    product_mixture(&terms)
}

/// |ψ⟩⟨ψ| with ψ uniform on the unit sphere of ℂ⁴.
pub fn random_pure<T: Real>(seed: RngSeed) -> DensityMatrix<T> {
    let mut rng = StateRng::new(seed);
    loop {
        let g: [Complex<f64>; 4] = std::array::from_fn(|_| rng.complex_gaussian::<f64>());
        let norm = libm::sqrt(g.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if norm == 0.0 {
            continue;
        }
        let psi = g.map(|z| Complex::new(T::lit(z.re / norm), T::lit(z.im / norm)));
        return DensityMatrix::from_hermitian(ComplexMatrix4::outer(&psi));
    }
}

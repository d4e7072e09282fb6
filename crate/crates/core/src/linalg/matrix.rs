use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense 2×2 complex matrix, used for single-qubit operators.
pub type Matrix2<T> = [[Complex<T>; 2]; 2];

/// Dense 4×4 complex matrix in row-major order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix4<T: Real> {
    entries: [[Complex<T>; 4]; 4],
}

/// Dense 4×4 real matrix in row-major order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealMatrix4<T: Real> {
    entries: [[T; 4]; 4],
}

impl<T: Real> ComplexMatrix4<T> {
    /// Builds a matrix, rejecting NaN or infinite entries.
    pub fn new(entries: [[Complex<T>; 4]; 4]) -> Result<Self> {
        for (row, line) in entries.iter().enumerate() {
            for (col, z) in line.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFiniteEntry { row, col });
                }
            }
        }
        Ok(Self { entries })
    }

    /// Builds a matrix from separate real and imaginary parts.
    pub fn from_parts(re: [[T; 4]; 4], im: [[T; 4]; 4]) -> Result<Self> {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| Complex::new(re[i][j], im[i][j]))
        }))
    }

    #[cfg(test)]
    pub(crate) const fn from_raw(entries: [[Complex<T>; 4]; 4]) -> Self {
        Self { entries }
    }

    pub(crate) fn from_fn(mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        Self {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zeros() -> Self {
        Self::from_fn(|_, _| Complex::new(T::zero(), T::zero()))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| {
            if i == j {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    }

    pub fn from_real_diagonal(diag: [T; 4]) -> Self {
        Self::from_fn(|i, j| {
            if i == j {
                Complex::new(diag[i], T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    }

    /// |ψ⟩⟨ψ|
    pub fn outer(psi: &[Complex<T>; 4]) -> Self {
        Self::from_fn(|i, j| psi[i] * psi[j].conj())
    }

    /// Kronecker product a ⊗ b with index 2i + k for (i from a, k from b).
    pub fn kron(a: &Matrix2<T>, b: &Matrix2<T>) -> Self {
        Self::from_fn(|r, c| a[r / 2][c / 2] * b[r % 2][c % 2])
    }

    pub fn entries(&self) -> &[[Complex<T>; 4]; 4] {
        &self.entries
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i].conj())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.entries[i][j].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i])
    }

    pub fn trace(&self) -> Complex<T> {
        (0..4).fold(Complex::new(T::zero(), T::zero()), |acc, i| {
            acc + self.entries[i][i]
        })
    }

    pub fn scale(&self, c: T) -> Self {
        Self::from_fn(|i, j| self.entries[i][j] * c)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .flatten()
            .fold(T::zero(), |m, z| m.max(z.norm()))
    }

    /// ‖M − M†‖_max
    pub fn hermiticity_residual(&self) -> T {
        let mut worst = T::zero();
        for i in 0..4 {
            for j in i..4 {
                worst = worst.max((self.entries[i][j] - self.entries[j][i].conj()).norm());
            }
        }
        worst
    }

    /// (M + M†) / 2
    pub fn hermitian_part(&self) -> Self {
        let half = T::lit(0.5);
        Self::from_fn(|i, j| (self.entries[i][j] + self.entries[j][i].conj()) * half)
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.entries[i][j] - other.entries[i][j]).norm());
            }
        }
        worst
    }
}

impl<T: Real> Index<(usize, usize)> for ComplexMatrix4<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i][j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for ComplexMatrix4<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[i][j]
    }
}

impl<T: Real> Mul for &ComplexMatrix4<T> {
    type Output = ComplexMatrix4<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix4<T> {
        ComplexMatrix4::from_fn(|i, j| {
            (0..4).fold(Complex::new(T::zero(), T::zero()), |acc, k| {
                acc + self.entries[i][k] * rhs.entries[k][j]
            })
        })
    }
}

impl<T: Real> Mul for ComplexMatrix4<T> {
    type Output = ComplexMatrix4<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix4<T> {
        <&Self as Mul<&Self>>::mul(&self, &rhs)
    }
}

impl<T: Real> Add for ComplexMatrix4<T> {
    type Output = ComplexMatrix4<T>;
    fn add(self, rhs: Self) -> ComplexMatrix4<T> {
        ComplexMatrix4::from_fn(|i, j| self.entries[i][j] + rhs.entries[i][j])
    }
}

impl<T: Real> Sub for ComplexMatrix4<T> {
    type Output = ComplexMatrix4<T>;
    fn sub(self, rhs: Self) -> ComplexMatrix4<T> {
        ComplexMatrix4::from_fn(|i, j| self.entries[i][j] - rhs.entries[i][j])
    }
}

impl<T: Real> RealMatrix4<T> {
    /// Builds a matrix, rejecting NaN or infinite entries.
    pub fn new(entries: [[T; 4]; 4]) -> Result<Self> {
        for (row, line) in entries.iter().enumerate() {
            for (col, x) in line.iter().enumerate() {
                if !x.is_finite() {
                    return Err(Error::NonFiniteEntry { row, col });
                }
            }
        }
        Ok(Self { entries })
    }

    pub(crate) const fn from_raw(entries: [[T; 4]; 4]) -> Self {
        Self { entries }
    }

    pub(crate) fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Self {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zeros() -> Self {
        Self::from_fn(|_, _| T::zero())
    }

    pub fn identity() -> Self {
        Self::diagonal([T::one(); 4])
    }

    pub fn diagonal(diag: [T; 4]) -> Self {
        Self::from_fn(|i, j| if i == j { diag[i] } else { T::zero() })
    }

    /// The Minkowski metric diag(1, −1, −1, −1).
    pub fn minkowski() -> Self {
        Self::diagonal([T::one(), -T::one(), -T::one(), -T::one()])
    }

    pub fn entries(&self) -> &[[T; 4]; 4] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i])
    }

    pub fn trace(&self) -> T {
        (0..4).fold(T::zero(), |acc, i| acc + self.entries[i][i])
    }

    pub fn scale(&self, c: T) -> Self {
        Self::from_fn(|i, j| self.entries[i][j] * c)
    }

    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .flatten()
            .fold(T::zero(), |m, x| m.max(x.abs()))
    }

    /// ‖M − Mᵀ‖_max
    pub fn asymmetry(&self) -> T {
        let mut worst = T::zero();
        for i in 0..4 {
            for j in i + 1..4 {
                worst = worst.max((self.entries[i][j] - self.entries[j][i]).abs());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.entries[i][j] - other.entries[i][j]).abs());
            }
        }
        worst
    }
}

impl<T: Real> Index<(usize, usize)> for RealMatrix4<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i][j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for RealMatrix4<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i][j]
    }
}

impl<T: Real> Mul for &RealMatrix4<T> {
    type Output = RealMatrix4<T>;
    fn mul(self, rhs: Self) -> RealMatrix4<T> {
        RealMatrix4::from_fn(|i, j| {
            (0..4).fold(T::zero(), |acc, k| acc + self.entries[i][k] * rhs.entries[k][j])
        })
    }
}

impl<T: Real> Mul for RealMatrix4<T> {
    type Output = RealMatrix4<T>;
    fn mul(self, rhs: Self) -> RealMatrix4<T> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite_entries() {
        let mut e = [[0.0_f64; 4]; 4];
        e[2][1] = f64::NAN;
        assert_eq!(
            RealMatrix4::new(e).unwrap_err(),
            Error::NonFiniteEntry { row: 2, col: 1 }
        );
        let mut z = [[Complex::new(0.0_f64, 0.0); 4]; 4];
        z[0][3] = Complex::new(0.0, f64::INFINITY);
        assert!(ComplexMatrix4::new(z).is_err());
    }

    #[test]
    fn kron_uses_first_factor_as_high_bit() {
        let one = Complex::new(1.0_f64, 0.0);
        let zero = Complex::new(0.0, 0.0);
        let up: Matrix2<f64> = [[one, zero], [zero, zero]];
        let down: Matrix2<f64> = [[zero, zero], [zero, one]];
        // |↑⟩⟨↑| ⊗ |↓⟩⟨↓| = |01⟩⟨01| = index 1
        let m = ComplexMatrix4::kron(&up, &down);
        assert_eq!(m[(1, 1)], one);
        assert_eq!(m.trace(), one);
    }

    #[test]
    fn hermitian_part_removes_antihermitian_component() {
        let m = ComplexMatrix4::<f64>::from_fn(|i, j| Complex::new(i as f64, j as f64));
        let h = m.hermitian_part();
        assert_eq!(h.hermiticity_residual(), 0.0);
        assert!(m.hermiticity_residual() > 0.0);
    }
}

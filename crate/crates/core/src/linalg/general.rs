//! Eigenvalues of a general real 4×4 matrix.
//!
//! Householder reduction to upper Hessenberg form followed by the Francis
//! double-shift QR iteration (the EISPACK `orthes`/`hqr` pair, values only).
//!
//! A 2×2 block whose discriminant is below the rounding noise of its entries is
//! resolved as an exact double eigenvalue. Defective pairs (Jordan blocks) would
//! otherwise split into `m ± √δ` with a sign decided by rounding, either real or
//! complex; both halves are replaced by the block mean, which is accurate to
//! O(ε) in either case.

use num_complex::Complex;

use super::matrix::RealMatrix4;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_ITERATIONS_PER_ROOT: usize = 60;

/// Discriminant noise multiplier for the 2×2 degenerate-pair rule.
const PAIR_NOISE_FACTOR: f64 = 16.0;

/// The four eigenvalues of a real matrix together with reality flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult<T: Real> {
    pub values: [Complex<T>; 4],
    /// `real[k]` is set when `|Im values[k]| ≤ imag_tol·‖M‖_max`.
    pub real: [bool; 4],
    /// ‖M‖_max of the input.
    pub norm: T,
}

impl<T: Real> EigenResult<T> {
    fn new(values: [Complex<T>; 4], norm: T) -> Self {
        let mut out = Self {
            values,
            real: [false; 4],
            norm,
        };
        out.classify(default_imag_tol());
        out
    }

    /// Recomputes the reality flags against `imag_tol·‖M‖_max`.
    pub fn classify(&mut self, imag_tol: T) {
        let bound = imag_tol * self.norm;
        self.real = self.values.map(|z| z.im.abs() <= bound);
    }

    pub fn all_real(&self) -> bool {
        self.real.iter().all(|&r| r)
    }

    /// Real parts sorted in descending order.
    pub fn real_parts_descending(&self) -> [T; 4] {
        let mut re = self.values.map(|z| z.re);
        re.sort_by(|a, b| b.partial_cmp(a).unwrap());
        re
    }
}

/// Default tolerance on imaginary parts relative to ‖M‖_max.
pub fn default_imag_tol<T: Real>() -> T {
    T::tol(1e-6, 1e3)
}

/// Eigenvalues of `m` with multiplicity; complex values occur in conjugate pairs.
pub fn general_real_eigenvalues<T: Real>(m: &RealMatrix4<T>) -> Result<EigenResult<T>> {
    general_eigenvalues_with_noise(m, T::zero())
}

/// Like [`general_real_eigenvalues`], but with a caller-supplied absolute noise
/// level for the entries of `m`.
///
/// Use this when `m` was formed by cancellation from larger quantities so that its
/// entries carry more rounding error than `ε‖m‖`.
pub fn general_eigenvalues_with_noise<T: Real>(
    m: &RealMatrix4<T>,
    entry_noise: T,
) -> Result<EigenResult<T>> {
    let norm = m.max_abs();
    let mut h = *m.entries();
    hessenberg(&mut h);
    let (re, im) = hqr(&mut h, entry_noise)?;
    let values = std::array::from_fn(|k| Complex::new(re[k], im[k]));
    Ok(EigenResult::new(values, norm))
}

/// In-place Householder reduction to upper Hessenberg form.
#[allow(clippy::needless_range_loop)]
fn hessenberg<T: Real>(h: &mut [[T; 4]; 4]) {
    const N: usize = 4;
    let zero = T::zero();
    let mut ort = [zero; N];
    let high = N - 1;
    for m in 1..high {
        let scale = (m..=high).fold(zero, |s, i| s + h[i][m - 1].abs());
        if scale == zero {
            continue;
        }
        let mut hh = zero;
        for i in (m..=high).rev() {
            ort[i] = h[i][m - 1] / scale;
            hh = hh + ort[i] * ort[i];
        }
        let mut g = hh.sqrt();
        if ort[m] > zero {
            g = -g;
        }
        hh = hh - ort[m] * g;
        ort[m] = ort[m] - g;

        for j in m..N {
            let f = (m..=high).rev().fold(zero, |f, i| f + ort[i] * h[i][j]) / hh;
            for i in m..=high {
                h[i][j] = h[i][j] - f * ort[i];
            }
        }
        for row in h.iter_mut() {
            let f = (m..=high).rev().fold(zero, |f, j| f + ort[j] * row[j]) / hh;
            for j in m..=high {
                row[j] = row[j] - f * ort[j];
            }
        }
        ort[m] = scale * ort[m];
        h[m][m - 1] = scale * g;
        for row in h.iter_mut().skip(m + 1) {
            row[m - 1] = zero;
        }
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix; returns (re, im).
#[allow(clippy::needless_range_loop)]
fn hqr<T: Real>(h: &mut [[T; 4]; 4], entry_noise: T) -> Result<([T; 4], [T; 4])> {
    const NN: usize = 4;
    let zero = T::zero();
    let two = T::lit(2.0);
    let eps = T::epsilon();
    let mut re = [zero; NN];
    let mut im = [zero; NN];

    let mut norm = zero;
    for (i, row) in h.iter().enumerate() {
        for x in row.iter().skip(i.saturating_sub(1)) {
            norm = norm + x.abs();
        }
    }
    let delta = (eps * norm).max(entry_noise);

    let low = 0isize;
    let mut n = NN as isize - 1;
    let mut exshift = zero;
    let mut iter = 0usize;
    let (mut p, mut q, mut r) = (zero, zero, zero);
    let (mut s, mut z);
    let (mut w, mut x, mut y);

    while n >= low {
        let nu = n as usize;
        // Look for a single small sub-diagonal element.
        let mut l = n;
        while l > low {
            let lu = l as usize;
            s = h[lu - 1][lu - 1].abs() + h[lu][lu].abs();
            if s == zero {
                s = norm;
            }
            if h[lu][lu - 1].abs() <= eps * s {
                break;
            }
            l -= 1;
        }

        if l == n {
            h[nu][nu] = h[nu][nu] + exshift;
            re[nu] = h[nu][nu];
            im[nu] = zero;
            n -= 1;
            iter = 0;
        } else if l == n - 1 {
            let b = h[nu - 1][nu];
            let c = h[nu][nu - 1];
            w = c * b;
            p = (h[nu - 1][nu - 1] - h[nu][nu]) / two;
            q = p * p + w;
            h[nu][nu] = h[nu][nu] + exshift;
            h[nu - 1][nu - 1] = h[nu - 1][nu - 1] + exshift;
            x = h[nu][nu];
            let q_noise = T::lit(PAIR_NOISE_FACTOR) * delta * (two * p.abs() + b.abs() + c.abs());
            if q.abs() <= q_noise {
                re[nu - 1] = x + p;
                re[nu] = x + p;
                im[nu - 1] = zero;
                im[nu] = zero;
            } else if q >= zero {
                z = q.abs().sqrt();
                z = if p >= zero { p + z } else { p - z };
                re[nu - 1] = x + z;
                re[nu] = re[nu - 1];
                if z != zero {
                    re[nu] = x - w / z;
                }
                im[nu - 1] = zero;
                im[nu] = zero;
            } else {
                z = q.abs().sqrt();
                re[nu - 1] = x + p;
                re[nu] = x + p;
                im[nu - 1] = z;
                im[nu] = -z;
            }
            n -= 2;
            iter = 0;
        } else {
            x = h[nu][nu];
            y = zero;
            w = zero;
            if l < n {
                y = h[nu - 1][nu - 1];
                w = h[nu][nu - 1] * h[nu - 1][nu];
            }
            // Exceptional shifts.
            if iter == 10 {
                exshift = exshift + x;
                for (i, row) in h.iter_mut().enumerate().take(nu + 1) {
                    row[i] = row[i] - x;
                }
                s = h[nu][nu - 1].abs() + h[nu - 1][nu - 2].abs();
                x = T::lit(0.75) * s;
                y = x;
                w = T::lit(-0.4375) * s * s;
            }
            if iter == 30 {
                s = (y - x) / two;
                s = s * s + w;
                if s > zero {
                    s = s.sqrt();
                    if y < x {
                        s = -s;
                    }
                    s = x - w / ((y - x) / two + s);
                    for (i, row) in h.iter_mut().enumerate().take(nu + 1) {
                        row[i] = row[i] - s;
                    }
                    exshift = exshift + s;
                    x = T::lit(0.964);
                    y = x;
                    w = x;
                }
            }
            iter += 1;
            if iter > MAX_ITERATIONS_PER_ROOT {
                return Err(Error::ConvergenceFailure {
                    algorithm: "Hessenberg QR",
                    iterations: iter,
                });
            }

            // Look for two consecutive small sub-diagonal elements.
            let mut m = n - 2;
            while m >= l {
                let mu = m as usize;
                z = h[mu][mu];
                r = x - z;
                s = y - z;
                p = (r * s - w) / h[mu + 1][mu] + h[mu][mu + 1];
                q = h[mu + 1][mu + 1] - z - r - s;
                r = h[mu + 2][mu + 1];
                s = p.abs() + q.abs() + r.abs();
                p = p / s;
                q = q / s;
                r = r / s;
                if m == l {
                    break;
                }
                let lhs = h[mu][mu - 1].abs() * (q.abs() + r.abs());
                let rhs =
                    eps * (p.abs() * (h[mu - 1][mu - 1].abs() + z.abs() + h[mu + 1][mu + 1].abs()));
                if lhs < rhs {
                    break;
                }
                m -= 1;
            }
            let mu = m as usize;
            for i in mu + 2..=nu {
                h[i][i - 2] = zero;
                if i > mu + 2 {
                    h[i][i - 3] = zero;
                }
            }

            // Double QR step on rows l..=n and columns m..=n.
            for k in mu..nu {
                let notlast = k != nu - 1;
                if k != mu {
                    p = h[k][k - 1];
                    q = h[k + 1][k - 1];
                    r = if notlast { h[k + 2][k - 1] } else { zero };
                    x = p.abs() + q.abs() + r.abs();
                    if x == zero {
                        continue;
                    }
                    p = p / x;
                    q = q / x;
                    r = r / x;
                }
                s = (p * p + q * q + r * r).sqrt();
                if p < zero {
                    s = -s;
                }
                if s != zero {
                    if k != mu {
                        h[k][k - 1] = -s * x;
                    } else if l != m {
                        h[k][k - 1] = -h[k][k - 1];
                    }
                    p = p + s;
                    x = p / s;
                    y = q / s;
                    z = r / s;
                    q = q / p;
                    r = r / p;

                    for j in k..NN {
                        p = h[k][j] + q * h[k + 1][j];
                        if notlast {
                            p = p + r * h[k + 2][j];
                            h[k + 2][j] = h[k + 2][j] - p * z;
                        }
                        h[k][j] = h[k][j] - p * x;
                        h[k + 1][j] = h[k + 1][j] - p * y;
                    }
                    for row in h.iter_mut().take(nu.min(k + 3) + 1) {
                        p = x * row[k] + y * row[k + 1];
                        if notlast {
                            p = p + z * row[k + 2];
                            row[k + 2] = row[k + 2] - p * r;
                        }
                        row[k] = row[k] - p;
                        row[k + 1] = row[k + 1] - p * q;
                    }
                }
            }
        }
    }
    Ok((re, im))
}

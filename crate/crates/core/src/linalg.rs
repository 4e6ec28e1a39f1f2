//! Dense complex eigenvalues (Hessenberg reduction + shifted QR) and the
//! reduced Burau representation.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;
use num_traits::Zero;

use crate::braid::BraidWord;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// All eigenvalues, in no particular order.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        match self.n {
            0 => Vec::new(),
            1 => vec![self.data[0]],
            2 => {
                let (a, b, c, d) = (self.data[0], self.data[1], self.data[2], self.data[3]);
                let (l1, l2) = eig2(a, b, c, d);
                vec![l1, l2]
            }
            _ => {
                let mut h = self.clone();
                h.reduce_to_hessenberg();
                hessenberg_qr(&mut h)
            }
        }
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues()
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Similarity reduction to upper Hessenberg form by stabilized elementary
    /// transformations.
    fn reduce_to_hessenberg(&mut self) {
        let n = self.n;
        for m in 1..n.saturating_sub(1) {
            let mut pivot = m;
            let mut best = 0.0;
            for i in m..n {
                let v = self[(i, m - 1)].norm();
                if v > best {
                    best = v;
                    pivot = i;
                }
            }
            if pivot != m {
                for j in (m - 1)..n {
                    self.data.swap(pivot * n + j, m * n + j);
                }
                for i in 0..n {
                    self.data.swap(i * n + pivot, i * n + m);
                }
            }
            let x = self[(m, m - 1)];
            if x.is_zero() {
                continue;
            }
            for i in (m + 1)..n {
                let y = self[(i, m - 1)] / x;
                if y.is_zero() {
                    continue;
                }
                self[(i, m - 1)] = Complex64::zero();
                for j in m..n {
                    let t = self[(m, j)];
                    self[(i, j)] -= y * t;
                }
                for r in 0..n {
                    let t = self[(r, i)];
                    self[(r, m)] += y * t;
                }
            }
        }
    }
}

impl core::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let half_tr = (a + d) * 0.5;
    let diff = (a - d) * 0.5;
    let disc = (diff * diff + b * c).sqrt();
    // avoid cancellation: compute the larger root first
    let l1 = if (half_tr + disc).norm() >= (half_tr - disc).norm() {
        half_tr + disc
    } else {
        half_tr - disc
    };
    let det = a * d - b * c;
    let l2 = if l1.is_zero() { half_tr - disc } else { det / l1 };
    (l1, l2)
}

/// Single-shift complex QR with Wilkinson shifts and deflation on a
/// Hessenberg matrix. Destroys `h`.
fn hessenberg_qr(h: &mut CMatrix) -> Vec<Complex64> {
    let n = h.n;
    let mut eig = vec![Complex64::zero(); n];
    let mut hi = n - 1;
    let mut iter = 0usize;
    let eps = f64::EPSILON;
    let scale = h.max_abs().max(f64::MIN_POSITIVE);
    loop {
        if hi == 0 {
            eig[0] = h[(0, 0)];
            break;
        }
        // locate the start of the active unreduced block
        let mut lo = hi;
        while lo > 0 {
            let s = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let s = if s == 0.0 { scale } else { s };
            if h[(lo, lo - 1)].norm() <= eps * s {
                h[(lo, lo - 1)] = Complex64::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eig[hi] = h[(hi, hi)];
            hi -= 1;
            iter = 0;
            continue;
        }
        if lo + 1 == hi {
            let (l1, l2) = eig2(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            );
            eig[hi - 1] = l1;
            eig[hi] = l2;
            if hi == 1 {
                break;
            }
            hi -= 2;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > 200 * n {
            // no convergence: report the current diagonal
            for i in 0..=hi {
                eig[i] = h[(i, i)];
            }
            break;
        }
        let shift = if iter % 11 == 10 {
            h[(hi, hi)] + Complex64::new(h[(hi, hi - 1)].norm() + h[(hi - 1, hi - 2)].norm(), 0.0)
        } else {
            let (l1, l2) = eig2(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            );
            let d = h[(hi, hi)];
            if (l1 - d).norm() < (l2 - d).norm() {
                l1
            } else {
                l2
            }
        };
        qr_step(h, lo, hi, shift);
    }
    eig
}

fn qr_step(h: &mut CMatrix, lo: usize, hi: usize, shift: Complex64) {
    for k in lo..=hi {
        h[(k, k)] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let x = h[(k, k)];
        let y = h[(k + 1, k)];
        let r = Float::sqrt(x.norm_sqr() + y.norm_sqr());
        if r == 0.0 {
            rotations.push((Complex64::new(1.0, 0.0), Complex64::zero()));
            continue;
        }
        let (alpha, beta) = (x / r, y / r);
        for j in k..=hi {
            let (u, v) = (h[(k, j)], h[(k + 1, j)]);
            h[(k, j)] = alpha.conj() * u + beta.conj() * v;
            h[(k + 1, j)] = -beta * u + alpha * v;
        }
        rotations.push((alpha, beta));
    }
    for (idx, &(alpha, beta)) in rotations.iter().enumerate() {
        let k = lo + idx;
        let last = (k + 2).min(hi);
        for i in lo..=last {
            let (u, v) = (h[(i, k)], h[(i, k + 1)]);
            h[(i, k)] = u * alpha + v * beta;
            h[(i, k + 1)] = -u * beta.conj() + v * alpha.conj();
        }
    }
    for k in lo..=hi {
        h[(k, k)] += shift;
    }
}

/// Reduced Burau matrix (size `n - 1`) of `w` at parameter `t`.
///
/// `σ_i` is the identity except row `i`: `-t` on the diagonal, `t` to its left
/// and `1` to its right (where those columns exist).
pub fn reduced_burau(w: &BraidWord, t: Complex64) -> CMatrix {
    let dim = w.strands() - 1;
    let mut m = CMatrix::identity(dim);
    for &l in w.letters() {
        let g = burau_generator(dim, l.unsigned_abs() as usize - 1, t);
        let g = if l > 0 { g } else { burau_generator_inverse(dim, l.unsigned_abs() as usize - 1, t) };
        m = m.mul(&g);
    }
    m
}

fn burau_generator(dim: usize, row: usize, t: Complex64) -> CMatrix {
    let mut g = CMatrix::identity(dim);
    g[(row, row)] = -t;
    if row > 0 {
        g[(row, row - 1)] = t;
    }
    if row + 1 < dim {
        g[(row, row + 1)] = Complex64::new(1.0, 0.0);
    }
    g
}

/// Inverse of a generator matrix: row `i` becomes `-1/t` on the diagonal,
/// `1` to its left and `1/t` to its right.
fn burau_generator_inverse(dim: usize, row: usize, t: Complex64) -> CMatrix {
    let mut g = CMatrix::identity(dim);
    let inv_t = t.inv();
    g[(row, row)] = -inv_t;
    if row > 0 {
        g[(row, row - 1)] = Complex64::new(1.0, 0.0);
    }
    if row + 1 < dim {
        g[(row, row + 1)] = inv_t;
    }
    g
}

//! Monic polynomials: discriminant, roots and minimal-displacement matching.
//!
//! Coefficients are stored constant term first, `a_0 … a_{n-1}`, with the
//! leading 1 implied.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;
use num_traits::Zero;

use crate::linalg::CMatrix;

pub fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(1.0, 0.0), |acc, &a| acc * z + a)
}

fn eval_derivative(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let n = coeffs.len();
    let mut acc = Complex64::new(n as f64, 0.0);
    for k in (1..n).rev() {
        acc = acc * z + coeffs[k] * k as f64;
    }
    acc
}

/// `D = (-1)^{n(n-1)/2} Res(p, p')` through the Sylvester determinant.
pub fn discriminant(coeffs: &[Complex64]) -> Complex64 {
    let n = coeffs.len();
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    // highest degree first
    let mut p = vec![Complex64::new(1.0, 0.0)];
    p.extend(coeffs.iter().rev().copied());
    let dp: Vec<Complex64> = (0..n)
        .map(|i| {
            let deg = n - i;
            p[i] * deg as f64
        })
        .collect();
    let size = 2 * n - 1;
    let mut m = vec![Complex64::zero(); size * size];
    for r in 0..n - 1 {
        for (k, &c) in p.iter().enumerate() {
            m[r * size + r + k] = c;
        }
    }
    for r in 0..n {
        for (k, &c) in dp.iter().enumerate() {
            m[(n - 1 + r) * size + r + k] = c;
        }
    }
    let res = determinant(&mut m, size);
    if (n * (n - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    }
}

fn determinant(m: &mut [Complex64], size: usize) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..size {
        let pivot = (col..size)
            .max_by(|&a, &b| {
                m[a * size + col]
                    .norm()
                    .partial_cmp(&m[b * size + col].norm())
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
            .expect("nonempty");
        let pv = m[pivot * size + col];
        if pv.is_zero() {
            return Complex64::zero();
        }
        if pivot != col {
            for j in 0..size {
                m.swap(pivot * size + j, col * size + j);
            }
            det = -det;
        }
        det *= pv;
        for r in col + 1..size {
            let f = m[r * size + col] / pv;
            if f.is_zero() {
                continue;
            }
            for j in col..size {
                let t = m[col * size + j];
                m[r * size + j] -= f * t;
            }
        }
    }
    det
}

/// Root scale `max(1, max_j |a_j / C(n, j)|^{1/(n-j)})`. It equals `R` for
/// `(ζ - R)^n` and is homogeneous of degree 1 in the roots.
pub fn root_scale(coeffs: &[Complex64]) -> f64 {
    let n = coeffs.len();
    coeffs
        .iter()
        .enumerate()
        .map(|(j, a)| Float::powf(a.norm() / binomial(n, j), 1.0 / (n - j) as f64))
        .fold(1.0, f64::max)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k.min(n - k)).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Discriminant floor `rel · s^{n(n-1)}`, `s` the root scale.
pub fn separability_floor(coeffs: &[Complex64], rel: f64) -> f64 {
    let n = coeffs.len() as i32;
    rel * Float::powi(root_scale(coeffs), n * (n - 1))
}

/// Roots as companion-matrix eigenvalues, each polished by one Newton step,
/// sorted by real then imaginary part.
pub fn roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    let mut comp = CMatrix::zeros(n);
    for i in 1..n {
        comp[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for (i, &a) in coeffs.iter().enumerate() {
        comp[(i, n - 1)] = -a;
    }
    let mut rs: Vec<Complex64> = comp
        .eigenvalues()
        .into_iter()
        .map(|z| {
            let d = eval_derivative(coeffs, z);
            if d.norm() > 0.0 {
                let step = eval(coeffs, z) / d;
                if step.is_finite() {
                    return z - step;
                }
            }
            z
        })
        .collect();
    rs.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(core::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(core::cmp::Ordering::Equal))
    });
    rs
}

pub fn min_gap(points: &[Complex64]) -> f64 {
    let mut gap = f64::INFINITY;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            gap = gap.min((points[i] - points[j]).norm());
        }
    }
    gap
}

/// Bijection `assign[i] = j` minimizing `Σ |from[i] - to[j]|` (Hungarian method).
pub fn min_displacement_matching(from: &[Complex64], to: &[Complex64]) -> Vec<usize> {
    let n = from.len();
    assert_eq!(n, to.len());
    let cost = |i: usize, j: usize| (from[i] - to[j]).norm();
    // 1-based potentials; column 0 is a sentinel
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0; n];
    for j in 1..=n {
        assign[row_of[j] - 1] = j - 1;
    }
    assign
}

#![allow(dead_code)]

use std::f64::consts::TAU;

use braidmod_core::monodromy::PolynomialLoop;
use braidmod_core::BraidWord;
use num_complex::Complex64;
use rand::Rng;

pub fn word(text: &str, n: usize) -> BraidWord {
    BraidWord::parse(text, n).expect("valid word")
}

/// One step of a rewrite that preserves the braid: `kind` picks the move,
/// `pos` and `gen` pick where and which generator.
pub fn rewrite_step(letters: &mut Vec<i32>, n: usize, kind: u8, pos: usize, gen: i32) {
    let g = 1 + gen.rem_euclid(n as i32 - 1);
    match kind % 4 {
        0 => {
            let p = pos % (letters.len() + 1);
            let s = if gen % 2 == 0 { 1 } else { -1 };
            letters.splice(p..p, [s * g, -s * g]);
        }
        1 => {
            if letters.len() >= 3 {
                let p = pos % (letters.len() - 2);
                let (a, b, c) = (letters[p], letters[p + 1], letters[p + 2]);
                if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                    letters[p] = b;
                    letters[p + 1] = a;
                    letters[p + 2] = b;
                }
            }
        }
        2 => {
            if letters.len() >= 2 {
                let p = pos % (letters.len() - 1);
                if (letters[p].abs() - letters[p + 1].abs()).abs() >= 2 {
                    letters.swap(p, p + 1);
                }
            }
        }
        _ => {
            if letters.len() >= 2 {
                let p = pos % (letters.len() - 1);
                if letters[p] == -letters[p + 1] {
                    letters.drain(p..p + 2);
                }
            }
        }
    }
}

pub fn rewritten(w: &BraidWord, moves: &[(u8, usize, i32)]) -> BraidWord {
    let mut letters = w.letters().to_vec();
    for &(kind, pos, gen) in moves {
        rewrite_step(&mut letters, w.strands(), kind, pos, gen);
    }
    BraidWord::new(w.strands(), letters).expect("rewrite keeps indices in range")
}

/// Monic polynomial with the given roots, constant term first, leading 1 dropped.
pub fn coeffs_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut p = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); p.len() + 1];
        for (k, &a) in p.iter().enumerate() {
            next[k] += a;
            next[k + 1] -= a * r;
        }
        p = next;
    }
    p.into_iter().skip(1).rev().collect()
}

/// A product of linear factors `ζ - ρ_k e^{i m_k θ}` with pairwise distinct
/// radii `|ρ_k|`, together with its analytic discriminant index.
#[derive(Debug, Clone)]
pub struct LinearFactorLoop {
    pub rho: Vec<Complex64>,
    pub winding: Vec<i64>,
}

impl LinearFactorLoop {
    pub fn random(rng: &mut impl Rng, degree: usize, max_winding: i64) -> Self {
        let mut radius = 0.0;
        let mut rho = Vec::with_capacity(degree);
        let mut winding = Vec::with_capacity(degree);
        for _ in 0..degree {
            radius += rng.gen_range(0.4..1.0);
            rho.push(Complex64::from_polar(radius, rng.gen_range(0.0..TAU)));
            winding.push(rng.gen_range(-max_winding..=max_winding));
        }
        Self { rho, winding }
    }

    /// `Σ_{j<k} 2·m_{outer}`: the factor `r_j - r_k` winds like its larger root.
    pub fn analytic_index(&self) -> i64 {
        let n = self.rho.len();
        let mut total = 0;
        for j in 0..n {
            for k in j + 1..n {
                let outer = if self.rho[j].norm() > self.rho[k].norm() { j } else { k };
                total += 2 * self.winding[outer];
            }
        }
        total
    }

    pub fn roots_at(&self, theta: f64) -> Vec<Complex64> {
        self.rho
            .iter()
            .zip(&self.winding)
            .map(|(r, &m)| r * Complex64::from_polar(1.0, m as f64 * theta))
            .collect()
    }

    pub fn sample(&self, count: usize) -> PolynomialLoop {
        PolynomialLoop::from_fn(self.rho.len(), count, |t| coeffs_from_roots(&self.roots_at(t)))
            .expect("valid loop")
    }

    pub fn default_samples(&self) -> usize {
        let m = self.winding.iter().map(|m| m.unsigned_abs()).max().unwrap_or(0) as usize;
        32 * m.max(1) * self.rho.len()
    }
}

/// `ζ^n - e^{iθ}`.
pub fn root_of_unity_loop(n: usize, count: usize) -> PolynomialLoop {
    PolynomialLoop::from_fn(n, count, |t| {
        let mut c = vec![Complex64::new(0.0, 0.0); n];
        c[0] = -Complex64::from_polar(1.0, t);
        c
    })
    .expect("valid loop")
}

/// `ζ^n - 1` sampled at every angle.
pub fn constant_loop(n: usize, count: usize) -> PolynomialLoop {
    PolynomialLoop::from_fn(n, count, |_| {
        let mut c = vec![Complex64::new(0.0, 0.0); n];
        c[0] = Complex64::new(-1.0, 0.0);
        c
    })
    .expect("valid loop")
}

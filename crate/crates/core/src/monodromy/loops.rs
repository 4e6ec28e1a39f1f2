//! Sampled loops of monic polynomials, separability and the discriminant index.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use num_traits::Float;

use super::poly::{discriminant, separability_floor};
use super::{MonodromyError, SeparabilitySite};

pub const MIN_SAMPLES: usize = 8;
pub const DEFAULT_RELATIVE_FLOOR: f64 = 1e-9;
pub const DEFAULT_CLOSURE_TOLERANCE: f64 = 1e-9;
pub const MAX_REFINEMENT_DEPTH: u32 = 24;

#[derive(Debug, Clone, PartialEq)]
pub struct LoopSample {
    pub theta: f64,
    /// `a_0 … a_{n-1}`; the leading coefficient 1 is implied.
    pub coeffs: Vec<Complex64>,
}

/// A loop of monic degree-`n` polynomials sampled at increasing angles in
/// `[0, 2π)`, closed by returning from the last sample to the first at
/// `θ_0 + 2π`. Coefficients are interpolated linearly between samples.
///
/// The loop is traversed counterclockwise, i.e. in order of increasing angle.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialLoop {
    degree: usize,
    samples: Vec<LoopSample>,
    closure_tolerance: f64,
    relative_floor: f64,
}

impl PolynomialLoop {
    pub fn new(degree: usize, samples: Vec<LoopSample>) -> Result<Self, MonodromyError> {
        if degree < 2 {
            return Err(MonodromyError::InvalidLoop("degree must be at least 2"));
        }
        if samples.len() < MIN_SAMPLES {
            return Err(MonodromyError::InvalidLoop("a loop needs at least 8 samples"));
        }
        for s in &samples {
            if s.coeffs.len() != degree {
                return Err(MonodromyError::InvalidLoop("every sample needs n coefficients"));
            }
            if !s.theta.is_finite() || s.coeffs.iter().any(|c| !c.is_finite()) {
                return Err(MonodromyError::InvalidLoop("non-finite number in loop"));
            }
            if !(0.0..TAU).contains(&s.theta) {
                return Err(MonodromyError::InvalidLoop("angles must lie in [0, 2π)"));
            }
        }
        if samples.windows(2).any(|w| w[1].theta <= w[0].theta) {
            return Err(MonodromyError::InvalidLoop("angles must be strictly increasing"));
        }
        Ok(Self {
            degree,
            samples,
            closure_tolerance: DEFAULT_CLOSURE_TOLERANCE,
            relative_floor: DEFAULT_RELATIVE_FLOOR,
        })
    }

    /// Samples `f(θ)` at `count` equally spaced angles `2πj / count`.
    pub fn from_fn(
        degree: usize,
        count: usize,
        mut f: impl FnMut(f64) -> Vec<Complex64>,
    ) -> Result<Self, MonodromyError> {
        let samples = (0..count)
            .map(|j| {
                let theta = TAU * j as f64 / count as f64;
                LoopSample {
                    theta,
                    coeffs: f(theta),
                }
            })
            .collect();
        Self::new(degree, samples)
    }

    pub fn with_closure_tolerance(mut self, tol: f64) -> Self {
        self.closure_tolerance = tol;
        self
    }

    pub fn with_relative_floor(mut self, rel: f64) -> Self {
        self.relative_floor = rel;
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn samples(&self) -> &[LoopSample] {
        &self.samples
    }

    pub fn closure_tolerance(&self) -> f64 {
        self.closure_tolerance
    }

    pub fn relative_floor(&self) -> f64 {
        self.relative_floor
    }

    /// Number of segments, including the closing one.
    pub fn segment_count(&self) -> usize {
        self.samples.len()
    }

    /// Start and end angle of segment `j`; the closing segment ends at `θ_0 + 2π`.
    pub fn segment_angles(&self, j: usize) -> (f64, f64) {
        let a = self.samples[j].theta;
        let b = if j + 1 < self.samples.len() {
            self.samples[j + 1].theta
        } else {
            self.samples[0].theta + TAU
        };
        (a, b)
    }

    pub fn segment_endpoints(&self, j: usize) -> (&[Complex64], &[Complex64]) {
        let next = (j + 1) % self.samples.len();
        (&self.samples[j].coeffs, &self.samples[next].coeffs)
    }

    /// Same loop traversed clockwise: angles `θ ↦ 2π - θ` (0 stays 0).
    pub fn reversed(&self) -> Self {
        let mut samples: Vec<LoopSample> = self
            .samples
            .iter()
            .map(|s| LoopSample {
                theta: if s.theta == 0.0 { 0.0 } else { TAU - s.theta },
                coeffs: s.coeffs.clone(),
            })
            .collect();
        samples.sort_by(|a, b| a.theta.partial_cmp(&b.theta).expect("finite"));
        Self {
            samples,
            ..self.clone()
        }
    }

    /// Inserts the linear midpoint into every segment.
    pub fn doubled(&self) -> Self {
        let mut samples = Vec::with_capacity(2 * self.samples.len());
        for j in 0..self.samples.len() {
            let (a, b) = self.segment_angles(j);
            let (ca, cb) = self.segment_endpoints(j);
            samples.push(self.samples[j].clone());
            let mid = 0.5 * (a + b);
            samples.push(LoopSample {
                theta: if mid >= TAU { mid - TAU } else { mid },
                coeffs: interpolate(ca, cb, 0.5),
            });
        }
        samples.sort_by(|a, b| a.theta.partial_cmp(&b.theta).expect("finite"));
        Self {
            samples,
            ..self.clone()
        }
    }

    /// Checks every sample against the discriminant floor and returns the
    /// validated loop together with the minimum `|D_n|`.
    pub fn validate_separable(self) -> Result<ValidatedLoop, MonodromyError> {
        let mut min_disc = f64::INFINITY;
        for (j, s) in self.samples.iter().enumerate() {
            let d = discriminant(&s.coeffs).norm();
            let floor = separability_floor(&s.coeffs, self.relative_floor);
            if d.is_nan() || d < floor {
                return Err(MonodromyError::SeparabilityViolation {
                    site: SeparabilitySite::Sample(j),
                    discriminant: d,
                    floor,
                });
            }
            min_disc = min_disc.min(d);
        }
        Ok(ValidatedLoop {
            inner: self,
            min_discriminant: min_disc,
        })
    }
}

/// A loop whose samples passed the separability check.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidatedLoop {
    inner: PolynomialLoop,
    min_discriminant: f64,
}

impl ValidatedLoop {
    pub fn min_discriminant(&self) -> f64 {
        self.min_discriminant
    }

    pub fn into_inner(self) -> PolynomialLoop {
        self.inner
    }
}

impl core::ops::Deref for ValidatedLoop {
    type Target = PolynomialLoop;

    fn deref(&self) -> &PolynomialLoop {
        &self.inner
    }
}

pub fn interpolate(a: &[Complex64], b: &[Complex64], s: f64) -> Vec<Complex64> {
    a.iter().zip(b).map(|(&x, &y)| x + (y - x) * s).collect()
}

/// Winding number of `θ ↦ D_n(p(θ))` around 0 along the interpolated loop.
///
/// Each segment is bisected until every argument increment is below `π/2`.
pub fn discriminant_index(lp: &ValidatedLoop) -> Result<i64, MonodromyError> {
    let mut total = 0.0;
    for j in 0..lp.segment_count() {
        total += segment_winding(lp, j)?;
    }
    let turns = total / TAU;
    let k = Float::round(turns);
    if (turns - k).abs() >= 0.25 {
        return Err(MonodromyError::WindingResidue(turns));
    }
    Ok(k as i64)
}

fn segment_winding(lp: &PolynomialLoop, j: usize) -> Result<f64, MonodromyError> {
    let (ca, cb) = lp.segment_endpoints(j);
    let disc_at = |s: f64| discriminant(&interpolate(ca, cb, s));
    let mut total = 0.0;
    // (s0, D(s0), s1, D(s1), depth)
    let mut stack = alloc::vec![(0.0, disc_at(0.0), 1.0, disc_at(1.0), 0u32)];
    while let Some((s0, d0, s1, d1, depth)) = stack.pop() {
        let inc = (d1 / d0).arg();
        if inc.abs() < FRAC_PI_2 && inc.is_finite() {
            total += inc;
            continue;
        }
        if depth >= MAX_REFINEMENT_DEPTH {
            return Err(MonodromyError::RefinementExhausted { segment: j });
        }
        let sm = 0.5 * (s0 + s1);
        let dm = disc_at(sm);
        let floor = separability_floor(&interpolate(ca, cb, sm), lp.relative_floor());
        if dm.norm().is_nan() || dm.norm() < floor {
            return Err(MonodromyError::SeparabilityViolation {
                site: SeparabilitySite::Chord { segment: j, s: sm },
                discriminant: dm.norm(),
                floor,
            });
        }
        // right half first so the left half is popped first
        stack.push((sm, dm, s1, d1, depth + 1));
        stack.push((s0, d0, sm, dm, depth + 1));
    }
    debug_assert!(total.abs() < PI * 4.0 * (1u64 << MAX_REFINEMENT_DEPTH) as f64);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sqrt_loop(count: usize) -> PolynomialLoop {
        PolynomialLoop::from_fn(2, count, |t| vec![-Complex64::from_polar(1.0, t), c(0.0, 0.0)]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert!(PolynomialLoop::from_fn(2, 7, |_| vec![c(-1.0, 0.0), c(0.0, 0.0)]).is_err());
        assert!(PolynomialLoop::from_fn(1, 16, |_| vec![c(-1.0, 0.0)]).is_err());
        assert!(PolynomialLoop::from_fn(2, 16, |_| vec![c(-1.0, 0.0)]).is_err());
        let mut samples = sqrt_loop(8).samples().to_vec();
        samples.swap(2, 3);
        assert!(PolynomialLoop::new(2, samples).is_err());
    }

    #[test]
    fn validation_examples() {
        let v = sqrt_loop(64).validate_separable().unwrap();
        assert!((v.min_discriminant() - 4.0).abs() < 1e-12);
        let tiny = PolynomialLoop::from_fn(2, 64, |t| {
            vec![-Complex64::from_polar(1e-15, t), c(0.0, 0.0)]
        })
        .unwrap();
        assert!(matches!(
            tiny.validate_separable(),
            Err(MonodromyError::SeparabilityViolation { .. })
        ));
        let constant = PolynomialLoop::from_fn(2, 16, |_| vec![c(-1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((constant.validate_separable().unwrap().min_discriminant() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn index_examples() {
        let v = sqrt_loop(64).validate_separable().unwrap();
        assert_eq!(discriminant_index(&v).unwrap(), 1);
        let constant = PolynomialLoop::from_fn(2, 16, |_| vec![c(-1.0, 0.0), c(0.0, 0.0)])
            .unwrap()
            .validate_separable()
            .unwrap();
        assert_eq!(discriminant_index(&constant).unwrap(), 0);
        let cube = PolynomialLoop::from_fn(3, 64, |t| {
            vec![-Complex64::from_polar(1.0, t), c(0.0, 0.0), c(0.0, 0.0)]
        })
        .unwrap()
        .validate_separable()
        .unwrap();
        assert_eq!(discriminant_index(&cube).unwrap(), 2);
    }

    #[test]
    fn coarse_sampling_is_refined() {
        // D = 4 e^{3iθ}: 8 samples give steps of 3π/4, which must be bisected
        let v = PolynomialLoop::from_fn(2, 8, |t| vec![-Complex64::from_polar(1.0, 3.0 * t), c(0.0, 0.0)])
            .unwrap()
            .validate_separable();
        // the chord between samples may pass close to 0; either it is caught
        // or the winding is right
        match v {
            Ok(v) => match discriminant_index(&v) {
                Ok(k) => assert_eq!(k, 3),
                Err(e) => assert!(matches!(e, MonodromyError::SeparabilityViolation { .. })),
            },
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn reversal_and_doubling_preserve_shape() {
        let lp = sqrt_loop(16);
        assert_eq!(lp.doubled().samples().len(), 32);
        let r = lp.reversed();
        assert_eq!(r.samples()[0].theta, 0.0);
        let v = r.validate_separable().unwrap();
        assert_eq!(discriminant_index(&v).unwrap(), -1);
    }
}

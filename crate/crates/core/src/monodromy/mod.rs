//! Braid monodromy of loops of monic polynomials and the reducibility and
//! solvability criteria built on it.

mod extract;
mod loops;
pub mod poly;
mod track;

use core::f64::consts::{LN_2, PI, TAU};

use thiserror::Error;

use crate::conformal::ModuleValue;
use crate::thurston::min_entropy3;

pub use extract::{
    extract_braid, is_irreducible_class, track_permutation, MonodromyResult, PROJECTION_PROBES,
    TIE_TOLERANCE,
};
pub use loops::{
    discriminant_index, interpolate, LoopSample, PolynomialLoop, ValidatedLoop,
    DEFAULT_CLOSURE_TOLERANCE, DEFAULT_RELATIVE_FLOOR, MAX_REFINEMENT_DEPTH, MIN_SAMPLES,
};
pub use poly::discriminant;
pub use track::{
    sample_roots, stitch, track_roots, track_segment, RefinementRecord, RootTrack, SegmentTrack,
};

/// Where a discriminant fell below the separability floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeparabilitySite {
    /// At an input sample.
    Sample(usize),
    /// On the interpolated chord of a segment, at parameter `s ∈ (0, 1)`.
    /// Denser input samples usually fix this.
    Chord { segment: usize, s: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MonodromyError {
    #[error("invalid loop: {0}")]
    InvalidLoop(&'static str),
    #[error("separability violated at {site:?}: |D| = {discriminant:e} below floor {floor:e}")]
    SeparabilityViolation {
        site: SeparabilitySite,
        discriminant: f64,
        floor: f64,
    },
    #[error("refinement depth exhausted on segment {segment}")]
    RefinementExhausted { segment: usize },
    #[error("winding number {0} is not close to an integer")]
    WindingResidue(f64),
    #[error("track does not close up (mismatch {0:e})")]
    ClosureMismatch(f64),
    #[error("no projection direction gives a tie-free reading")]
    ProjectionDegenerate,
    #[error("exponent sum {exponent_sum} differs from discriminant index {discriminant_index}")]
    CrossCheckFailed {
        exponent_sum: i64,
        discriminant_index: i64,
    },
    #[error("braid permutation differs from the strand matching")]
    PermutationMismatch,
    #[error("degree {0} is not prime")]
    NonPrimeDegree(usize),
}

impl MonodromyError {
    /// Stable variant name, used in CLI diagnostics.
    pub fn class_name(&self) -> &'static str {
        match self {
            MonodromyError::InvalidLoop(_) => "InvalidLoop",
            MonodromyError::SeparabilityViolation { .. } => "SeparabilityViolation",
            MonodromyError::RefinementExhausted { .. } => "RefinementExhausted",
            MonodromyError::WindingResidue(_) => "WindingResidue",
            MonodromyError::ClosureMismatch(_) => "ClosureMismatch",
            MonodromyError::ProjectionDegenerate => "ProjectionDegenerate",
            MonodromyError::CrossCheckFailed { .. } => "CrossCheckFailed",
            MonodromyError::PermutationMismatch => "CrossCheckFailed",
            MonodromyError::NonPrimeDegree(_) => "NonPrimeDegree",
        }
    }
}

/// Validates, tracks and extracts in one go.
pub fn monodromy(lp: PolynomialLoop) -> Result<MonodromyResult, MonodromyError> {
    let validated = lp.validate_separable()?;
    let track = track_roots(&validated)?;
    extract_braid(&track)
}

/// `r_0 = 2π / log 2`.
pub fn zjuzin_r0() -> f64 {
    TAU / LN_2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducibilityVerdict {
    GuaranteedReducible,
    Inconclusive,
}

/// A separable quasipolynomial of prime degree `n` over an annulus of module
/// `m > n·r_0` whose discriminant index is divisible by `n` is reducible.
/// The test is one-directional.
pub fn zjuzin_reducibility(
    n: usize,
    annulus_module: ModuleValue,
    index: i64,
) -> Result<ReducibilityVerdict, MonodromyError> {
    if !is_prime(n) {
        return Err(MonodromyError::NonPrimeDegree(n));
    }
    let threshold = n as f64 * zjuzin_r0();
    Ok(
        if annulus_module.exceeds_value(threshold) && index.rem_euclid(n as i64) == 0 {
            ReducibilityVerdict::GuaranteedReducible
        } else {
            ReducibilityVerdict::Inconclusive
        },
    )
}

/// `π / (2 log((3 + √5)/2))`, the module of the class of `σ_1 σ_2⁻¹`.
pub fn solvability_threshold() -> f64 {
    PI / (2.0 * min_entropy3())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolvabilityVerdict {
    SolvableOverA,
    Inconclusive,
}

impl SolvabilityVerdict {
    /// The verdict is only meaningful under hypotheses the caller asserts.
    pub const CONDITION: &'static str =
        "conditional on: irreducible separable algebroid function of degree 3 on a torus with a \
         disc removed, annulus sharing the removed disc's boundary circle";
}

/// Degree-3 solvability over an annulus with module strictly above
/// [`solvability_threshold`].
pub fn lemma2_solvability(annulus_module: ModuleValue) -> SolvabilityVerdict {
    if annulus_module.exceeds_value(solvability_threshold()) {
        SolvabilityVerdict::SolvableOverA
    } else {
        SolvabilityVerdict::Inconclusive
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::thurston::conj_equal3;
    use alloc::vec;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn golden_loops() {
        let r = monodromy(
            PolynomialLoop::from_fn(2, 64, |t| vec![-Complex64::from_polar(1.0, t), c(0.0, 0.0)]).unwrap(),
        )
        .unwrap();
        assert_eq!(r.braid.letters(), &[1]);
        assert_eq!(r.discriminant_index, 1);
        assert_eq!(r.permutation.images(), &[1, 0]);
        assert!(r.is_irreducible_class());

        let r = monodromy(PolynomialLoop::from_fn(2, 16, |_| vec![c(-1.0, 0.0), c(0.0, 0.0)]).unwrap()).unwrap();
        assert!(r.braid.is_empty());
        assert_eq!(r.discriminant_index, 0);
        assert!(!r.is_irreducible_class());

        let r = monodromy(
            PolynomialLoop::from_fn(3, 64, |t| {
                vec![-Complex64::from_polar(1.0, t), c(0.0, 0.0), c(0.0, 0.0)]
            })
            .unwrap(),
        )
        .unwrap();
        assert_eq!(r.discriminant_index, 2);
        assert!(r.permutation.is_full_cycle());
        assert!(conj_equal3(&r.braid, &BraidWord::parse("1 2", 3).unwrap()).unwrap());
        // the basepoint roots e^{±2πi/3} share a real part
        assert!(r.projection_angle > 0.0);
    }

    #[test]
    fn irreducibility_flags() {
        use crate::braid::Permutation;
        let mk = |images: Vec<usize>| MonodromyResult {
            braid: BraidWord::identity(images.len()).unwrap(),
            permutation: Permutation::from_images(images).unwrap(),
            discriminant_index: 0,
            projection_angle: 0.0,
        };
        assert!(is_irreducible_class(&mk(vec![1, 2, 0])));
        assert!(!is_irreducible_class(&mk(vec![0, 1, 2])));
        assert!(!is_irreducible_class(&mk(vec![1, 0, 2])));
    }

    #[test]
    fn zjuzin_table() {
        let f = ModuleValue::Finite;
        assert_eq!(
            zjuzin_reducibility(3, f(28.0), 3).unwrap(),
            ReducibilityVerdict::GuaranteedReducible
        );
        assert_eq!(zjuzin_reducibility(3, f(10.0), 3).unwrap(), ReducibilityVerdict::Inconclusive);
        assert_eq!(zjuzin_reducibility(3, f(100.0), 1).unwrap(), ReducibilityVerdict::Inconclusive);
        assert_eq!(
            zjuzin_reducibility(3, ModuleValue::Infinite, -6).unwrap(),
            ReducibilityVerdict::GuaranteedReducible
        );
        assert_eq!(zjuzin_reducibility(4, f(100.0), 4), Err(MonodromyError::NonPrimeDegree(4)));
        assert!((3.0 * zjuzin_r0() - 27.194_160_850_963).abs() < 1e-9);
    }

    #[test]
    fn solvability_threshold_is_strict() {
        let th = solvability_threshold();
        assert_eq!(lemma2_solvability(ModuleValue::Finite(1.7)), SolvabilityVerdict::SolvableOverA);
        assert_eq!(lemma2_solvability(ModuleValue::Finite(1.0)), SolvabilityVerdict::Inconclusive);
        assert_eq!(lemma2_solvability(ModuleValue::Finite(th)), SolvabilityVerdict::Inconclusive);
        assert_eq!(lemma2_solvability(ModuleValue::Infinite), SolvabilityVerdict::SolvableOverA);
    }

    #[test]
    fn primes() {
        let ps: Vec<usize> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, [2, 3, 5, 7, 11, 13, 17, 19]);
    }
}

//! Thurston type, topological entropy and conjugacy for 3-braids, plus
//! Burau lower bounds on entropy for any strand count.
//!
//! For `n = 3` everything goes through the `PSL(2, Z)` image: elliptic and
//! central images are periodic, parabolic images are reducible (the pieces
//! are 2-braids, so the entropy is 0) and hyperbolic images are pseudo-Anosov
//! with dilatation equal to the larger eigenvalue of the image.

use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Float, Signed, ToPrimitive};

use crate::braid::{BraidError, BraidWord};
use crate::conformal::ModuleValue;
use crate::linalg::reduced_burau;
use crate::psl2z::{psl2z_image, Psl2zClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThurstonType {
    Periodic,
    Reducible,
    PseudoAnosov,
}

impl fmt::Display for ThurstonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThurstonType::Periodic => "Periodic",
            ThurstonType::Reducible => "Reducible",
            ThurstonType::PseudoAnosov => "PseudoAnosov",
        })
    }
}

/// Topological entropy of a braid class: a finite value `>= 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Entropy(f64);

impl Entropy {
    pub const ZERO: Entropy = Entropy(0.0);

    /// `None` for negative, NaN or infinite values.
    pub fn new(value: f64) -> Option<Self> {
        (value.is_finite() && value >= 0.0).then_some(Entropy(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    /// `π / (2h)`, or `+∞` for `h = 0`.
    pub fn conformal_module(self) -> ModuleValue {
        if self.is_zero() {
            ModuleValue::Infinite
        } else {
            ModuleValue::Finite(PI / (2.0 * self.0))
        }
    }
}

/// `log((3 + √5) / 2)`, the least positive entropy of a 3-braid.
pub fn min_entropy3() -> f64 {
    ((3.0 + 5.0.sqrt()) / 2.0).ln()
}

/// Type, entropy and conformal module of a 3-braid conjugacy class.
#[derive(Debug, Clone, PartialEq)]
pub struct ThurstonReport {
    pub kind: ThurstonType,
    pub entropy: Entropy,
    pub module: ModuleValue,
}

/// Conjugacy invariant of a 3-braid: equal keys iff conjugate in `B_3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjugacyKey3 {
    pub exponent_sum: i64,
    pub psl2z_class: Psl2zClass,
}

pub fn classify3(w: &BraidWord) -> Result<ThurstonType, BraidError> {
    let m = psl2z_image(w)?;
    if m.is_identity() {
        return Ok(ThurstonType::Periodic);
    }
    let t = m.trace().abs();
    let two = BigInt::from(2);
    Ok(if t < two {
        ThurstonType::Periodic
    } else if t == two {
        ThurstonType::Reducible
    } else {
        ThurstonType::PseudoAnosov
    })
}

pub fn entropy3(w: &BraidWord) -> Result<Entropy, BraidError> {
    let m = psl2z_image(w)?;
    let t = m.trace().abs();
    if t <= BigInt::from(2) {
        return Ok(Entropy::ZERO);
    }
    Ok(Entropy(log_dilatation(&t)))
}

/// `log λ` with `λ = (t + √(t² - 4)) / 2`, for integer `t > 2` of any size.
fn log_dilatation(t: &BigInt) -> f64 {
    let bits = t.bits();
    if bits < 900 {
        let tf = t.to_f64().expect("finite");
        // λ = (t + √(t²-4))/2 = t · (1 + √(1 - 4/t²)) / 2
        let ratio = (1.0 + (1.0 - 4.0 / (tf * tf)).sqrt()) / 2.0;
        tf.ln() + ratio.ln()
    } else {
        // λ = t up to a relative error far below f64 resolution
        let shift = bits - 60;
        let top = (t >> shift).to_f64().expect("60-bit value");
        top.ln() + shift as f64 * LN_2
    }
}

/// `max_t log⁺ ρ(Burau_t(w))` over unit-circle parameters; a lower bound for
/// the entropy of the braid class. Defaults to `t = -1` when no samples are
/// given.
pub fn entropy_lower_bound_burau(w: &BraidWord, samples: &[Complex64]) -> f64 {
    let default = [Complex64::new(-1.0, 0.0)];
    let samples = if samples.is_empty() { &default[..] } else { samples };
    samples
        .iter()
        .map(|&t| reduced_burau(w, t).spectral_radius().ln().max(0.0))
        .fold(0.0, f64::max)
}

/// Unit-circle parameters `e^{iθ}` for the given angles.
pub fn unit_samples(angles: &[f64]) -> Vec<Complex64> {
    angles.iter().map(|&a| Complex64::from_polar(1.0, a)).collect()
}

/// `(log 2) / (4n)`, a floor for the least positive entropy on `n` strands.
pub fn penner_floor(n: usize) -> Result<f64, BraidError> {
    if n < 3 {
        return Err(BraidError::WrongStrandCount {
            expected: 3,
            actual: n,
        });
    }
    Ok(LN_2 / (4.0 * n as f64))
}

pub fn conjugacy_key3(w: &BraidWord) -> Result<ConjugacyKey3, BraidError> {
    let m = psl2z_image(w)?;
    Ok(ConjugacyKey3 {
        exponent_sum: w.exponent_sum(),
        psl2z_class: Psl2zClass::of(&m),
    })
}

/// `w1` and `w2` are conjugate in `B_3`.
pub fn conj_equal3(w1: &BraidWord, w2: &BraidWord) -> Result<bool, BraidError> {
    Ok(conjugacy_key3(w1)? == conjugacy_key3(w2)?)
}

pub fn thurston_report(w: &BraidWord) -> Result<ThurstonReport, BraidError> {
    let kind = classify3(w)?;
    let entropy = entropy3(w)?;
    Ok(ThurstonReport {
        kind,
        entropy,
        module: entropy.conformal_module(),
    })
}

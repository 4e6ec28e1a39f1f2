//! Conformal modules of annuli and of 3-braid conjugacy classes.
//!
//! For a 3-braid class the module is `M = π / (2h)` with `h` its entropy;
//! periodic and reducible classes have `M = +∞`. The module of the class of
//! `b^l` is `M / |l|`.

use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;
use thiserror::Error;

use crate::braid::{BraidError, BraidWord};
use crate::thurston::{entropy3, entropy_lower_bound_burau};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConformalError {
    #[error("annulus needs 0 <= r < R, got r = {inner}, R = {outer}")]
    InvalidAnnulus { inner: f64, outer: f64 },
    #[error("module value must be positive, got {0}")]
    NonPositiveModule(f64),
    #[error("power must be nonzero")]
    ZeroPower,
    #[error("exact module needs 3 strands, got {strands}; Burau upper bound is {upper_bound}")]
    InexactStrandCount {
        strands: usize,
        upper_bound: ModuleValue,
    },
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// An extended positive real: a finite module or `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModuleValue {
    Finite(f64),
    Infinite,
}

impl ModuleValue {
    pub fn new(value: f64) -> Result<Self, ConformalError> {
        if value.is_infinite() && value > 0.0 {
            Ok(ModuleValue::Infinite)
        } else if value.is_finite() && value > 0.0 {
            Ok(ModuleValue::Finite(value))
        } else {
            Err(ConformalError::NonPositiveModule(value))
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ModuleValue::Finite(v) => Some(v),
            ModuleValue::Infinite => None,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.finite().unwrap_or(f64::INFINITY)
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ModuleValue::Infinite)
    }

    /// Strict comparison `self > other` on the extended reals.
    pub fn exceeds(self, other: ModuleValue) -> bool {
        match (self, other) {
            (ModuleValue::Infinite, ModuleValue::Finite(_)) => true,
            (ModuleValue::Finite(a), ModuleValue::Finite(b)) => a > b,
            _ => false,
        }
    }

    pub fn exceeds_value(self, threshold: f64) -> bool {
        self.exceeds(ModuleValue::Finite(threshold))
    }
}

impl fmt::Display for ModuleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleValue::Finite(v) => write!(f, "{v}"),
            ModuleValue::Infinite => f.write_str("inf"),
        }
    }
}

/// `{ r < |z| < R }` with `0 <= r < R <= ∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    inner: f64,
    outer: f64,
}

impl Annulus {
    pub fn new(inner: f64, outer: f64) -> Result<Self, ConformalError> {
        if !(inner >= 0.0 && inner.is_finite() && outer > inner) {
            return Err(ConformalError::InvalidAnnulus { inner, outer });
        }
        Ok(Self { inner, outer })
    }

    pub fn inner(&self) -> f64 {
        self.inner
    }

    pub fn outer(&self) -> f64 {
        self.outer
    }

    /// `(1/2π) log(R/r)`, infinite for a punctured disc or a plane.
    pub fn module(&self) -> ModuleValue {
        if self.inner == 0.0 || self.outer.is_infinite() {
            ModuleValue::Infinite
        } else {
            ModuleValue::Finite(Float::ln(self.outer / self.inner) / (2.0 * PI))
        }
    }
}

pub fn annulus_module(a: &Annulus) -> ModuleValue {
    a.module()
}

/// Exact `M` for 3-braids. Other strand counts fail with a clearly labeled
/// upper bound `π / (2 h_lower)` from the Burau entropy bound at `t = -1`.
pub fn conformal_module_of_class(w: &BraidWord) -> Result<ModuleValue, ConformalError> {
    if w.strands() == 3 {
        return Ok(entropy3(w)?.conformal_module());
    }
    Err(ConformalError::InexactStrandCount {
        strands: w.strands(),
        upper_bound: module_upper_bound(w, &[]),
    })
}

/// Upper bound for `M` of any braid class from Burau lower bounds on entropy.
pub fn module_upper_bound(w: &BraidWord, samples: &[Complex64]) -> ModuleValue {
    let h = entropy_lower_bound_burau(w, samples);
    if h > 0.0 {
        ModuleValue::Finite(PI / (2.0 * h))
    } else {
        ModuleValue::Infinite
    }
}

/// Module of the class of `b^l` given the module of the class of `b`.
pub fn module_of_power(m: ModuleValue, l: i64) -> Result<ModuleValue, ConformalError> {
    if l == 0 {
        return Err(ConformalError::ZeroPower);
    }
    Ok(match m {
        ModuleValue::Finite(v) => ModuleValue::Finite(v / l.unsigned_abs() as f64),
        ModuleValue::Infinite => ModuleValue::Infinite,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionVerdict {
    /// No algebroid function over an annulus of this module induces the class.
    AlgebroidExcluded,
    NotExcluded,
}

/// An algebroid function on an annulus `A` inducing `b̂` forces
/// `m(A) <= M(b̂)`; a strictly larger annulus module excludes it.
pub fn lemma1_obstruction(
    annulus_module: ModuleValue,
    w: &BraidWord,
) -> Result<ObstructionVerdict, ConformalError> {
    let class_module = conformal_module_of_class(w)?;
    Ok(if annulus_module.exceeds(class_module) {
        ObstructionVerdict::AlgebroidExcluded
    } else {
        ObstructionVerdict::NotExcluded
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        BraidWord::parse(text, 3).unwrap()
    }

    #[test]
    fn annulus_examples() {
        let a = Annulus::new(1.0, (2.0 * PI).exp()).unwrap();
        assert!((a.module().finite().unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(Annulus::new(0.0, 1.0).unwrap().module(), ModuleValue::Infinite);
        assert_eq!(
            Annulus::new(1.0, f64::INFINITY).unwrap().module(),
            ModuleValue::Infinite
        );
        let m = annulus_module(&Annulus::new(1.0, 2.0).unwrap()).finite().unwrap();
        assert!((m - 0.110_317_800_076_325_8).abs() < 1e-12);
        assert!(Annulus::new(2.0, 2.0).is_err());
        assert!(Annulus::new(-1.0, 2.0).is_err());
    }

    #[test]
    fn class_module_examples() {
        let m = conformal_module_of_class(&w("1 -2")).unwrap().finite().unwrap();
        assert!((m - 1.632_125_651_3).abs() < 1e-9);
        assert_eq!(conformal_module_of_class(&w("1 2")).unwrap(), ModuleValue::Infinite);
        let m3 = conformal_module_of_class(&w("1 -2").power(3)).unwrap().finite().unwrap();
        assert!((m3 - m / 3.0).abs() < 1e-12);
        let err = conformal_module_of_class(&BraidWord::parse("1 -2 3", 4).unwrap()).unwrap_err();
        assert!(matches!(err, ConformalError::InexactStrandCount { strands: 4, .. }));
    }

    #[test]
    fn power_rule() {
        let m = module_of_power(ModuleValue::Finite(1.6321), 2).unwrap();
        assert!((m.finite().unwrap() - 0.81605).abs() < 1e-12);
        assert_eq!(module_of_power(ModuleValue::Infinite, 5).unwrap(), ModuleValue::Infinite);
        assert_eq!(
            module_of_power(ModuleValue::Finite(2.5), -1).unwrap(),
            ModuleValue::Finite(2.5)
        );
        assert_eq!(module_of_power(ModuleValue::Finite(2.5), 0), Err(ConformalError::ZeroPower));
    }

    #[test]
    fn obstruction_examples() {
        let pa = w("1 -2");
        assert_eq!(
            lemma1_obstruction(ModuleValue::Finite(2.0), &pa).unwrap(),
            ObstructionVerdict::AlgebroidExcluded
        );
        assert_eq!(
            lemma1_obstruction(ModuleValue::Finite(1.0), &pa).unwrap(),
            ObstructionVerdict::NotExcluded
        );
        assert_eq!(
            lemma1_obstruction(ModuleValue::Finite(1e6), &w("1 2")).unwrap(),
            ObstructionVerdict::NotExcluded
        );
        assert_eq!(
            lemma1_obstruction(ModuleValue::Infinite, &pa).unwrap(),
            ObstructionVerdict::AlgebroidExcluded
        );
    }

    #[test]
    fn module_value_validation() {
        assert!(ModuleValue::new(0.0).is_err());
        assert!(ModuleValue::new(f64::NAN).is_err());
        assert_eq!(ModuleValue::new(f64::INFINITY).unwrap(), ModuleValue::Infinite);
    }
}

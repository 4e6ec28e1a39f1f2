//! Homomorphisms from the free group `<a, b>` (the fundamental group of a
//! torus with a hole) into `B_3`, and the necessary condition for their
//! classes to contain algebroid representatives under every complex structure:
//! the image lies in `<σ_1 σ_2>` and is not contained in `<(σ_1 σ_2)^3>`.
//!
//! `(σ_1 σ_2)^3` is the full twist `Δ²`; it is called the Garside element
//! below.

use num_integer::Integer;

use crate::braid::{BraidError, BraidWord};
use crate::garside::in_cyclic_subgroup;

/// The pair `(φ(a), φ(b))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeHomB3 {
    image_a: BraidWord,
    image_b: BraidWord,
}

impl FreeHomB3 {
    pub fn new(image_a: BraidWord, image_b: BraidWord) -> Result<Self, BraidError> {
        image_a.require_strands(3)?;
        image_b.require_strands(3)?;
        Ok(Self { image_a, image_b })
    }

    pub fn image_a(&self) -> &BraidWord {
        &self.image_a
    }

    pub fn image_b(&self) -> &BraidWord {
        &self.image_b
    }

    pub fn swapped(&self) -> Self {
        Self {
            image_a: self.image_b.clone(),
            image_b: self.image_a.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem3Verdict {
    /// `φ(a) = (σ_1σ_2)^{k_a}`, `φ(b) = (σ_1σ_2)^{k_b}` and the image holds an
    /// element that is not a power of the Garside element.
    SatisfiesNecessaryCondition { k_a: i64, k_b: i64 },
    /// The image of this generator is not a power of `σ_1 σ_2`.
    FailsSubgroup(Generator),
    /// Every element of the image is a power of `(σ_1 σ_2)^3`.
    FailsGarsideClause,
}

impl Theorem3Verdict {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, Theorem3Verdict::SatisfiesNecessaryCondition { .. })
    }
}

pub fn theorem3_check(hom: &FreeHomB3) -> Theorem3Verdict {
    let g = BraidWord::cycle_generator(3).expect("3 strands");
    let power_of = |w: &BraidWord| in_cyclic_subgroup(w, &g).expect("σ1σ2 has exponent sum 2");
    let Some(k_a) = power_of(&hom.image_a) else {
        return Theorem3Verdict::FailsSubgroup(Generator::A);
    };
    let Some(k_b) = power_of(&hom.image_b) else {
        return Theorem3Verdict::FailsSubgroup(Generator::B);
    };
    // the image is <(σ1σ2)^d>, d = gcd(k_a, k_b)
    let d = k_a.gcd(&k_b);
    if d == 0 || d % 3 == 0 {
        Theorem3Verdict::FailsGarsideClause
    } else {
        Theorem3Verdict::SatisfiesNecessaryCondition { k_a, k_b }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hom(a: &str, b: &str) -> FreeHomB3 {
        FreeHomB3::new(BraidWord::parse(a, 3).unwrap(), BraidWord::parse(b, 3).unwrap()).unwrap()
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(
            theorem3_check(&hom("1 2", "1 2 1 2")),
            Theorem3Verdict::SatisfiesNecessaryCondition { k_a: 1, k_b: 2 }
        );
        assert_eq!(
            theorem3_check(&hom("1", "2")),
            Theorem3Verdict::FailsSubgroup(Generator::A)
        );
        assert_eq!(
            theorem3_check(&hom("1 2 1 2 1 2", "1 2 1 2 1 2 1 2 1 2 1 2")),
            Theorem3Verdict::FailsGarsideClause
        );
    }

    #[test]
    fn trivial_and_mixed_cases() {
        assert_eq!(theorem3_check(&hom("", "")), Theorem3Verdict::FailsGarsideClause);
        assert_eq!(
            theorem3_check(&hom("", "-2 -1")),
            Theorem3Verdict::SatisfiesNecessaryCondition { k_a: 0, k_b: -1 }
        );
        assert_eq!(
            theorem3_check(&hom("1 2", "2 1")),
            Theorem3Verdict::FailsSubgroup(Generator::B)
        );
        // Δ² written differently: σ1σ2σ1 σ1σ2σ1
        assert_eq!(
            theorem3_check(&hom("1 2 1 1 2 1", "")),
            Theorem3Verdict::FailsGarsideClause
        );
        assert!(FreeHomB3::new(BraidWord::parse("1", 4).unwrap(), BraidWord::parse("", 3).unwrap()).is_err());
    }
}

//! Braid words in the Artin generators and their strand permutations.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count must be at least 2, got {0}")]
    TooFewStrands(usize),
    #[error("malformed token {0:?}: expected a nonzero integer")]
    MalformedToken(String),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("operation needs {expected} strands, got {actual}")]
    WrongStrandCount { expected: usize, actual: usize },
    #[error("cyclic membership is only decided for generators with nonzero exponent sum")]
    ZeroExponentGenerator,
}

/// A word in `σ_1 … σ_{n-1}` on `n` strands.
///
/// Letter `i > 0` is `σ_i`, letter `-i` is `σ_i⁻¹`. The empty word is the
/// identity. Words are stored as given; nothing is reduced on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx >= strands {
                return Err(BraidError::IndexOutOfRange {
                    index: l as i64,
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace-separated signed integers, e.g. `"1 -2"` for `σ_1 σ_2⁻¹`.
    pub fn parse(text: &str, strands: usize) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| BraidError::MalformedToken(tok.into()))?;
            if v == 0 {
                return Err(BraidError::MalformedToken(tok.into()));
            }
            if v.unsigned_abs() >= strands as u64 {
                return Err(BraidError::IndexOutOfRange { index: v, strands });
            }
            letters.push(v as i32);
        }
        Ok(Self { strands, letters })
    }

    /// `σ_1 σ_2 ⋯ σ_{n-1}`, the periodic braid whose `n`-th power is the full twist.
    pub fn cycle_generator(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, (1..strands as i32).collect())
    }

    /// The half twist `Δ` as a positive word.
    pub fn half_twist(strands: usize) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for k in (1..strands as i32).rev() {
            letters.extend(1..=k);
        }
        Self::new(strands, letters)
    }

    /// The full twist `Δ²`, generator of the center.
    pub fn full_twist(strands: usize) -> Result<Self, BraidError> {
        Ok(Self::half_twist(strands)?.power(2))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// True iff the braid lies in `[B_n, B_n]`, i.e. has exponent sum zero.
    pub fn in_commutator_subgroup(&self) -> bool {
        self.exponent_sum() == 0
    }

    /// Image in the symmetric group: `σ_{i_1} ⋯ σ_{i_k} ↦ s_{i_1} ∘ ⋯ ∘ s_{i_k}`.
    ///
    /// With this convention the map is a homomorphism and `images[q]` is the
    /// starting position of the strand that ends at position `q`.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        // right-multiplying by s_i swaps the values at positions i-1 and i
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            images.swap(i - 1, i);
        }
        Permutation { images }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// `l`-fold power; negative `l` powers the inverse.
    pub fn power(&self, l: i64) -> BraidWord {
        let base = if l < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * l.unsigned_abs() as usize);
        for _ in 0..l.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cyclic rotation of the letters by `k` places (a conjugate).
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub(crate) fn check_same(&self, other: &BraidWord) -> Result<(), BraidError> {
        if self.strands != other.strands {
            Err(BraidError::StrandMismatch(self.strands, other.strands))
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_strands(&self, n: usize) -> Result<(), BraidError> {
        if self.strands != n {
            Err(BraidError::WrongStrandCount {
                expected: n,
                actual: self.strands,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A bijection of `{0, …, n-1}` in one-line notation (0-based internally,
/// 1-based in `Display`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images; `None` unless bijective.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.len()];
        let mut lengths = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// True iff the permutation is a single cycle through all points.
    pub fn is_full_cycle(&self) -> bool {
        self.cycle_type() == [self.len()]
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("1 -2", 3).letters(), &[1, -2]);
        let id = w("", 4);
        assert!(id.is_empty());
        assert_eq!(id.strands(), 4);
        assert!(matches!(
            BraidWord::parse("3", 3),
            Err(BraidError::IndexOutOfRange { index: 3, strands: 3 })
        ));
        assert!(matches!(
            BraidWord::parse("1 x", 3),
            Err(BraidError::MalformedToken(_))
        ));
        assert!(matches!(
            BraidWord::parse("0", 3),
            Err(BraidError::MalformedToken(_))
        ));
        assert!(matches!(
            BraidWord::parse("", 1),
            Err(BraidError::TooFewStrands(1))
        ));
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("1 2 1 2 1 2", 3).exponent_sum(), 6);
        assert_eq!(w("1 -2", 3).exponent_sum(), 0);
        assert_eq!(w("1 2 1 -2 -1 -2", 3).exponent_sum(), 0);
        assert!(w("1 -2", 3).in_commutator_subgroup());
        assert!(!w("1 2", 3).in_commutator_subgroup());
    }

    #[test]
    fn permutations() {
        assert_eq!(w("1 2", 3).underlying_permutation().images(), &[1, 2, 0]);
        assert!(w("", 3).underlying_permutation().is_identity());
        assert!(w("1 1", 2).underlying_permutation().is_identity());
        assert!(w("1 2", 3).underlying_permutation().is_full_cycle());
        assert_eq!(w("1", 3).underlying_permutation().cycle_type(), [2, 1]);
    }

    #[test]
    fn group_operations() {
        assert!(w("1", 3).power(0).is_empty());
        assert_eq!(w("1 2", 3).inverse().letters(), &[-2, -1]);
        assert_eq!(w("1 2", 3).power(-2).letters(), &[-2, -1, -2, -1]);
        assert!(w("1", 3).concat(&w("1", 4)).is_err());
        assert_eq!(BraidWord::half_twist(3).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(BraidWord::half_twist(2).unwrap().letters(), &[1]);
        assert_eq!(w("1 -2 2", 3).to_string(), "1 -2 2");
    }
}

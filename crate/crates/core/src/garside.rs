//! Left-greedy Garside normal form `Δ^p · A_1 ⋯ A_k` and the word problem.
//!
//! Simple factors are positive permutation braids, each stored as its
//! permutation. A word is converted by rewriting `σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹)` and
//! pushing every `Δ⁻¹` to the front (conjugating by `Δ` flips `σ_i ↔ σ_{n-i}`),
//! then multiplying the simple factors in one at a time.

use alloc::vec::Vec;

use crate::braid::{BraidError, BraidWord, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Canonical length `k`, the number of non-Δ simple factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Rebuilds a braid word: `Δ^p` followed by a reduced word for each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = BraidWord::half_twist(n).expect("n >= 2");
        let mut letters: Vec<i32> = delta.power(self.delta_power).letters().to_vec();
        for f in &self.factors {
            letters.extend(reduced_word(f));
        }
        BraidWord::new(n, letters).expect("letters within range")
    }

    /// True iff every adjacent pair `(A, B)` satisfies `S(B) ⊆ F(A)` and no
    /// factor is trivial or equal to `Δ`.
    pub fn is_left_weighted(&self) -> bool {
        let n = self.strands;
        let delta = half_twist_perm(n);
        if self
            .factors
            .iter()
            .any(|f| f.is_identity() || *f == delta)
        {
            return false;
        }
        self.factors.windows(2).all(|pair| {
            (0..n - 1).all(|g| !is_left_descent(&pair[1], g) || is_right_descent(&pair[0], g))
        })
    }
}

/// Left normal form of `w`.
pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands();
    let delta = half_twist_perm(n);
    let letters = w.letters();

    // simple factors after all Δ⁻¹ have been moved to the front
    let mut simples = Vec::with_capacity(letters.len());
    let mut flip = false;
    let mut negatives = 0i64;
    for &l in letters.iter().rev() {
        let g = l.unsigned_abs() as usize - 1;
        let mut perm = transposition(n, g);
        if l < 0 {
            perm = delta.compose(&perm);
        }
        if flip {
            perm = conjugate_by_delta(&perm, &delta);
        }
        simples.push(perm);
        if l < 0 {
            flip = !flip;
            negatives += 1;
        }
    }
    simples.reverse();

    let mut nf = GarsideNormalForm {
        strands: n,
        delta_power: -negatives,
        factors: Vec::new(),
    };
    for s in simples {
        multiply_simple(&mut nf, s, &delta);
    }
    nf
}

/// `w1 = w2` in `B_n`.
pub fn words_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool, BraidError> {
    w1.check_same(w2)?;
    Ok(normal_form(w1) == normal_form(w2))
}

/// Returns `k` with `w = g^k` in `B_n`, or `None`.
///
/// Only generators with nonzero exponent sum are supported; the exponent sum
/// then pins the single candidate power.
pub fn in_cyclic_subgroup(w: &BraidWord, g: &BraidWord) -> Result<Option<i64>, BraidError> {
    w.check_same(g)?;
    let eg = g.exponent_sum();
    if eg == 0 {
        return Err(BraidError::ZeroExponentGenerator);
    }
    let ew = w.exponent_sum();
    if ew % eg != 0 {
        return Ok(None);
    }
    let k = ew / eg;
    Ok(words_equal(w, &g.power(k))?.then_some(k))
}

fn multiply_simple(nf: &mut GarsideNormalForm, s: Permutation, delta: &Permutation) {
    if s.is_identity() {
        return;
    }
    nf.factors.push(s);
    let mut j = nf.factors.len() - 1;
    while j > 0 {
        let (left, right) = nf.factors.split_at_mut(j);
        if !left_weight(&mut left[j - 1], &mut right[0]) {
            break;
        }
        j -= 1;
    }
    while nf.factors.last().is_some_and(Permutation::is_identity) {
        nf.factors.pop();
    }
    let leading = nf.factors.iter().take_while(|f| *f == delta).count();
    if leading > 0 {
        nf.factors.drain(..leading);
        nf.delta_power += leading as i64;
    }
}

/// Slides generators from the front of `b` to the back of `a` until
/// `S(b) ⊆ F(a)`. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut changed = false;
    loop {
        let Some(g) = (0..n - 1).find(|&g| is_left_descent(b, g) && !is_right_descent(a, g)) else {
            return changed;
        };
        *a = a.compose(&transposition(n, g));
        *b = transposition(n, g).compose(b);
        changed = true;
    }
}

fn transposition(n: usize, g: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.swap(g, g + 1);
    Permutation::from_images(images).expect("transposition")
}

pub(crate) fn half_twist_perm(n: usize) -> Permutation {
    Permutation::from_images((0..n).rev().collect()).expect("reversal")
}

fn conjugate_by_delta(p: &Permutation, delta: &Permutation) -> Permutation {
    delta.compose(p).compose(delta)
}

/// `g ∈ F(A)`: the braid ends with `σ_{g+1}`.
fn is_right_descent(p: &Permutation, g: usize) -> bool {
    p.apply(g) > p.apply(g + 1)
}

/// `g ∈ S(A)`: the braid starts with `σ_{g+1}`.
fn is_left_descent(p: &Permutation, g: usize) -> bool {
    let inv = p.inverse();
    inv.apply(g) > inv.apply(g + 1)
}

/// Positive reduced word (1-based letters) for a permutation braid.
pub(crate) fn reduced_word(p: &Permutation) -> Vec<i32> {
    let n = p.len();
    let mut current = p.clone();
    let mut rev = Vec::with_capacity(current.length());
    while let Some(g) = (0..n.saturating_sub(1)).find(|&g| is_right_descent(&current, g)) {
        current = current.compose(&transposition(n, g));
        rev.push(g as i32 + 1);
    }
    rev.reverse();
    rev
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&w("1 -1", 3));
        assert_eq!((nf.delta_power(), nf.canonical_length()), (0, 0));
        let nf = normal_form(&w("-1", 2));
        assert_eq!((nf.delta_power(), nf.canonical_length()), (-1, 0));
        let nf = normal_form(&w("1 2 1 2 1 2", 3));
        assert_eq!((nf.delta_power(), nf.canonical_length()), (2, 0));
    }

    #[test]
    fn equality_examples() {
        assert!(words_equal(&w("1 2 1", 3), &w("2 1 2", 3)).unwrap());
        assert!(!words_equal(&w("1", 3), &w("2", 3)).unwrap());
        let d2 = BraidWord::full_twist(3).unwrap();
        let s1 = w("1", 3);
        assert!(words_equal(&d2.concat(&s1).unwrap(), &s1.concat(&d2).unwrap()).unwrap());
        assert!(words_equal(&w("1", 3), &w("1", 4)).is_err());
    }

    #[test]
    fn far_commutation_and_inverse_positions() {
        assert!(words_equal(&w("1 3", 4), &w("3 1", 4)).unwrap());
        assert!(!words_equal(&w("1 2", 4), &w("2 1", 4)).unwrap());
        assert!(words_equal(&w("-1 2 1", 3), &w("2 1 -2", 3)).unwrap());
    }

    #[test]
    fn reduced_word_of_delta() {
        let d = half_twist_perm(4);
        assert_eq!(reduced_word(&d).len(), 6);
        let rebuilt = BraidWord::new(4, reduced_word(&d)).unwrap();
        assert_eq!(rebuilt.underlying_permutation(), d);
    }

    #[test]
    fn cyclic_membership() {
        let g = w("1 2", 3);
        assert_eq!(in_cyclic_subgroup(&g.power(4), &g).unwrap(), Some(4));
        assert_eq!(in_cyclic_subgroup(&w("1", 3), &g).unwrap(), None);
        let d2 = BraidWord::full_twist(3).unwrap();
        assert_eq!(in_cyclic_subgroup(&d2, &g).unwrap(), Some(3));
        assert_eq!(in_cyclic_subgroup(&w("2 1", 3), &g).unwrap(), None);
        assert_eq!(
            in_cyclic_subgroup(&g, &w("1 -2", 3)),
            Err(BraidError::ZeroExponentGenerator)
        );
    }

    #[test]
    fn normal_forms_are_left_weighted_and_idempotent() {
        for text in ["1 2 -1 2 2 -1", "-2 -1 -2 1 1 2", "1 -2 1 -2 1 -2", "2 2 2 1 -1 1"] {
            let nf = normal_form(&w(text, 3));
            assert!(nf.is_left_weighted(), "{text}");
            assert_eq!(normal_form(&nf.to_word()), nf);
        }
        let nf = normal_form(&w("1 -3 2 -1 3 3 -2 1", 4));
        assert!(nf.is_left_weighted());
        assert_eq!(normal_form(&nf.to_word()), nf);
    }
}

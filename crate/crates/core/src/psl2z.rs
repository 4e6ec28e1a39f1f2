//! `PSL(2, Z)` images of 3-braids and canonical conjugacy classes.
//!
//! `σ_1 ↦ [[1,1],[0,1]]`, `σ_2 ↦ [[1,0],[-1,1]]` is the reduced Burau
//! representation at `t = -1`; its kernel on `B_3` modulo sign is the center
//! `<Δ²>`. Entries are arbitrary-precision integers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::braid::{BraidError, BraidWord};

/// An integer matrix of determinant 1 standing for `{±M}`.
///
/// Always sign-normalized: the first nonzero entry of the top row is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Psl2zImage {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Psl2zImage {
    pub fn identity() -> Self {
        Self::from_entries(1, 0, 0, 1).expect("det 1")
    }

    /// `None` unless `ad - bc = 1`.
    pub fn from_entries(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Option<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if &a * &d - &b * &c != BigInt::one() {
            return None;
        }
        Some(Self { a, b, c, d }.normalized())
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
        .normalized()
    }

    fn normalized(self) -> Self {
        let lead = if self.a.is_zero() { &self.b } else { &self.a };
        if lead.is_negative() {
            Self {
                a: -self.a,
                b: -self.b,
                c: -self.c,
                d: -self.d,
            }
        } else {
            self
        }
    }

    fn negated(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// Representative with nonnegative trace (used for classification).
    fn positive_trace(&self) -> Self {
        if self.trace().is_negative() {
            self.negated()
        } else {
            self.clone()
        }
    }

    fn generator(letter: i32) -> Self {
        let m = match letter {
            1 => (1, 1, 0, 1),
            -1 => (1, -1, 0, 1),
            2 => (1, 0, -1, 1),
            -2 => (1, 0, 1, 1),
            _ => unreachable!("3-strand letter"),
        };
        Self::from_entries(m.0, m.1, m.2, m.3).expect("det 1")
    }
}

impl Mul for &Psl2zImage {
    type Output = Psl2zImage;

    fn mul(self, rhs: &Psl2zImage) -> Psl2zImage {
        Psl2zImage {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
        .normalized()
    }
}

/// Image of a 3-braid in `PSL(2, Z)`.
pub fn psl2z_image(w: &BraidWord) -> Result<Psl2zImage, BraidError> {
    w.require_strands(3)?;
    let gens: [Psl2zImage; 4] = [-2, -1, 1, 2].map(Psl2zImage::generator);
    let pick = |l: i32| match l {
        -2 => &gens[0],
        -1 => &gens[1],
        1 => &gens[2],
        _ => &gens[3],
    };
    Ok(w
        .letters()
        .iter()
        .fold(Psl2zImage::identity(), |acc, &l| &acc * pick(l)))
}

/// Canonical form of a conjugacy class in `PSL(2, Z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Psl2zClass {
    Identity,
    /// Order 2, the class of `[[0,-1],[1,0]]`.
    Order2,
    /// Order 3; the flag is the sign of the lower-left entry of the
    /// trace-1 representative, which separates the two rotation directions.
    Order3 { lower_left_positive: bool },
    /// Conjugate to `[[1,k],[0,1]]`, `k ≠ 0`.
    Parabolic { k: BigInt },
    /// Trace (made positive) plus the minimal rotation of the period of the
    /// minus continued fraction of the attracting fixed point.
    Hyperbolic { trace: BigInt, period: Vec<BigInt> },
}

impl Psl2zClass {
    pub fn of(m: &Psl2zImage) -> Self {
        if m.is_identity() {
            return Psl2zClass::Identity;
        }
        let m = m.positive_trace();
        let t = m.trace();
        let two = BigInt::from(2);
        if t.is_zero() {
            Psl2zClass::Order2
        } else if t.is_one() {
            Psl2zClass::Order3 {
                lower_left_positive: m.c.is_positive(),
            }
        } else if t == two {
            let g = m
                .b
                .gcd(&m.c)
                .gcd(&(&m.a - BigInt::one()))
                .gcd(&(&m.d - BigInt::one()));
            let k = if !m.b.is_zero() {
                if m.b.is_positive() { g } else { -g }
            } else if m.c.is_negative() {
                g
            } else {
                -g
            };
            Psl2zClass::Parabolic { k }
        } else {
            let period = hyperbolic_period(&m);
            Psl2zClass::Hyperbolic { trace: t, period }
        }
    }
}

/// Minus continued fraction `x = b_0 - 1/x_1`, `b = ⌊x⌋ + 1`, of the attracting
/// fixed point `(a - d + √D) / 2c`, `D = t² - 4`, run until the surd state
/// repeats. Every step is a conjugation by `[[0,1],[-1,b]] ∈ SL(2, Z)`, so the
/// cycle up to rotation is a conjugacy invariant.
fn hyperbolic_period(m: &Psl2zImage) -> Vec<BigInt> {
    let t = m.trace();
    let disc = &t * &t - BigInt::from(4);
    let root = disc.sqrt();
    let mut p = &m.a - &m.d;
    let mut q = BigInt::from(2) * &m.c;
    let mut seen: BTreeMap<(BigInt, BigInt), usize> = BTreeMap::new();
    let mut digits = Vec::new();
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let cycle = digits.split_off(start);
            return minimal_rotation(cycle);
        }
        seen.insert((p.clone(), q.clone()), digits.len());
        let b = floor_surd(&p, &root, &q) + BigInt::one();
        let p1 = &b * &q - &p;
        let q1 = (&p1 * &p1 - &disc) / &q;
        digits.push(b);
        p = p1;
        q = q1;
    }
}

/// `⌊(p + √D) / q⌋` for non-square `D`, given `root = ⌊√D⌋`.
fn floor_surd(p: &BigInt, root: &BigInt, q: &BigInt) -> BigInt {
    if q.is_positive() {
        (p + root).div_floor(q)
    } else {
        let qa = -q;
        -((p + root).div_floor(&qa) + BigInt::one())
    }
}

fn minimal_rotation(cycle: Vec<BigInt>) -> Vec<BigInt> {
    let n = cycle.len();
    (0..n)
        .map(|s| {
            let mut r = cycle.clone();
            r.rotate_left(s);
            r
        })
        .min()
        .unwrap_or(cycle)
}

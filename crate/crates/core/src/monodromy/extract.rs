//! Reading a braid word off a root track.
//!
//! Strands are projected onto a direction `e^{iε}` (the real axis for
//! `ε = 0`) and moved linearly between grid points. Positions are numbered
//! by increasing projection. When the strands in positions `i, i+1` swap,
//! `σ_i` is emitted if the strand with the smaller transverse coordinate
//! moves to the larger projection (a counterclockwise half twist), and
//! `σ_i⁻¹` otherwise.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::track::RootTrack;
use super::MonodromyError;
use crate::braid::{BraidWord, Permutation};

/// Projection angles tried in order.
pub const PROJECTION_PROBES: [f64; 4] = [0.0, 1e-3, 2e-3, 3e-3];
/// Ties are projection differences below this fraction of the track diameter.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct MonodromyResult {
    pub braid: BraidWord,
    pub permutation: Permutation,
    pub discriminant_index: i64,
    /// Projection angle that produced a tie-free reading.
    pub projection_angle: f64,
}

impl MonodromyResult {
    /// Necessary condition for an irreducible quasipolynomial: the strands
    /// are permuted in a single `n`-cycle.
    pub fn is_irreducible_class(&self) -> bool {
        is_irreducible_class(self)
    }
}

pub fn is_irreducible_class(result: &MonodromyResult) -> bool {
    result.permutation.is_full_cycle()
}

pub fn extract_braid(track: &RootTrack) -> Result<MonodromyResult, MonodromyError> {
    let mut last = None;
    for &eps in &PROJECTION_PROBES {
        match read_braid(track, eps) {
            Ok((braid, permutation)) => {
                let result = MonodromyResult {
                    braid,
                    permutation,
                    discriminant_index: track.discriminant_index(),
                    projection_angle: eps,
                };
                cross_check(&result)?;
                return Ok(result);
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or(MonodromyError::ProjectionDegenerate))
}

fn cross_check(r: &MonodromyResult) -> Result<(), MonodromyError> {
    let exponent_sum = r.braid.exponent_sum();
    if exponent_sum != r.discriminant_index {
        return Err(MonodromyError::CrossCheckFailed {
            exponent_sum,
            discriminant_index: r.discriminant_index,
        });
    }
    if r.braid.underlying_permutation() != r.permutation {
        return Err(MonodromyError::PermutationMismatch);
    }
    Ok(())
}

/// Strand permutation of the track read in the frame rotated by `eps`:
/// `images[q]` is the starting position of the strand ending at position `q`.
pub fn track_permutation(track: &RootTrack, eps: f64) -> Permutation {
    let rot = Complex64::from_polar(1.0, -eps);
    let order_at = |pts: &[Complex64]| {
        let mut idx: Vec<usize> = (0..pts.len()).collect();
        idx.sort_by(|&a, &b| (pts[a] * rot).re.partial_cmp(&(pts[b] * rot).re).expect("finite"));
        idx
    };
    let start = order_at(&track.points()[0]);
    let mut start_pos = alloc::vec![0; start.len()];
    for (p, &label) in start.iter().enumerate() {
        start_pos[label] = p;
    }
    let end = order_at(track.points().last().expect("nonempty"));
    Permutation::from_images(end.iter().map(|&k| start_pos[k]).collect()).expect("bijection")
}

struct Crossing {
    time: f64,
    left: usize,
    right: usize,
}

fn read_braid(track: &RootTrack, eps: f64) -> Result<(BraidWord, Permutation), MonodromyError> {
    let n = track.degree();
    let rot = Complex64::from_polar(1.0, -eps);
    let frames: Vec<Vec<Complex64>> = track
        .points()
        .iter()
        .map(|p| p.iter().map(|z| z * rot).collect())
        .collect();

    let (mut lo, mut hi) = (Complex64::new(f64::INFINITY, f64::INFINITY), Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
    for z in frames.iter().flatten() {
        lo = Complex64::new(lo.re.min(z.re), lo.im.min(z.im));
        hi = Complex64::new(hi.re.max(z.re), hi.im.max(z.im));
    }
    let diameter = (hi - lo).norm().max(f64::MIN_POSITIVE);
    let tie = TIE_TOLERANCE * diameter;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| frames[0][a].re.partial_cmp(&frames[0][b].re).expect("finite"));
    let start_order = order.clone();
    let mut letters = Vec::new();

    for g in 0..frames.len() - 1 {
        let (p0, p1) = (&frames[g], &frames[g + 1]);
        if has_tie(p1, tie) || has_tie(p0, tie) {
            return Err(MonodromyError::ProjectionDegenerate);
        }
        let mut events = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let d0 = p0[a].re - p0[b].re;
                let d1 = p1[a].re - p1[b].re;
                if (d0 < 0.0) != (d1 < 0.0) {
                    let time = d0 / (d0 - d1);
                    let (left, right) = if d0 < 0.0 { (a, b) } else { (b, a) };
                    events.push(Crossing { time, left, right });
                }
            }
        }
        events.sort_by(|x, y| x.time.partial_cmp(&y.time).expect("finite"));
        for pair in events.windows(2) {
            let shares = [pair[0].left, pair[0].right]
                .iter()
                .any(|s| *s == pair[1].left || *s == pair[1].right);
            if shares && (pair[1].time - pair[0].time).abs() < 1e-12 {
                return Err(MonodromyError::ProjectionDegenerate);
            }
        }
        for ev in &events {
            let pos = order
                .iter()
                .position(|&s| s == ev.left)
                .expect("strand present");
            if pos + 1 >= n || order[pos + 1] != ev.right {
                return Err(MonodromyError::ProjectionDegenerate);
            }
            let at = |k: usize| p0[k] + (p1[k] - p0[k]) * ev.time;
            let (yl, yr) = (at(ev.left).im, at(ev.right).im);
            if (yl - yr).abs() < tie {
                return Err(MonodromyError::ProjectionDegenerate);
            }
            let gen = pos as i32 + 1;
            letters.push(if yl < yr { gen } else { -gen });
            order.swap(pos, pos + 1);
        }
    }

    let mut start_pos = alloc::vec![0; n];
    for (p, &label) in start_order.iter().enumerate() {
        start_pos[label] = p;
    }
    let perm = Permutation::from_images(order.iter().map(|&label| start_pos[label]).collect())
        .expect("bijection");
    let braid = BraidWord::new(n, letters).expect("letters in range");
    Ok((braid, perm))
}

fn has_tie(points: &[Complex64], tie: f64) -> bool {
    let mut xs: Vec<f64> = points.iter().map(|z| z.re).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    xs.windows(2).any(|w| w[1] - w[0] < tie)
}

//! Root tracking along the interpolated coefficient path.
//!
//! Each segment between consecutive samples is tracked independently, starting
//! from the sorted roots at its first sample and ending on the sorted roots at
//! the next one. [`stitch`] then composes the segment matchings into global
//! strand labels. Segments can therefore be tracked in any order or in
//! parallel with identical results.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::loops::{discriminant_index, interpolate, ValidatedLoop, MAX_REFINEMENT_DEPTH};
use super::poly::{discriminant, min_displacement_matching, min_gap, roots, separability_floor};
use super::{MonodromyError, SeparabilitySite};

/// Tracked strands of one segment.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentTrack {
    pub segment: usize,
    /// Interior and end parameters in `(0, 1]`.
    pub params: Vec<f64>,
    /// `positions[g][k]`: strand `k` (indexed by the sorted start roots) at
    /// `params[g]`.
    pub positions: Vec<Vec<Complex64>>,
    /// `end_index[k]`: index of strand `k` among the sorted end roots.
    pub end_index: Vec<usize>,
    pub max_depth: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefinementRecord {
    pub segment: usize,
    pub substeps: usize,
    pub max_depth: u32,
}

/// `n` continuous strands over the refined angle grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RootTrack {
    angles: Vec<f64>,
    /// `points[g][k]`, strand `k` at `angles[g]`. The last grid point is
    /// `θ_0 + 2π`.
    points: Vec<Vec<Complex64>>,
    refinements: Vec<RefinementRecord>,
    discriminant_index: i64,
}

impl RootTrack {
    pub fn degree(&self) -> usize {
        self.points[0].len()
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn points(&self) -> &[Vec<Complex64>] {
        &self.points
    }

    /// Strand `k` as a path.
    pub fn strand(&self, k: usize) -> impl Iterator<Item = Complex64> + '_ {
        self.points.iter().map(move |p| p[k])
    }

    /// Only segments that needed bisection are listed.
    pub fn refinements(&self) -> &[RefinementRecord] {
        &self.refinements
    }

    pub fn discriminant_index(&self) -> i64 {
        self.discriminant_index
    }

    /// `end_label[k]`: the strand label found at the position where strand
    /// `k` started.
    pub fn end_labels(&self) -> Vec<usize> {
        let start = &self.points[0];
        let end = self.points.last().expect("nonempty");
        min_displacement_matching(start, end)
    }
}

/// Sorted roots at every sample.
pub fn sample_roots(lp: &ValidatedLoop) -> Vec<Vec<Complex64>> {
    lp.samples().iter().map(|s| roots(&s.coeffs)).collect()
}

/// Tracks segment `j` from `start` (sorted roots at sample `j`) to `end`
/// (sorted roots at the next sample).
pub fn track_segment(
    lp: &ValidatedLoop,
    j: usize,
    start: &[Complex64],
    end: &[Complex64],
) -> Result<SegmentTrack, MonodromyError> {
    let (ca, cb) = lp.segment_endpoints(j);
    let mut out = SegmentTrack {
        segment: j,
        params: Vec::new(),
        positions: Vec::new(),
        end_index: Vec::new(),
        max_depth: 0,
    };
    // pending right endpoints; the left end is the last accepted point
    let mut current = start.to_vec();
    let mut s_cur = 0.0;
    let mut pending: Vec<(f64, Vec<Complex64>, u32)> = alloc::vec![(1.0, end.to_vec(), 0)];
    while let Some((s_next, next_roots, depth)) = pending.pop() {
        let assign = min_displacement_matching(&current, &next_roots);
        let max_move = current
            .iter()
            .zip(&assign)
            .map(|(&z, &a)| (z - next_roots[a]).norm())
            .fold(0.0, f64::max);
        if max_move < 0.5 * min_gap(&current) {
            current = assign.iter().map(|&a| next_roots[a]).collect();
            s_cur = s_next;
            out.params.push(s_next);
            out.positions.push(current.clone());
            out.max_depth = out.max_depth.max(depth);
            continue;
        }
        if depth >= MAX_REFINEMENT_DEPTH {
            return Err(MonodromyError::RefinementExhausted { segment: j });
        }
        let sm = 0.5 * (s_cur + s_next);
        let cm = interpolate(ca, cb, sm);
        let floor = separability_floor(&cm, lp.relative_floor());
        let dm = discriminant(&cm).norm();
        if dm.is_nan() || dm < floor {
            return Err(MonodromyError::SeparabilityViolation {
                site: SeparabilitySite::Chord { segment: j, s: sm },
                discriminant: dm,
                floor,
            });
        }
        pending.push((s_next, next_roots, depth + 1));
        pending.push((sm, roots(&cm), depth + 1));
    }
    // every strand ended on some sorted end root; recover which
    out.end_index = current
        .iter()
        .map(|z| {
            end.iter()
                .enumerate()
                .min_by(|a, b| (a.1 - z).norm().partial_cmp(&(b.1 - z).norm()).expect("finite"))
                .map(|(i, _)| i)
                .expect("nonempty")
        })
        .collect();
    Ok(out)
}

/// Composes segment tracks (in segment order) into a [`RootTrack`]. Strand
/// labels are the sorted roots at the first sample.
pub fn stitch(
    lp: &ValidatedLoop,
    start_roots: &[Complex64],
    segments: &[SegmentTrack],
    discriminant_index: i64,
) -> Result<RootTrack, MonodromyError> {
    let n = lp.degree();
    // label[g] = index of global strand g among the sorted roots at the current sample
    let mut label: Vec<usize> = (0..n).collect();
    let mut angles = alloc::vec![lp.samples()[0].theta];
    let mut points = alloc::vec![start_roots.to_vec()];
    let mut refinements = Vec::new();
    for seg in segments {
        let (a, b) = lp.segment_angles(seg.segment);
        for (s, pos) in seg.params.iter().zip(&seg.positions) {
            angles.push(a + (b - a) * s);
            points.push(label.iter().map(|&l| pos[l]).collect());
        }
        label = label.iter().map(|&l| seg.end_index[l]).collect();
        if seg.params.len() > 1 {
            refinements.push(RefinementRecord {
                segment: seg.segment,
                substeps: seg.params.len(),
                max_depth: seg.max_depth,
            });
        }
    }
    let mut seen = alloc::vec![false; n];
    for &l in &label {
        if seen[l] {
            return Err(MonodromyError::ClosureMismatch(f64::INFINITY));
        }
        seen[l] = true;
    }
    // the end set must coincide with the start set
    let end = points.last().expect("nonempty");
    let scale = start_roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let mismatch = end
        .iter()
        .zip(&label)
        .map(|(z, &l)| (z - start_roots[l]).norm())
        .fold(0.0, f64::max);
    if mismatch > lp.closure_tolerance() * scale {
        return Err(MonodromyError::ClosureMismatch(mismatch));
    }
    Ok(RootTrack {
        angles,
        points,
        refinements,
        discriminant_index,
    })
}

/// Tracks all segments in order.
pub fn track_roots(lp: &ValidatedLoop) -> Result<RootTrack, MonodromyError> {
    let index = discriminant_index(lp)?;
    let at_samples = sample_roots(lp);
    let count = lp.segment_count();
    let segments = (0..count)
        .map(|j| track_segment(lp, j, &at_samples[j], &at_samples[(j + 1) % count]))
        .collect::<Result<Vec<_>, _>>()?;
    stitch(lp, &at_samples[0], &segments, index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::loops::PolynomialLoop;
    use alloc::vec;
    use core::f64::consts::TAU;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn square_roots_follow_half_angle() {
        let lp = PolynomialLoop::from_fn(2, 64, |t| vec![-Complex64::from_polar(1.0, t), c(0.0, 0.0)])
            .unwrap()
            .validate_separable()
            .unwrap();
        let track = track_roots(&lp).unwrap();
        for (theta, pts) in track.angles().iter().zip(track.points()) {
            let expect = Complex64::from_polar(1.0, theta / 2.0);
            // strand 0 starts at -1, strand 1 at +1
            assert!((pts[1] - expect).norm() < 1e-9);
            assert!((pts[0] + expect).norm() < 1e-9);
        }
        assert_eq!(track.end_labels(), [1, 0]);
        assert!((track.angles().last().unwrap() - TAU).abs() < 1e-12);
    }

    #[test]
    fn constant_loop_has_constant_strands() {
        let lp = PolynomialLoop::from_fn(2, 16, |_| vec![c(-1.0, 0.0), c(0.0, 0.0)])
            .unwrap()
            .validate_separable()
            .unwrap();
        let track = track_roots(&lp).unwrap();
        assert!(track.points().iter().all(|p| (p[0] + 1.0).norm() < 1e-12 && (p[1] - 1.0).norm() < 1e-12));
        assert_eq!(track.end_labels(), [0, 1]);
        assert!(track.refinements().is_empty());
    }

    #[test]
    fn cube_roots_rotate() {
        let lp = PolynomialLoop::from_fn(3, 48, |t| {
            vec![-Complex64::from_polar(1.0, t), c(0.0, 0.0), c(0.0, 0.0)]
        })
        .unwrap()
        .validate_separable()
        .unwrap();
        let track = track_roots(&lp).unwrap();
        for (theta, pts) in track.angles().iter().zip(track.points()) {
            for &z in pts {
                assert!((z * z * z - Complex64::from_polar(1.0, *theta)).norm() < 1e-9);
            }
        }
        let labels = track.end_labels();
        assert!(labels.iter().enumerate().all(|(k, &l)| k != l));
    }

    #[test]
    fn coarse_segments_are_bisected() {
        // roots e^{±2iθ}·... fast rotation with only 8 samples
        let lp = PolynomialLoop::from_fn(2, 8, |t| vec![-Complex64::from_polar(1.0, 3.0 * t), c(0.0, 0.0)])
            .unwrap()
            .validate_separable()
            .unwrap();
        match track_roots(&lp) {
            Ok(track) => {
                assert!(!track.refinements().is_empty());
                assert_eq!(track.discriminant_index(), 3);
            }
            Err(e) => assert!(matches!(e, MonodromyError::SeparabilityViolation { .. }), "{e}"),
        }
    }
}

//! Segment-parallel root tracking.
//!
//! Segments are tracked independently between the sorted roots at their end
//! samples, so the result is the same for every thread count.

use std::num::NonZeroUsize;
use std::thread;

use braidmod_core::monodromy::{
    discriminant_index, extract_braid, sample_roots, stitch, track_segment, MonodromyError,
    MonodromyResult, PolynomialLoop, RootTrack, SegmentTrack, ValidatedLoop,
};

/// Like [`braidmod_core::monodromy::track_roots`], spread over `threads`
/// scoped worker threads. On failure the error of the lowest-numbered failing
/// segment is returned.
pub fn track_roots_parallel(
    lp: &ValidatedLoop,
    threads: NonZeroUsize,
) -> Result<RootTrack, MonodromyError> {
    let index = discriminant_index(lp)?;
    let at_samples = sample_roots(lp);
    let count = lp.segment_count();
    let workers = threads.get().min(count);
    let chunk = count.div_ceil(workers);
    let track = |j: usize| track_segment(lp, j, &at_samples[j], &at_samples[(j + 1) % count]);

    let results: Vec<Result<SegmentTrack, MonodromyError>> = if workers == 1 {
        (0..count).map(track).collect()
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..count)
                .step_by(chunk)
                .map(|lo| {
                    let track = &track;
                    scope.spawn(move || (lo..(lo + chunk).min(count)).map(track).collect::<Vec<_>>())
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("tracking thread panicked"))
                .collect()
        })
    };
    let segments = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    stitch(lp, &at_samples[0], &segments, index)
}

/// Validation, parallel tracking and braid extraction, returning the track
/// alongside the result.
pub fn monodromy_parallel(
    lp: PolynomialLoop,
    threads: NonZeroUsize,
) -> Result<(MonodromyResult, RootTrack), MonodromyError> {
    let validated = lp.validate_separable()?;
    let track = track_roots_parallel(&validated, threads)?;
    let result = extract_braid(&track)?;
    Ok((result, track))
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidmod_core::monodromy::{monodromy, track_roots};
    use num_complex::Complex64;

    fn loop3() -> PolynomialLoop {
        PolynomialLoop::from_fn(3, 40, |t| {
            let z = Complex64::from_polar(1.0, t);
            vec![-z * z, Complex64::new(0.3, 0.1), -z * 0.5]
        })
        .unwrap()
    }

    #[test]
    fn thread_count_does_not_change_the_track() {
        let serial = track_roots(&loop3().validate_separable().unwrap()).unwrap();
        for threads in [1, 2, 3, 7, 64] {
            let lp = loop3().validate_separable().unwrap();
            let par = track_roots_parallel(&lp, NonZeroUsize::new(threads).unwrap()).unwrap();
            assert_eq!(par, serial, "threads = {threads}");
        }
        let (r, _) = monodromy_parallel(loop3(), NonZeroUsize::new(4).unwrap()).unwrap();
        assert_eq!(r, monodromy(loop3()).unwrap());
    }
}

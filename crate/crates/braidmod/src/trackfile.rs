//! Raw strand trajectories as CSV: `strand,theta,re,im`, one row per strand
//! per track point, strands numbered from 1 in the order of the sorted roots
//! at the first sample.

use std::io::{self, Write};

use braidmod_core::monodromy::RootTrack;

pub fn write_track(track: &RootTrack, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "strand,theta,re,im")?;
    for k in 0..track.degree() {
        for (theta, z) in track.angles().iter().zip(track.strand(k)) {
            writeln!(out, "{},{theta:e},{:e},{:e}", k + 1, z.re, z.im)?;
        }
    }
    Ok(())
}

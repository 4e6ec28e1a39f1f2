//! JSON loop files.
//!
//! ```json
//! {
//!   "n": 2,
//!   "samples": [
//!     { "theta": 0.0, "coeffs": [[-1.0, 0.0], [0.0, 0.0]] },
//!     ...
//!   ]
//! }
//! ```
//!
//! `coeffs` holds the `n` non-leading coefficients `a_0 … a_{n-1}` as
//! `[re, im]` pairs, constant term first. Angles are radians, strictly
//! increasing in `[0, 2π)`.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use braidmod_core::monodromy::{LoopSample, MonodromyError, PolynomialLoop};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoopFileError {
    #[error("cannot read loop file: {0}")]
    Io(#[from] io::Error),
    #[error("malformed loop file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Loop(#[from] MonodromyError),
}

impl LoopFileError {
    pub fn class_name(&self) -> &'static str {
        match self {
            LoopFileError::Io(_) => "IoError",
            LoopFileError::Json(_) => "MalformedLoopFile",
            LoopFileError::Loop(e) => e.class_name(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LoopFile {
    n: usize,
    samples: Vec<SampleRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SampleRecord {
    theta: f64,
    coeffs: Vec<[f64; 2]>,
}

pub fn parse_loop(text: &str) -> Result<PolynomialLoop, LoopFileError> {
    let file: LoopFile = serde_json::from_str(text)?;
    let samples = file
        .samples
        .into_iter()
        .map(|s| LoopSample {
            theta: s.theta,
            coeffs: s.coeffs.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
        })
        .collect();
    Ok(PolynomialLoop::new(file.n, samples)?)
}

pub fn read_loop(path: impl AsRef<Path>) -> Result<PolynomialLoop, LoopFileError> {
    parse_loop(&fs::read_to_string(path)?)
}

pub fn to_json(lp: &PolynomialLoop) -> String {
    let file = LoopFile {
        n: lp.degree(),
        samples: lp
            .samples()
            .iter()
            .map(|s| SampleRecord {
                theta: s.theta,
                coeffs: s.coeffs.iter().map(|c| [c.re, c.im]).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("finite numbers serialize")
}

pub fn write_loop(lp: &PolynomialLoop, mut out: impl Write) -> io::Result<()> {
    out.write_all(to_json(lp).as_bytes())?;
    out.write_all(b"\n")
}

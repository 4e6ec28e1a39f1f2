//! File formats, parallel root tracking and output records for the
//! `braidmod` command-line tool, built on [`braidmod_core`].

pub mod cli;
pub mod loopfile;
pub mod output;
pub mod parallel;
pub mod trackfile;

pub use loopfile::{parse_loop, read_loop, to_json, write_loop, LoopFileError};
pub use output::{format_number, Format, OutputRecord, Value};
pub use parallel::{monodromy_parallel, track_roots_parallel};

//! The `braidmod` command line.
//!
//! Exit codes: 0 for definitive results, 2 for one-directional verdicts that
//! came out inconclusive (and for `obstruct` when nothing is excluded), 1 for
//! any error. Error messages start with `error[ClassName]:`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;

use braidmod_core::conformal::{
    conformal_module_of_class, lemma1_obstruction, module_of_power, module_upper_bound,
    ConformalError, ObstructionVerdict,
};
use braidmod_core::garside::{normal_form, words_equal};
use braidmod_core::homrep::{theorem3_check, FreeHomB3, Generator, Theorem3Verdict};
use braidmod_core::monodromy::{
    lemma2_solvability, solvability_threshold, zjuzin_r0, zjuzin_reducibility, MonodromyError,
    ReducibilityVerdict, SolvabilityVerdict,
};
use braidmod_core::thurston::{entropy_lower_bound_burau, thurston_report, unit_samples};
use braidmod_core::{BraidError, BraidWord, ModuleValue};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::loopfile::{read_loop, LoopFileError};
use crate::output::{Format, OutputRecord, Value};
use crate::parallel::monodromy_parallel;
use crate::trackfile::write_track;

pub const THREADS_ENV: &str = "BRAIDMOD_THREADS";

#[derive(Debug, Parser)]
#[command(name = "braidmod", version, about = "Braid invariants and braid monodromy of polynomial loops")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Thurston type, entropy and conformal module of a braid class (exact
    /// for 3 strands, bounds otherwise).
    Classify {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 3)]
        strands: usize,
        /// Burau parameter angle for the entropy bound; repeatable. Defaults to π.
        #[arg(long = "burau-angle", allow_negative_numbers = true)]
        burau_angles: Vec<f64>,
    },
    /// Braid monodromy of a loop file.
    Monodromy {
        loopfile: PathBuf,
        /// Write strand trajectories as CSV.
        #[arg(long)]
        emit_track: Option<PathBuf>,
        #[arg(long, env = THREADS_ENV, default_value = "1")]
        threads: NonZeroUsize,
        /// Relative separability floor.
        #[arg(long)]
        relative_floor: Option<f64>,
    },
    /// Reducibility test for prime degree over an annulus.
    Zjuzin {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_parser = parse_module)]
        module: ModuleValue,
        #[arg(long, allow_negative_numbers = true)]
        index: i64,
    },
    /// Degree-3 solvability over an annulus.
    Solvable {
        #[arg(long, value_parser = parse_module)]
        module: ModuleValue,
    },
    /// Whether an annulus of this module can carry an algebroid function
    /// inducing the braid class.
    Obstruct {
        #[arg(long, value_parser = parse_module)]
        module: ModuleValue,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 3)]
        strands: usize,
    },
    /// Necessary condition on a homomorphism from the free group on a, b to B_3.
    TorusCheck {
        #[arg(allow_hyphen_values = true)]
        word_a: String,
        #[arg(allow_hyphen_values = true)]
        word_b: String,
    },
    /// Whether two words are the same braid.
    Equal {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[arg(long, default_value_t = 3)]
        strands: usize,
    },
    /// Left-greedy normal form.
    #[command(name = "normalform")]
    NormalForm {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 3)]
        strands: usize,
    },
    /// Module of the class of b^l from the module of the class of b.
    Powmod {
        #[arg(long, value_parser = parse_module)]
        module: ModuleValue,
        #[arg(long, allow_negative_numbers = true)]
        power: i64,
    },
}

fn parse_module(text: &str) -> Result<ModuleValue, String> {
    let value = match text.trim().to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" => f64::INFINITY,
        other => other.parse::<f64>().map_err(|e| e.to_string())?,
    };
    ModuleValue::new(value).map_err(|e| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Conformal(#[from] ConformalError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error(transparent)]
    LoopFile(#[from] LoopFileError),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn class_name(&self) -> &'static str {
        match self {
            CliError::Braid(e) => braid_error_class(e),
            CliError::Conformal(e) => match e {
                ConformalError::InvalidAnnulus { .. } => "InvalidAnnulus",
                ConformalError::NonPositiveModule(_) => "NonPositiveModule",
                ConformalError::ZeroPower => "ZeroPower",
                ConformalError::InexactStrandCount { .. } => "InexactStrandCount",
                ConformalError::Braid(b) => braid_error_class(b),
            },
            CliError::Monodromy(e) => e.class_name(),
            CliError::LoopFile(e) => e.class_name(),
            CliError::Io(_) => "IoError",
        }
    }
}

fn braid_error_class(e: &BraidError) -> &'static str {
    match e {
        BraidError::TooFewStrands(_) => "TooFewStrands",
        BraidError::MalformedToken(_) => "MalformedToken",
        BraidError::IndexOutOfRange { .. } => "IndexOutOfRange",
        BraidError::StrandMismatch(..) => "StrandMismatch",
        BraidError::WrongStrandCount { .. } => "WrongStrandCount",
        BraidError::ZeroExponentGenerator => "ZeroExponentGenerator",
    }
}

/// A successful command's record and exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub record: OutputRecord,
    pub exit_code: i32,
}

fn definitive(record: OutputRecord) -> Outcome {
    Outcome {
        record,
        exit_code: 0,
    }
}

fn graded(record: OutputRecord, conclusive: bool) -> Outcome {
    Outcome {
        record,
        exit_code: if conclusive { 0 } else { 2 },
    }
}

pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Classify {
            word,
            strands,
            burau_angles,
        } => {
            let w = BraidWord::parse(word, *strands)?;
            if *strands == 3 {
                let r = thurston_report(&w)?;
                Ok(definitive(
                    OutputRecord::new()
                        .with("type", r.kind.to_string())
                        .with("entropy", r.entropy.value())
                        .with("module", r.module)
                        .with("exact", true),
                ))
            } else {
                let samples = unit_samples(burau_angles);
                Ok(definitive(
                    OutputRecord::new()
                        .with("strands", *strands)
                        .with("entropy_lower_bound", entropy_lower_bound_burau(&w, &samples))
                        .with("module_upper_bound", module_upper_bound(&w, &samples))
                        .with("exact", false),
                ))
            }
        }
        Command::Monodromy {
            loopfile,
            emit_track,
            threads,
            relative_floor,
        } => {
            let mut lp = read_loop(loopfile)?;
            if let Some(rel) = relative_floor {
                lp = lp.with_relative_floor(*rel);
            }
            let samples = lp.samples().len();
            let (r, track) = monodromy_parallel(lp, *threads)?;
            if let Some(path) = emit_track {
                let mut out = BufWriter::new(File::create(path)?);
                write_track(&track, &mut out)?;
                out.flush()?;
            }
            let cycle_type = r
                .permutation
                .cycle_type()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            Ok(definitive(
                OutputRecord::new()
                    .with("braid", Value::Word(r.braid.to_string()))
                    .with("strands", r.braid.strands())
                    .with("cycle_type", cycle_type)
                    .with("index", r.discriminant_index)
                    .with("ncycle", r.is_irreducible_class())
                    .with("samples", samples)
                    .with("refined_segments", track.refinements().len())
                    .with("projection_angle", r.projection_angle),
            ))
        }
        Command::Zjuzin {
            degree,
            module,
            index,
        } => {
            let verdict = zjuzin_reducibility(*degree, *module, *index)?;
            let conclusive = verdict == ReducibilityVerdict::GuaranteedReducible;
            Ok(graded(
                OutputRecord::new()
                    .with("verdict", format!("{verdict:?}"))
                    .with("threshold", *degree as f64 * zjuzin_r0()),
                conclusive,
            ))
        }
        Command::Solvable { module } => {
            let verdict = lemma2_solvability(*module);
            Ok(graded(
                OutputRecord::new()
                    .with("verdict", format!("{verdict:?}"))
                    .with("threshold", solvability_threshold())
                    .with("condition", SolvabilityVerdict::CONDITION),
                verdict == SolvabilityVerdict::SolvableOverA,
            ))
        }
        Command::Obstruct {
            module,
            word,
            strands,
        } => {
            let w = BraidWord::parse(word, *strands)?;
            let verdict = lemma1_obstruction(*module, &w)?;
            Ok(graded(
                OutputRecord::new()
                    .with("verdict", format!("{verdict:?}"))
                    .with("class_module", conformal_module_of_class(&w)?)
                    .with("annulus_module", *module),
                verdict == ObstructionVerdict::AlgebroidExcluded,
            ))
        }
        Command::TorusCheck { word_a, word_b } => {
            let hom = FreeHomB3::new(BraidWord::parse(word_a, 3)?, BraidWord::parse(word_b, 3)?)?;
            let mut record = OutputRecord::new();
            match theorem3_check(&hom) {
                Theorem3Verdict::SatisfiesNecessaryCondition { k_a, k_b } => {
                    record.push("verdict", "SatisfiesNecessaryCondition");
                    record.push("k_a", k_a);
                    record.push("k_b", k_b);
                }
                Theorem3Verdict::FailsSubgroup(g) => {
                    record.push("verdict", "FailsSubgroup");
                    record.push("generator", if g == Generator::A { "a" } else { "b" });
                }
                Theorem3Verdict::FailsGarsideClause => record.push("verdict", "FailsGarsideClause"),
            }
            Ok(definitive(record))
        }
        Command::Equal {
            first,
            second,
            strands,
        } => {
            let a = BraidWord::parse(first, *strands)?;
            let b = BraidWord::parse(second, *strands)?;
            Ok(definitive(OutputRecord::new().with("equal", words_equal(&a, &b)?)))
        }
        Command::NormalForm { word, strands } => {
            let nf = normal_form(&BraidWord::parse(word, *strands)?);
            let factors = nf
                .factors()
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            Ok(definitive(
                OutputRecord::new()
                    .with("delta_power", nf.delta_power())
                    .with("canonical_length", nf.canonical_length())
                    .with("factors", factors)
                    .with("word", Value::Word(nf.to_word().to_string())),
            ))
        }
        Command::Powmod { module, power } => Ok(definitive(
            OutputRecord::new().with("module", module_of_power(*module, *power)?),
        )),
    }
}

/// Parses `args` (program name first), runs the command and writes to `out`
/// and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "error[UsageError]: {e}");
                    1
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => match out.write_all(outcome.record.render(cli.format).as_bytes()) {
            Ok(()) => outcome.exit_code,
            Err(e) => report(err, &CliError::Io(e)),
        },
        Err(e) => report(err, &e),
    }
}

fn report(err: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(err, "error[{}]: {e}", e.class_name());
    1
}

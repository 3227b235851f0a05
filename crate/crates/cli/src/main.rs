//! `symlogic`: identify logical expressions in multiple-choice
//! reading-comprehension data, extend them under contraposition and the
//! transitive law, attach verbalized extensions to each option, and
//! emit logic-driven contrastive training pairs.

mod commands;
mod input;
mod process;
mod wire;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{CmdError, ValidateTargets};
use process::PipelineConfig;

#[derive(Parser)]
#[command(name = "symlogic", version, about = "Symbolic logic dataset pipeline")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Identify per-instance logical expression sets and write them as JSONL
    Extract {
        /// Dataset file: a JSON array or JSONL of instance records
        #[arg(long)]
        input: PathBuf,
        /// Output JSONL of expression records
        #[arg(long)]
        output: PathBuf,
        /// Skip corrupt records instead of aborting
        #[arg(long)]
        skip_errors: bool,
    },
    /// Append the inferred extension set to extract output
    Extend {
        /// Expression-record JSONL produced by `extract`
        #[arg(long)]
        input: PathBuf,
        /// Output JSONL with the `extension` field filled
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        skip_errors: bool,
    },
    /// Full run: identification, extension, option matching, verbalization
    /// and contrastive augmentation
    Pipeline {
        #[arg(long)]
        input: PathBuf,
        /// Output JSONL of per-option extended records
        #[arg(long)]
        out_extended: PathBuf,
        /// Output JSONL of contrastive pairs
        #[arg(long)]
        out_pairs: PathBuf,
        #[command(flatten)]
        knobs: PipelineKnobs,
        #[arg(long)]
        skip_errors: bool,
        /// Worker threads; output bytes do not depend on this
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Dry run: print run statistics without writing outputs
    Stats {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        knobs: PipelineKnobs,
        #[arg(long)]
        skip_errors: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Re-parse emitted files and verify they round-trip byte-exactly
    Validate {
        /// Expression-record JSONL (extract/extend output)
        #[arg(long)]
        expressions: Vec<PathBuf>,
        /// Extended-record JSONL (pipeline output)
        #[arg(long)]
        extended: Vec<PathBuf>,
        /// Contrastive-pair JSONL (pipeline output)
        #[arg(long)]
        pairs: Vec<PathBuf>,
    },
}

#[derive(Args)]
struct PipelineKnobs {
    /// Root seed; all per-instance randomness derives from it
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extended expressions kept per option
    #[arg(long, default_value_t = 2)]
    max_related: usize,
    /// Token-overlap threshold for symbol matching against options
    #[arg(long, default_value_t = 0.5)]
    overlap_threshold: f64,
    /// Contrastive negatives per labeled instance
    #[arg(long, default_value_t = 1)]
    negatives_per_instance: u32,
    /// Verbalize with "you" pronouns (not round-trip safe)
    #[arg(long)]
    pronouns: bool,
}

impl PipelineKnobs {
    fn to_config(&self) -> Result<PipelineConfig, CmdError> {
        if self.max_related < 1 {
            return Err(CmdError::Input("--max-related must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.overlap_threshold) {
            return Err(CmdError::Input("--overlap-threshold must be within [0, 1]".into()));
        }
        Ok(PipelineConfig {
            seed: self.seed,
            max_related: self.max_related,
            overlap_threshold: self.overlap_threshold,
            negatives_per_instance: self.negatives_per_instance,
            pronouns: self.pronouns,
        })
    }
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match cli.command {
        Command::Extract { input, output, skip_errors } => {
            commands::cmd_extract(&input, &output, skip_errors)
        }
        Command::Extend { input, output, skip_errors } => {
            commands::cmd_extend(&input, &output, skip_errors)
        }
        Command::Pipeline { input, out_extended, out_pairs, knobs, skip_errors, workers } => {
            commands::cmd_pipeline(
                &input,
                &out_extended,
                &out_pairs,
                &knobs.to_config()?,
                skip_errors,
                workers,
            )
        }
        Command::Stats { input, knobs, skip_errors, workers } => {
            commands::cmd_stats(&input, &knobs.to_config()?, skip_errors, workers)
        }
        Command::Validate { expressions, extended, pairs } => {
            commands::cmd_validate(&ValidateTargets { expressions, extended, pairs })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

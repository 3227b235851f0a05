//! Subcommand implementations. Every command prints a stats JSON object
//! on stdout; diagnostics go to stderr.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use symlogic_core::{extend, ReclorInstance};

use crate::input::InstanceReader;
use crate::process::{ordered_parallel_map, process_instance, PipelineConfig, StatsAccumulator};
use crate::wire::{ExpressionRecord, ExtendedRecord, IngestStats, PairLine, WireImplication};

/// Input problems exit with 1, internal invariant violations with 2.
#[derive(Debug)]
pub enum CmdError {
    Input(String),
    Internal(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Input(_) => 1,
            CmdError::Internal(_) => 2,
        }
    }
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CmdError::Input(msg) => write!(f, "input error: {msg}"),
            CmdError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CmdError {
    CmdError::Input(e.to_string())
}

/// Instances processed per read/process/write cycle; bounds memory on
/// JSONL input while leaving room for worker parallelism.
const BATCH: usize = 256;

struct JsonlWriter {
    writer: BufWriter<File>,
    lines: u64,
}

impl JsonlWriter {
    fn create(path: &Path) -> Result<Self, CmdError> {
        let file = File::create(path)
            .map_err(|e| input_err(format!("cannot create {}: {e}", path.display())))?;
        Ok(JsonlWriter { writer: BufWriter::new(file), lines: 0 })
    }

    fn write_line<T: Serialize>(&mut self, value: &T) -> Result<(), CmdError> {
        let json = serde_json::to_string(value)
            .map_err(|e| CmdError::Internal(format!("serialization failed: {e}")))?;
        self.writer
            .write_all(json.as_bytes())
            .and_then(|_| self.writer.write_all(b"\n"))
            .map_err(|e| input_err(format!("write failed: {e}")))?;
        self.lines += 1;
        Ok(())
    }

    fn finish(mut self) -> Result<u64, CmdError> {
        self.writer.flush().map_err(|e| input_err(format!("flush failed: {e}")))?;
        Ok(self.lines)
    }
}

fn print_stats<T: Serialize>(stats: &T) -> Result<(), CmdError> {
    let json = serde_json::to_string(stats)
        .map_err(|e| CmdError::Internal(format!("stats serialization failed: {e}")))?;
    println!("{json}");
    Ok(())
}

/// Reads instances in batches, skipping or failing on corrupt records
/// per `skip_errors`, and hands each batch to `handle`. Returns how
/// many corrupt records were skipped.
fn for_each_batch(
    input: &Path,
    skip_errors: bool,
    mut handle: impl FnMut(Vec<ReclorInstance>) -> Result<(), CmdError>,
) -> Result<u64, CmdError> {
    let reader = InstanceReader::open(input)
        .map_err(|e| input_err(format!("cannot read {}: {e}", input.display())))?;
    let mut skipped = 0u64;
    let mut batch = Vec::with_capacity(BATCH);
    for record in reader {
        match record {
            Ok(instance) => batch.push(instance),
            Err(failure) => {
                if skip_errors {
                    eprintln!("skipping {failure}");
                    skipped += 1;
                } else {
                    return Err(input_err(failure));
                }
            }
        }
        if batch.len() == BATCH {
            handle(std::mem::take(&mut batch))?;
        }
    }
    if !batch.is_empty() {
        handle(batch)?;
    }
    Ok(skipped)
}

pub fn cmd_extract(input: &Path, output: &Path, skip_errors: bool) -> Result<(), CmdError> {
    let mut writer = JsonlWriter::create(output)?;
    let mut stats = IngestStats::default();
    stats.records_skipped_errors = for_each_batch(input, skip_errors, |batch| {
        for instance in &batch {
            stats.records_total += 1;
            let set = symlogic_core::identify_context(&instance.context, None)
                .map_err(|e| input_err(format!("instance {}: {e}", instance.id)))?;
            writer.write_line(&ExpressionRecord::from_set(&instance.id, &set))?;
        }
        Ok(())
    })?;
    stats.records_written = writer.finish()?;
    print_stats(&stats)
}

pub fn cmd_extend(input: &Path, output: &Path, skip_errors: bool) -> Result<(), CmdError> {
    let file = File::open(input)
        .map_err(|e| input_err(format!("cannot read {}: {e}", input.display())))?;
    let mut writer = JsonlWriter::create(output)?;
    let mut stats = IngestStats::default();

    for (index, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| input_err(format!("record {index}: read error: {e}")))?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: Result<ExpressionRecord, String> =
            serde_json::from_str(&line).map_err(|e| e.to_string());
        let set = parsed.and_then(|mut record| {
            let set = record.to_set()?;
            let extension = extend(&set);
            record.extension =
                Some(extension.iter().map(WireImplication::from).collect());
            Ok((record, set))
        });
        match set {
            Ok((record, _)) => {
                stats.records_total += 1;
                writer.write_line(&record)?;
            }
            Err(message) => {
                if skip_errors {
                    eprintln!("skipping record {index}: {message}");
                    stats.records_skipped_errors += 1;
                } else {
                    return Err(input_err(format!("record {index}: {message}")));
                }
            }
        }
    }
    stats.records_written = writer.finish()?;
    print_stats(&stats)
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_pipeline(
    input: &Path,
    out_extended: &Path,
    out_pairs: &Path,
    cfg: &PipelineConfig,
    skip_errors: bool,
    workers: usize,
) -> Result<(), CmdError> {
    let mut extended_writer = JsonlWriter::create(out_extended)?;
    let mut pairs_writer = JsonlWriter::create(out_pairs)?;
    let mut stats = StatsAccumulator::default();

    run_batches(input, cfg, skip_errors, workers, &mut stats, |result| {
        extended_writer.write_line(&result.extended)?;
        for pair in &result.pairs {
            pairs_writer.write_line(pair)?;
        }
        Ok(())
    })?;

    extended_writer.finish()?;
    pairs_writer.finish()?;
    print_stats(&stats.finish())
}

pub fn cmd_stats(
    input: &Path,
    cfg: &PipelineConfig,
    skip_errors: bool,
    workers: usize,
) -> Result<(), CmdError> {
    let mut stats = StatsAccumulator::default();
    run_batches(input, cfg, skip_errors, workers, &mut stats, |_| Ok(()))?;
    print_stats(&stats.finish())
}

fn run_batches(
    input: &Path,
    cfg: &PipelineConfig,
    skip_errors: bool,
    workers: usize,
    stats: &mut StatsAccumulator,
    mut sink: impl FnMut(&crate::process::InstanceResult) -> Result<(), CmdError>,
) -> Result<(), CmdError> {
    let skipped = for_each_batch(input, skip_errors, |batch| {
        let results = ordered_parallel_map(&batch, workers, |instance| {
            process_instance(instance, cfg).map_err(|e| format!("instance {}: {e}", instance.id))
        });
        for result in results {
            match result {
                Ok(result) => {
                    stats.record(&result);
                    sink(&result)?;
                }
                Err(message) => {
                    if skip_errors {
                        eprintln!("skipping {message}");
                        stats.record_error();
                    } else {
                        return Err(input_err(message));
                    }
                }
            }
        }
        Ok(())
    })?;
    stats.add_record_errors(skipped);
    Ok(())
}

pub struct ValidateTargets {
    pub expressions: Vec<PathBuf>,
    pub extended: Vec<PathBuf>,
    pub pairs: Vec<PathBuf>,
}

pub fn cmd_validate(targets: &ValidateTargets) -> Result<(), CmdError> {
    let mut files = 0u64;
    let mut lines = 0u64;
    for path in &targets.expressions {
        lines += validate_file::<ExpressionRecord>(path)?;
        files += 1;
    }
    for path in &targets.extended {
        lines += validate_file::<ExtendedRecord>(path)?;
        files += 1;
    }
    for path in &targets.pairs {
        lines += validate_file::<PairLine>(path)?;
        files += 1;
    }
    if files == 0 {
        return Err(input_err("nothing to validate: pass --expressions, --extended or --pairs"));
    }
    print_stats(&serde_json::json!({"files_checked": files, "lines_checked": lines}))
}

/// Schema check by round trip: each line must parse as `T` and
/// re-serialize to the identical bytes.
fn validate_file<T: DeserializeOwned + Serialize>(path: &Path) -> Result<u64, CmdError> {
    let file = File::open(path)
        .map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))?;
    let mut count = 0u64;
    for (index, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| input_err(format!("{}: {e}", path.display())))?;
        if line.trim().is_empty() {
            continue;
        }
        let value: T = serde_json::from_str(&line).map_err(|e| {
            input_err(format!("{} record {index}: does not match schema: {e}", path.display()))
        })?;
        let round_tripped = serde_json::to_string(&value)
            .map_err(|e| CmdError::Internal(format!("re-serialization failed: {e}")))?;
        if round_tripped != line {
            return Err(input_err(format!(
                "{} record {index}: round trip differs\n  input: {line}\n  output: {round_tripped}",
                path.display()
            )));
        }
        count += 1;
    }
    Ok(count)
}

//! Dataset ingestion: a single JSON array (the distribution format) or
//! JSONL, UTF-8 either way. JSONL is streamed; arrays are parsed whole.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use symlogic_core::ReclorInstance;

/// A record that failed to parse, with its 0-based index in the input.
#[derive(Debug)]
pub struct RecordFailure {
    pub index: usize,
    pub message: String,
}

impl std::fmt::Display for RecordFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "record {}: {}", self.index, self.message)
    }
}

pub type RecordResult = Result<ReclorInstance, RecordFailure>;

enum Source {
    Array(std::vec::IntoIter<serde_json::Value>),
    Jsonl(std::io::Lines<BufReader<File>>),
}

/// Iterator over input records, yielding per-record failures instead of
/// aborting so callers can honor `--skip-errors`.
pub struct InstanceReader {
    source: Source,
    index: usize,
}

impl InstanceReader {
    pub fn open(path: &Path) -> std::io::Result<InstanceReader> {
        let mut file = File::open(path)?;
        let mut probe = [0u8; 256];
        let read = file.read(&mut probe)?;
        let first = probe[..read].iter().find(|b| !b.is_ascii_whitespace());

        if first == Some(&b'[') {
            let mut text = String::new();
            let mut file = File::open(path)?;
            file.read_to_string(&mut text)?;
            let values: Vec<serde_json::Value> = serde_json::from_str(&text).map_err(|e| {
                std::io::Error::new(std::io::ErrorKind::InvalidData, format!("not a JSON array: {e}"))
            })?;
            Ok(InstanceReader { source: Source::Array(values.into_iter()), index: 0 })
        } else {
            let reader = BufReader::new(File::open(path)?);
            Ok(InstanceReader { source: Source::Jsonl(reader.lines()), index: 0 })
        }
    }
}

impl Iterator for InstanceReader {
    type Item = RecordResult;

    fn next(&mut self) -> Option<RecordResult> {
        loop {
            let index = self.index;
            let parsed: Option<Result<ReclorInstance, String>> = match &mut self.source {
                Source::Array(values) => values
                    .next()
                    .map(|v| serde_json::from_value(v).map_err(|e| e.to_string())),
                Source::Jsonl(lines) => match lines.next() {
                    None => None,
                    Some(Err(e)) => Some(Err(format!("read error: {e}"))),
                    Some(Ok(line)) if line.trim().is_empty() => {
                        self.index += 1;
                        continue;
                    }
                    Some(Ok(line)) => {
                        Some(serde_json::from_str(&line).map_err(|e| e.to_string()))
                    }
                },
            };
            self.index += 1;
            return match parsed {
                None => None,
                Some(Ok(instance)) => Some(Ok(instance)),
                Some(Err(message)) => Some(Err(RecordFailure { index, message })),
            };
        }
    }
}

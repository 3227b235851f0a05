//! Versioned JSONL schemas for everything the tool writes. Field order
//! here is the byte order on disk, so the validator can round-trip
//! lines exactly.

use serde::{Deserialize, Serialize};

use symlogic_core::{
    ContrastivePair, ExpressionSet, Implication, ImplicationKey, ModOp, NegateSide, Provenance,
    SymbolTable,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WireProvenance {
    Explicit { sentence_index: usize, indicator: String },
    Contraposition { parent: String },
    Transitivity { left: String, right: String },
    Modified { op: String, parent: String },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WireImplication {
    pub expr: String,
    pub provenance: WireProvenance,
    pub depth: u32,
}

fn key_text(key: &ImplicationKey) -> String {
    format!("({} -> {})", key.0, key.1)
}

impl From<&Implication> for WireImplication {
    fn from(imp: &Implication) -> Self {
        let provenance = match imp.provenance() {
            Provenance::Explicit { sentence_index, indicator } => WireProvenance::Explicit {
                sentence_index: *sentence_index,
                indicator: indicator.clone(),
            },
            Provenance::Contraposition { parent } => {
                WireProvenance::Contraposition { parent: key_text(parent) }
            }
            Provenance::Transitivity { left, right } => {
                WireProvenance::Transitivity { left: key_text(left), right: key_text(right) }
            }
            Provenance::Modified { op, parent } => {
                WireProvenance::Modified { op: op.clone(), parent: key_text(parent) }
            }
        };
        WireImplication { expr: imp.to_string(), provenance, depth: imp.depth() }
    }
}

impl WireImplication {
    pub fn to_implication(&self) -> Result<Implication, String> {
        let parsed: Implication =
            self.expr.parse().map_err(|e| format!("bad expr {:?}: {e}", self.expr))?;
        let parse_key = |text: &str| -> Result<ImplicationKey, String> {
            let imp: Implication =
                text.parse().map_err(|e| format!("bad parent {text:?}: {e}"))?;
            Ok(imp.key())
        };
        let provenance = match &self.provenance {
            WireProvenance::Explicit { sentence_index, indicator } => Provenance::Explicit {
                sentence_index: *sentence_index,
                indicator: indicator.clone(),
            },
            WireProvenance::Contraposition { parent } => {
                Provenance::Contraposition { parent: parse_key(parent)? }
            }
            WireProvenance::Transitivity { left, right } => Provenance::Transitivity {
                left: parse_key(left)?,
                right: parse_key(right)?,
            },
            WireProvenance::Modified { op, parent } => {
                Provenance::Modified { op: op.clone(), parent: parse_key(parent)? }
            }
        };
        Implication::with_provenance(
            parsed.antecedent(),
            parsed.consequent(),
            provenance,
            self.depth,
        )
        .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WireSymbol {
    pub id: u32,
    pub surface: String,
}

/// Per-instance output of the extract step; `extension` appears once
/// the extend step has run.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExpressionRecord {
    pub schema_version: u32,
    pub id: String,
    pub symbols: Vec<WireSymbol>,
    pub expressions: Vec<WireImplication>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<Vec<WireImplication>>,
}

impl ExpressionRecord {
    pub fn from_set(id: &str, set: &ExpressionSet) -> Self {
        ExpressionRecord {
            schema_version: SCHEMA_VERSION,
            id: id.to_string(),
            symbols: set
                .symbols()
                .iter()
                .map(|s| WireSymbol { id: s.id.0, surface: s.surface.clone() })
                .collect(),
            expressions: set.iter().map(WireImplication::from).collect(),
            extension: None,
        }
    }

    /// Rebuilds the symbol table and expression set this record captured.
    pub fn to_set(&self) -> Result<ExpressionSet, String> {
        let mut table = SymbolTable::new();
        for (index, symbol) in self.symbols.iter().enumerate() {
            if symbol.id as usize != index {
                return Err(format!("symbol ids must be dense, got {} at {index}", symbol.id));
            }
            table
                .intern(&symbol.surface, None)
                .map_err(|e| format!("symbol {index}: {e}"))?;
        }
        let mut set = ExpressionSet::new(table);
        for wire in &self.expressions {
            let imp = wire.to_implication()?;
            set.insert(imp).map_err(|e| e.to_string())?;
        }
        Ok(set)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WireOption {
    pub option_index: usize,
    pub related_expressions: Vec<WireImplication>,
    pub extended_context: String,
    pub model_input: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtendedRecord {
    pub schema_version: u32,
    pub id: String,
    pub label: Option<u8>,
    pub options: Vec<WireOption>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WireModification {
    pub op: String,
    pub target: String,
    pub negate_side: Option<String>,
    pub attempts: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairLine {
    pub schema_version: u32,
    pub instance_id: String,
    pub positive_context: String,
    pub negative_context: String,
    pub answer_index: u8,
    pub record: WireModification,
}

impl From<&ContrastivePair> for PairLine {
    fn from(pair: &ContrastivePair) -> Self {
        let op = match pair.record.op {
            ModOp::Delete => "delete",
            ModOp::Reverse => "reverse",
            ModOp::Negate => "negate",
        };
        let negate_side = pair.record.negate_side.map(|s| {
            match s {
                NegateSide::Antecedent => "antecedent",
                NegateSide::Consequent => "consequent",
            }
            .to_string()
        });
        PairLine {
            schema_version: SCHEMA_VERSION,
            instance_id: pair.instance_id.clone(),
            positive_context: pair.positive_context.clone(),
            negative_context: pair.negative_context.clone(),
            answer_index: pair.answer_index,
            record: WireModification {
                op: op.to_string(),
                target: pair.record.target.to_string(),
                negate_side,
                attempts: pair.record.attempts,
            },
        }
    }
}

/// Aggregate min/mean/max triple; zeros when nothing was observed.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize, PartialEq)]
pub struct MinMeanMax {
    pub min: u64,
    pub mean: f64,
    pub max: u64,
}

impl MinMeanMax {
    pub fn from_counts(counts: &[usize]) -> Self {
        if counts.is_empty() {
            return MinMeanMax::default();
        }
        let min = *counts.iter().min().unwrap() as u64;
        let max = *counts.iter().max().unwrap() as u64;
        let mean = counts.iter().sum::<usize>() as f64 / counts.len() as f64;
        MinMeanMax { min, mean, max }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
pub struct RunStats {
    pub instances_total: u64,
    pub records_skipped_errors: u64,
    pub instances_skipped_empty_logic: u64,
    pub expressions_per_context: MinMeanMax,
    pub extension_size: MinMeanMax,
    pub options_with_related_fraction: f64,
    pub pairs_emitted: u64,
}

/// Slimmer stats for the extract/extend steps.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
pub struct IngestStats {
    pub records_total: u64,
    pub records_skipped_errors: u64,
    pub records_written: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use symlogic_core::{extend, identify_context};

    #[test]
    fn expression_record_round_trips_through_the_set() {
        let context = "If you do not have keyboarding skills, then you will not take the class.";
        let set = identify_context(context, None).unwrap();
        let record = ExpressionRecord::from_set("r0", &set);
        let rebuilt = record.to_set().unwrap();
        assert_eq!(rebuilt.render(), set.render());
        assert_eq!(rebuilt.symbols().len(), set.symbols().len());
    }

    #[test]
    fn wire_implication_preserves_provenance() {
        let context = "If you do not have keyboarding skills, then you will not take the class. If you do not take the class, then you will not pass.";
        let set = identify_context(context, None).unwrap();
        let ext = extend(&set);
        for imp in ext.iter() {
            let wire = WireImplication::from(imp);
            let back = wire.to_implication().unwrap();
            assert_eq!(back.key(), imp.key());
            assert_eq!(back.provenance(), imp.provenance());
            assert_eq!(back.depth(), imp.depth());
        }
    }

    #[test]
    fn dense_symbol_ids_are_enforced() {
        let record = ExpressionRecord {
            schema_version: SCHEMA_VERSION,
            id: "x".into(),
            symbols: vec![WireSymbol { id: 3, surface: "phrase".into() }],
            expressions: vec![],
            extension: None,
        };
        assert!(record.to_set().is_err());
    }
}

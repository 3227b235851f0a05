//! Per-instance processing shared by the pipeline and stats commands,
//! plus the ordered parallel runner and stats accumulation.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use symlogic_core::{
    build_pair, extend, identify_context, identify_option, parse_annotated, select_related,
    verbalize_set, ReclorInstance, RelatednessConfig, TemplateGrid,
};

use crate::wire::{
    ExpressionRecord, ExtendedRecord, MinMeanMax, PairLine, RunStats, WireImplication, WireOption,
};

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub seed: u64,
    pub max_related: usize,
    pub overlap_threshold: f64,
    pub negatives_per_instance: u32,
    pub pronouns: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            seed: 0,
            max_related: 2,
            overlap_threshold: 0.5,
            negatives_per_instance: 1,
            pronouns: false,
        }
    }
}

/// Everything computed for one instance.
pub struct InstanceResult {
    pub extended: ExtendedRecord,
    pub pairs: Vec<PairLine>,
    pub expression_count: usize,
    pub extension_count: usize,
    pub options_with_related: usize,
}

/// Plain text of a context or option: annotated JSON collapses to its
/// sentence texts, raw prose stays verbatim.
fn plain_text(field: &str) -> String {
    match parse_annotated(field) {
        Some(sentences) => sentences
            .iter()
            .map(|s| s.text.as_str())
            .collect::<Vec<_>>()
            .join(" "),
        None => field.to_string(),
    }
}

pub fn process_instance(
    instance: &ReclorInstance,
    cfg: &PipelineConfig,
) -> Result<InstanceResult, String> {
    let set = identify_context(&instance.context, None).map_err(|e| e.to_string())?;
    let extension = extend(&set);
    let grid = TemplateGrid::select(cfg.pronouns);
    let relatedness = RelatednessConfig::new(cfg.max_related, cfg.overlap_threshold);
    let context_text = plain_text(&instance.context);

    let mut options = Vec::with_capacity(4);
    let mut options_with_related = 0usize;
    for (option_index, option) in instance.options.iter().enumerate() {
        let mut option_table = set.symbols().clone();
        let (literals, _) =
            identify_option(option, &mut option_table, None).map_err(|e| e.to_string())?;
        let related = select_related(&extension, &literals, &option_table, &relatedness);
        if !related.is_empty() {
            options_with_related += 1;
        }
        let extended_context =
            verbalize_set(related.iter(), set.symbols(), &grid).map_err(|e| e.to_string())?;
        let model_input = symlogic_core::render_model_input(
            &context_text,
            &instance.question,
            &plain_text(option),
            &extended_context,
        );
        options.push(WireOption {
            option_index,
            related_expressions: related.iter().map(WireImplication::from).collect(),
            extended_context,
            model_input,
        });
    }

    let mut pairs = Vec::new();
    if !set.is_empty() && instance.label.is_some() {
        for negative_index in 0..cfg.negatives_per_instance {
            let pair = build_pair(instance, &set, cfg.seed, u64::from(negative_index), &grid)
                .map_err(|e| format!("augmentation failed: {e}"))?;
            pairs.push(PairLine::from(&pair));
        }
    }

    Ok(InstanceResult {
        extended: ExtendedRecord {
            schema_version: crate::wire::SCHEMA_VERSION,
            id: instance.id.clone(),
            label: instance.label,
            options,
        },
        expression_count: set.len(),
        extension_count: extension.len(),
        options_with_related,
        pairs,
    })
}

/// Applies `f` to every item using up to `workers` threads, returning
/// results in input order regardless of scheduling.
pub fn ordered_parallel_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send + Sync,
    F: Fn(&T) -> R + Sync,
{
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let slots: Vec<OnceLock<R>> = (0..items.len()).map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= items.len() {
                    break;
                }
                let result = f(&items[index]);
                let _ = slots[index].set(result);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().expect("every slot filled"))
        .collect()
}

#[derive(Debug, Default, Clone, Copy)]
struct Accum {
    min: u64,
    max: u64,
    sum: u64,
    n: u64,
}

impl Accum {
    fn push(&mut self, value: usize) {
        let value = value as u64;
        if self.n == 0 {
            self.min = value;
            self.max = value;
        } else {
            self.min = self.min.min(value);
            self.max = self.max.max(value);
        }
        self.sum += value;
        self.n += 1;
    }

    fn finish(self) -> MinMeanMax {
        if self.n == 0 {
            return MinMeanMax::default();
        }
        MinMeanMax { min: self.min, mean: self.sum as f64 / self.n as f64, max: self.max }
    }
}

/// Streaming accumulator for [`RunStats`].
#[derive(Debug, Default)]
pub struct StatsAccumulator {
    instances_total: u64,
    records_skipped_errors: u64,
    skipped_empty_logic: u64,
    expressions: Accum,
    extensions: Accum,
    options_seen: u64,
    options_with_related: u64,
    pairs_emitted: u64,
}

impl StatsAccumulator {
    pub fn record_error(&mut self) {
        self.records_skipped_errors += 1;
    }

    pub fn add_record_errors(&mut self, count: u64) {
        self.records_skipped_errors += count;
    }

    pub fn record(&mut self, result: &InstanceResult) {
        self.instances_total += 1;
        if result.expression_count == 0 {
            self.skipped_empty_logic += 1;
        }
        self.expressions.push(result.expression_count);
        self.extensions.push(result.extension_count);
        self.options_seen += result.extended.options.len() as u64;
        self.options_with_related += result.options_with_related as u64;
        self.pairs_emitted += result.pairs.len() as u64;
    }

    pub fn finish(self) -> RunStats {
        RunStats {
            instances_total: self.instances_total,
            records_skipped_errors: self.records_skipped_errors,
            instances_skipped_empty_logic: self.skipped_empty_logic,
            expressions_per_context: self.expressions.finish(),
            extension_size: self.extensions.finish(),
            options_with_related_fraction: if self.options_seen == 0 {
                0.0
            } else {
                self.options_with_related as f64 / self.options_seen as f64
            },
            pairs_emitted: self.pairs_emitted,
        }
    }
}

//! Logical negative-sample construction: randomly delete, reverse or
//! negate one expression of a context's set, guarding against
//! modifications that leave the logic unchanged.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::dataset::ReclorInstance;
use crate::logic::{closure_keys, ExpressionSet, Implication, LogicError};
use crate::verbalize::{verbalize_set, TemplateGrid};

/// Samples drawn beyond the first before the fallback forces a delete.
const MAX_RESAMPLES: u32 = 8;

#[derive(Debug, Error, PartialEq)]
pub enum AugmentError {
    #[error("cannot modify an empty expression set")]
    EmptySet,
    #[error("instance has no gold label, cannot build a contrastive pair")]
    MissingLabel,
    #[error("score inputs must be finite")]
    NonFiniteScore,
    #[error(transparent)]
    Logic(#[from] LogicError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModOp {
    Delete,
    Reverse,
    Negate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NegateSide {
    Antecedent,
    Consequent,
}

/// Audit record of one modification: which op hit which expression,
/// and how many rejected samples preceded it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModificationRecord {
    pub op: ModOp,
    pub target: Implication,
    pub negate_side: Option<NegateSide>,
    pub attempts: u32,
}

impl Serialize for ModificationRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ModificationRecord", 4)?;
        s.serialize_field("op", &self.op)?;
        s.serialize_field("target", &self.target.to_string())?;
        s.serialize_field("negate_side", &self.negate_side)?;
        s.serialize_field("attempts", &self.attempts)?;
        s.end()
    }
}

/// A positive context paired with its logically perturbed counterpart.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContrastivePair {
    pub instance_id: String,
    pub positive_context: String,
    pub negative_context: String,
    pub answer_index: u8,
    pub record: ModificationRecord,
}

/// FNV-1a, fixed so per-instance seeds never depend on library or
/// platform hashing details.
fn fnv1a64(data: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &byte in data {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Per-instance seed: splitmix64 of the run seed XOR the FNV-1a hash of
/// the instance id, with `index` separating multiple negatives per
/// instance (index 0 reduces to the plain mix).
pub fn derive_seed(seed: u64, instance_id: &str, index: u64) -> u64 {
    splitmix64(seed ^ fnv1a64(instance_id.as_bytes()) ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Uniformly picks one expression and one of delete/reverse/negate,
/// deterministically for a given seed. Candidates that fail to change
/// the logic (identical derivation closures), collapse the set size, or
/// produce an invalid expression are resampled up to [`MAX_RESAMPLES`]
/// times; after that a delete is forced.
pub fn modify(
    set: &ExpressionSet,
    rng_seed: u64,
) -> Result<(ExpressionSet, ModificationRecord), AugmentError> {
    if set.is_empty() {
        return Err(AugmentError::EmptySet);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let expressions: Vec<&Implication> = set.iter().collect();
    let original_closure = closure_keys(set);

    for attempt in 0..=MAX_RESAMPLES {
        let target = expressions[rng.gen_range(0..expressions.len())];
        let op = match rng.gen_range(0..3u8) {
            0 => ModOp::Delete,
            1 => ModOp::Reverse,
            _ => ModOp::Negate,
        };
        let negate_side = match op {
            ModOp::Negate => Some(if rng.gen_range(0..2u8) == 0 {
                NegateSide::Antecedent
            } else {
                NegateSide::Consequent
            }),
            _ => None,
        };

        let Some(candidate) = apply(set, target, op, negate_side) else {
            continue;
        };
        // Reverse/negate must keep the cardinality (no dedup collapse).
        if op != ModOp::Delete && candidate.len() != set.len() {
            continue;
        }
        if closure_keys(&candidate) == original_closure {
            continue;
        }
        let record = ModificationRecord { op, target: target.clone(), negate_side, attempts: attempt };
        return Ok((candidate, record));
    }

    // Forced fallback: delete one expression regardless of redundancy.
    let target = expressions[rng.gen_range(0..expressions.len())];
    let candidate = set.without(&target.key()).expect("target came from the set");
    let record = ModificationRecord {
        op: ModOp::Delete,
        target: target.clone(),
        negate_side: None,
        attempts: MAX_RESAMPLES + 1,
    };
    Ok((candidate, record))
}

fn apply(
    set: &ExpressionSet,
    target: &Implication,
    op: ModOp,
    negate_side: Option<NegateSide>,
) -> Option<ExpressionSet> {
    match op {
        ModOp::Delete => set.without(&target.key()),
        ModOp::Reverse => {
            // Literal swap without polarity change; swapping with flips
            // would just be the (equivalent) contrapositive.
            let swapped =
                Implication::modified("reverse", target, target.consequent(), target.antecedent())
                    .ok()?;
            set.replacing(&target.key(), swapped)
        }
        ModOp::Negate => {
            let (a, c) = match negate_side? {
                NegateSide::Antecedent => (target.antecedent().negate(), target.consequent()),
                NegateSide::Consequent => (target.antecedent(), target.consequent().negate()),
            };
            let negated = Implication::modified("negate", target, a, c).ok()?;
            set.replacing(&target.key(), negated)
        }
    }
}

/// Builds the contrastive pair for one instance: the untouched context
/// is the positive sample, the verbalized modified expression set the
/// negative one. The RNG seed comes from [`derive_seed`], so results
/// depend only on (instance id, run seed, negative index).
pub fn build_pair(
    instance: &ReclorInstance,
    set: &ExpressionSet,
    seed: u64,
    negative_index: u64,
    grid: &TemplateGrid,
) -> Result<ContrastivePair, AugmentError> {
    let answer_index = instance.label.ok_or(AugmentError::MissingLabel)?;
    let derived = derive_seed(seed, &instance.id, negative_index);
    let (modified, record) = modify(set, derived)?;
    let negative_context = verbalize_set(modified.iter(), modified.symbols(), grid)?;
    Ok(ContrastivePair {
        instance_id: instance.id.clone(),
        positive_context: instance.context.clone(),
        negative_context,
        answer_index,
        record,
    })
}

/// The ordering contract this data prepares a scorer for: the positive
/// context must strictly outscore the negative one.
pub fn score_contract_check(s_pos: f64, s_neg: f64) -> Result<bool, AugmentError> {
    if !s_pos.is_finite() || !s_neg.is_finite() {
        return Err(AugmentError::NonFiniteScore);
    }
    Ok(s_pos > s_neg)
}

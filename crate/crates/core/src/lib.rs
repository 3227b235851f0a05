//! Symbolic logic toolchain for logical-reasoning reading comprehension:
//! identify conditional expressions in context text, extend them under
//! contraposition and the transitive law, verbalize extensions related
//! to each answer option, and synthesize logic-driven contrastive
//! training pairs.
//!
//! All types are immutable values after construction and every
//! operation is a pure function of its inputs (plus an explicit seed
//! where randomness is involved), so instances can be processed
//! concurrently with deterministic results.

pub mod augment;
pub mod dataset;
pub mod identify;
pub mod logic;
pub mod relate;
pub mod training;
pub mod verbalize;

pub use augment::{
    build_pair, derive_seed, modify, score_contract_check, AugmentError, ContrastivePair,
    ModOp, ModificationRecord, NegateSide,
};
pub use dataset::ReclorInstance;
pub use identify::{
    identify_context, identify_option, parse_annotated, AnnotatedSentence, ConstituentSpan,
    ConstituentSupplier,
};
pub use logic::{
    closure_keys, compose, contrapose, entails, entails_with_bound, extend, ExpressionSet,
    Implication, ImplicationKey, Literal, LogicError, Polarity, Provenance, Symbol, SymbolId,
    SymbolTable,
};
pub use relate::{is_related, select_related, RelatednessConfig};
pub use training::{answer_loss, combined_loss, contrastive_loss, ScoreVector, TrainingError};
pub use verbalize::{
    render_baseline_input, render_model_input, verbalize, verbalize_set, TemplateGrid,
};

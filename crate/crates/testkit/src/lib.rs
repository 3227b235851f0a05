//! Shared test support: independent oracles (reachability, truth
//! tables) and seeded generators. Dev-dependency only; never part of
//! the shipped library surface.

pub mod gen;
pub mod oracle;

pub use gen::{
    random_clean_implication, random_consistent_set, random_set, rng, synthetic_corpus,
    synthetic_instance_json, WORD_POOL,
};
pub use oracle::{
    extension_oracle, is_consistent, models, truth_table_entails, truth_table_equivalent,
};

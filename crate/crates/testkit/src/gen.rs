//! Seeded random generators: expression sets for oracle comparison,
//! clean-surface implications for round-trip checks, and a synthetic
//! corpus in the input dataset format.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symlogic_core::{ExpressionSet, Implication, Literal, Polarity, SymbolId, SymbolTable};

use crate::oracle::is_consistent;

/// Content words absent from every identification stoplist; surfaces
/// built from them survive the verbalize/identify round trip verbatim.
pub const WORD_POOL: &[&str] = &[
    "practice", "discipline", "focus", "budget", "harvest", "signal", "network", "garden",
    "puzzle", "ledger", "journey", "market", "engine", "recipe", "anthem", "bridge", "canvas",
    "compass", "desert", "fabric", "glacier", "harbor", "island", "jacket", "kernel", "lantern",
    "meadow", "needle", "orchard", "pepper", "quarry", "ribbon", "saddle", "temple", "valley",
    "walnut", "academy", "balance", "cascade", "dolphin", "ember", "falcon", "granite",
    "horizon", "ivory", "jungle", "mosaic", "violin",
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn numbered_table(n: usize) -> SymbolTable {
    let mut table = SymbolTable::new();
    for i in 0..n {
        table.intern(&format!("generated phrase {i}"), None).unwrap();
    }
    table
}

fn random_literal(rng: &mut impl Rng, n: usize) -> Literal {
    let symbol = SymbolId(rng.gen_range(0..n) as u32);
    if rng.gen_bool(0.5) {
        Literal { symbol, polarity: Polarity::Negated }
    } else {
        Literal { symbol, polarity: Polarity::Positive }
    }
}

/// Random expression set with up to `max_symbols` symbols and
/// `max_expressions` implications (possibly empty, possibly cyclic).
pub fn random_set(rng: &mut impl Rng, max_symbols: usize, max_expressions: usize) -> ExpressionSet {
    let n = rng.gen_range(1..=max_symbols);
    let mut set = ExpressionSet::new(numbered_table(n));
    let wanted = rng.gen_range(0..=max_expressions);
    for _ in 0..wanted * 3 {
        if set.len() >= wanted {
            break;
        }
        let a = random_literal(rng, n);
        let c = random_literal(rng, n);
        if a == c {
            continue;
        }
        let imp = Implication::explicit(a, c, 0, "generated").unwrap();
        set.insert(imp).unwrap();
    }
    set
}

/// Non-degenerate augmentation input: non-empty, implications connect
/// two distinct symbols (as identification produces), and no literal of
/// the closure graph forces a contradiction.
pub fn random_consistent_set(
    rng: &mut impl Rng,
    max_symbols: usize,
    max_expressions: usize,
) -> ExpressionSet {
    loop {
        let n = rng.gen_range(2..=max_symbols);
        let mut set = ExpressionSet::new(numbered_table(n));
        let wanted = rng.gen_range(1..=max_expressions);
        for _ in 0..wanted * 3 {
            if set.len() >= wanted {
                break;
            }
            let a = random_literal(rng, n);
            let c = random_literal(rng, n);
            if a.symbol == c.symbol {
                continue;
            }
            let imp = Implication::explicit(a, c, 0, "generated").unwrap();
            set.insert(imp).unwrap();
        }
        if !set.is_empty() && is_consistent(&set) {
            return set;
        }
    }
}

/// Draws `words` pool words without replacement, excluding any already
/// used, and joins them into a surface.
fn fresh_surface(rng: &mut impl Rng, words: usize, used: &mut Vec<&'static str>) -> String {
    let mut available: Vec<&'static str> =
        WORD_POOL.iter().copied().filter(|w| !used.contains(w)).collect();
    available.shuffle(rng);
    let chosen: Vec<&'static str> = available.into_iter().take(words).collect();
    assert!(chosen.len() == words, "word pool exhausted");
    used.extend(chosen.iter().copied());
    chosen.join(" ")
}

/// A random implication over two fresh clean surfaces (two to five
/// words each, disjoint), plus its table.
pub fn random_clean_implication(rng: &mut impl Rng) -> (Implication, SymbolTable) {
    let mut used = Vec::new();
    let a_words = rng.gen_range(2..=5);
    let a_surface = fresh_surface(rng, a_words, &mut used);
    let c_words = rng.gen_range(2..=5);
    let c_surface = fresh_surface(rng, c_words, &mut used);
    let mut table = SymbolTable::new();
    let a_id = table.intern(&a_surface, None).unwrap();
    let c_id = table.intern(&c_surface, None).unwrap();
    let a = Literal { symbol: a_id, polarity: random_polarity(rng) };
    let c = Literal { symbol: c_id, polarity: random_polarity(rng) };
    (Implication::explicit(a, c, 0, "generated").unwrap(), table)
}

fn random_polarity(rng: &mut impl Rng) -> Polarity {
    if rng.gen_bool(0.5) {
        Polarity::Negated
    } else {
        Polarity::Positive
    }
}

/// One synthetic instance in the input dataset schema, as a JSON line.
/// Contexts are negated conditional chains over pool-word surfaces, so
/// identification finds a non-trivial expression set; every seventh
/// instance gets a logic-free context to exercise the skip path.
pub fn synthetic_instance_json(rng: &mut impl Rng, index: usize) -> String {
    let id = format!("syn_{index:05}");
    if index % 7 == 3 {
        let instance = serde_json::json!({
            "id_string": id,
            "context": "The committee met quietly and adjourned early.",
            "question": "Which option follows from the passage?",
            "answers": ["First option.", "Second option.", "Third option.", "Fourth option."],
            "label": rng.gen_range(0..4),
        });
        return instance.to_string();
    }

    let mut used = Vec::new();
    let chain_len = rng.gen_range(3..=4);
    let surfaces: Vec<String> =
        (0..chain_len).map(|_| fresh_surface(rng, 2, &mut used)).collect();

    let mut context = String::new();
    for pair in surfaces.windows(2) {
        if !context.is_empty() {
            context.push(' ');
        }
        context.push_str(&format!(
            "If you do not keep the {}, then you will not keep the {}.",
            pair[0], pair[1]
        ));
    }

    let first = &surfaces[0];
    let last = &surfaces[chain_len - 1];
    let mid = &surfaces[1];
    let answers = vec![
        format!("If you keep the {last}, then you will keep the {first}."),
        format!("You will not keep the {last}."),
        format!("If you keep the {mid}, then you will keep the {first}."),
        "The committee applauds the decision.".to_string(),
    ];

    let instance = serde_json::json!({
        "id_string": id,
        "context": context,
        "question": "Which option follows from the passage?",
        "answers": answers,
        "label": rng.gen_range(0..4),
    });
    instance.to_string()
}

/// A whole synthetic corpus as JSONL text.
pub fn synthetic_corpus(seed: u64, count: usize) -> String {
    let mut rng = rng(seed);
    let mut out = String::new();
    for i in 0..count {
        out.push_str(&synthetic_instance_json(&mut rng, i));
        out.push('\n');
    }
    out
}

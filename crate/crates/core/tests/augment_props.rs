//! Augmentation guarantees: determinism, subset/cardinality shape,
//! genuine logical difference (against the truth-table oracle), and
//! uniform sampling.

use std::collections::BTreeMap;

use rand::Rng;

use symlogic_core::{
    build_pair, derive_seed, modify, ExpressionSet, Implication, Literal, ModOp, ReclorInstance,
    SymbolId, SymbolTable, TemplateGrid,
};
use symlogic_testkit::{random_consistent_set, rng, truth_table_equivalent};

fn instance(id: &str) -> ReclorInstance {
    ReclorInstance {
        id: id.to_string(),
        context: format!("original context for {id}"),
        question: "q".to_string(),
        options: ["a", "b", "c", "d"].map(String::from),
        label: Some(2),
    }
}

#[test]
fn seeded_pairs_are_sound_and_reproducible() {
    let mut rng = rng(0xab5e_1234);
    let grid = TemplateGrid::default();
    for case in 0..500 {
        let set = random_consistent_set(&mut rng, 8, 10);
        let inst = instance(&format!("case_{case}"));
        let seed = rng.gen::<u64>();

        let derived = derive_seed(seed, &inst.id, 0);
        let (modified, record) = modify(&set, derived).unwrap();

        match record.op {
            ModOp::Delete => {
                assert_eq!(modified.len(), set.len() - 1, "case {case}");
                for key in modified.keys() {
                    assert!(set.contains_key(key), "case {case}: delete added something");
                }
            }
            ModOp::Reverse | ModOp::Negate => {
                assert_eq!(modified.len(), set.len(), "case {case}");
                assert!(
                    !truth_table_equivalent(&set, &modified),
                    "case {case}: emitted an equivalent set\noriginal:\n{}\nmodified:\n{}",
                    set.render(),
                    modified.render()
                );
            }
        }

        let pair = build_pair(&inst, &set, seed, 0, &grid).unwrap();
        let rerun = build_pair(&inst, &set, seed, 0, &grid).unwrap();
        assert_eq!(
            serde_json::to_string(&pair).unwrap(),
            serde_json::to_string(&rerun).unwrap(),
            "case {case}: same seed must give identical bytes"
        );
        assert_eq!(pair.positive_context, inst.context);
    }
}

#[test]
fn accepted_deletes_also_change_the_logic() {
    let mut rng = rng(0xab5e_9999);
    for case in 0..200 {
        let set = random_consistent_set(&mut rng, 8, 10);
        let (modified, record) = modify(&set, rng.gen()).unwrap();
        if record.op == ModOp::Delete && record.attempts <= 8 {
            assert!(
                !truth_table_equivalent(&set, &modified),
                "case {case}: non-forced delete left the logic unchanged"
            );
        }
    }
}

#[test]
fn sampling_is_uniform_over_expression_op_cells() {
    // Three disjoint expressions: every (expression, op) choice is valid
    // on the first draw, so no trials are excluded for resampling.
    let mut table = SymbolTable::new();
    for i in 0..6 {
        table.intern(&format!("cell phrase {i}"), None).unwrap();
    }
    let mut set = ExpressionSet::new(table);
    for i in 0..3u32 {
        set.insert(
            Implication::explicit(
                Literal::positive(SymbolId(2 * i)),
                Literal::positive(SymbolId(2 * i + 1)),
                0,
                "cell",
            )
            .unwrap(),
        )
        .unwrap();
    }

    let trials = 30_000u32;
    let mut counts: BTreeMap<(String, ModOp), u32> = BTreeMap::new();
    for seed in 0..trials {
        let (_, record) = modify(&set, u64::from(seed)).unwrap();
        assert_eq!(record.attempts, 0, "seed {seed} resampled unexpectedly");
        *counts.entry((record.target.to_string(), record.op)).or_default() += 1;
    }

    assert_eq!(counts.len(), 9);
    let expected = f64::from(trials) / 9.0;
    for ((target, op), count) in counts {
        let relative = (f64::from(count) - expected).abs() / expected;
        assert!(
            relative < 0.05,
            "cell ({target}, {op:?}) off by {relative:.3} relative ({count} vs {expected})"
        );
    }
}

#[test]
fn negatives_per_instance_draw_independent_seeds() {
    let mut rng = rng(0xab5e_7777);
    let grid = TemplateGrid::default();
    let set = random_consistent_set(&mut rng, 6, 6);
    let inst = instance("multi");
    let a = build_pair(&inst, &set, 11, 0, &grid).unwrap();
    let b = build_pair(&inst, &set, 11, 1, &grid).unwrap();
    let a_json = serde_json::to_string(&a).unwrap();
    assert_eq!(a_json, serde_json::to_string(&build_pair(&inst, &set, 11, 0, &grid).unwrap()).unwrap());
    // Different indices may coincide by chance in tiny sets, but the
    // records must at least be derived from different seeds.
    assert_ne!(derive_seed(11, &inst.id, 0), derive_seed(11, &inst.id, 1));
    let _ = b;
}

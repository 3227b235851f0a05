//! Verbalize/identify duality: rendering an implication and running
//! identification on the sentence recovers exactly that implication.

use symlogic_core::{identify_context, verbalize, Implication, SymbolTable, TemplateGrid};
use symlogic_testkit::{random_clean_implication, rng};

fn assert_round_trips(imp: &Implication, table: &SymbolTable) {
    let sentence = verbalize(imp, table, &TemplateGrid::default()).unwrap();
    let recovered = identify_context(&sentence, None).unwrap();
    assert_eq!(recovered.len(), 1, "sentence {sentence:?} gave\n{}", recovered.render());
    let got = recovered.iter().next().unwrap();
    let got_table = recovered.symbols();

    let want_a = table.surface(imp.antecedent().symbol).unwrap();
    let want_c = table.surface(imp.consequent().symbol).unwrap();
    assert_eq!(got_table.surface(got.antecedent().symbol).unwrap(), want_a);
    assert_eq!(got_table.surface(got.consequent().symbol).unwrap(), want_c);
    assert_eq!(got.antecedent().polarity, imp.antecedent().polarity);
    assert_eq!(got.consequent().polarity, imp.consequent().polarity);
}

#[test]
fn random_clean_implications_round_trip() {
    let mut rng = rng(0xd0a1_cafe);
    for _ in 0..500 {
        let (imp, table) = random_clean_implication(&mut rng);
        assert_round_trips(&imp, &table);
    }
}

#[test]
fn worked_surfaces_round_trip_in_all_polarities() {
    use symlogic_core::{Literal, Polarity, SymbolId};
    let mut table = SymbolTable::new();
    table.intern("have keyboarding skills", None).unwrap();
    table.intern("take the class", None).unwrap();
    for a_pol in [Polarity::Positive, Polarity::Negated] {
        for c_pol in [Polarity::Positive, Polarity::Negated] {
            let imp = Implication::explicit(
                Literal { symbol: SymbolId(0), polarity: a_pol },
                Literal { symbol: SymbolId(1), polarity: c_pol },
                0,
                "case",
            )
            .unwrap();
            assert_round_trips(&imp, &table);
        }
    }
}

#[test]
fn verbalized_sets_identify_back_as_sets() {
    // Two chained expressions rendered together come back as both.
    use symlogic_core::{extend, verbalize_set, ExpressionSet, Literal, SymbolId};
    let mut table = SymbolTable::new();
    table.intern("keep the practice schedule", None).unwrap();
    table.intern("finish the group project", None).unwrap();
    table.intern("earn the final grade", None).unwrap();
    let mut set = ExpressionSet::new(table);
    for (a, c) in [(0u32, 1u32), (1, 2)] {
        set.insert(
            Implication::explicit(
                Literal::negated(SymbolId(a)),
                Literal::negated(SymbolId(c)),
                0,
                "case",
            )
            .unwrap(),
        )
        .unwrap();
    }
    let text = verbalize_set(set.iter(), set.symbols(), &TemplateGrid::default()).unwrap();
    let recovered = identify_context(&text, None).unwrap();
    assert_eq!(recovered.render(), set.render());
    // The extension of the recovered set matches the original's.
    assert_eq!(extend(&recovered).render(), extend(&set).render());
}

//! Property tests over the symbolic core.

use proptest::prelude::*;

use symlogic_core::{
    compose, contrapose, extend, ExpressionSet, Implication, Literal, Polarity, RelatednessConfig,
    SymbolId, SymbolTable,
};

fn literal_strategy(max_symbols: u32) -> impl Strategy<Value = Literal> {
    (0..max_symbols, any::<bool>()).prop_map(|(id, neg)| Literal {
        symbol: SymbolId(id),
        polarity: if neg { Polarity::Negated } else { Polarity::Positive },
    })
}

fn implication_strategy(max_symbols: u32) -> impl Strategy<Value = Implication> {
    (literal_strategy(max_symbols), literal_strategy(max_symbols))
        .prop_filter("non-reflexive", |(a, c)| a != c)
        .prop_map(|(a, c)| Implication::explicit(a, c, 0, "prop").unwrap())
}

fn set_strategy(max_symbols: u32, max_len: usize) -> impl Strategy<Value = ExpressionSet> {
    proptest::collection::vec(implication_strategy(max_symbols), 0..=max_len).prop_map(
        move |imps| {
            let mut table = SymbolTable::new();
            for i in 0..max_symbols {
                table.intern(&format!("prop phrase {i}"), None).unwrap();
            }
            let mut set = ExpressionSet::new(table);
            for imp in imps {
                set.insert(imp).unwrap();
            }
            set
        },
    )
}

proptest! {
    #[test]
    fn negate_is_involutive(lit in literal_strategy(64)) {
        prop_assert_eq!(lit.negate().negate(), lit);
        prop_assert_ne!(lit.negate(), lit);
    }

    #[test]
    fn contrapose_is_involutive(imp in implication_strategy(16)) {
        let back = contrapose(&contrapose(&imp));
        prop_assert_eq!(back.key(), imp.key());
    }

    #[test]
    fn compose_agrees_with_chaining(a in implication_strategy(6), b in implication_strategy(6)) {
        match compose(&a, &b) {
            Some(chained) => {
                prop_assert_eq!(a.consequent(), b.antecedent());
                prop_assert_eq!(chained.antecedent(), a.antecedent());
                prop_assert_eq!(chained.consequent(), b.consequent());
            }
            None => {
                let no_chain = a.consequent() != b.antecedent();
                let reflexive = a.antecedent() == b.consequent();
                prop_assert!(no_chain || reflexive);
            }
        }
    }

    #[test]
    fn extend_never_returns_input_or_reflexive_members(set in set_strategy(6, 10)) {
        let ext = extend(&set);
        for key in ext.keys() {
            prop_assert!(!set.contains_key(key));
            prop_assert_ne!(key.0, key.1);
        }
        let n = set.symbols().len();
        prop_assert!(set.len() + ext.len() <= 2 * n * (2 * n - 1));
    }

    #[test]
    fn select_related_output_is_a_capped_prefix(
        set in set_strategy(6, 10),
        lits in proptest::collection::vec(literal_strategy(6), 1..4),
        cap in 1usize..5,
    ) {
        let ext = extend(&set);
        let capped = symlogic_core::select_related(
            &ext, &lits, ext.symbols(), &RelatednessConfig::new(cap, 0.5),
        );
        let full = symlogic_core::select_related(
            &ext, &lits, ext.symbols(), &RelatednessConfig::new(usize::MAX, 0.5),
        );
        prop_assert!(capped.len() <= cap);
        prop_assert_eq!(&capped[..], &full[..capped.len().min(full.len())]);
        for imp in &capped {
            prop_assert!(symlogic_core::is_related(
                imp, &lits, ext.symbols(), &RelatednessConfig::new(cap, 0.5),
            ));
        }
    }
}

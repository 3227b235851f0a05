//! Inference over implication sets: contraposition, the transitive law,
//! fixpoint extension, and a brute-force entailment check.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{
    ExpressionSet, Implication, ImplicationKey, Literal, LogicError, Provenance,
    DEFAULT_ENTAILMENT_BOUND,
};

/// Contrapositive: `(a -> b)` becomes `(!b -> !a)`. Never reflexive when
/// the input is not, so this cannot fail.
pub fn contrapose(imp: &Implication) -> Implication {
    Implication::with_provenance(
        imp.consequent().negate(),
        imp.antecedent().negate(),
        Provenance::Contraposition { parent: imp.key() },
        imp.depth() + 1,
    )
    .expect("contrapositive of a non-reflexive implication is non-reflexive")
}

/// Transitive law: `(a -> b)` and `(b -> c)` chain to `(a -> c)` when the
/// middle literals agree exactly. Absent when they do not chain or the
/// result would be reflexive.
pub fn compose(left: &Implication, right: &Implication) -> Option<Implication> {
    if left.consequent() != right.antecedent() {
        return None;
    }
    Implication::with_provenance(
        left.antecedent(),
        right.consequent(),
        Provenance::Transitivity { left: left.key(), right: right.key() },
        left.depth() + right.depth() + 1,
    )
    .ok()
}

/// Fixpoint closure of `set` under [`contrapose`] and [`compose`], minus
/// the members of `set` itself. Reflexive candidates never survive
/// construction, so the result holds only new, non-trivial expressions
/// in canonical order.
pub fn extend(set: &ExpressionSet) -> ExpressionSet {
    let saturated = saturate(set);
    let mut extension = ExpressionSet::new(set.symbols().clone());
    for (key, imp) in &saturated {
        if !set.contains_key(key) {
            extension
                .insert(imp.clone())
                .expect("saturation only uses symbols from the input table");
        }
    }
    extension
}

/// Keys of `set` together with everything derivable from it; two sets
/// over the same symbol table are equivalent under the two inference
/// rules exactly when their closures coincide.
pub fn closure_keys(set: &ExpressionSet) -> BTreeSet<ImplicationKey> {
    saturate(set).into_keys().collect()
}

fn saturate(set: &ExpressionSet) -> BTreeMap<ImplicationKey, Implication> {
    let mut all: BTreeMap<ImplicationKey, Implication> = BTreeMap::new();
    // Adjacency maps keep composition linear in the neighbour count and
    // the processing order deterministic.
    let mut out_edges: BTreeMap<Literal, BTreeSet<Literal>> = BTreeMap::new();
    let mut in_edges: BTreeMap<Literal, BTreeSet<Literal>> = BTreeMap::new();
    let mut queue: VecDeque<ImplicationKey> = VecDeque::new();

    let push = |imp: Implication,
                    all: &mut BTreeMap<ImplicationKey, Implication>,
                    out_edges: &mut BTreeMap<Literal, BTreeSet<Literal>>,
                    in_edges: &mut BTreeMap<Literal, BTreeSet<Literal>>,
                    queue: &mut VecDeque<ImplicationKey>| {
        let key = imp.key();
        if all.contains_key(&key) {
            return;
        }
        out_edges.entry(key.0).or_default().insert(key.1);
        in_edges.entry(key.1).or_default().insert(key.0);
        all.insert(key, imp);
        queue.push_back(key);
    };

    for imp in set.iter() {
        push(imp.clone(), &mut all, &mut out_edges, &mut in_edges, &mut queue);
    }

    while let Some(key) = queue.pop_front() {
        let current = all[&key].clone();
        push(contrapose(&current), &mut all, &mut out_edges, &mut in_edges, &mut queue);

        let successors: Vec<Literal> = out_edges
            .get(&current.consequent())
            .map(|s| s.iter().copied().collect())
            .unwrap_or_default();
        for succ in successors {
            let right = all[&(current.consequent(), succ)].clone();
            if let Some(chained) = compose(&current, &right) {
                push(chained, &mut all, &mut out_edges, &mut in_edges, &mut queue);
            }
        }

        let predecessors: Vec<Literal> = in_edges
            .get(&current.antecedent())
            .map(|s| s.iter().copied().collect())
            .unwrap_or_default();
        for pred in predecessors {
            let left = all[&(pred, current.antecedent())].clone();
            if let Some(chained) = compose(&left, &current) {
                push(chained, &mut all, &mut out_edges, &mut in_edges, &mut queue);
            }
        }
    }

    all
}

/// Brute-force semantic entailment: true iff every truth assignment
/// satisfying all of `set` (implications read materially) also satisfies
/// `query`. Enumerates 2^n assignments, so `n` is capped by `bound`.
pub fn entails_with_bound(
    set: &ExpressionSet,
    query: &Implication,
    bound: usize,
) -> Result<bool, LogicError> {
    let n = set.symbols().len();
    if n > bound {
        return Err(LogicError::BoundExceeded { symbols: n, bound });
    }
    for lit in query.literals() {
        if !set.symbols().contains(lit.symbol) {
            return Err(LogicError::UnresolvedSymbol(lit.symbol));
        }
    }

    let holds = |lit: Literal, assignment: u64| -> bool {
        let value = assignment >> lit.symbol.index() & 1 == 1;
        value != lit.is_negated()
    };
    let satisfies = |imp: &Implication, assignment: u64| -> bool {
        !holds(imp.antecedent(), assignment) || holds(imp.consequent(), assignment)
    };

    for assignment in 0..1u64 << n {
        let model = set.iter().all(|imp| satisfies(imp, assignment));
        if model && !satisfies(query, assignment) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`entails_with_bound`] at the default bound.
pub fn entails(set: &ExpressionSet, query: &Implication) -> Result<bool, LogicError> {
    entails_with_bound(set, query, DEFAULT_ENTAILMENT_BOUND)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{SymbolId, SymbolTable};

    fn table(n: u32) -> SymbolTable {
        let mut t = SymbolTable::new();
        for i in 0..n {
            t.intern(&format!("symbol {i}"), None).unwrap();
        }
        t
    }

    fn pos(id: u32) -> Literal {
        Literal::positive(SymbolId(id))
    }

    fn neg(id: u32) -> Literal {
        Literal::negated(SymbolId(id))
    }

    fn imp(a: Literal, c: Literal) -> Implication {
        Implication::explicit(a, c, 0, "test").unwrap()
    }

    fn set_of(n: u32, imps: &[Implication]) -> ExpressionSet {
        let mut s = ExpressionSet::new(table(n));
        for i in imps {
            s.insert(i.clone()).unwrap();
        }
        s
    }

    #[test]
    fn contrapose_negated_pair() {
        // (!a -> !b) has contrapositive (b -> a).
        let c = contrapose(&imp(neg(0), neg(1)));
        assert_eq!(c.key(), (pos(1), pos(0)));
        let c2 = contrapose(&imp(pos(0), pos(1)));
        assert_eq!(c2.key(), (neg(1), neg(0)));
    }

    #[test]
    fn contrapose_is_an_involution() {
        let original = imp(neg(3), pos(7));
        let twice = contrapose(&contrapose(&original));
        assert_eq!(twice, original);
        assert_eq!(twice.depth(), 2);
    }

    #[test]
    fn compose_chains_on_matching_middle_literal() {
        let chained = compose(&imp(neg(0), neg(1)), &imp(neg(1), neg(2))).unwrap();
        assert_eq!(chained.key(), (neg(0), neg(2)));
    }

    #[test]
    fn compose_requires_exact_chain() {
        // No shared middle literal.
        assert!(compose(&imp(pos(0), pos(1)), &imp(pos(2), pos(3))).is_none());
        // Polarity mismatch on the middle literal.
        assert!(compose(&imp(pos(0), pos(1)), &imp(neg(1), pos(2))).is_none());
        // Reflexive result.
        assert!(compose(&imp(pos(0), pos(1)), &imp(pos(1), pos(0))).is_none());
    }

    #[test]
    fn extend_worked_example() {
        // S = {(!a0 -> !a1), (!a1 -> !a2)} extends to exactly
        // {(a1 -> a0), (a2 -> a1), (!a0 -> !a2), (a2 -> a0)}.
        let s = set_of(3, &[imp(neg(0), neg(1)), imp(neg(1), neg(2))]);
        let ext = extend(&s);
        let keys: BTreeSet<_> = ext.keys().copied().collect();
        let expected: BTreeSet<ImplicationKey> = [
            (pos(1), pos(0)),
            (pos(2), pos(1)),
            (neg(0), neg(2)),
            (pos(2), pos(0)),
        ]
        .into_iter()
        .collect();
        assert_eq!(keys, expected);
        assert_eq!(
            ext.render(),
            "(!a0 -> !a2)\n(a1 -> a0)\n(a2 -> a0)\n(a2 -> a1)"
        );
    }

    #[test]
    fn extend_empty_set_is_empty() {
        let s = set_of(2, &[]);
        assert!(extend(&s).is_empty());
    }

    #[test]
    fn extend_reaches_a_fixpoint() {
        let s = set_of(3, &[imp(neg(0), neg(1)), imp(neg(1), neg(2))]);
        let ext = extend(&s);
        let mut union = s.clone();
        for i in ext.iter() {
            union.insert(i.clone()).unwrap();
        }
        assert!(extend(&union).is_empty());
    }

    #[test]
    fn extension_is_disjoint_from_input_and_bounded() {
        let s = set_of(4, &[imp(pos(0), pos(1)), imp(pos(1), pos(2)), imp(pos(2), pos(3))]);
        let ext = extend(&s);
        for key in ext.keys() {
            assert!(!s.contains_key(key));
            assert_ne!(key.0, key.1);
        }
        let n = s.symbols().len();
        assert!(s.len() + ext.len() <= 2 * n * (2 * n - 1));
    }

    #[test]
    fn entails_contrapositive_of_single_expression() {
        let s = set_of(2, &[imp(neg(0), neg(1))]);
        assert!(entails(&s, &imp(pos(1), pos(0))).unwrap());
    }

    #[test]
    fn empty_set_entails_nothing_contingent() {
        let s = set_of(2, &[]);
        assert!(!entails(&s, &imp(pos(0), pos(1))).unwrap());
    }

    #[test]
    fn entails_transitive_contrapositive() {
        // From the two negated chain expressions, (a2 -> a0) follows.
        let s = set_of(3, &[imp(neg(0), neg(1)), imp(neg(1), neg(2))]);
        assert!(entails(&s, &imp(pos(2), pos(0))).unwrap());
        assert!(!entails(&s, &imp(pos(0), pos(2))).unwrap());
    }

    #[test]
    fn entails_respects_the_symbol_bound() {
        let s = set_of(5, &[imp(pos(0), pos(1))]);
        let err = entails_with_bound(&s, &imp(pos(0), pos(1)), 4).unwrap_err();
        assert_eq!(err, LogicError::BoundExceeded { symbols: 5, bound: 4 });
    }

    #[test]
    fn every_extension_member_is_entailed() {
        let s = set_of(3, &[imp(neg(0), neg(1)), imp(neg(1), neg(2))]);
        for member in extend(&s).iter() {
            assert!(entails(&s, member).unwrap(), "not entailed: {member}");
        }
    }
}

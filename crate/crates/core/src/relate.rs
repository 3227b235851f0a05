//! Selecting the extension expressions related to an option.

use crate::logic::{
    content_token_set, jaccard, normalize_surface, ExpressionSet, Implication, Literal,
    Provenance, SymbolTable,
};

/// Knobs for relatedness selection. `max_related` caps how many
/// expressions an option may receive; the overlap threshold governs
/// surface matching between differently-minted symbols.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelatednessConfig {
    pub max_related: usize,
    pub overlap_threshold: f64,
}

impl Default for RelatednessConfig {
    fn default() -> Self {
        RelatednessConfig { max_related: 2, overlap_threshold: 0.5 }
    }
}

impl RelatednessConfig {
    pub fn new(max_related: usize, overlap_threshold: f64) -> Self {
        assert!(max_related >= 1, "max_related must be at least 1");
        RelatednessConfig { max_related, overlap_threshold }
    }
}

fn literals_match(a: Literal, b: Literal, table: &SymbolTable, threshold: f64) -> bool {
    if a.polarity != b.polarity {
        return false;
    }
    if a.symbol == b.symbol {
        return true;
    }
    let (Ok(sa), Ok(sb)) = (table.surface(a.symbol), table.surface(b.symbol)) else {
        return false;
    };
    if normalize_surface(sa) == normalize_surface(sb) {
        return true;
    }
    jaccard(&content_token_set(sa), &content_token_set(sb)) >= threshold
}

/// An expression relates to an option when one of its literals names
/// the same symbol as an option literal, with the same polarity.
pub fn is_related(
    expression: &Implication,
    option_literals: &[Literal],
    table: &SymbolTable,
    cfg: &RelatednessConfig,
) -> bool {
    expression.literals().iter().any(|&lit| {
        option_literals
            .iter()
            .any(|&opt| literals_match(lit, opt, table, cfg.overlap_threshold))
    })
}

fn matching_literal_count(
    expression: &Implication,
    option_literals: &[Literal],
    table: &SymbolTable,
    threshold: f64,
) -> usize {
    expression
        .literals()
        .iter()
        .filter(|&&lit| {
            option_literals
                .iter()
                .any(|&opt| literals_match(lit, opt, table, threshold))
        })
        .count()
}

fn provenance_rank(p: &Provenance) -> u8 {
    match p {
        Provenance::Explicit { .. } => 0,
        Provenance::Contraposition { .. } => 1,
        Provenance::Transitivity { .. } => 2,
        Provenance::Modified { .. } => 3,
    }
}

/// Filters the extension set by relatedness, ranks by (matching literal
/// count desc, derivation depth asc, provenance kind, canonical order)
/// and truncates to `max_related`. The output is a prefix of the full
/// ranking, so raising the cap never drops a previously chosen
/// expression.
pub fn select_related(
    extension: &ExpressionSet,
    option_literals: &[Literal],
    table: &SymbolTable,
    cfg: &RelatednessConfig,
) -> Vec<Implication> {
    let mut candidates: Vec<(usize, &Implication)> = extension
        .iter()
        .filter(|imp| is_related(imp, option_literals, table, cfg))
        .map(|imp| {
            (matching_literal_count(imp, option_literals, table, cfg.overlap_threshold), imp)
        })
        .collect();
    candidates.sort_by(|(count_a, a), (count_b, b)| {
        count_b
            .cmp(count_a)
            .then(a.depth().cmp(&b.depth()))
            .then(provenance_rank(a.provenance()).cmp(&provenance_rank(b.provenance())))
            .then(a.key().cmp(&b.key()))
    });
    candidates
        .into_iter()
        .take(cfg.max_related)
        .map(|(_, imp)| imp.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{extend, Literal, SymbolId, SymbolTable};

    fn neg(id: u32) -> Literal {
        Literal::negated(SymbolId(id))
    }

    fn pos(id: u32) -> Literal {
        Literal::positive(SymbolId(id))
    }

    fn worked_extension() -> ExpressionSet {
        let mut table = SymbolTable::new();
        table.intern("have keyboarding skills", None).unwrap();
        table.intern("take the class", None).unwrap();
        table
            .intern("be able to write your essays using a word processing program", None)
            .unwrap();
        let mut s = ExpressionSet::new(table);
        s.insert(Implication::explicit(neg(0), neg(1), 0, "if_comma_then").unwrap()).unwrap();
        s.insert(Implication::explicit(neg(1), neg(2), 1, "if_comma_then").unwrap()).unwrap();
        extend(&s)
    }

    #[test]
    fn shared_negated_literal_relates() {
        let ext = worked_extension();
        let cfg = RelatednessConfig::default();
        let target = ext.get(&(neg(0), neg(2))).unwrap();
        assert!(is_related(target, &[neg(2)], ext.symbols(), &cfg));
    }

    #[test]
    fn polarity_mismatch_does_not_relate() {
        let ext = worked_extension();
        let cfg = RelatednessConfig::default();
        let target = ext.get(&(neg(0), neg(2))).unwrap();
        assert!(!is_related(target, &[pos(2)], ext.symbols(), &cfg));
    }

    #[test]
    fn disjoint_symbols_do_not_relate() {
        let ext = worked_extension();
        let cfg = RelatednessConfig::default();
        let mut table = ext.symbols().clone();
        let other = table.intern("entirely different topic", None).unwrap();
        let target = ext.get(&(pos(1), pos(0))).unwrap();
        assert!(!is_related(target, &[Literal::positive(other)], &table, &cfg));
    }

    #[test]
    fn option_matching_both_literals_ranks_first() {
        let ext = worked_extension();
        let cfg = RelatednessConfig::default();
        let selected = select_related(&ext, &[pos(2), pos(0)], ext.symbols(), &cfg);
        assert_eq!(selected.len(), 2);
        // (a2 -> a0) matches both option literals and leads the ranking.
        assert_eq!(selected[0].key(), (pos(2), pos(0)));
    }

    #[test]
    fn empty_extension_selects_nothing() {
        let table = SymbolTable::new();
        let ext = ExpressionSet::new(table);
        let cfg = RelatednessConfig::default();
        assert!(select_related(&ext, &[pos(0)], ext.symbols(), &cfg).is_empty());
    }

    #[test]
    fn cap_and_prefix_monotonicity() {
        let ext = worked_extension();
        let lits = [pos(0), pos(1), pos(2), neg(0), neg(1), neg(2)];
        let capped = select_related(
            &ext,
            &lits,
            ext.symbols(),
            &RelatednessConfig::new(2, 0.5),
        );
        let full = select_related(
            &ext,
            &lits,
            ext.symbols(),
            &RelatednessConfig::new(10, 0.5),
        );
        assert_eq!(capped.len(), 2);
        assert_eq!(full.len(), 4);
        assert_eq!(capped[..], full[..2]);
    }

    #[test]
    fn depth_breaks_count_ties() {
        let ext = worked_extension();
        let cfg = RelatednessConfig::default();
        // Option literals {a2, !a0}: three related expressions, all with
        // one matching literal. Contrapositive depth beats the deeper
        // derived contrapositive; transitive composition sorts by kind.
        let selected = select_related(&ext, &[pos(2), neg(0)], ext.symbols(), &cfg);
        assert_eq!(selected.len(), 2);
        assert_eq!(selected[0].key(), (pos(2), pos(1)));
        assert_eq!(selected[1].key(), (neg(0), neg(2)));
    }

    #[test]
    fn surface_overlap_matches_without_shared_ids() {
        let ext = worked_extension();
        let cfg = RelatednessConfig::default();
        let mut table = ext.symbols().clone();
        let option_symbol = table
            .intern("write your essays using a word processing program today", None)
            .unwrap();
        assert!(option_symbol.index() >= 3, "fresh id expected");
        let target = ext.get(&(neg(0), neg(2))).unwrap();
        assert!(is_related(target, &[Literal::negated(option_symbol)], &table, &cfg));
    }
}

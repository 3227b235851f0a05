//! Symbol extraction, negation attachment, and per-sentence implication
//! recognition.

use crate::logic::{Implication, Literal, LogicError, Polarity, SymbolId, SymbolTable};

use super::lexicon;
use super::rules::{RuleMatch, RuleSet, SlotRef};
use super::tokenize::Token;

/// One symbol occurrence inside a sentence, in token space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub symbol: SymbolId,
    /// Token range of the surface-bearing tokens (`start..end`).
    pub token_range: (usize, usize),
    /// Byte offsets of the occurrence in the sentence.
    pub char_span: (usize, usize),
}

/// A literal together with the occurrence that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionedLiteral {
    pub literal: Literal,
    pub token_range: (usize, usize),
}

/// Interns one symbol per constituent, reusing table entries whose
/// normalized surface (or content-token overlap) matches. Negation
/// words never make it into a surface; when a supplied span carries
/// them at its edges the occurrence shrinks to the remaining tokens.
pub fn extract_symbols(
    sentence: &str,
    tokens: &[Token],
    constituents: &[(usize, usize)],
    table: &mut SymbolTable,
) -> Result<Vec<Occurrence>, LogicError> {
    let mut occurrences = Vec::new();
    for &(start, end) in constituents {
        let mut start = start.min(tokens.len());
        let mut end = end.min(tokens.len());
        while start < end && lexicon::is_negation_word(&tokens[start].lower()) {
            start += 1;
        }
        while end > start && lexicon::is_negation_word(&tokens[end - 1].lower()) {
            end -= 1;
        }
        if start >= end {
            continue;
        }
        let kept: Vec<&Token> = tokens[start..end]
            .iter()
            .filter(|t| !lexicon::is_negation_word(&t.lower()))
            .collect();
        if kept.is_empty() {
            continue;
        }
        let surface = if kept.len() == end - start {
            sentence[tokens[start].start..tokens[end - 1].end].to_string()
        } else {
            kept.iter().map(|t| t.text.as_str()).collect::<Vec<_>>().join(" ")
        };
        let char_span = (tokens[start].start, tokens[end - 1].end);
        let symbol = table.resolve_or_intern(&surface, Some(char_span))?;
        occurrences.push(Occurrence { symbol, token_range: (start, end), char_span });
    }
    occurrences.sort_by_key(|o| o.token_range.0);
    Ok(occurrences)
}

/// Polarity of an occurrence: negated iff an odd number of negation
/// words appears between the previous clause boundary and the
/// occurrence. An even count cancels out.
pub fn detect_negation(tokens: &[Token], occurrence: &Occurrence) -> PositionedLiteral {
    let occ_start = occurrence.token_range.0;
    let window_start = (0..occ_start)
        .rev()
        .find(|&i| lexicon::is_clause_boundary(&tokens[i].lower()))
        .map(|i| i + 1)
        .unwrap_or(0);

    let mut count = 0usize;
    let mut i = window_start;
    while i < occ_start {
        let lower = tokens[i].lower();
        if lower == "none" && i + 1 < occ_start && tokens[i + 1].lower() == "of" {
            count += 1;
            i += 2;
            continue;
        }
        if lexicon::is_negation_word(&lower) {
            count += 1;
        }
        i += 1;
    }

    let polarity = if count % 2 == 1 { Polarity::Negated } else { Polarity::Positive };
    PositionedLiteral {
        literal: Literal { symbol: occurrence.symbol, polarity },
        token_range: occurrence.token_range,
    }
}

/// Recognizes at most one implication in a sentence: the best matching
/// indicator rule, or the active-voice fallback when no rule applies
/// and the sentence holds exactly two literals separated by something
/// verb-like.
pub fn identify_expressions(
    sentence_index: usize,
    tokens: &[Token],
    literals: &[PositionedLiteral],
    rules: &RuleSet,
) -> Vec<Implication> {
    if let Some((rule, m)) = rules.best_match(tokens) {
        if let Some(imp) = fill_rule(sentence_index, rule.name.as_str(), rule.antecedent, rule.consequent, &m, literals) {
            return vec![imp];
        }
    }

    // Active-voice fallback.
    if literals.len() != 2 {
        return Vec::new();
    }
    let (first, second) = (&literals[0], &literals[1]);
    let between = first.token_range.1..second.token_range.0;
    let has_verb = between.clone().any(|i| lexicon::is_verb_like(&tokens[i].lower()));
    if !has_verb {
        return Vec::new();
    }
    match Implication::explicit(first.literal, second.literal, sentence_index, "active_voice") {
        Ok(imp) => vec![imp],
        Err(_) => Vec::new(),
    }
}

fn fill_rule(
    sentence_index: usize,
    rule_name: &str,
    antecedent: SlotRef,
    consequent: SlotRef,
    m: &RuleMatch,
    literals: &[PositionedLiteral],
) -> Option<Implication> {
    let pick = |slot| pick_slot_literal(m, slot, literals);
    let a_slot = pick(antecedent.slot)?;
    let c_slot = pick(consequent.slot)?;
    if a_slot.token_range == c_slot.token_range {
        return None;
    }
    let mut a = a_slot.literal;
    let mut c = c_slot.literal;
    if antecedent.negate {
        a = a.negate();
    }
    if consequent.negate {
        c = c.negate();
    }
    Implication::explicit(a, c, sentence_index, rule_name).ok()
}

/// Leftmost literal lying in the slot: it must intersect the slot,
/// stay out of the other slot, and avoid the matched keyword tokens.
fn pick_slot_literal(
    m: &RuleMatch,
    slot: super::rules::Slot,
    literals: &[PositionedLiteral],
) -> Option<PositionedLiteral> {
    let range = m.slot_range(slot);
    let other = m.slot_range(match slot {
        super::rules::Slot::A => super::rules::Slot::B,
        super::rules::Slot::B => super::rules::Slot::A,
    });
    let overlaps = |(s, e): (usize, usize), (rs, re): (usize, usize)| s < re && e > rs;
    literals
        .iter()
        .copied()
        .find(|lit| {
            overlaps(lit.token_range, range)
                && !overlaps(lit.token_range, other)
                && !m
                    .keyword_positions
                    .iter()
                    .any(|&k| k >= lit.token_range.0 && k < lit.token_range.1)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identify::chunk::chunk_tokens;
    use crate::identify::tokenize::tokenize;

    fn pipeline(sentence: &str) -> (Vec<Token>, Vec<PositionedLiteral>, SymbolTable) {
        let tokens = tokenize(sentence);
        let chunks: Vec<(usize, usize)> =
            chunk_tokens(&tokens).iter().map(|c| (c.start, c.end)).collect();
        let mut table = SymbolTable::new();
        let occs = extract_symbols(sentence, &tokens, &chunks, &mut table).unwrap();
        let lits = occs.iter().map(|o| detect_negation(&tokens, o)).collect();
        (tokens, lits, table)
    }

    #[test]
    fn extracts_phrase_symbol() {
        let (_, lits, table) = pipeline("you have keyboarding skills");
        assert_eq!(lits.len(), 1);
        assert_eq!(
            table.surface(lits[0].literal.symbol).unwrap(),
            "have keyboarding skills"
        );
        assert_eq!(lits[0].literal.polarity, Polarity::Positive);
    }

    #[test]
    fn empty_sentence_yields_nothing() {
        let (_, lits, table) = pipeline("");
        assert!(lits.is_empty());
        assert_eq!(table.len(), 0);
    }

    #[test]
    fn negation_word_in_window_flips_polarity() {
        let (_, lits, _) = pipeline("you will not be able to take the class");
        assert_eq!(lits.len(), 1);
        assert!(lits[0].literal.is_negated());
    }

    #[test]
    fn even_negation_count_cancels() {
        let (_, lits, table) = pipeline("it is not the case that you do n't qualify");
        let qualify = lits
            .iter()
            .find(|l| table.surface(l.literal.symbol).unwrap() == "qualify")
            .unwrap();
        assert_eq!(qualify.literal.polarity, Polarity::Positive);
    }

    #[test]
    fn none_of_counts_once() {
        let (_, lits, _) = pipeline("none of you will pass the test");
        assert_eq!(lits.len(), 1);
        assert!(lits[0].literal.is_negated());
    }

    #[test]
    fn clause_boundary_limits_the_window() {
        // The "not" sits before the comma, outside the second window.
        let (_, lits, table) =
            pipeline("you will not take the class, you will pass the test");
        let pass = lits
            .iter()
            .find(|l| table.surface(l.literal.symbol).unwrap() == "pass the test")
            .unwrap();
        assert_eq!(pass.literal.polarity, Polarity::Positive);
    }

    #[test]
    fn if_then_rule_emits_implication() {
        let (tokens, lits, _) = pipeline("If you study hard, then you will pass the test.");
        let imps = identify_expressions(0, &tokens, &lits, RuleSet::default_rules());
        assert_eq!(imps.len(), 1);
        let imp = imps[0].clone();
        assert_eq!(imp.antecedent(), lits[0].literal);
        assert_eq!(imp.consequent(), lits[1].literal);
    }

    #[test]
    fn unless_rule_negates_the_antecedent() {
        let (tokens, lits, table) =
            pipeline("You will not take the class unless you have keyboarding skills.");
        let imps = identify_expressions(0, &tokens, &lits, RuleSet::default_rules());
        assert_eq!(imps.len(), 1);
        let imp = &imps[0];
        // Antecedent: !(have keyboarding skills); consequent: !(take the class).
        assert_eq!(table.surface(imp.antecedent().symbol).unwrap(), "have keyboarding skills");
        assert!(imp.antecedent().is_negated());
        assert_eq!(table.surface(imp.consequent().symbol).unwrap(), "take the class");
        assert!(imp.consequent().is_negated());
    }

    #[test]
    fn single_literal_no_implication() {
        let (tokens, lits, _) = pipeline("You will pass the test.");
        assert_eq!(lits.len(), 1);
        assert!(identify_expressions(0, &tokens, &lits, RuleSet::default_rules()).is_empty());
    }

    #[test]
    fn active_voice_fallback_uses_copula() {
        let (tokens, lits, _) = pipeline("Taking the class is a good idea.");
        assert_eq!(lits.len(), 2);
        let imps = identify_expressions(0, &tokens, &lits, RuleSet::default_rules());
        assert_eq!(imps.len(), 1);
        assert_eq!(imps[0].antecedent(), lits[0].literal);
        assert_eq!(imps[0].consequent(), lits[1].literal);
    }

    #[test]
    fn two_literals_without_a_verb_do_not_chain() {
        let (tokens, lits, _) = pipeline("the new policy and the old guidelines");
        assert_eq!(lits.len(), 2);
        assert!(identify_expressions(0, &tokens, &lits, RuleSet::default_rules()).is_empty());
    }
}

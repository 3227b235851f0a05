//! Conditional indicator patterns: "if A, then B", "B unless A", and
//! friends. The table is data-driven and extensible; the compiled-in
//! default ships alongside the crate sources.

use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

use super::tokenize::Token;

const DEFAULT_TABLE: &str = include_str!("../../data/indicator_rules.tsv");

#[derive(Debug, Error)]
pub enum RuleError {
    #[error("line {line}: expected `name<TAB>pattern<TAB>direction`")]
    Malformed { line: usize },
    #[error("line {line}: pattern must contain slot {slot} exactly once")]
    BadSlots { line: usize, slot: char },
    #[error("line {line}: cannot parse direction {direction:?}")]
    BadDirection { line: usize, direction: String },
    #[error("failed to read rule table: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatElem {
    Keyword(String),
    Slot(Slot),
}

/// Which slot fills a side of the implication, and whether the rule
/// itself flips that literal's polarity (as "unless" does).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotRef {
    pub slot: Slot,
    pub negate: bool,
}

#[derive(Debug, Clone)]
pub struct IndicatorRule {
    pub name: String,
    pub pattern: Vec<PatElem>,
    pub antecedent: SlotRef,
    pub consequent: SlotRef,
}

impl IndicatorRule {
    pub fn keyword_count(&self) -> usize {
        self.pattern.iter().filter(|e| matches!(e, PatElem::Keyword(_))).count()
    }
}

/// A matched rule instance: token ranges for both slots plus the token
/// indices consumed by keywords.
#[derive(Debug, Clone)]
pub struct RuleMatch {
    pub slot_a: (usize, usize),
    pub slot_b: (usize, usize),
    pub keyword_positions: Vec<usize>,
}

impl RuleMatch {
    pub fn slot_range(&self, slot: Slot) -> (usize, usize) {
        match slot {
            Slot::A => self.slot_a,
            Slot::B => self.slot_b,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RuleSet {
    rules: Vec<IndicatorRule>,
}

impl RuleSet {
    /// The compiled-in default table.
    pub fn default_rules() -> &'static RuleSet {
        static DEFAULT: OnceLock<RuleSet> = OnceLock::new();
        DEFAULT.get_or_init(|| {
            RuleSet::parse(DEFAULT_TABLE).expect("compiled-in rule table parses")
        })
    }

    pub fn load(path: &Path) -> Result<RuleSet, RuleError> {
        RuleSet::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(table: &str) -> Result<RuleSet, RuleError> {
        let mut rules = Vec::new();
        for (idx, raw) in table.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = raw.split('\t');
            let (name, pattern, direction) = match (fields.next(), fields.next(), fields.next())
            {
                (Some(n), Some(p), Some(d)) => (n.trim(), p.trim(), d.trim()),
                _ => return Err(RuleError::Malformed { line }),
            };
            if name.is_empty() || pattern.is_empty() {
                return Err(RuleError::Malformed { line });
            }
            let pattern = parse_pattern(pattern, line)?;
            let (antecedent, consequent) = parse_direction(direction, line)?;
            rules.push(IndicatorRule { name: name.to_string(), pattern, antecedent, consequent });
        }
        Ok(RuleSet { rules })
    }

    pub fn rules(&self) -> &[IndicatorRule] {
        &self.rules
    }

    /// Finds the rule to fire for this sentence: among matching rules the
    /// one with the most keywords wins, ties resolved by table order.
    /// Returns the rule and its leftmost match.
    pub fn best_match(&self, tokens: &[Token]) -> Option<(&IndicatorRule, RuleMatch)> {
        let lowered: Vec<String> = tokens.iter().map(|t| t.lower()).collect();
        let mut best: Option<(usize, usize, &IndicatorRule, RuleMatch)> = None;
        for (idx, rule) in self.rules.iter().enumerate() {
            if let Some(m) = match_pattern(&rule.pattern, &lowered) {
                let count = rule.keyword_count();
                let better = match &best {
                    Some((bc, bi, _, _)) => count > *bc || (count == *bc && idx < *bi),
                    None => true,
                };
                if better {
                    best = Some((count, idx, rule, m));
                }
            }
        }
        best.map(|(_, _, rule, m)| (rule, m))
    }
}

fn parse_pattern(text: &str, line: usize) -> Result<Vec<PatElem>, RuleError> {
    let elems: Vec<PatElem> = text
        .split_whitespace()
        .map(|tok| match tok {
            "A" => PatElem::Slot(Slot::A),
            "B" => PatElem::Slot(Slot::B),
            kw => PatElem::Keyword(kw.to_lowercase()),
        })
        .collect();
    for (slot, ch) in [(Slot::A, 'A'), (Slot::B, 'B')] {
        let n = elems.iter().filter(|e| **e == PatElem::Slot(slot)).count();
        if n != 1 {
            return Err(RuleError::BadSlots { line, slot: ch });
        }
    }
    Ok(elems)
}

fn parse_direction(text: &str, line: usize) -> Result<(SlotRef, SlotRef), RuleError> {
    let err = || RuleError::BadDirection { line, direction: text.to_string() };
    let (lhs, rhs) = text.split_once("->").ok_or_else(err)?;
    let parse_side = |side: &str| -> Option<SlotRef> {
        let side = side.trim();
        let (negate, name) = match side.strip_prefix('!') {
            Some(rest) => (true, rest),
            None => (false, side),
        };
        match name {
            "A" => Some(SlotRef { slot: Slot::A, negate }),
            "B" => Some(SlotRef { slot: Slot::B, negate }),
            _ => None,
        }
    };
    let antecedent = parse_side(lhs).ok_or_else(err)?;
    let consequent = parse_side(rhs).ok_or_else(err)?;
    if antecedent.slot == consequent.slot {
        return Err(err());
    }
    Ok((antecedent, consequent))
}

/// Leftmost match of `pattern` against the token sequence. Slots consume
/// at least one token and extend maximally between their neighbouring
/// keywords (or to the sentence edges).
fn match_pattern(pattern: &[PatElem], tokens: &[String]) -> Option<RuleMatch> {
    fn keyword_positions(
        pattern: &[PatElem],
        tokens: &[String],
        pat_idx: usize,
        tok_idx: usize,
        needs_gap: bool,
        acc: &mut Vec<usize>,
    ) -> bool {
        match pattern.get(pat_idx) {
            None => {
                // A trailing slot needs at least one leftover token.
                !needs_gap || tok_idx < tokens.len()
            }
            Some(PatElem::Slot(_)) => {
                keyword_positions(pattern, tokens, pat_idx + 1, tok_idx, true, acc)
            }
            Some(PatElem::Keyword(kw)) => {
                let first = tok_idx + usize::from(needs_gap);
                for pos in first..tokens.len() {
                    if tokens[pos] == *kw {
                        acc.push(pos);
                        if keyword_positions(pattern, tokens, pat_idx + 1, pos + 1, false, acc) {
                            return true;
                        }
                        acc.pop();
                        // Keywords adjacent in the pattern must be
                        // adjacent in the sentence: no further positions.
                        if !needs_gap && pat_idx > 0 {
                            return false;
                        }
                    } else if !needs_gap && pat_idx > 0 {
                        return false;
                    }
                }
                false
            }
        }
    }

    let mut kw_positions = Vec::new();
    if !keyword_positions(pattern, tokens, 0, 0, false, &mut kw_positions) {
        return None;
    }

    // Recover maximal slot ranges from the keyword placement.
    let mut slot_a = None;
    let mut slot_b = None;
    let mut kw_iter = kw_positions.iter().copied().peekable();
    let mut cursor = 0usize;
    for elem in pattern {
        match elem {
            PatElem::Keyword(_) => {
                let pos = kw_iter.next().expect("placement covers every keyword");
                cursor = pos + 1;
            }
            PatElem::Slot(slot) => {
                let end = kw_iter.peek().copied().unwrap_or(tokens.len());
                let range = (cursor, end);
                if range.0 >= range.1 {
                    return None;
                }
                match slot {
                    Slot::A => slot_a = Some(range),
                    Slot::B => slot_b = Some(range),
                }
                cursor = end;
            }
        }
    }
    Some(RuleMatch {
        slot_a: slot_a.expect("pattern has slot A"),
        slot_b: slot_b.expect("pattern has slot B"),
        keyword_positions: kw_positions,
    })
}

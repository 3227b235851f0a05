//! Turning raw context and option text into expression sets.
//!
//! The pipeline per sentence: tokenize, find constituents (externally
//! supplied spans or the built-in chunker), intern symbols, attach
//! negation, then recognize at most one conditional via the indicator
//! rule table or the active-voice fallback.

mod chunk;
mod extract;
mod lexicon;
mod rules;
mod tokenize;

pub use chunk::{Chunk, PhraseKind};
pub use extract::{
    detect_negation, extract_symbols, identify_expressions, Occurrence, PositionedLiteral,
};
pub use lexicon::is_content_word;
pub use rules::{IndicatorRule, RuleError, RuleSet};
pub use tokenize::{split_sentences, tokenize, Token};

use serde::{Deserialize, Serialize};

use crate::logic::{ExpressionSet, Implication, Literal, LogicError, SymbolTable};

/// A phrase span supplied by an external parser, in byte offsets of its
/// sentence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentSpan {
    pub start: usize,
    pub end: usize,
    pub kind: PhraseKind,
}

/// Pluggable source of constituent spans; return `None` to fall back to
/// the built-in chunker for that sentence.
pub trait ConstituentSupplier {
    fn constituents(&self, sentence_index: usize, sentence: &str) -> Option<Vec<ConstituentSpan>>;
}

/// One sentence of input, optionally pre-annotated with constituents.
/// This is the JSON record `{text, constituents}` accepted wherever raw
/// text is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedSentence {
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constituents: Option<Vec<ConstituentSpan>>,
}

/// A tokenized sentence with its constituents resolved.
#[derive(Debug, Clone)]
pub struct SentenceAnnotation {
    pub sentence_index: usize,
    pub text: String,
    pub tokens: Vec<Token>,
    pub constituents: Option<Vec<ConstituentSpan>>,
}

impl SentenceAnnotation {
    pub fn new(sentence_index: usize, text: &str, constituents: Option<Vec<ConstituentSpan>>) -> Self {
        SentenceAnnotation {
            sentence_index,
            text: text.to_string(),
            tokens: tokenize(text),
            constituents,
        }
    }

    /// Constituents as token ranges: supplied spans are mapped onto the
    /// tokens they overlap, otherwise the heuristic chunker runs.
    fn constituent_token_ranges(&self) -> Vec<(usize, usize)> {
        match &self.constituents {
            Some(spans) => {
                let mut ranges: Vec<(usize, usize)> = spans
                    .iter()
                    .filter_map(|span| {
                        let first = self
                            .tokens
                            .iter()
                            .position(|t| t.start < span.end && t.end > span.start)?;
                        let last = self
                            .tokens
                            .iter()
                            .rposition(|t| t.start < span.end && t.end > span.start)?;
                        Some((first, last + 1))
                    })
                    .collect();
                ranges.sort();
                ranges.dedup();
                ranges
            }
            None => chunk::chunk_tokens(&self.tokens)
                .iter()
                .map(|c| (c.start, c.end))
                .collect(),
        }
    }
}

/// Parses `text` as annotated-sentence JSON: an array of records or a
/// single record. `None` means it is plain prose.
pub fn parse_annotated(text: &str) -> Option<Vec<AnnotatedSentence>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        if let Ok(sentences) = serde_json::from_str::<Vec<AnnotatedSentence>>(trimmed) {
            return Some(sentences);
        }
    } else if trimmed.starts_with('{') {
        if let Ok(sentence) = serde_json::from_str::<AnnotatedSentence>(trimmed) {
            return Some(vec![sentence]);
        }
    }
    None
}

/// Interprets `text` as annotated-sentence JSON when it parses as such,
/// else splits it as raw text.
pub fn sentences_auto(text: &str) -> Vec<AnnotatedSentence> {
    if let Some(sentences) = parse_annotated(text) {
        return sentences;
    }
    split_sentences(text)
        .into_iter()
        .map(|s| AnnotatedSentence { text: s, constituents: None })
        .collect()
}

fn process_sentence(
    annotation: &SentenceAnnotation,
    table: &mut SymbolTable,
    rules: &RuleSet,
) -> Result<(Vec<PositionedLiteral>, Vec<Implication>), LogicError> {
    let ranges = annotation.constituent_token_ranges();
    let occurrences = extract_symbols(&annotation.text, &annotation.tokens, &ranges, table)?;
    let literals: Vec<PositionedLiteral> = occurrences
        .iter()
        .map(|o| detect_negation(&annotation.tokens, o))
        .collect();
    let implications =
        identify_expressions(annotation.sentence_index, &annotation.tokens, &literals, rules);
    Ok((literals, implications))
}

/// Identifies the expression set of a context: sentences are split,
/// processed independently, and their implications unioned over one
/// shared symbol table. Deterministic for identical input.
pub fn identify_context(
    context: &str,
    supplier: Option<&dyn ConstituentSupplier>,
) -> Result<ExpressionSet, LogicError> {
    identify_context_with(context, supplier, RuleSet::default_rules())
}

pub fn identify_context_with(
    context: &str,
    supplier: Option<&dyn ConstituentSupplier>,
    rules: &RuleSet,
) -> Result<ExpressionSet, LogicError> {
    identify_sentences(&sentences_auto(context), supplier, rules)
}

/// The sentence-level entry point behind [`identify_context`]; annotated
/// constituents win over the supplier, which wins over the chunker.
pub fn identify_sentences(
    sentences: &[AnnotatedSentence],
    supplier: Option<&dyn ConstituentSupplier>,
    rules: &RuleSet,
) -> Result<ExpressionSet, LogicError> {
    let mut table = SymbolTable::new();
    let mut implications = Vec::new();
    for (index, sentence) in sentences.iter().enumerate() {
        let constituents = sentence.constituents.clone().or_else(|| {
            supplier.and_then(|s| s.constituents(index, &sentence.text))
        });
        let annotation = SentenceAnnotation::new(index, &sentence.text, constituents);
        let (_, mut imps) = process_sentence(&annotation, &mut table, rules)?;
        implications.append(&mut imps);
    }
    let mut set = ExpressionSet::new(table);
    for imp in implications {
        set.insert(imp)?;
    }
    Ok(set)
}

/// Identifies an option's literals (and its implication, when one is
/// recognized) against a shared symbol table. Symbols already known
/// keep their ids; unseen phrases mint new ones in `table`.
pub fn identify_option(
    option: &str,
    table: &mut SymbolTable,
    supplier: Option<&dyn ConstituentSupplier>,
) -> Result<(Vec<Literal>, Option<Implication>), LogicError> {
    identify_option_with(option, table, supplier, RuleSet::default_rules())
}

pub fn identify_option_with(
    option: &str,
    table: &mut SymbolTable,
    supplier: Option<&dyn ConstituentSupplier>,
    rules: &RuleSet,
) -> Result<(Vec<Literal>, Option<Implication>), LogicError> {
    let mut literals: Vec<Literal> = Vec::new();
    let mut implication: Option<Implication> = None;
    for (index, sentence) in sentences_auto(option).iter().enumerate() {
        let constituents = sentence.constituents.clone().or_else(|| {
            supplier.and_then(|s| s.constituents(index, &sentence.text))
        });
        let annotation = SentenceAnnotation::new(index, &sentence.text, constituents);
        let (positioned, imps) = process_sentence(&annotation, table, rules)?;
        for p in positioned {
            if !literals.contains(&p.literal) {
                literals.push(p.literal);
            }
        }
        if implication.is_none() {
            implication = imps.into_iter().next();
        }
    }
    Ok((literals, implication))
}

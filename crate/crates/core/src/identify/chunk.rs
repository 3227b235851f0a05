//! Built-in constituent heuristic, used when no external parser
//! supplies phrase spans.
//!
//! A chunk is a maximal run of content and glue tokens between
//! function-word boundaries, with glue (articles, infinitival "to")
//! trimmed at the edges. The result approximates the noun and gerundial
//! phrases a constituency parser would return.

use serde::{Deserialize, Serialize};

use super::lexicon;
use super::tokenize::Token;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhraseKind {
    NounPhrase,
    GerundialPhrase,
}

/// Phrase span over token indices (`start..end`, end exclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chunk {
    pub start: usize,
    pub end: usize,
    pub kind: PhraseKind,
}

pub fn chunk_tokens(tokens: &[Token]) -> Vec<Chunk> {
    let mut chunks = Vec::new();
    let mut run_start = None;

    for (idx, token) in tokens.iter().enumerate() {
        let lower = token.lower();
        let in_run = lexicon::is_content_word(&lower) || lexicon::is_glue_word(&lower);
        match (in_run, run_start) {
            (true, None) => run_start = Some(idx),
            (false, Some(start)) => {
                if let Some(chunk) = trim_run(tokens, start, idx) {
                    chunks.push(chunk);
                }
                run_start = None;
            }
            _ => {}
        }
    }
    if let Some(start) = run_start {
        if let Some(chunk) = trim_run(tokens, start, tokens.len()) {
            chunks.push(chunk);
        }
    }
    chunks
}

fn trim_run(tokens: &[Token], mut start: usize, mut end: usize) -> Option<Chunk> {
    while start < end && lexicon::is_glue_word(&tokens[start].lower()) {
        start += 1;
    }
    while end > start && lexicon::is_glue_word(&tokens[end - 1].lower()) {
        end -= 1;
    }
    if start >= end {
        return None;
    }
    let kind = if tokens[start].lower().ends_with("ing") {
        PhraseKind::GerundialPhrase
    } else {
        PhraseKind::NounPhrase
    };
    Some(Chunk { start, end, kind })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identify::tokenize::tokenize;

    fn surfaces(sentence: &str) -> Vec<String> {
        let tokens = tokenize(sentence);
        chunk_tokens(&tokens)
            .iter()
            .map(|c| sentence[tokens[c.start].start..tokens[c.end - 1].end].to_string())
            .collect()
    }

    #[test]
    fn extracts_phrases_between_function_words() {
        assert_eq!(
            surfaces("If you do not have keyboarding skills, then you will not take the class."),
            vec!["have keyboarding skills", "take the class"]
        );
    }

    #[test]
    fn keeps_glue_inside_but_trims_edges() {
        assert_eq!(
            surfaces("then you will not be able to write your essays using a word processing program."),
            vec!["be able to write your essays using a word processing program"]
        );
        // Leading glue is trimmed.
        assert_eq!(surfaces("because of the heavy rain"), vec!["heavy rain"]);
    }

    #[test]
    fn empty_and_functional_sentences_yield_nothing() {
        assert!(surfaces("").is_empty());
        assert!(surfaces("if you will, then they would.").is_empty());
    }

    #[test]
    fn gerundial_classification_by_head_token() {
        let tokens = tokenize("Taking the class is a good idea.");
        let chunks = chunk_tokens(&tokens);
        assert_eq!(chunks.len(), 2);
        assert_eq!(chunks[0].kind, PhraseKind::GerundialPhrase);
        assert_eq!(chunks[1].kind, PhraseKind::NounPhrase);
    }
}

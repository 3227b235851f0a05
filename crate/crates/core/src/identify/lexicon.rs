//! Word lists driving the heuristic chunker and negation detection.

/// Words whose presence before a symbol occurrence flips its polarity.
/// "none of" is a two-token entry handled by the bigram check below.
pub const NEGATION_WORDS: &[&str] =
    &["not", "n't", "unable", "no", "few", "little", "neither"];

/// Tokens that end a clause for negation-window purposes: commas,
/// semicolons, and the head conditional keywords. Prepositions from the
/// longer indicator patterns ("due to", "in order for") stay out of this
/// list so that auxiliaries like "not be able to" keep their window.
pub const CLAUSE_BOUNDARIES: &[&str] = &[",", ";", "if", "then", "unless"];

/// Auxiliaries and copulas: chunk boundaries, but still verb-like for
/// the active-voice fallback.
pub const AUX_VERBS: &[&str] = &[
    "am", "is", "are", "was", "were", "been", "being", "do", "does", "did", "will", "would",
    "shall", "should", "can", "could", "may", "might", "must", "cannot",
];

/// Tokens kept inside a chunk when interior but trimmed at its edges:
/// articles plus infinitival "to".
pub const GLUE_WORDS: &[&str] = &["a", "an", "the", "to"];

/// Function words that break chunks. Main verbs, nouns and adjectives
/// are treated as content; "have" and "be" stay content because they
/// routinely head extracted phrases ("have keyboarding skills",
/// "be able to ...").
const FUNCTION_WORDS: &[&str] = &[
    // pronouns
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them", "who",
    "whom", "whose", "which", "what", "this", "these", "those",
    // conjunctions and subordinators
    "and", "or", "but", "nor", "so", "yet", "if", "then", "unless", "because", "since",
    "although", "though", "while", "whether", "that", "when", "where", "why", "how",
    // prepositions kept out of chunks
    "of", "in", "for", "as", "than", "from", "by", "at", "on", "upon", "into", "onto",
    "over", "under", "with", "without", "within", "due",
    // negation-adjacent words that never join a surface
    "none", "never",
    // contraction stems left over from n't splitting
    "wo", "ca", "ai", "sha",
];

pub fn is_negation_word(token: &str) -> bool {
    NEGATION_WORDS.contains(&token)
}

pub fn is_clause_boundary(token: &str) -> bool {
    CLAUSE_BOUNDARIES.contains(&token)
}

pub fn is_glue_word(token: &str) -> bool {
    GLUE_WORDS.contains(&token)
}

pub fn is_function_word(token: &str) -> bool {
    FUNCTION_WORDS.contains(&token) || AUX_VERBS.contains(&token) || is_negation_word(token)
}

pub fn is_punctuation(token: &str) -> bool {
    token.chars().all(|c| c.is_ascii_punctuation()) && !token.is_empty() && token != "n't"
}

/// Content words are what remain once punctuation, function, glue and
/// negation words are removed; they drive chunking and token-overlap
/// symbol matching.
pub fn is_content_word(token: &str) -> bool {
    !is_punctuation(token)
        && !is_function_word(token)
        && !is_glue_word(token)
        && !is_negation_word(token)
}

/// Verb-like for the active-voice fallback: any content word, or an
/// auxiliary/copula (those are chunk boundaries but still signal a
/// predicate between two phrases).
pub fn is_verb_like(token: &str) -> bool {
    if AUX_VERBS.contains(&token) {
        return true;
    }
    is_content_word(token)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_basics() {
        assert!(is_negation_word("n't"));
        assert!(is_function_word("you"));
        assert!(is_function_word("not"));
        assert!(is_glue_word("the"));
        assert!(is_content_word("keyboarding"));
        assert!(is_content_word("have"));
        assert!(is_content_word("be"));
        assert!(!is_content_word("will"));
        assert!(is_verb_like("is"));
        assert!(is_verb_like("reduces"));
        assert!(!is_verb_like("and"));
        assert!(is_punctuation(","));
        assert!(!is_punctuation("n't"));
    }
}

//! Whitespace/punctuation tokenizer and sentence splitter.

/// One token with byte offsets into its source sentence. Offsets are
/// non-overlapping and ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub start: usize,
    pub end: usize,
}

impl Token {
    pub fn lower(&self) -> String {
        self.text.to_lowercase()
    }
}

const SPLIT_PUNCT: &[char] = &[',', '.', ';', '!', '?', ':', '(', ')', '"'];

/// Splits a sentence into word and punctuation tokens. Contracted
/// negations are separated ("don't" becomes "do" + "n't") so the
/// negation word list can see them.
pub fn tokenize(sentence: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let bytes_len = sentence.len();
    let mut cursor = 0usize;

    while cursor < bytes_len {
        let rest = &sentence[cursor..];
        let skip: usize = rest
            .char_indices()
            .take_while(|(_, c)| c.is_whitespace())
            .map(|(_, c)| c.len_utf8())
            .sum();
        cursor += skip;
        if cursor >= bytes_len {
            break;
        }
        let rest = &sentence[cursor..];
        let word_len: usize = rest
            .char_indices()
            .take_while(|(_, c)| !c.is_whitespace())
            .map(|(_, c)| c.len_utf8())
            .sum();
        push_word(sentence, cursor, cursor + word_len, &mut tokens);
        cursor += word_len;
    }
    tokens
}

fn push_word(sentence: &str, start: usize, end: usize, tokens: &mut Vec<Token>) {
    let mut start = start;
    let mut end = end;

    // Leading punctuation characters become their own tokens.
    while start < end {
        let c = sentence[start..].chars().next().unwrap();
        if SPLIT_PUNCT.contains(&c) {
            tokens.push(Token { text: c.to_string(), start, end: start + c.len_utf8() });
            start += c.len_utf8();
        } else {
            break;
        }
    }
    // Trailing punctuation is collected and appended after the word.
    let mut trailing = Vec::new();
    while start < end {
        let c = sentence[..end].chars().next_back().unwrap();
        if SPLIT_PUNCT.contains(&c) {
            end -= c.len_utf8();
            trailing.push(Token { text: c.to_string(), start: end, end: end + c.len_utf8() });
        } else {
            break;
        }
    }

    if start < end {
        let word = &sentence[start..end];
        let lower = word.to_lowercase();
        if lower.len() > 3 && lower.ends_with("n't") {
            let split = end - 3;
            tokens.push(Token { text: sentence[start..split].to_string(), start, end: split });
            tokens.push(Token { text: sentence[split..end].to_string(), start: split, end });
        } else {
            tokens.push(Token { text: word.to_string(), start, end });
        }
    }
    tokens.extend(trailing.into_iter().rev());
}

/// Splits text into sentences on '.', '?', '!' or ';' followed by
/// whitespace (or end of text). Terminators stay attached; blank
/// segments are dropped.
pub fn split_sentences(text: &str) -> Vec<String> {
    let mut sentences = Vec::new();
    let mut current = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        current.push(c);
        if matches!(c, '.' | '?' | '!' | ';') {
            let at_break = chars.peek().is_none_or(|next| next.is_whitespace());
            if at_break {
                if !current.trim().is_empty() {
                    sentences.push(current.trim().to_string());
                }
                current.clear();
            }
        }
    }
    if !current.trim().is_empty() {
        sentences.push(current.trim().to_string());
    }
    sentences
}

//! Template-based rendering of implications back into sentences, plus
//! model-input string assembly.

use std::path::Path;

use thiserror::Error;

use crate::logic::{Implication, LogicError, Polarity, SymbolTable};

#[derive(Debug, Error)]
pub enum TemplateError {
    #[error("template grid needs exactly 4 lines, got {0}")]
    WrongLineCount(usize),
    #[error("line {line}: template must contain {{A}} and {{B}} exactly once")]
    BadSlots { line: usize },
    #[error("failed to read template grid: {0}")]
    Io(#[from] std::io::Error),
}

/// Four sentence templates indexed by (antecedent polarity, consequent
/// polarity), each with an `{A}` and a `{B}` slot.
///
/// The default grid is subject-free so that identification recovers the
/// exact surfaces it rendered; the pronoun grid exists for cosmetic
/// output and is excluded from round-trip guarantees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateGrid {
    /// Order: (pos,pos), (pos,neg), (neg,pos), (neg,neg).
    templates: [String; 4],
}

const DEFAULT_TEMPLATES: [&str; 4] = [
    "If {A}, then will {B}.",
    "If {A}, then will not {B}.",
    "If do not {A}, then will {B}.",
    "If do not {A}, then will not {B}.",
];

const PRONOUN_TEMPLATES: [&str; 4] = [
    "If you {A}, then you will {B}.",
    "If you {A}, then you will not {B}.",
    "If you do not {A}, then you will {B}.",
    "If you do not {A}, then you will not {B}.",
];

impl Default for TemplateGrid {
    fn default() -> Self {
        TemplateGrid { templates: DEFAULT_TEMPLATES.map(String::from) }
    }
}

impl TemplateGrid {
    /// Cosmetic variant inserting "you"; not round-trip safe.
    pub fn with_pronouns() -> Self {
        TemplateGrid { templates: PRONOUN_TEMPLATES.map(String::from) }
    }

    pub fn select(pronouns: bool) -> Self {
        if pronouns {
            Self::with_pronouns()
        } else {
            Self::default()
        }
    }

    /// Loads a grid from a UTF-8 file: four lines in the order
    /// (pos,pos), (pos,neg), (neg,pos), (neg,neg), slots `{A}`/`{B}`.
    pub fn load(path: &Path) -> Result<Self, TemplateError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self, TemplateError> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != 4 {
            return Err(TemplateError::WrongLineCount(lines.len()));
        }
        for (i, line) in lines.iter().enumerate() {
            if line.matches("{A}").count() != 1 || line.matches("{B}").count() != 1 {
                return Err(TemplateError::BadSlots { line: i + 1 });
            }
        }
        Ok(TemplateGrid {
            templates: [
                lines[0].to_string(),
                lines[1].to_string(),
                lines[2].to_string(),
                lines[3].to_string(),
            ],
        })
    }

    pub fn template(&self, antecedent: Polarity, consequent: Polarity) -> &str {
        let idx = match (antecedent, consequent) {
            (Polarity::Positive, Polarity::Positive) => 0,
            (Polarity::Positive, Polarity::Negated) => 1,
            (Polarity::Negated, Polarity::Positive) => 2,
            (Polarity::Negated, Polarity::Negated) => 3,
        };
        &self.templates[idx]
    }
}

/// Renders one implication as a sentence by filling the polarity pair's
/// template with the symbol surfaces (trimmed, otherwise untouched).
pub fn verbalize(
    imp: &Implication,
    table: &SymbolTable,
    grid: &TemplateGrid,
) -> Result<String, LogicError> {
    let a = table.surface(imp.antecedent().symbol)?.trim();
    let b = table.surface(imp.consequent().symbol)?.trim();
    let template = grid.template(imp.antecedent().polarity, imp.consequent().polarity);
    Ok(template.replacen("{A}", a, 1).replacen("{B}", b, 1))
}

/// Space-joined verbalizations in the given order; empty input renders
/// as empty text.
pub fn verbalize_set<'a>(
    expressions: impl IntoIterator<Item = &'a Implication>,
    table: &SymbolTable,
    grid: &TemplateGrid,
) -> Result<String, LogicError> {
    let mut out = String::new();
    for imp in expressions {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&verbalize(imp, table, grid)?);
    }
    Ok(out)
}

/// Extended model-input sequence; with an empty extension the `[EXT]`
/// segment degenerates to `[EXT] ` directly followed by `[SEP]`.
pub fn render_model_input(context: &str, question: &str, option: &str, extension: &str) -> String {
    format!("[CLS] {context} [SEP] {question} || {option} [EXT] {extension} [SEP]")
}

/// Baseline input sequence without the extension segment, for A/B tooling.
pub fn render_baseline_input(context: &str, question: &str, option: &str) -> String {
    format!("[CLS] {context} [SEP] {question} || {option} [SEP]")
}

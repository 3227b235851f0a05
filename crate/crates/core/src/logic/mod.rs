//! Symbolic representation of literals and implications.
//!
//! The logic handled here is deliberately small: propositional atoms
//! (symbols extracted from text), optional negation, and binary
//! implication between two literals. Everything richer (disjunction,
//! quantifiers, SAT) is out of scope.

mod infer;
mod set;

pub use infer::{closure_keys, compose, contrapose, entails, entails_with_bound, extend};
pub use set::{content_token_set, jaccard, normalize_surface, ExpressionSet, SymbolTable};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default assignment-enumeration bound for [`entails`]: sets with more
/// symbols than this are rejected instead of enumerating 2^n assignments.
pub const DEFAULT_ENTAILMENT_BOUND: usize = 16;

#[derive(Debug, Error, PartialEq)]
pub enum LogicError {
    #[error("implication would be reflexive: {0} -> {0}")]
    Reflexive(Literal),
    #[error("symbol id {0} does not resolve in the symbol table")]
    UnresolvedSymbol(SymbolId),
    #[error("symbol surface must be non-empty")]
    EmptySurface,
    #[error("entailment check over {symbols} symbols exceeds the bound of {bound}")]
    BoundExceeded { symbols: usize, bound: usize },
}

/// Index into a [`SymbolTable`]. Ids are dense: the table with `n`
/// symbols holds exactly ids `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SymbolId(pub u32);

impl SymbolId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// A propositional atom: a phrase extracted from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symbol {
    pub id: SymbolId,
    /// Extracted phrase, non-empty and whitespace-trimmed.
    pub surface: String,
    /// Offsets of the first occurrence in its source sentence, when known.
    pub span: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    Positive,
    Negated,
}

impl Polarity {
    pub fn flipped(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negated,
            Polarity::Negated => Polarity::Positive,
        }
    }
}

/// A symbol or its negation. Double negation is unrepresentable:
/// negating a literal flips its polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub symbol: SymbolId,
    pub polarity: Polarity,
}

impl Literal {
    pub fn positive(symbol: SymbolId) -> Self {
        Literal { symbol, polarity: Polarity::Positive }
    }

    pub fn negated(symbol: SymbolId) -> Self {
        Literal { symbol, polarity: Polarity::Negated }
    }

    /// Polarity flip; an involution.
    pub fn negate(self) -> Self {
        Literal { symbol: self.symbol, polarity: self.polarity.flipped() }
    }

    pub fn is_negated(self) -> bool {
        self.polarity == Polarity::Negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Positive => write!(f, "{}", self.symbol),
            Polarity::Negated => write!(f, "!{}", self.symbol),
        }
    }
}

impl FromStr for Literal {
    type Err = ParseExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (polarity, rest) = match s.strip_prefix('!') {
            Some(rest) => (Polarity::Negated, rest),
            None => (Polarity::Positive, s),
        };
        let digits = rest
            .strip_prefix('a')
            .ok_or_else(|| ParseExprError(s.to_string()))?;
        let id: u32 = digits.parse().map_err(|_| ParseExprError(s.to_string()))?;
        Ok(Literal { symbol: SymbolId(id), polarity })
    }
}

#[derive(Debug, Error, PartialEq)]
#[error("cannot parse logical expression from {0:?}")]
pub struct ParseExprError(pub String);

/// Antecedent/consequent pair identifying an implication. Two
/// implications with the same key are the same expression no matter how
/// they were derived.
pub type ImplicationKey = (Literal, Literal);

/// How an implication entered a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Recognized directly in a sentence.
    Explicit { sentence_index: usize, indicator: String },
    /// Contrapositive of `parent`.
    Contraposition { parent: ImplicationKey },
    /// Chained from `left` and `right` via the transitive law.
    Transitivity { left: ImplicationKey, right: ImplicationKey },
    /// Produced by an augmentation operation on `parent`.
    Modified { op: String, parent: ImplicationKey },
}

/// A conditional between two literals. Reflexive implications
/// (identical antecedent and consequent) are rejected at construction.
///
/// Equality, ordering and hashing ignore provenance and depth: an
/// expression set is a set of antecedent/consequent pairs, and the
/// first derivation encountered is the one kept.
#[derive(Debug, Clone)]
pub struct Implication {
    antecedent: Literal,
    consequent: Literal,
    provenance: Provenance,
    depth: u32,
}

impl Implication {
    pub fn explicit(
        antecedent: Literal,
        consequent: Literal,
        sentence_index: usize,
        indicator: impl Into<String>,
    ) -> Result<Self, LogicError> {
        Self::with_provenance(
            antecedent,
            consequent,
            Provenance::Explicit { sentence_index, indicator: indicator.into() },
            0,
        )
    }

    pub fn with_provenance(
        antecedent: Literal,
        consequent: Literal,
        provenance: Provenance,
        depth: u32,
    ) -> Result<Self, LogicError> {
        if antecedent == consequent {
            return Err(LogicError::Reflexive(antecedent));
        }
        Ok(Implication { antecedent, consequent, provenance, depth })
    }

    /// Result of an augmentation op applied to `parent`.
    pub fn modified(
        op: impl Into<String>,
        parent: &Implication,
        antecedent: Literal,
        consequent: Literal,
    ) -> Result<Self, LogicError> {
        Self::with_provenance(
            antecedent,
            consequent,
            Provenance::Modified { op: op.into(), parent: parent.key() },
            parent.depth,
        )
    }

    pub fn antecedent(&self) -> Literal {
        self.antecedent
    }

    pub fn consequent(&self) -> Literal {
        self.consequent
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Number of inference-rule applications in this expression's
    /// derivation; zero for anything read directly off a sentence.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn key(&self) -> ImplicationKey {
        (self.antecedent, self.consequent)
    }

    /// Index of this expression's literals: 0 = antecedent, 1 = consequent.
    pub fn literals(&self) -> [Literal; 2] {
        [self.antecedent, self.consequent]
    }
}

impl PartialEq for Implication {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Implication {}

impl PartialOrd for Implication {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Implication {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl std::hash::Hash for Implication {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} -> {})", self.antecedent, self.consequent)
    }
}

impl FromStr for Implication {
    type Err = ParseExprError;

    /// Parses the canonical rendering `(LIT -> LIT)`. The result carries
    /// explicit provenance with an `parsed` indicator tag.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| ParseExprError(s.to_string()))?;
        let (lhs, rhs) = inner
            .split_once("->")
            .ok_or_else(|| ParseExprError(s.to_string()))?;
        let antecedent = lhs.trim().parse()?;
        let consequent = rhs.trim().parse()?;
        Implication::explicit(antecedent, consequent, 0, "parsed")
            .map_err(|_| ParseExprError(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(id: u32) -> Literal {
        Literal::positive(SymbolId(id))
    }

    #[test]
    fn negate_flips_polarity() {
        assert_eq!(lit(0).negate(), Literal::negated(SymbolId(0)));
        assert_eq!(Literal::negated(SymbolId(1)).negate(), lit(1));
    }

    #[test]
    fn negate_is_an_involution() {
        let gamma = lit(2);
        assert_eq!(gamma.negate().negate(), gamma);
        let neg = Literal::negated(SymbolId(5));
        assert_eq!(neg.negate().negate(), neg);
    }

    #[test]
    fn reflexive_implication_rejected() {
        let err = Implication::explicit(lit(0), lit(0), 0, "x").unwrap_err();
        assert_eq!(err, LogicError::Reflexive(lit(0)));
        // Same symbol with opposite polarity is a valid (non-reflexive) pair.
        assert!(Implication::explicit(lit(0), lit(0).negate(), 0, "x").is_ok());
    }

    #[test]
    fn equality_ignores_provenance() {
        let a = Implication::explicit(lit(0), lit(1), 0, "if_then").unwrap();
        let b = Implication::with_provenance(
            lit(0),
            lit(1),
            Provenance::Contraposition { parent: (lit(9), lit(8)) },
            1,
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn canonical_text_round_trip() {
        for text in ["(a0 -> a1)", "(!a0 -> !a1)", "(a2 -> !a0)"] {
            let imp: Implication = text.parse().unwrap();
            assert_eq!(imp.to_string(), text);
        }
        assert!("(a0 -> a0)".parse::<Implication>().is_err());
        assert!("a0 -> a1".parse::<Implication>().is_err());
        assert!("(b0 -> a1)".parse::<Implication>().is_err());
    }
}

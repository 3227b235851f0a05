//! Symbol tables and deduplicated expression sets.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use super::{Implication, ImplicationKey, LogicError, Symbol, SymbolId};

/// Jaccard threshold reused for symbol matching across sentences and
/// options during identification.
pub(crate) const SYMBOL_JACCARD: f64 = 0.5;

/// Dense, append-only table of extracted symbols.
///
/// Lookups go through a normalized form (lowercased, article-stripped,
/// whitespace-collapsed) plus a token-overlap fallback so that small
/// surface variations of the same phrase share one id.
#[derive(Debug, Clone, Default)]
pub struct SymbolTable {
    symbols: Vec<Symbol>,
    by_norm: HashMap<String, SymbolId>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn get(&self, id: SymbolId) -> Option<&Symbol> {
        self.symbols.get(id.index())
    }

    pub fn surface(&self, id: SymbolId) -> Result<&str, LogicError> {
        self.get(id)
            .map(|s| s.surface.as_str())
            .ok_or(LogicError::UnresolvedSymbol(id))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Symbol> {
        self.symbols.iter()
    }

    pub fn contains(&self, id: SymbolId) -> bool {
        id.index() < self.symbols.len()
    }

    /// Interns `surface` unconditionally as a fresh symbol.
    pub fn intern(
        &mut self,
        surface: &str,
        span: Option<(usize, usize)>,
    ) -> Result<SymbolId, LogicError> {
        let surface = surface.trim();
        if surface.is_empty() {
            return Err(LogicError::EmptySurface);
        }
        let id = SymbolId(self.symbols.len() as u32);
        let norm = normalize_surface(surface);
        self.symbols.push(Symbol { id, surface: surface.to_string(), span });
        // First surface with a given normal form wins the lookup slot.
        self.by_norm.entry(norm).or_insert(id);
        Ok(id)
    }

    /// Reuses an existing id when `surface` matches a known symbol
    /// (exact normalized match, then best content-token Jaccard at or
    /// above the identification threshold); otherwise mints a new one.
    pub fn resolve_or_intern(
        &mut self,
        surface: &str,
        span: Option<(usize, usize)>,
    ) -> Result<SymbolId, LogicError> {
        let trimmed = surface.trim();
        if trimmed.is_empty() {
            return Err(LogicError::EmptySurface);
        }
        if let Some(id) = self.lookup(trimmed) {
            return Ok(id);
        }
        self.intern(trimmed, span)
    }

    /// Match without minting: exact normalized hit, else the best
    /// Jaccard >= threshold, ties going to the lowest id.
    pub fn lookup(&self, surface: &str) -> Option<SymbolId> {
        let norm = normalize_surface(surface);
        if let Some(&id) = self.by_norm.get(&norm) {
            return Some(id);
        }
        let probe = content_token_set(surface);
        let mut best: Option<(f64, SymbolId)> = None;
        for sym in &self.symbols {
            let j = jaccard(&probe, &content_token_set(&sym.surface));
            if j >= SYMBOL_JACCARD {
                let better = match best {
                    Some((bj, _)) => j > bj,
                    None => true,
                };
                if better {
                    best = Some((j, sym.id));
                }
            }
        }
        best.map(|(_, id)| id)
    }
}

/// Lowercase, drop article tokens, collapse whitespace.
pub fn normalize_surface(surface: &str) -> String {
    surface
        .split_whitespace()
        .map(|t| t.to_lowercase())
        .filter(|t| !matches!(t.as_str(), "a" | "an" | "the"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Lowercased tokens that carry content: everything except function,
/// glue and negation words.
pub fn content_token_set(surface: &str) -> Vec<String> {
    let mut tokens: Vec<String> = surface
        .split_whitespace()
        .map(|t| t.to_lowercase())
        .filter(|t| crate::identify::is_content_word(t))
        .collect();
    tokens.sort();
    tokens.dedup();
    tokens
}

/// Jaccard overlap of two sorted, deduplicated token lists.
pub fn jaccard(a: &[String], b: &[String]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    let mut inter = 0usize;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                inter += 1;
                i += 1;
                j += 1;
            }
        }
    }
    let union = a.len() + b.len() - inter;
    inter as f64 / union as f64
}

/// Deduplicated set of implications over a shared symbol table, kept in
/// canonical order (antecedent symbol id, antecedent polarity,
/// consequent symbol id, consequent polarity).
#[derive(Debug, Clone, Default)]
pub struct ExpressionSet {
    symbols: SymbolTable,
    expressions: BTreeMap<ImplicationKey, Implication>,
}

impl ExpressionSet {
    pub fn new(symbols: SymbolTable) -> Self {
        ExpressionSet { symbols, expressions: BTreeMap::new() }
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    pub fn symbols_mut(&mut self) -> &mut SymbolTable {
        &mut self.symbols
    }

    pub fn len(&self) -> usize {
        self.expressions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.expressions.is_empty()
    }

    /// Inserts unless an equal expression (provenance aside) is already
    /// present; the first derivation is kept. Returns whether the set grew.
    pub fn insert(&mut self, imp: Implication) -> Result<bool, LogicError> {
        for lit in imp.literals() {
            if !self.symbols.contains(lit.symbol) {
                return Err(LogicError::UnresolvedSymbol(lit.symbol));
            }
        }
        match self.expressions.entry(imp.key()) {
            std::collections::btree_map::Entry::Occupied(_) => Ok(false),
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(imp);
                Ok(true)
            }
        }
    }

    pub fn contains_key(&self, key: &ImplicationKey) -> bool {
        self.expressions.contains_key(key)
    }

    pub fn get(&self, key: &ImplicationKey) -> Option<&Implication> {
        self.expressions.get(key)
    }

    /// Expressions in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &Implication> {
        self.expressions.values()
    }

    pub fn keys(&self) -> impl Iterator<Item = &ImplicationKey> {
        self.expressions.keys()
    }

    /// Set with one expression removed; `None` when absent.
    pub fn without(&self, key: &ImplicationKey) -> Option<ExpressionSet> {
        if !self.expressions.contains_key(key) {
            return None;
        }
        let mut out = self.clone();
        out.expressions.remove(key);
        Some(out)
    }

    /// Set with `key` replaced by `imp` (dedup applies: if `imp` equals
    /// another member the result is one expression smaller).
    pub fn replacing(&self, key: &ImplicationKey, imp: Implication) -> Option<ExpressionSet> {
        let mut out = self.without(key)?;
        // Literals were valid in `self`, table is unchanged.
        out.expressions.entry(imp.key()).or_insert(imp);
        Some(out)
    }

    /// Canonical text rendering: one implication per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for imp in self.expressions.values() {
            if !out.is_empty() {
                out.push('\n');
            }
            out.push_str(&imp.to_string());
        }
        out
    }
}

impl fmt::Display for ExpressionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

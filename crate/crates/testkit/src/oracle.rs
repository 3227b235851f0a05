//! Independent oracles the implementation must agree with. Nothing in
//! here reuses the saturation engine under test: the extension oracle
//! runs graph reachability, the equivalence oracle enumerates truth
//! tables.

use std::collections::BTreeSet;

use symlogic_core::{ExpressionSet, ImplicationKey, Literal, Polarity, SymbolId};

fn node(lit: Literal, n: usize) -> usize {
    lit.symbol.index() + if lit.is_negated() { n } else { 0 }
}

fn literal(node: usize, n: usize) -> Literal {
    let polarity = if node >= n { Polarity::Negated } else { Polarity::Positive };
    Literal { symbol: SymbolId((node % n) as u32), polarity }
}

/// Reachability oracle for the extension set: build the literal graph
/// holding every expression edge plus its contrapositive edge, run
/// all-pairs reachability, and emit every non-reflexive reachable pair
/// not already in the input set.
pub fn extension_oracle(set: &ExpressionSet) -> BTreeSet<ImplicationKey> {
    let n = set.symbols().len();
    let nodes = 2 * n;
    let mut adj = vec![vec![false; nodes]; nodes];
    for imp in set.iter() {
        let (a, c) = imp.key();
        adj[node(a, n)][node(c, n)] = true;
        adj[node(c.negate(), n)][node(a.negate(), n)] = true;
    }

    let mut result = BTreeSet::new();
    for start in 0..nodes {
        // BFS over edges; a node does not reach itself via the empty path.
        let mut reached = vec![false; nodes];
        let mut queue = std::collections::VecDeque::new();
        for next in 0..nodes {
            if adj[start][next] && !reached[next] {
                reached[next] = true;
                queue.push_back(next);
            }
        }
        while let Some(cur) = queue.pop_front() {
            for next in 0..nodes {
                if adj[cur][next] && !reached[next] {
                    reached[next] = true;
                    queue.push_back(next);
                }
            }
        }
        for end in 0..nodes {
            if reached[end] && end != start {
                let key = (literal(start, n), literal(end, n));
                if !set.contains_key(&key) {
                    result.insert(key);
                }
            }
        }
    }
    result
}

fn satisfies(key: &ImplicationKey, assignment: u64) -> bool {
    let holds = |lit: Literal| {
        let value = assignment >> lit.symbol.index() & 1 == 1;
        value != lit.is_negated()
    };
    !holds(key.0) || holds(key.1)
}

/// Bitmask of models (satisfying assignments) over `n` symbols.
pub fn models(set: &ExpressionSet, n: usize) -> Vec<u64> {
    assert!(n <= 20, "truth-table oracle capped at 20 symbols");
    (0..1u64 << n)
        .filter(|&a| set.iter().all(|imp| satisfies(&imp.key(), a)))
        .collect()
}

/// Truth-table equivalence of two sets over a shared symbol universe.
pub fn truth_table_equivalent(a: &ExpressionSet, b: &ExpressionSet) -> bool {
    let n = a.symbols().len().max(b.symbols().len());
    models(a, n) == models(b, n)
}

/// Truth-table entailment of a single implication.
pub fn truth_table_entails(set: &ExpressionSet, key: &ImplicationKey) -> bool {
    let n = set.symbols().len();
    models(set, n).iter().all(|&a| satisfies(key, a))
}

/// True when no literal of the closure graph reaches a complementary
/// pair; sets violating this force some literal false and count as
/// degenerate inputs for augmentation tests.
pub fn is_consistent(set: &ExpressionSet) -> bool {
    let n = set.symbols().len();
    let nodes = 2 * n;
    let mut adj = vec![vec![false; nodes]; nodes];
    for imp in set.iter() {
        let (a, c) = imp.key();
        adj[node(a, n)][node(c, n)] = true;
        adj[node(c.negate(), n)][node(a.negate(), n)] = true;
    }
    // Floyd-Warshall closure.
    for k in 0..nodes {
        for i in 0..nodes {
            if adj[i][k] {
                for j in 0..nodes {
                    if adj[k][j] {
                        adj[i][j] = true;
                    }
                }
            }
        }
    }
    for lit in 0..nodes {
        for sym in 0..n {
            if adj[lit][sym] && adj[lit][sym + n] {
                return false;
            }
        }
    }
    true
}

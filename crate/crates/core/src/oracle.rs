//! Brute-force references for canonical forms and enumeration: every
//! labelled graph on `n` vertices, deduplicated by the lexicographically
//! largest adjacency over all `n!` relabellings. Practical up to `n = 7`.

use crate::canon::canonical_graph;
use crate::enumerate::{enumerate, EnumFilter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};

/// Largest order the oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 7;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Adjacency rows of `g` maximised over `perms`.
pub fn permutation_form(g: &Graph, perms: &[Vec<usize>]) -> Vec<u64> {
    perms.iter().map(|p| g.relabel(p).rows().to_vec()).max().unwrap_or_default()
}

/// Every labelled simple graph on `n` vertices, indexed by edge bitmask.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let mut g = Graph::empty(n).expect("oracle orders are small");
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleComparison {
    pub n: usize,
    pub labeled: usize,
    /// Isomorphism classes found by permutation search.
    pub brute_classes: usize,
    /// Distinct canonical forms among the labelled graphs.
    pub canonical_classes: usize,
    /// Graphs produced by the enumerator.
    pub enumerated: usize,
    /// Canonical forms and permutation forms induce the same partition.
    pub canonical_agrees: bool,
    /// The enumerator emits one graph per permutation class.
    pub enumeration_agrees: bool,
}

/// Compares [`canonical_graph`] and the enumerator against permutation search on order `n`.
pub fn compare_with_brute_force(n: usize) -> Result<OracleComparison> {
    if n > ORACLE_MAX_ORDER {
        return Err(Error::InvalidParams(format!("the permutation oracle is limited to n ≤ {ORACLE_MAX_ORDER}")));
    }
    let perms = permutations(n);
    let mut canon_to_brute: HashMap<Graph, Vec<u64>> = HashMap::new();
    let mut brute_to_canon: HashMap<Vec<u64>, Graph> = HashMap::new();
    let mut labeled = 0;
    let mut canonical_agrees = true;
    for g in labeled_graphs(n) {
        labeled += 1;
        let c = canonical_graph(&g);
        let b = permutation_form(&g, &perms);
        canonical_agrees &= *canon_to_brute.entry(c.clone()).or_insert_with(|| b.clone()) == b;
        canonical_agrees &= *brute_to_canon.entry(b).or_insert_with(|| c.clone()) == c;
    }
    let mut seen = HashSet::new();
    let mut enumerated = 0;
    let mut enumeration_agrees = true;
    enumerate(&EnumFilter::new(n), false, |g| {
        enumerated += 1;
        enumeration_agrees &= seen.insert(permutation_form(&g, &perms));
    })?;
    enumeration_agrees &= seen.len() == brute_to_canon.len();
    Ok(OracleComparison {
        n,
        labeled,
        brute_classes: brute_to_canon.len(),
        canonical_classes: canon_to_brute.len(),
        enumerated,
        canonical_agrees: canonical_agrees && canon_to_brute.len() == brute_to_canon.len(),
        enumeration_agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_class_counts() {
        for (n, classes) in [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            let c = compare_with_brute_force(n).unwrap();
            assert_eq!(c.brute_classes, classes);
            assert!(c.canonical_agrees && c.enumeration_agrees, "{c:?}");
            assert_eq!(c.enumerated, classes);
        }
    }
}

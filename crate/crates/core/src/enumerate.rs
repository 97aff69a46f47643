//! Orderly generation of simple graphs up to isomorphism by vertex addition.
//!
//! A graph `G` on `j + 1` vertices is kept as a child of the canonical graph
//! `P` iff the new vertex has minimum degree in `G` and deleting the
//! canonically chosen minimum-degree vertex of `G` leaves a graph isomorphic
//! to `P`. Every isomorphism class therefore has exactly one parent.

use crate::canon::{canonical_graph, canonical_labeling};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Largest order enumerated without an explicit override.
pub const SOFT_MAX_ORDER: usize = 11;

/// Below this order parallel runs stay on one thread.
const SPLIT_LEVEL: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumFilter {
    pub n: usize,
    pub m: Option<usize>,
    pub connected_only: bool,
    pub degree_cap: Option<usize>,
}

impl EnumFilter {
    pub fn new(n: usize) -> Self {
        EnumFilter { n, m: None, connected_only: false, degree_cap: None }
    }

    pub fn edges(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    pub fn max_degree(mut self, cap: usize) -> Self {
        self.degree_cap = Some(cap);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_VERTICES {
            return Err(Error::TooLarge { n: self.n, max: MAX_VERTICES });
        }
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        match self.m {
            Some(m) if m > pairs => Err(Error::InvalidParams(format!("m = {m} exceeds C({}, 2) = {pairs}", self.n))),
            _ => Ok(()),
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        g.order() == self.n
            && self.m.is_none_or(|m| g.edge_count() == m)
            && self.degree_cap.is_none_or(|c| g.degrees().into_iter().all(|d| d <= c))
            && (!self.connected_only || g.is_connected())
    }

    /// Whether some descendant of `g` (an intermediate graph) can pass the filter.
    fn feasible(&self, g: &Graph) -> bool {
        let degrees = g.degrees();
        if let Some(cap) = self.degree_cap {
            if degrees.iter().any(|&d| d > cap) {
                return false;
            }
        }
        let Some(m) = self.m else { return true };
        let have = g.edge_count();
        if have > m {
            return false;
        }
        let j = g.order();
        let mut delta = degrees.into_iter().min().unwrap_or(0);
        let mut reachable = have;
        for i in j + 1..=self.n {
            // the vertex added at order i has the minimum degree there
            let mut d = (delta + 1).min(i - 1).min(2 * m / i);
            if let Some(cap) = self.degree_cap {
                d = d.min(cap);
            }
            reachable += d;
            delta = d;
        }
        reachable >= m
    }
}

/// Enumerates one canonical representative per isomorphism class passing
/// `filter`, in a fixed order. Orders above [`SOFT_MAX_ORDER`] need `force`.
pub fn enumerate(filter: &EnumFilter, force: bool, mut visit: impl FnMut(Graph)) -> Result<()> {
    check(filter, force)?;
    if filter.n == 0 {
        let g = Graph::empty(0)?;
        if filter.accepts(&g) {
            visit(g);
        }
        return Ok(());
    }
    descend(Graph::empty(1)?, filter, &mut visit);
    Ok(())
}

pub fn enumerate_vec(filter: &EnumFilter, force: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    enumerate(filter, force, |g| out.push(g))?;
    Ok(out)
}

/// Same output, in the same order, as [`enumerate_vec`], with subtrees below
/// a fixed split level processed on the current rayon pool.
pub fn enumerate_parallel(filter: &EnumFilter, force: bool) -> Result<Vec<Graph>> {
    check(filter, force)?;
    if filter.n <= SPLIT_LEVEL {
        return enumerate_vec(filter, force);
    }
    let mut frontier = vec![Graph::empty(1)?];
    for _ in 1..SPLIT_LEVEL {
        frontier = frontier.iter().flat_map(|p| children(p, filter)).collect();
    }
    let parts: Vec<Vec<Graph>> = frontier
        .into_par_iter()
        .map(|g| {
            let mut out = Vec::new();
            descend(g, filter, &mut |h| out.push(h));
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

fn check(filter: &EnumFilter, force: bool) -> Result<()> {
    filter.validate()?;
    if filter.n > SOFT_MAX_ORDER && !force {
        return Err(Error::Budget { n: filter.n, guard: SOFT_MAX_ORDER });
    }
    Ok(())
}

fn descend(g: Graph, filter: &EnumFilter, visit: &mut dyn FnMut(Graph)) {
    if g.order() == filter.n {
        if filter.accepts(&g) {
            visit(g);
        }
        return;
    }
    for c in children(&g, filter) {
        descend(c, filter, visit);
    }
}

/// Canonical children of the canonical graph `parent` that may still reach the filter.
fn children(parent: &Graph, filter: &EnumFilter) -> Vec<Graph> {
    let j = parent.order();
    let degrees = parent.degrees();
    let delta = degrees.iter().copied().min().unwrap_or(0);
    let max_k = (delta + 1).min(j);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..1 << j {
        let k = s.count_ones() as usize;
        if k > max_k {
            continue;
        }
        // the new vertex must have minimum degree
        if (0..j).any(|u| degrees[u] + (((s >> u) & 1) as usize) < k) {
            continue;
        }
        let child = parent.with_vertex(s).expect("order checked by the filter");
        if !filter.feasible(&child) {
            continue;
        }
        let lab = canonical_labeling(&child);
        let w = (0..=j)
            .filter(|&u| child.degree(u) == k)
            .max_by_key(|&u| lab.position[u])
            .expect("the new vertex has minimum degree");
        if w != j && canonical_graph(&child.remove_vertex(w)) != *parent {
            continue;
        }
        if seen.insert(lab.graph.clone()) {
            out.push(lab.graph);
        }
    }
    out
}

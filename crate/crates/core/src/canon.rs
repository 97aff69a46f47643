//! Canonical labeling by partition refinement and individualization, with
//! automorphism pruning of the search tree.

use crate::graph::{iter_bits, Graph};
use crate::graph6::to_graph6;

/// A canonical relabeling of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    /// `position[v]` is the canonical label of vertex `v`.
    pub position: Vec<usize>,
    /// The relabeled graph; identical for all isomorphic inputs.
    pub graph: Graph,
    /// Generators of a subgroup of the automorphism group found during the search.
    pub automorphisms: Vec<Vec<usize>>,
}

impl Labeling {
    /// Vertex orbits under the found automorphisms, as a representative per vertex.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.position.len());
        for a in &self.automorphisms {
            for (u, &w) in a.iter().enumerate() {
                uf.union(u, w);
            }
        }
        (0..self.position.len()).map(|v| uf.find(v)).collect()
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    let mut search = Search { g, best: None, autos: Vec::new(), path: Vec::new() };
    let mut cells = if n == 0 { Vec::new() } else { vec![crate::graph::mask(n)] };
    refine(g, &mut cells);
    search.node(cells);
    let best = search.best.expect("the search reaches at least one leaf");
    Labeling { graph: Graph::from_rows_unchecked(best.cert), position: best.position, automorphisms: search.autos }
}

pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

/// graph6 string of the canonical relabeling.
pub fn canonical_form(g: &Graph) -> String {
    to_graph6(&canonical_graph(g))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_graph(g) == canonical_graph(h)
}

struct Leaf {
    cert: Vec<u64>,
    position: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    /// Explores the subtree below an equitable ordered partition. `Some(d)`
    /// asks the caller to unwind to the node at depth `d`.
    fn node(&mut self, cells: Vec<u64>) -> Option<usize> {
        let n = self.g.order();
        if cells.len() == n {
            return self.leaf(&cells);
        }
        let depth = self.path.len();
        let t = cells.iter().position(|c| c.count_ones() > 1).expect("non-discrete partition");
        let mut explored: Vec<usize> = Vec::new();
        for c in iter_bits(cells[t]) {
            if !explored.is_empty() && self.equivalent_to_explored(c, &explored) {
                continue;
            }
            explored.push(c);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(1u64 << c);
            next.push(cells[t] & !(1u64 << c));
            next.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut next);
            self.path.push(c);
            let r = self.node(next);
            self.path.pop();
            if let Some(d) = r {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let n = self.g.order();
        let mut position = vec![0; n];
        for (p, c) in cells.iter().enumerate() {
            position[c.trailing_zeros() as usize] = p;
        }
        let mut cert = vec![0u64; n];
        for u in 0..n {
            cert[position[u]] = iter_bits(self.g.row(u)).fold(0, |acc, w| acc | 1u64 << position[w]);
        }
        let Some(best) = &self.best else {
            self.best = Some(Leaf { cert, position, path: self.path.clone() });
            return None;
        };
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { cert, position, path: self.path.clone() });
                None
            }
            std::cmp::Ordering::Less => None,
            std::cmp::Ordering::Equal => {
                let mut inverse = vec![0; n];
                for (v, &p) in best.position.iter().enumerate() {
                    inverse[p] = v;
                }
                let gamma: Vec<usize> = position.iter().map(|&p| inverse[p]).collect();
                let d = self.path.iter().zip(&best.path).take_while(|(a, b)| a == b).count();
                self.autos.push(gamma);
                Some(d)
            }
        }
    }

    fn equivalent_to_explored(&self, c: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for a in &self.autos {
            if self.path.iter().all(|&p| a[p] == p) {
                any = true;
                for (u, &w) in a.iter().enumerate() {
                    uf.union(u, w);
                }
            }
        }
        any && explored.iter().any(|&e| uf.find(e) == uf.find(c))
    }
}

/// Refines an ordered partition to the coarsest equitable partition below it:
/// cells are split by neighbour counts into earlier cells, fragments ordered by count.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let n = g.order();
    'pass: loop {
        if cells.len() == n {
            return;
        }
        for w in 0..cells.len() {
            let splitter = cells[w];
            for x in 0..cells.len() {
                let cell = cells[x];
                if cell.count_ones() < 2 {
                    continue;
                }
                let mut counts = [0u64; 65];
                let mut distinct = 0usize;
                for v in iter_bits(cell) {
                    let k = (g.row(v) & splitter).count_ones() as usize;
                    if counts[k] == 0 {
                        distinct += 1;
                    }
                    counts[k] |= 1u64 << v;
                }
                if distinct > 1 {
                    let fragments: Vec<u64> = counts.iter().copied().filter(|&c| c != 0).collect();
                    cells.splice(x..=x, fragments);
                    continue 'pass;
                }
            }
        }
        return;
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

//! Simple undirected graphs on at most 64 vertices, stored as adjacency bit rows.

use crate::error::{Error, Result};
use std::fmt;

/// Largest vertex count representable by a single `u64` row.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected labeled graph. Vertices are `0..n`.
///
/// Row `v` holds the neighbour set of `v`; rows are symmetric and the
/// diagonal is always clear.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = mask(n);
        for v in 0..n {
            g.rows[v] = full & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbour bit rows, validating symmetry and the diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let full = mask(n);
        for (v, &r) in rows.iter().enumerate() {
            if r & !full != 0 || (r >> v) & 1 == 1 {
                return Err(Error::InvalidParams(format!("row {v} has bits outside the graph")));
            }
            for u in iter_bits(r) {
                if (rows[u] >> v) & 1 == 0 {
                    return Err(Error::InvalidParams(format!("adjacency not symmetric at ({v},{u})")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    #[inline]
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        Graph { n: rows.len(), rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    /// Adds `uv`. Panics on a loop or out-of-range vertex.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge ({u},{v})");
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidParams(format!("loop at vertex {u}")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1u64 << v);
        self.rows[v] &= !(1u64 << u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        iter_bits(self.rows[v])
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| iter_bits(self.rows[u] & !mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let full = mask(self.n);
        let rows = (0..self.n).map(|v| !self.rows[v] & full & !(1u64 << v)).collect();
        Graph { n: self.n, rows }
    }

    /// Block-diagonal union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let shift = self.n;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << shift));
        Ok(Graph { n, rows })
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = mask(self.n);
        let right = mask(g.n) & !left;
        for v in 0..g.n {
            g.rows[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    /// `r` disjoint copies of `self`.
    pub fn copies(&self, r: usize) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for _ in 0..r {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// The graph with vertex `v` mapped to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            let mut r = 0u64;
            for u in iter_bits(self.rows[v]) {
                r |= 1u64 << perm[u];
            }
            rows[perm[v]] = r;
        }
        Graph { n: self.n, rows }
    }

    /// Subgraph induced on `keep`, with vertices renumbered in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let rows = keep
            .iter()
            .map(|&v| {
                let mut r = 0u64;
                for u in iter_bits(self.rows[v]) {
                    if pos[u] != usize::MAX {
                        r |= 1u64 << pos[u];
                    }
                }
                r
            })
            .collect();
        Graph { n: keep.len(), rows }
    }

    /// Deletes `v`; vertices above it shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let low = mask(v);
        let rows = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let r = self.rows[u];
                (r & low) | ((r >> 1) & !low)
            })
            .collect();
        Graph { n: self.n - 1, rows }
    }

    /// Appends a vertex adjacent to `neighbors` (a bit set over the existing vertices).
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut rows = self.rows.clone();
        for u in iter_bits(neighbors) {
            rows[u] |= 1u64 << self.n;
        }
        rows.push(neighbors & mask(self.n));
        Ok(Graph { n, rows })
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if (seen >> start) & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in iter_bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(iter_bits(comp).collect());
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn count_subgraphs(&self) -> SubgraphCounts {
        SubgraphCounts {
            triangles: self.triangle_count(),
            paths3: self.degrees().iter().map(|&d| d * d.saturating_sub(1) / 2).sum(),
            cycles4: self.four_cycle_count(),
        }
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for (u, v) in self.edges() {
            t += (self.rows[u] & self.rows[v] & !mask(v + 1)).count_ones() as usize;
        }
        t
    }

    /// Counts 4-cycles once each: walk `a b c d` with `a` the least vertex and `b < d`.
    fn four_cycle_count(&self) -> usize {
        let mut count = 0;
        for a in 0..self.n {
            let above = !mask(a + 1);
            for b in iter_bits(self.rows[a] & above) {
                for d in iter_bits(self.rows[a] & above & !mask(b + 1)) {
                    let common = self.rows[b] & self.rows[d] & above & !(1u64 << a);
                    count += common.count_ones() as usize;
                }
            }
        }
        count
    }

    /// Vertices of degree exactly one adjacent to `v`.
    pub fn pendant_neighbors(&self, v: usize) -> Vec<usize> {
        self.neighbors(v).filter(|&u| self.degree(u) == 1).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Iterates the set bits of `bits` in increasing order.
#[inline]
pub fn iter_bits(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

/// Subgraph counts: triangles, 3-vertex paths and 4-cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgraphCounts {
    pub triangles: usize,
    pub paths3: usize,
    pub cycles4: usize,
}

/// Degrees sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Largest degree, `d₁`; zero for the empty graph.
    pub fn max(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Second largest degree, `d₂`; zero when `n < 2`.
    pub fn second(&self) -> usize {
        self.0.get(1).copied().unwrap_or(0)
    }

    /// Number of vertices of degree `i`.
    pub fn count_of(&self, i: usize) -> usize {
        self.0.iter().filter(|&&d| d == i).count()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.0.iter().map(|&d| (d * d) as u64).sum()
    }

    pub fn sum_of_cubes(&self) -> u64 {
        self.0.iter().map(|&d| (d * d * d) as u64).sum()
    }
}

/// A graph with one distinguished vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if root >= graph.order() {
            return Err(Error::VertexOutOfRange { vertex: root, n: graph.order() });
        }
        Ok(RootedGraph { graph, root })
    }

    /// The single-vertex rooted graph, identity for [`RootedGraph::coalesce`].
    pub fn trivial() -> Self {
        RootedGraph { graph: Graph::empty(1).expect("K1"), root: 0 }
    }

    /// Identifies the roots of `self` and `other`.
    ///
    /// Vertices of `self` keep their labels; the non-root vertices of `other`
    /// follow in their original order. The result is rooted at `self.root`.
    pub fn coalesce(&self, other: &RootedGraph) -> Result<RootedGraph> {
        let n = self.graph.order() + other.graph.order() - 1;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let base = self.graph.order();
        let map: Vec<usize> = (0..other.graph.order())
            .map(|v| match v.cmp(&other.root) {
                std::cmp::Ordering::Equal => self.root,
                std::cmp::Ordering::Less => base + v,
                std::cmp::Ordering::Greater => base + v - 1,
            })
            .collect();
        let mut g = Graph::empty(n)?;
        for (u, v) in self.graph.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.graph.edges() {
            g.add_edge(map[u], map[v]);
        }
        Ok(RootedGraph { graph: g, root: self.root })
    }
}

//! Generators for the graph families used throughout the toolkit.
//!
//! Numbering convention: the root (centre) is vertex 0, then triangle
//! vertices in pairs, then the vertices of each pendant path in
//! non-increasing length order, each path listed outward from the centre.

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedGraph, MAX_VERTICES};
use serde::{Deserialize, Serialize};
use std::fmt;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooLarge { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// Path on `n ≥ 1` vertices rooted at an end (vertex 0).
pub fn path(n: usize) -> Result<RootedGraph> {
    if n == 0 {
        return Err(Error::InvalidParams("a path needs at least one vertex".into()));
    }
    check_order(n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    RootedGraph::new(Graph::from_edges(n, &edges)?, 0)
}

/// Cycle on `n ≥ 3` vertices rooted at vertex 0.
pub fn cycle(n: usize) -> Result<RootedGraph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    check_order(n)?;
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    RootedGraph::new(Graph::from_edges(n, &edges)?, 0)
}

/// Star `K_{1,r}` rooted at its centre.
pub fn star(r: usize) -> Result<RootedGraph> {
    StarlikeSpec::new(vec![1; r]).map(|s| s.realize())?
}

/// Friendship graph `F_s`: `s` triangles sharing the centre. `F_0` is `K_1`.
pub fn friendship(s: usize) -> Result<RootedGraph> {
    PathFriendshipSpec::new(s, vec![])?.realize()
}

/// Lollipop `H_{n,p}` on `n` vertices: a cycle `C_p` with a pendant path
/// carrying the remaining `n − p` vertices. Rooted at the cycle vertex
/// where the path attaches.
pub fn lollipop(n: usize, p: usize) -> Result<RootedGraph> {
    if p < 3 || n < p {
        return Err(Error::InvalidParams(format!("lollipop needs 3 ≤ p ≤ n, got n = {n}, p = {p}")));
    }
    check_order(n)?;
    cycle(p)?.coalesce(&path(n - p + 1)?)
}

/// Wind-wheel `G_{s,t}`: `s` triangles at the end of a path `P_{t+1}`;
/// `2s + t + 1` vertices, rooted at the triangles' common vertex.
pub fn windwheel(s: usize, t: usize) -> Result<RootedGraph> {
    let branches = if t == 0 { vec![] } else { vec![t] };
    PathFriendshipSpec::new(s, branches)?.realize()
}

/// `G(a, b, c, d)`: `a` triangles and `b`, `c`, `d` pendant paths with one,
/// two and three edges, all sharing one vertex; `2a + b + 2c + 3d + 1` vertices.
pub fn gabcd(a: usize, b: usize, c: usize, d: usize) -> Result<RootedGraph> {
    let mut t = vec![3; d];
    t.extend(std::iter::repeat_n(2, c));
    t.extend(std::iter::repeat_n(1, b));
    PathFriendshipSpec::new(a, t)?.realize()
}

/// Attaches paths with the given numbers of vertices to `root`, in order.
fn attach_paths(g: &mut Graph, root: usize, mut next: usize, lengths: &[usize]) -> usize {
    for &len in lengths {
        let mut prev = root;
        for _ in 0..len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    next
}

/// Parameters `(s, t₁ ≥ … ≥ t_k)` of a path-friendship graph: `s` triangles
/// and `k` pendant paths, path `i` contributing `tᵢ` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathFriendshipSpec {
    s: usize,
    t: Vec<usize>,
}

impl PathFriendshipSpec {
    /// Sorts `t` non-increasing; every length must be at least one.
    pub fn new(s: usize, mut t: Vec<usize>) -> Result<Self> {
        if t.contains(&0) {
            return Err(Error::InvalidParams("path lengths must be at least 1".into()));
        }
        t.sort_unstable_by(|a, b| b.cmp(a));
        let spec = PathFriendshipSpec { s, t };
        check_order(spec.order())?;
        Ok(spec)
    }

    pub fn triangles(&self) -> usize {
        self.s
    }

    pub fn paths(&self) -> &[usize] {
        &self.t
    }

    pub fn path_count(&self) -> usize {
        self.t.len()
    }

    pub fn order(&self) -> usize {
        2 * self.s + self.t.iter().sum::<usize>() + 1
    }

    pub fn size(&self) -> usize {
        self.order() + self.s - 1
    }

    /// Degree of the centre, `2s + k`.
    pub fn center_degree(&self) -> usize {
        2 * self.s + self.t.len()
    }

    pub fn realize(&self) -> Result<RootedGraph> {
        let n = self.order();
        let mut g = Graph::empty(n)?;
        for i in 0..self.s {
            let (a, b) = (1 + 2 * i, 2 + 2 * i);
            g.add_edge(0, a);
            g.add_edge(0, b);
            g.add_edge(a, b);
        }
        let end = attach_paths(&mut g, 0, 2 * self.s + 1, &self.t);
        debug_assert_eq!(end, n);
        RootedGraph::new(g, 0)
    }

    pub fn graph(&self) -> Graph {
        self.realize().expect("validated in new").graph
    }

    /// The starlike tree left after dropping the outer edge of every triangle.
    pub fn starlike_reduction(&self) -> StarlikeSpec {
        StarlikeSpec { pendants: 2 * self.s, branches: self.t.clone() }
    }

    /// Every spec on exactly `n` vertices with at least `min_s` triangles,
    /// ordered by `s` then by the partition in reverse lexicographic order.
    pub fn all_with_order(n: usize, min_s: usize) -> Vec<PathFriendshipSpec> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut s = min_s;
        while 2 * s < n {
            for t in partitions(n - 1 - 2 * s, n) {
                out.push(PathFriendshipSpec { s, t });
            }
            s += 1;
        }
        out
    }
}

impl fmt::Display for PathFriendshipSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({}", self.s)?;
        for t in &self.t {
            write!(f, ", {t}")?;
        }
        write!(f, ")")
    }
}

/// A starlike tree: `pendants` branches of one vertex each plus `branches`
/// longer or equal paths, all hanging from the centre. The pair is the
/// `(2s, t₁, …, t_k)` form produced by [`PathFriendshipSpec::starlike_reduction`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StarlikeSpec {
    pub pendants: usize,
    pub branches: Vec<usize>,
}

impl StarlikeSpec {
    pub fn new(mut branches: Vec<usize>) -> Result<Self> {
        if branches.contains(&0) {
            return Err(Error::InvalidParams("branch lengths must be at least 1".into()));
        }
        branches.sort_unstable_by(|a, b| b.cmp(a));
        let spec = StarlikeSpec { pendants: 0, branches };
        check_order(spec.order())?;
        Ok(spec)
    }

    pub fn with_pendants(pendants: usize, branches: Vec<usize>) -> Result<Self> {
        let mut spec = StarlikeSpec::new(branches)?;
        spec.pendants = pendants;
        check_order(spec.order())?;
        Ok(spec)
    }

    pub fn order(&self) -> usize {
        1 + self.pendants + self.branches.iter().sum::<usize>()
    }

    pub fn branch_count(&self) -> usize {
        self.pendants + self.branches.len()
    }

    /// All branch lengths, non-increasing, pendants included.
    pub fn all_branches(&self) -> Vec<usize> {
        let mut b = self.branches.clone();
        b.extend(std::iter::repeat_n(1, self.pendants));
        b
    }

    pub fn realize(&self) -> Result<RootedGraph> {
        let n = self.order();
        let mut g = Graph::empty(n)?;
        let next = attach_paths(&mut g, 0, 1, &vec![1; self.pendants]);
        attach_paths(&mut g, 0, next, &self.branches);
        RootedGraph::new(g, 0)
    }

    pub fn graph(&self) -> Graph {
        self.realize().expect("validated in new").graph
    }

    /// Pairwise non-isomorphic starlike trees on `n ≥ 2` vertices: the path
    /// once, then every partition of `n − 1` into at least three parts.
    pub fn all_with_order(n: usize) -> Vec<StarlikeSpec> {
        if n < 2 {
            return vec![];
        }
        let mut out = vec![StarlikeSpec { pendants: 0, branches: vec![n - 1] }];
        out.extend(
            partitions(n - 1, n)
                .into_iter()
                .filter(|p| p.len() >= 3)
                .map(|branches| StarlikeSpec { pendants: 0, branches }),
        );
        out
    }
}

/// Partitions of `total` into parts of size at most `max_part`, each
/// non-increasing, in reverse lexicographic order. `partitions(0, _)` is `[[]]`.
pub fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_part, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paw_is_smallest_path_friendship() {
        let g = PathFriendshipSpec::new(1, vec![1]).unwrap().graph();
        assert_eq!((g.order(), g.edge_count()), (4, 4));
        assert_eq!(g.degree_sequence().as_slice(), &[3, 2, 2, 1]);
    }

    #[test]
    fn friendship_counts() {
        let f2 = friendship(2).unwrap();
        assert_eq!((f2.graph.order(), f2.graph.edge_count()), (5, 6));
        assert_eq!(f2.graph.degree(f2.root), 4);
        for s in 0..8 {
            let g = friendship(s).unwrap().graph;
            assert_eq!((g.order(), g.edge_count()), (2 * s + 1, 3 * s));
        }
    }

    #[test]
    fn gabcd_order() {
        assert_eq!(gabcd(1, 1, 1, 1).unwrap().graph.order(), 9);
        for (a, b, c, d) in [(0, 3, 0, 0), (2, 0, 1, 2), (3, 2, 2, 1)] {
            let g = gabcd(a, b, c, d).unwrap().graph;
            assert_eq!(g.order(), 2 * a + b + 2 * c + 3 * d + 1);
        }
    }

    #[test]
    fn windwheel_order() {
        for s in 0..4 {
            for t in 0..5 {
                assert_eq!(windwheel(s, t).unwrap().graph.order(), 2 * s + t + 1);
            }
        }
    }

    #[test]
    fn lollipop_shape() {
        let g = lollipop(7, 4).unwrap().graph;
        assert_eq!((g.order(), g.edge_count()), (7, 7));
        assert_eq!(g.degree_sequence().as_slice(), &[3, 2, 2, 2, 2, 2, 1]);
        assert_eq!(lollipop(5, 5).unwrap().graph, cycle(5).unwrap().graph);
        assert!(lollipop(5, 2).is_err());
    }

    #[test]
    fn unrealizable_parameters() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(PathFriendshipSpec::new(1, vec![0]).is_err());
        assert!(PathFriendshipSpec::new(40, vec![]).is_err());
    }

    #[test]
    fn path_friendship_with_no_triangles_is_a_path() {
        let g = PathFriendshipSpec::new(0, vec![2, 3]).unwrap().graph();
        assert_eq!(g.degree_sequence().as_slice(), &[2, 2, 2, 2, 1, 1]);
        assert!(g.is_connected());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<_> = (0..10).map(|n| partitions(n, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(partitions(4, 4)[0], vec![4]);
        assert_eq!(partitions(4, 2), vec![vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn starlike_listing() {
        // path plus partitions of 6 with ≥ 3 parts: 11 − 1 − 3 = 7
        assert_eq!(StarlikeSpec::all_with_order(7).len(), 8);
        for s in StarlikeSpec::all_with_order(8) {
            let g = s.graph();
            assert_eq!(g.edge_count(), 7);
            assert!(g.is_connected());
            assert!(g.degrees().iter().filter(|&&d| d > 2).count() <= 1);
        }
    }

    #[test]
    fn reduction_form() {
        let spec = PathFriendshipSpec::new(2, vec![1, 2]).unwrap();
        let star = spec.starlike_reduction();
        assert_eq!(star.all_branches(), vec![2, 1, 1, 1, 1, 1]);
        assert_eq!(star.order(), spec.order());
        assert_eq!(star.graph().degree(0), 6);
    }
}

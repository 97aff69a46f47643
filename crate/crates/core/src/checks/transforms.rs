//! The reduction of a path-friendship graph to a starlike tree, and the
//! invariance of `μ₁` under adding edges among pendant neighbours of a vertex.

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::generators::{PathFriendshipSpec, StarlikeSpec};
use crate::graph::Graph;
use crate::spectral::{eigenvalues, Spectrum, Tolerances};
use serde::{Deserialize, Serialize};

/// A path-friendship graph recognised from its structure, with its starlike reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarlikeReduction {
    pub centre: usize,
    pub spec: PathFriendshipSpec,
    pub starlike: StarlikeSpec,
    pub tree: Graph,
    /// The outer triangle edges that were deleted, one per triangle.
    pub removed: Vec<(usize, usize)>,
}

/// Recognises `g` as a path-friendship graph and deletes the edge of each
/// triangle not incident to the centre.
pub fn starlike_reduction(g: &Graph) -> Result<StarlikeReduction> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return Err(Error::Structure("a path-friendship graph is connected and non-empty".into()));
    }
    let top = g.degree_sequence().max();
    let mut last = None;
    for v in (0..n).filter(|&v| g.degree(v) == top) {
        match reduce_at(g, v) {
            Ok(r) => return Ok(r),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::Structure("no centre candidate".into())))
}

fn reduce_at(g: &Graph, v: usize) -> Result<StarlikeReduction> {
    let rest: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
    let h = g.induced(&rest);
    let mut s = 0;
    let mut t = Vec::new();
    let mut removed = Vec::new();
    for comp in h.components() {
        let verts: Vec<usize> = comp.iter().map(|&i| rest[i]).collect();
        let attached: Vec<usize> = verts.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        let sub = h.induced(&comp);
        let edges = sub.edge_count();
        if verts.len() == 2 && edges == 1 && attached.len() == 2 {
            s += 1;
            removed.push((verts[0].min(verts[1]), verts[0].max(verts[1])));
            continue;
        }
        let is_path = edges + 1 == verts.len() && sub.degrees().iter().all(|&d| d <= 2);
        let end_attached =
            attached.len() == 1 && sub.degree(comp.iter().position(|&i| rest[i] == attached[0]).unwrap()) <= 1;
        if !(is_path && end_attached) {
            return Err(Error::Structure(format!(
                "component {verts:?} of G − {v} is neither a triangle remnant nor a path hanging by an end"
            )));
        }
        t.push(verts.len());
    }
    let spec = PathFriendshipSpec::new(s, t)?;
    let mut tree = g.clone();
    for &(a, b) in &removed {
        tree.remove_edge(a, b);
    }
    let starlike = spec.starlike_reduction();
    debug_assert!(is_tree(&tree));
    Ok(StarlikeReduction { centre: v, spec, starlike, tree, removed })
}

pub fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && g.is_connected() && g.edge_count() + 1 == g.order()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionCheck {
    pub spec: String,
    pub is_tree: bool,
    pub at_most_one_branch_vertex: bool,
    /// `S − v` is `2s K₁ ∪ P_{t₁} ∪ … ∪ P_{t_k}`.
    pub centre_deletion_ok: bool,
    pub removed: usize,
    pub none_at_centre: bool,
    pub matches_starlike_spec: bool,
    /// Re-adding the removed edges recovers a graph isomorphic to the input.
    pub recovers_input: bool,
    pub mu1_gap: f64,
    pub pass: bool,
}

/// Structural replay of the reduction on `spec`, plus the `μ₁` equality of
/// the input and its reduction.
pub fn check_reduction(spec: &PathFriendshipSpec, tol: &Tolerances) -> Result<ReductionCheck> {
    let g = spec.graph();
    let r = starlike_reduction(&g)?;
    let v = r.centre;
    let tree = &r.tree;
    let branch_vertices = (0..tree.order()).filter(|&u| tree.degree(u) > 2).count();
    let rest: Vec<usize> = (0..tree.order()).filter(|&u| u != v).collect();
    let forest = tree.induced(&rest);
    let mut sizes: Vec<usize> = forest.components().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    let mut expected = r.starlike.all_branches();
    expected.sort_unstable();
    let forest_paths = forest.degrees().iter().all(|&d| d <= 2) && forest.edge_count() + sizes.len() == rest.len();
    let none_at_centre = r.removed.iter().all(|&(a, b)| a != v && b != v);
    let (recovers_input, gap) = if r.removed.is_empty() {
        (tree == &g, 0.0)
    } else {
        let back = pendant_edge_mu1(tree, v, &r.removed, tol)?;
        (is_isomorphic(&back.graph, &g), back.gap)
    };
    let check = ReductionCheck {
        spec: spec.to_string(),
        is_tree: is_tree(tree),
        at_most_one_branch_vertex: branch_vertices <= 1,
        centre_deletion_ok: forest_paths && sizes == expected,
        removed: r.removed.len(),
        none_at_centre,
        matches_starlike_spec: is_isomorphic(tree, &r.starlike.graph()) && r.spec == *spec,
        recovers_input,
        mu1_gap: gap,
        pass: false,
    };
    let pass = check.is_tree
        && check.at_most_one_branch_vertex
        && check.centre_deletion_ok
        && check.removed == spec.triangles()
        && check.none_at_centre
        && check.matches_starlike_spec
        && check.recovers_input
        && gap <= tol.check;
    Ok(ReductionCheck { pass, ..check })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PendantEdgeReport {
    pub graph: Graph,
    pub mu1_before: f64,
    pub mu1_after: f64,
    pub gap: f64,
    pub pass: bool,
}

/// Adds `added` to `g`, each edge joining two pendant vertices adjacent to
/// `v`, and compares `μ₁` before and after within `tol.check`.
pub fn pendant_edge_mu1(g: &Graph, v: usize, added: &[(usize, usize)], tol: &Tolerances) -> Result<PendantEdgeReport> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if !g.is_connected() {
        return Err(Error::InvalidParams("the graph must be connected".into()));
    }
    if added.is_empty() {
        return Err(Error::InvalidParams("at least one edge must be added".into()));
    }
    let pendants = g.pendant_neighbors(v);
    let mut h = g.clone();
    for &(a, b) in added {
        let ok = a != b && pendants.contains(&a) && pendants.contains(&b);
        if !ok {
            return Err(Error::InvalidParams(format!("edge ({a}, {b}) does not join two pendant neighbours of {v}")));
        }
        if h.has_edge(a, b) {
            return Err(Error::InvalidParams(format!("edge ({a}, {b}) is added twice")));
        }
        h.add_edge(a, b);
    }
    let before: Spectrum = eigenvalues(g)?;
    let after: Spectrum = eigenvalues(&h)?;
    let gap = (before.largest() - after.largest()).abs();
    Ok(PendantEdgeReport {
        graph: h,
        mu1_before: before.largest(),
        mu1_after: after.largest(),
        gap,
        pass: gap <= tol.check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn paw_reduces_to_claw() {
        let paw = PathFriendshipSpec::new(1, vec![1]).unwrap();
        let r = starlike_reduction(&paw.graph()).unwrap();
        assert!(is_isomorphic(&r.tree, &generators::star(3).unwrap().graph));
        assert!(check_reduction(&paw, &Tolerances::default()).unwrap().pass);
    }

    #[test]
    fn friendship_reduces_to_star() {
        for s in 1..5 {
            let r = starlike_reduction(&generators::friendship(s).unwrap().graph).unwrap();
            assert!(is_isomorphic(&r.tree, &generators::star(2 * s).unwrap().graph));
            assert_eq!(r.removed.len(), s);
        }
    }

    #[test]
    fn two_triangles_two_paths() {
        let spec = PathFriendshipSpec::new(2, vec![2, 1]).unwrap();
        let r = starlike_reduction(&spec.graph()).unwrap();
        assert_eq!(r.starlike, StarlikeSpec { pendants: 4, branches: vec![2, 1] });
        assert_eq!(r.tree.degree(r.centre), 6);
        assert!(check_reduction(&spec, &Tolerances::default()).unwrap().pass);
    }

    #[test]
    fn recognises_relabelled_input() {
        let spec = PathFriendshipSpec::new(2, vec![3, 1, 1]).unwrap();
        let g = spec.graph();
        let perm: Vec<usize> = (0..g.order()).rev().collect();
        assert_eq!(starlike_reduction(&g.relabel(&perm)).unwrap().spec, spec);
    }

    #[test]
    fn rejects_other_graphs() {
        assert!(starlike_reduction(&generators::cycle(5).unwrap().graph).is_err());
        assert!(starlike_reduction(&Graph::complete(4).unwrap()).is_err());
        assert!(starlike_reduction(&generators::lollipop(6, 4).unwrap().graph).is_err());
        // a wind-wheel is a path-friendship graph with one path
        let w = starlike_reduction(&generators::windwheel(2, 2).unwrap().graph).unwrap();
        assert_eq!(w.spec, PathFriendshipSpec::new(2, vec![2]).unwrap());
    }

    #[test]
    fn pendant_edges_keep_mu1() {
        let tol = Tolerances::default();
        let p3 = generators::path(3).unwrap().graph;
        let centre = (0..3).find(|&v| p3.degree(v) == 2).unwrap();
        let ends: Vec<usize> = (0..3).filter(|&v| v != centre).collect();
        let r = pendant_edge_mu1(&p3, centre, &[(ends[0], ends[1])], &tol).unwrap();
        assert!(r.pass && (r.mu1_after - 3.0).abs() < 1e-10);
        assert!(is_isomorphic(&r.graph, &Graph::complete(3).unwrap()));

        let k14 = generators::star(4).unwrap().graph;
        let r = pendant_edge_mu1(&k14, 0, &[(1, 2)], &tol).unwrap();
        assert!(r.pass && (r.mu1_before - 5.0).abs() < 1e-10);
    }

    #[test]
    fn pendant_edge_preconditions() {
        let tol = Tolerances::default();
        let p4 = generators::path(4).unwrap().graph;
        assert!(pendant_edge_mu1(&p4, 1, &[(0, 2)], &tol).is_err());
        let k14 = generators::star(4).unwrap().graph;
        assert!(pendant_edge_mu1(&k14, 0, &[], &tol).is_err());
        assert!(pendant_edge_mu1(&k14, 0, &[(1, 2), (2, 1)], &tol).is_err());
        assert!(pendant_edge_mu1(&k14, 9, &[(1, 2)], &tol).is_err());
    }
}

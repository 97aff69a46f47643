use dls_core::canon::is_isomorphic;
use dls_core::enumerate::{enumerate_vec, EnumFilter};
use dls_core::generators::{
    cycle, friendship, gabcd, lollipop, path, star, windwheel, PathFriendshipSpec, StarlikeSpec,
};
use dls_core::search::cospectral_classes;
use dls_core::spectral::{char_poly, closed_walks, eigenvalues, SpectralInvariants};
use dls_core::{from_graph6, to_graph6, Graph, Spectrum};
use num_bigint::BigInt;
use std::f64::consts::PI;

fn spectrum(g: &Graph) -> Vec<f64> {
    let s: Spectrum = eigenvalues(g).unwrap();
    s.values().to_vec()
}

fn assert_spectrum(g: &Graph, mut expected: Vec<f64>) {
    expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let got = spectrum(g);
    assert_eq!(got.len(), expected.len());
    for (a, b) in got.iter().zip(&expected) {
        assert!((a - b).abs() < 1e-9, "{got:?} vs {expected:?}");
    }
}

fn repeat(x: f64, k: usize) -> Vec<f64> {
    vec![x; k]
}

#[test]
fn path_and_cycle_spectra() {
    for n in 1..=15 {
        let expected = (0..n).map(|k| 2.0 - 2.0 * (k as f64 * PI / n as f64).cos()).collect();
        assert_spectrum(&path(n).unwrap().graph, expected);
    }
    for n in 3..=15 {
        let expected = (0..n).map(|k| 2.0 - 2.0 * (2.0 * PI * k as f64 / n as f64).cos()).collect();
        assert_spectrum(&cycle(n).unwrap().graph, expected);
    }
}

#[test]
fn complete_star_and_friendship_spectra() {
    for n in 1..=12 {
        let mut e = repeat(n as f64, n - 1);
        e.push(0.0);
        assert_spectrum(&Graph::complete(n).unwrap(), e);
    }
    for r in 1..=12 {
        let mut e = vec![r as f64 + 1.0, 0.0];
        e.extend(repeat(1.0, r - 1));
        assert_spectrum(&star(r).unwrap().graph, e);
    }
    for s in 1..=6 {
        let mut e = vec![2.0 * s as f64 + 1.0, 0.0];
        e.extend(repeat(3.0, s));
        e.extend(repeat(1.0, s - 1));
        assert_spectrum(&friendship(s).unwrap().graph, e);
    }
}

fn spanning_trees(g: &Graph) -> BigInt {
    SpectralInvariants::direct(g).spanning_trees
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::empty(a).unwrap().join(&Graph::empty(b).unwrap()).unwrap()
}

#[test]
fn spanning_tree_counts() {
    for n in 1..=12u32 {
        let expected = if n == 1 { BigInt::from(1) } else { BigInt::from(n).pow(n - 2) };
        assert_eq!(spanning_trees(&Graph::complete(n as usize).unwrap()), expected);
    }
    for n in 3..=20 {
        assert_eq!(spanning_trees(&cycle(n).unwrap().graph), BigInt::from(n));
    }
    for spec in StarlikeSpec::all_with_order(9) {
        assert_eq!(spanning_trees(&spec.graph()), BigInt::from(1));
    }
    for s in 1..=8u32 {
        assert_eq!(spanning_trees(&friendship(s as usize).unwrap().graph), BigInt::from(3).pow(s));
    }
    for a in 1..=5u32 {
        for b in 1..=5u32 {
            let expected = BigInt::from(a).pow(b - 1) * BigInt::from(b).pow(a - 1);
            assert_eq!(spanning_trees(&complete_bipartite(a as usize, b as usize)), expected);
        }
    }
    assert_eq!(spanning_trees(&Graph::empty(3).unwrap()), BigInt::from(0));
}

#[test]
fn closed_walk_traces() {
    let c4 = cycle(4).unwrap().graph;
    assert_eq!(closed_walks(&c4, 4).unwrap().trace, 32);
    assert_eq!(closed_walks(&c4, 3).unwrap().trace, 0);
    for n in 3..=8i64 {
        let k = Graph::complete(n as usize).unwrap();
        assert_eq!(closed_walks(&k, 3).unwrap().trace, n * (n - 1) * (n - 2));
        assert_eq!(closed_walks(&k, 2).unwrap().trace, n * (n - 1));
    }
}

#[test]
fn graph_counts_match_known_sequence() {
    let all = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
    for (n, &count) in all.iter().enumerate() {
        assert_eq!(enumerate_vec(&EnumFilter::new(n), false).unwrap().len(), count, "n = {n}");
    }
    let connected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &count) in connected.iter().enumerate() {
        let n = i + 1;
        let f = EnumFilter::new(n).connected(true);
        assert_eq!(enumerate_vec(&f, false).unwrap().len(), count, "n = {n}");
    }
}

#[test]
fn edge_sliced_counts_sum_to_total() {
    let n = 6;
    let total: usize = (0..=15).map(|m| enumerate_vec(&EnumFilter::new(n).edges(m), false).unwrap().len()).sum();
    assert_eq!(total, 156);
}

#[test]
fn graphs_with_a_cospectral_mate() {
    for (n, expected) in [(1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 4), (7, 130), (8, 1767)] {
        let classes = cospectral_classes(enumerate_vec(&EnumFilter::new(n), false).unwrap()).unwrap();
        let with_mate: usize = classes.iter().filter(|c| !c.is_singleton()).map(|c| c.members.len()).sum();
        assert_eq!(with_mate, expected, "n = {n}");
    }
}

#[test]
fn smallest_cospectral_pair_is_not_isomorphic() {
    let a = from_graph6("E@ro").unwrap();
    let b = from_graph6("EBYW").unwrap();
    assert_eq!(char_poly(&a), char_poly(&b));
    assert!(!is_isomorphic(&a, &b));
}

#[test]
fn graph6_round_trips_every_small_graph() {
    for n in 0..=8 {
        for g in enumerate_vec(&EnumFilter::new(n), false).unwrap() {
            let text = to_graph6(&g);
            assert_eq!(from_graph6(&text).unwrap(), g);
        }
    }
}

#[test]
fn graph6_reference_strings() {
    assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
    assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
    assert_eq!(from_graph6("B?").unwrap(), Graph::empty(3).unwrap());
    let k2_k1 = from_graph6("B_").unwrap();
    assert_eq!((k2_k1.edge_count(), k2_k1.component_count()), (1, 2));
    assert_eq!(from_graph6("DQc").unwrap().edge_count(), 4);
}

#[test]
fn generator_shapes() {
    let l = lollipop(7, 4).unwrap();
    assert_eq!((l.graph.order(), l.graph.edge_count(), l.graph.triangle_count()), (7, 7, 0));
    assert_eq!(l.graph.count_subgraphs().cycles4, 1);
    let w = windwheel(3, 2).unwrap().graph;
    assert_eq!((w.order(), w.edge_count(), w.triangle_count()), (9, 11, 3));
    let g = gabcd(2, 3, 4, 5).unwrap().graph;
    assert_eq!((g.order(), g.edge_count(), g.triangle_count()), (31, 32, 2));
    let t = gabcd(0, 1, 1, 1).unwrap().graph;
    assert!(t.is_connected());
    assert_eq!((t.order(), t.edge_count()), (7, 6));
}

#[test]
fn path_friendship_structure() {
    for n in 2..=12 {
        for spec in PathFriendshipSpec::all_with_order(n, 0) {
            let g = spec.graph();
            let (s, k) = (spec.triangles(), spec.path_count());
            assert_eq!(g.order(), n);
            assert_eq!(g.order(), 2 * s + spec.paths().iter().sum::<usize>() + 1);
            assert_eq!(g.edge_count(), 3 * s + spec.paths().iter().sum::<usize>());
            assert_eq!(g.triangle_count(), s);
            assert!(g.is_connected());
            let d = g.degree_sequence();
            assert_eq!(spec.center_degree(), 2 * s + k);
            if 2 * s + k >= 2 {
                assert_eq!(d.max(), 2 * s + k);
            }
            if 2 * s + k > 2 {
                let ends = spec.paths().iter().filter(|&&t| t >= 1).count();
                assert_eq!(d.count_of(1), ends);
                assert_eq!(d.count_of(2 * s + k), 1);
            }
            assert_eq!(g.count_subgraphs().cycles4, 0);
        }
    }
}

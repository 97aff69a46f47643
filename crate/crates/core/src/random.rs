//! Seeded random graphs for the randomized checks. A given seed yields the
//! same sequence on every platform.

use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_d15c;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`: each of the `C(n, 2)` pairs is an edge with probability `p`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("callers keep n small");
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A graph on `lo..=hi` vertices with edge probability drawn from `[0.1, 0.9]`.
pub fn random_graph<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.1..0.9);
    gnp(rng, n, p)
}

/// A connected `G(n, p)`, drawn by rejection.
pub fn connected_gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let g = gnp(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// A pendant-edge instance: a connected graph, a vertex `v` with at least two
/// pendant neighbours, and a non-empty set of new edges among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantTrial {
    pub graph: Graph,
    pub vertex: usize,
    pub added: Vec<(usize, usize)>,
}

/// Grows a connected base on `2..=max_order − 2` vertices, hangs between two
/// and four new leaves on a random vertex, then joins a random non-empty set
/// of pairs of that vertex's leaves. `max_order` must be at least 4.
pub fn pendant_trial<R: Rng>(rng: &mut R, max_order: usize) -> PendantTrial {
    assert!(max_order >= 4, "pendant trials need at least 4 vertices");
    let base_n = rng.gen_range(2..=max_order - 2);
    let p = rng.gen_range(0.3..0.9);
    let mut g = connected_gnp(rng, base_n, p);
    let v = rng.gen_range(0..base_n);
    let leaves = rng.gen_range(2..=4.min(max_order - base_n));
    for _ in 0..leaves {
        let mask = 1u64 << v;
        g = g.with_vertex(mask).expect("order stays within max_order");
    }
    let pendants = g.pendant_neighbors(v);
    let mut pairs: Vec<(usize, usize)> =
        pendants.iter().enumerate().flat_map(|(i, &a)| pendants[i + 1..].iter().map(move |&b| (a, b))).collect();
    pairs.shuffle(rng);
    let t = rng.gen_range(1..=pairs.len());
    pairs.truncate(t);
    pairs.sort_unstable();
    PendantTrial { graph: g, vertex: v, added: pairs }
}

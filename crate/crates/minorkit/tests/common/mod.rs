//! Brute-force reference implementations used to cross-check the library's
//! search routines. Everything here favors obviousness over speed and only
//! handles the small sizes the tests feed it.

#![allow(dead_code)]

use std::collections::BTreeMap;

use minorkit::canon::{canonical_key, CanonicalKey};
use minorkit::SimpleGraph;

/// Isomorphism test by trying vertex bijections one placement at a time,
/// pruning on degree and on edges to already-placed vertices. Fine up to
/// eight or so vertices.
pub fn brute_force_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let n = a.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_bijection(a, b, 0, &mut image, &mut used)
}

fn extend_bijection(
    a: &SimpleGraph,
    b: &SimpleGraph,
    next: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if next == a.n() {
        return true;
    }
    for cand in 0..b.n() {
        if used[cand] || b.degree(cand) != a.degree(next) {
            continue;
        }
        if (0..next).any(|prev| a.has_edge(prev, next) != b.has_edge(image[prev], cand)) {
            continue;
        }
        image[next] = cand;
        used[cand] = true;
        if extend_bijection(a, b, next + 1, image, used) {
            return true;
        }
        used[cand] = false;
    }
    image[next] = usize::MAX;
    false
}

/// Minor testing by exhaustively applying the defining single-step
/// operations: delete an edge, contract an edge, delete an isolated vertex.
/// Results are memoized on canonical form, so one oracle instance can be
/// reused across many host graphs with a shared target.
pub struct MinorOracle {
    target_key: CanonicalKey,
    target_n: usize,
    target_m: usize,
    memo: BTreeMap<CanonicalKey, bool>,
}

impl MinorOracle {
    pub fn new(target: &SimpleGraph) -> Self {
        MinorOracle {
            target_key: canonical_key(target),
            target_n: target.n(),
            target_m: target.edge_count(),
            memo: BTreeMap::new(),
        }
    }

    pub fn contains(&mut self, g: &SimpleGraph) -> bool {
        if g.n() < self.target_n || g.edge_count() < self.target_m {
            return false;
        }
        let key = canonical_key(g);
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let hit = key == self.target_key || self.any_reduction_hits(g);
        self.memo.insert(key, hit);
        hit
    }

    fn any_reduction_hits(&mut self, g: &SimpleGraph) -> bool {
        for e in g.edges() {
            if self.contains(&g.delete_edge(e.u, e.v).unwrap()) {
                return true;
            }
            if self.contains(&g.contract_edge(e.u, e.v).unwrap()) {
                return true;
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
            return self.contains(&g.delete_vertex(v).unwrap());
        }
        false
    }
}

/// Vertex connectivity by deleting every vertex subset in increasing size
/// order until the rest disconnects. Complete graphs on n vertices come out
/// as n - 1, matching the library convention.
pub fn brute_force_connectivity(g: &SimpleGraph) -> usize {
    let n = g.n();
    assert!(n >= 2, "connectivity needs at least two vertices");
    let full = minorkit::graph::mask_below(n);
    for k in 0..n - 1 {
        for removed in 0u64..1 << n {
            if removed.count_ones() as usize != k {
                continue;
            }
            let kept = full & !removed;
            let start = 1u64 << kept.trailing_zeros();
            if g.reach(start, kept) != kept {
                return k;
            }
        }
    }
    n - 1
}

/// Atlas lookup that panics on bad names, for terser test bodies.
pub fn named(name: &str) -> SimpleGraph {
    minorkit::atlas::build_named(name).unwrap()
}

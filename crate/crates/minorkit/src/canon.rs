//! Canonical forms by exhaustive labelling search.
//!
//! The canonical labelling of a graph is the vertex order whose upper
//! triangle, read in graph6 column order, is lexicographically smallest.
//! Two graphs are isomorphic exactly when their canonical keys are equal.
//! The search places one vertex at a time and prunes a branch as soon as
//! its partial encoding exceeds the best complete encoding found so far.

use crate::graph::{bits, SimpleGraph};

/// Canonical form of a graph, usable as a dictionary key.
///
/// `cols[k]` holds the adjacency between position `k` and positions `< k`
/// of the canonical labelling (bit `i` set when position `i` is adjacent).
/// Ordering matches lexicographic order of the graph6 encodings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalKey {
    n: usize,
    cols: Vec<u64>,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonically labelled graph itself.
    pub fn graph(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for k in 1..self.n {
            for i in bits(self.cols[k]) {
                edges.push((i, k));
            }
        }
        SimpleGraph::from_edges(self.n, &edges).unwrap()
    }

    /// graph6 encoding of the canonical labelling.
    pub fn to_graph6(&self) -> String {
        crate::codec::to_graph6(&self.graph())
    }
}

impl std::fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalKey({:?})", self.to_graph6())
    }
}

impl Ord for CanonicalKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.cols.iter().zip(&other.cols) {
                let ord = a.reverse_bits().cmp(&b.reverse_bits());
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

impl PartialOrd for CanonicalKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

struct Search<'a> {
    g: &'a SimpleGraph,
    n: usize,
    seq: Vec<usize>,
    placed: u64,
    cols: Vec<u64>,
    colcur: Vec<u64>,
    best: Vec<u64>,
    best_perm: Vec<usize>,
    have_best: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let n = g.n();
        Search {
            g,
            n,
            seq: Vec::with_capacity(n),
            placed: 0,
            cols: vec![0; n],
            colcur: vec![0; n],
            best: vec![0; n],
            best_perm: vec![0; n],
            have_best: false,
        }
    }

    fn place(&mut self, w: usize, k: usize) {
        self.seq.push(w);
        self.placed |= 1u64 << w;
        self.cols[k] = self.colcur[w];
        for x in bits(self.g.neighbors_mask(w) & !self.placed) {
            self.colcur[x] |= 1u64 << k;
        }
    }

    fn unplace(&mut self, w: usize, k: usize) {
        for x in bits(self.g.neighbors_mask(w) & !self.placed) {
            self.colcur[x] &= !(1u64 << k);
        }
        self.placed &= !(1u64 << w);
        self.seq.pop();
    }

    fn save_leaf(&mut self) {
        self.best.copy_from_slice(&self.cols);
        for (pos, &orig) in self.seq.iter().enumerate() {
            self.best_perm[orig] = pos;
        }
        self.have_best = true;
    }

    /// Returns true when a new best labelling was recorded below this node.
    /// `eq` says whether the columns placed so far equal the best prefix;
    /// only then can a larger column rule a branch out.
    fn recurse(&mut self, k: usize, eq: bool) -> bool {
        if k == self.n {
            if !self.have_best {
                self.save_leaf();
                return true;
            }
            if !eq {
                for i in 0..self.n {
                    let ord = self.cols[i]
                        .reverse_bits()
                        .cmp(&self.best[i].reverse_bits());
                    match ord {
                        std::cmp::Ordering::Less => {
                            self.save_leaf();
                            return true;
                        }
                        std::cmp::Ordering::Greater => return false,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            return false;
        }
        let mut cands: Vec<(u64, usize)> = bits(crate::graph::mask_below(self.n) & !self.placed)
            .map(|w| (self.colcur[w].reverse_bits(), w))
            .collect();
        cands.sort_unstable();
        let mut eq = eq;
        let mut improved = false;
        for &(rev, w) in &cands {
            let child_eq = if self.have_best && eq {
                let best_rev = self.best[k].reverse_bits();
                if rev > best_rev {
                    break;
                }
                rev == best_rev
            } else {
                false
            };
            self.place(w, k);
            if self.recurse(k + 1, child_eq) {
                improved = true;
                eq = true;
            }
            self.unplace(w, k);
        }
        improved
    }
}

/// Canonical key plus a relabelling that realizes it: `perm[old]` is the
/// canonical position of vertex `old`, so `g.relabel(&perm)` equals
/// `key.graph()`.
pub fn canonical_form(g: &SimpleGraph) -> (CanonicalKey, Vec<usize>) {
    let mut s = Search::new(g);
    s.recurse(0, false);
    (
        CanonicalKey {
            n: g.n(),
            cols: s.best,
        },
        s.best_perm,
    )
}

/// Canonical key alone.
pub fn canonical_key(g: &SimpleGraph) -> CanonicalKey {
    canonical_form(g).0
}

/// Isomorphism test. Cheap invariants reject early; otherwise the answer
/// comes from comparing canonical keys.
pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    canonical_key(a) == canonical_key(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn relabelling_preserves_key() {
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let key = canonical_key(&g);
        let perms = [
            vec![5, 4, 3, 2, 1, 0],
            vec![2, 0, 4, 1, 5, 3],
            vec![1, 2, 3, 4, 5, 0],
        ];
        for p in &perms {
            assert_eq!(canonical_key(&g.relabel(p).unwrap()), key);
        }
    }

    #[test]
    fn perm_realizes_key() {
        let graphs = vec![
            SimpleGraph::cycle(7).unwrap(),
            SimpleGraph::complete_bipartite(2, 3).unwrap(),
            SimpleGraph::from_edges(5, &[(0, 4), (4, 2), (2, 1)]).unwrap(),
            SimpleGraph::empty(4).unwrap(),
        ];
        for g in graphs {
            let (key, perm) = canonical_form(&g);
            assert_eq!(g.relabel(&perm).unwrap(), key.graph());
        }
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = SimpleGraph::complete_bipartite(3, 3).unwrap();
        let key = canonical_key(&g);
        assert_eq!(canonical_key(&key.graph()), key);
    }

    #[test]
    fn same_degree_sequence_different_graphs() {
        // both 2-regular on 6 vertices
        let c6 = SimpleGraph::cycle(6).unwrap();
        let two_triangles =
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(c6.degree_sequence(), two_triangles.degree_sequence());
        assert!(!is_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn isomorphic_pairs() {
        let a = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = SimpleGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&a, &star));
    }

    #[test]
    fn key_order_matches_graph6_order() {
        let graphs = [
            SimpleGraph::empty(4).unwrap(),
            SimpleGraph::cycle(4).unwrap(),
            SimpleGraph::complete(4).unwrap(),
            SimpleGraph::from_edges(4, &[(0, 1)]).unwrap(),
        ];
        let mut keys: Vec<CanonicalKey> = graphs.iter().map(canonical_key).collect();
        keys.sort();
        let strings: Vec<String> = keys.iter().map(|k| k.to_graph6()).collect();
        let mut sorted = strings.clone();
        sorted.sort();
        assert_eq!(strings, sorted);
    }

    #[test]
    fn tiny_graphs() {
        let (key, perm) = canonical_form(&SimpleGraph::empty(0).unwrap());
        assert_eq!(key.n(), 0);
        assert!(perm.is_empty());
        let key1 = canonical_key(&SimpleGraph::empty(1).unwrap());
        assert_eq!(key1.graph().n(), 1);
    }

    #[test]
    fn key_graph6_roundtrip() {
        let g = SimpleGraph::complete_bipartite(3, 3).unwrap();
        let key = canonical_key(&g);
        let decoded = crate::codec::from_graph6(&key.to_graph6()).unwrap();
        assert_eq!(decoded, key.graph());
    }
}

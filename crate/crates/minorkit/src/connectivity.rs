//! Exact connectivity predicates: vertex connectivity with cut witnesses,
//! cubic cyclic connectivity, and separating-triangle tests.

use crate::graph::{bits, mask_below, SimpleGraph};
use crate::{Error, Result};

/// Triangle of a specific graph, endpoints sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangle {
    a: usize,
    b: usize,
    c: usize,
}

impl Triangle {
    /// Validates that the three vertices are pairwise adjacent in `g`.
    pub fn new(g: &SimpleGraph, a: usize, b: usize, c: usize) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        let [a, b, c] = v;
        if a == b || b == c || !g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c) {
            return Err(Error::NotATriangle { a, b, c });
        }
        Ok(Triangle { a, b, c })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }

    pub fn mask(&self) -> u64 {
        (1u64 << self.a) | (1u64 << self.b) | (1u64 << self.c)
    }
}

/// Certificate that a graph separates: either a vertex cut or, for cubic
/// graphs, an edge cut leaving a circuit on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutWitness {
    VertexCut {
        vertices: Vec<usize>,
        side_a: u64,
        side_b: u64,
    },
    CyclicEdgeCut {
        edges: Vec<crate::graph::Edge>,
        side_a: u64,
        side_b: u64,
    },
}

fn has_circuit(g: &SimpleGraph, mask: u64) -> bool {
    let (sub, _) = g.induced(mask);
    sub.components()
        .iter()
        .any(|&c| sub.edges_within(c) >= c.count_ones() as usize)
}

impl CutWitness {
    /// Revalidates the witness against `g` from scratch.
    pub fn check(&self, g: &SimpleGraph) -> bool {
        let all = mask_below(g.n());
        match self {
            CutWitness::VertexCut {
                vertices,
                side_a,
                side_b,
            } => {
                let cut: u64 = vertices.iter().fold(0, |m, &v| m | (1u64 << v));
                if vertices.iter().any(|&v| v >= g.n()) {
                    return false;
                }
                if *side_a == 0 || *side_b == 0 {
                    return false;
                }
                if side_a & side_b != 0 || (side_a | side_b) & cut != 0 {
                    return false;
                }
                if side_a | side_b | cut != all {
                    return false;
                }
                bits(*side_a).all(|v| g.neighbors_mask(v) & side_b == 0)
            }
            CutWitness::CyclicEdgeCut {
                edges,
                side_a,
                side_b,
            } => {
                if side_a & side_b != 0 || side_a | side_b != all {
                    return false;
                }
                if *side_a == 0 || *side_b == 0 {
                    return false;
                }
                for e in edges {
                    let cross_ab = side_a & (1u64 << e.u) != 0 && side_b & (1u64 << e.v) != 0;
                    let cross_ba = side_b & (1u64 << e.u) != 0 && side_a & (1u64 << e.v) != 0;
                    if !g.has_edge(e.u, e.v) || (!cross_ab && !cross_ba) {
                        return false;
                    }
                }
                let listed: std::collections::BTreeSet<_> = edges.iter().copied().collect();
                for v in bits(*side_a) {
                    for w in bits(g.neighbors_mask(v) & side_b) {
                        let e = crate::graph::Edge {
                            u: v.min(w),
                            v: v.max(w),
                        };
                        if !listed.contains(&e) {
                            return false;
                        }
                    }
                }
                has_circuit(g, *side_a) && has_circuit(g, *side_b)
            }
        }
    }
}

struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

const EDGE_CAP: i64 = 1 << 20;

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, a: usize, b: usize, c: i64) {
        self.adj[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.adj[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Edmonds-Karp, stopping once `limit` units have been pushed.
    fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0;
        while total < limit {
            let mut parent_arc = vec![usize::MAX; self.adj.len()];
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.adj[u] {
                    let v = self.to[a];
                    if !seen[v] && self.cap[a] > 0 {
                        seen[v] = true;
                        parent_arc[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut v = t;
            while v != s {
                let a = parent_arc[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            total += 1;
        }
        total
    }

    fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if !seen[v] && self.cap[a] > 0 {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

/// Network with nodes 2v (entry) and 2v+1 (exit): unit capacity through
/// each vertex, effectively unbounded capacity along each edge.
fn split_network(g: &SimpleGraph) -> FlowNet {
    let n = g.n();
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1, 1);
    }
    for e in g.edges() {
        net.add_arc(2 * e.u + 1, 2 * e.v, EDGE_CAP);
        net.add_arc(2 * e.v + 1, 2 * e.u, EDGE_CAP);
    }
    net
}

fn local_connectivity(g: &SimpleGraph, s: usize, t: usize, limit: i64) -> i64 {
    let mut net = split_network(g);
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Exact vertex connectivity. Complete graphs give n−1 with no witness;
/// everything else also yields a minimum vertex cut with its two sides.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<(usize, Option<CutWitness>)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::ConnectivityUndefined { n });
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return Ok((n - 1, None));
    }
    let mut best: Option<(i64, usize, usize)> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let limit = best.map_or(n as i64, |(k, _, _)| k);
            let f = local_connectivity(g, s, t, limit);
            if f < limit {
                best = Some((f, s, t));
            }
        }
    }
    let (k, s, t) = best.expect("non-complete graph has a nonadjacent pair");
    let mut net = split_network(g);
    net.max_flow(2 * s + 1, 2 * t, n as i64);
    let reach = net.residual_reach(2 * s + 1);
    let mut vertices = Vec::new();
    let mut side_a = 0u64;
    for v in 0..n {
        if reach[2 * v] && !reach[2 * v + 1] {
            vertices.push(v);
        } else if reach[2 * v + 1] {
            side_a |= 1u64 << v;
        }
    }
    let cut: u64 = vertices.iter().fold(0, |m, &v| m | (1u64 << v));
    let side_b = mask_below(n) & !side_a & !cut;
    debug_assert_eq!(vertices.len(), k as usize);
    Ok((
        k as usize,
        Some(CutWitness::VertexCut {
            vertices,
            side_a,
            side_b,
        }),
    ))
}

/// κ(g) ≥ k.
pub fn is_k_connected(g: &SimpleGraph, k: usize) -> Result<bool> {
    Ok(vertex_connectivity(g)?.0 >= k)
}

/// 3-regular with at least one vertex.
pub fn is_cubic(g: &SimpleGraph) -> bool {
    g.n() > 0 && g.is_regular(3)
}

/// Cyclic 4-connectivity for cubic graphs: 2-connected, cycle rank at
/// least 4, and no edge cut of fewer than 4 edges leaving a circuit on
/// both sides. The small-cut check brute-forces all edge subsets of size
/// up to 3.
pub fn is_cyclically_4_connected_cubic(
    g: &SimpleGraph,
) -> Result<(bool, Option<CutWitness>)> {
    if !is_cubic(g) {
        return Err(Error::NotCubic);
    }
    let (kappa, cut) = vertex_connectivity(g)?;
    if kappa < 2 {
        return Ok((false, cut));
    }
    if g.edge_count() + 1 < g.n() + 4 {
        return Ok((false, None));
    }
    let edges = g.edges();
    let m = edges.len();
    let mut subsets: Vec<Vec<usize>> = vec![vec![]];
    for i in 0..m {
        subsets.push(vec![i]);
    }
    for i in 0..m {
        for j in i + 1..m {
            subsets.push(vec![i, j]);
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            for l in j + 1..m {
                subsets.push(vec![i, j, l]);
            }
        }
    }
    for subset in subsets {
        let mut h = g.clone();
        for &i in &subset {
            h = h.delete_edge(edges[i].u, edges[i].v)?;
        }
        let comps = h.components();
        let circuit_comps: Vec<u64> = comps
            .iter()
            .copied()
            .filter(|&c| h.edges_within(c) >= c.count_ones() as usize)
            .collect();
        if circuit_comps.len() >= 2 {
            let side_a = circuit_comps[0];
            let side_b = mask_below(g.n()) & !side_a;
            let cross: Vec<crate::graph::Edge> = g
                .edges()
                .into_iter()
                .filter(|e| {
                    let (mu, mv) = (1u64 << e.u, 1u64 << e.v);
                    (side_a & mu != 0) != (side_a & mv != 0)
                })
                .collect();
            return Ok((
                false,
                Some(CutWitness::CyclicEdgeCut {
                    edges: cross,
                    side_a,
                    side_b,
                }),
            ));
        }
    }
    Ok((true, None))
}

/// Whether deleting the triangle's three vertices disconnects the graph.
/// An empty or single-vertex remainder counts as non-separating.
pub fn is_separating_triangle(g: &SimpleGraph, t: &Triangle) -> Result<bool> {
    let [a, b, c] = t.vertices();
    if Triangle::new(g, a, b, c).is_err() {
        return Err(Error::NotATriangle { a, b, c });
    }
    let h = g.delete_vertex(c)?.delete_vertex(b)?.delete_vertex(a)?;
    Ok(h.components().len() > 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oct() -> SimpleGraph {
        let mut g = SimpleGraph::complete(6).unwrap();
        for (u, v) in [(0, 3), (1, 4), (2, 5)] {
            g = g.delete_edge(u, v).unwrap();
        }
        g
    }

    fn cube() -> SimpleGraph {
        let mut edges = Vec::new();
        for v in 0..8usize {
            for b in 0..3 {
                let w = v ^ (1 << b);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        SimpleGraph::from_edges(8, &edges).unwrap()
    }

    fn squared_cycle(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((i, (i + 2) % n));
        }
        edges = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn connectivity_of_complete_graphs() {
        let (k, w) = vertex_connectivity(&SimpleGraph::complete(5).unwrap()).unwrap();
        assert_eq!(k, 4);
        assert!(w.is_none());
        let (k, _) = vertex_connectivity(&SimpleGraph::complete(2).unwrap()).unwrap();
        assert_eq!(k, 1);
    }

    #[test]
    fn connectivity_small_cases() {
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (k, w) = vertex_connectivity(&g).unwrap();
        assert_eq!(k, 1);
        let w = w.unwrap();
        assert!(w.check(&g));
        match &w {
            CutWitness::VertexCut { vertices, .. } => assert_eq!(vertices, &vec![1]),
            _ => panic!("expected vertex cut"),
        }

        let (k, w) = vertex_connectivity(&SimpleGraph::cycle(5).unwrap()).unwrap();
        assert_eq!(k, 2);
        assert!(w.unwrap().check(&SimpleGraph::cycle(5).unwrap()));

        let g = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (k, w) = vertex_connectivity(&g).unwrap();
        assert_eq!(k, 0);
        let w = w.unwrap();
        assert!(w.check(&g));

        assert!(matches!(
            vertex_connectivity(&SimpleGraph::empty(1).unwrap()),
            Err(Error::ConnectivityUndefined { n: 1 })
        ));
    }

    #[test]
    fn connectivity_of_named_graphs() {
        assert_eq!(vertex_connectivity(&cube()).unwrap().0, 3);
        assert_eq!(vertex_connectivity(&oct()).unwrap().0, 4);
        assert_eq!(vertex_connectivity(&squared_cycle(6)).unwrap().0, 4);
        assert_eq!(vertex_connectivity(&squared_cycle(8)).unwrap().0, 4);
        assert_eq!(
            vertex_connectivity(&SimpleGraph::complete_bipartite(3, 3).unwrap())
                .unwrap()
                .0,
            3
        );
        assert!(is_k_connected(&oct(), 4).unwrap());
        assert!(!is_k_connected(&cube(), 4).unwrap());
    }

    #[test]
    fn witness_sides_are_separated() {
        for g in [cube(), squared_cycle(7), SimpleGraph::cycle(6).unwrap()] {
            let (k, w) = vertex_connectivity(&g).unwrap();
            let w = w.unwrap();
            assert!(w.check(&g));
            match w {
                CutWitness::VertexCut { vertices, .. } => assert_eq!(vertices.len(), k),
                _ => panic!("expected vertex cut"),
            }
        }
    }

    #[test]
    fn cubic_detection() {
        assert!(is_cubic(&cube()));
        assert!(is_cubic(&SimpleGraph::complete_bipartite(3, 3).unwrap()));
        assert!(is_cubic(&SimpleGraph::complete(4).unwrap()));
        assert!(!is_cubic(&oct()));
        assert!(!is_cubic(&SimpleGraph::empty(0).unwrap()));
    }

    #[test]
    fn cyclic_connectivity_positive_cases() {
        let (ok, w) = is_cyclically_4_connected_cubic(&cube()).unwrap();
        assert!(ok, "cube should pass");
        assert!(w.is_none());
        let k33 = SimpleGraph::complete_bipartite(3, 3).unwrap();
        assert!(is_cyclically_4_connected_cubic(&k33).unwrap().0);
        // the Wagner graph: C8 plus four diameters
        let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.extend((0..4).map(|i| (i, i + 4)));
        let edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let v8 = SimpleGraph::from_edges(8, &edges).unwrap();
        assert!(is_cyclically_4_connected_cubic(&v8).unwrap().0);
    }

    #[test]
    fn cyclic_connectivity_negative_cases() {
        // cycle rank of K4 is 3
        let (ok, w) = is_cyclically_4_connected_cubic(&SimpleGraph::complete(4).unwrap()).unwrap();
        assert!(!ok);
        assert!(w.is_none());

        // the prism: two triangles separated by its 3-edge matching
        let prism = SimpleGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let (ok, w) = is_cyclically_4_connected_cubic(&prism).unwrap();
        assert!(!ok);
        let w = w.unwrap();
        assert!(w.check(&prism));
        match w {
            CutWitness::CyclicEdgeCut { edges, .. } => assert_eq!(edges.len(), 3),
            _ => panic!("expected cyclic edge cut"),
        }

        // disconnected union of two K4s
        let k4 = SimpleGraph::complete(4).unwrap();
        let (ok, w) = is_cyclically_4_connected_cubic(&k4.disjoint_union(&k4).unwrap()).unwrap();
        assert!(!ok);
        assert!(w.is_some());

        assert!(matches!(
            is_cyclically_4_connected_cubic(&oct()),
            Err(Error::NotCubic)
        ));
    }

    #[test]
    fn separating_triangles() {
        let k4 = SimpleGraph::complete(4).unwrap();
        let t = Triangle::new(&k4, 0, 1, 2).unwrap();
        assert!(!is_separating_triangle(&k4, &t).unwrap());

        let k3 = SimpleGraph::complete(3).unwrap();
        let t = Triangle::new(&k3, 2, 0, 1).unwrap();
        assert!(!is_separating_triangle(&k3, &t).unwrap());

        let o = oct();
        for &(a, b, c) in o.triangles().iter() {
            let t = Triangle::new(&o, a, b, c).unwrap();
            assert!(!is_separating_triangle(&o, &t).unwrap());
        }

        // two K4s glued on a triangle
        let glued = SimpleGraph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)],
        )
        .unwrap();
        let t = Triangle::new(&glued, 0, 1, 2).unwrap();
        assert!(is_separating_triangle(&glued, &t).unwrap());
        let t = Triangle::new(&glued, 0, 1, 3).unwrap();
        assert!(!is_separating_triangle(&glued, &t).unwrap());
    }

    #[test]
    fn triangle_validation() {
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert!(matches!(
            Triangle::new(&c4, 0, 1, 2),
            Err(Error::NotATriangle { a: 0, b: 1, c: 2 })
        ));
        let k4 = SimpleGraph::complete(4).unwrap();
        assert!(Triangle::new(&k4, 3, 1, 0).is_ok());
        assert!(Triangle::new(&k4, 1, 1, 2).is_err());
    }
}

use crate::{Error, Result};

/// Undirected edge with endpoints stored as `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Fails on loops.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidEdge {
                u: a,
                v: b,
                reason: "loop".into(),
            });
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph on at most 64 vertices.
///
/// Vertices are `0..n`. Adjacency is one `u64` bitmask per vertex; bit `u` of
/// `adj[v]` is set exactly when `uv` is an edge. All operations return new
/// graphs and leave the receiver untouched.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "])")
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::TooLarge { n });
    }
    Ok(())
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SimpleGraph {
            n,
            adj: vec![0; n],
        })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        check_n(n)?;
        let full = mask_below(n);
        let adj = (0..n).map(|v| full & !(1u64 << v)).collect();
        Ok(SimpleGraph { n, adj })
    }

    /// Graph on `n` vertices with the given edges. Duplicate edges are
    /// rejected so silent typos in hand-written edge lists do not pass.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n)?;
        for &(a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(Error::InvalidEdge {
                    u: a,
                    v: b,
                    reason: "loop".into(),
                });
            }
            if g.has_edge(a, b) {
                return Err(Error::InvalidEdge {
                    u: a,
                    v: b,
                    reason: "duplicate".into(),
                });
            }
            g.set(a, b);
        }
        Ok(g)
    }

    /// Cycle on `n >= 3` vertices in label order.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidEdge {
                u: 0,
                v: n.saturating_sub(1),
                reason: "cycle needs at least 3 vertices".into(),
            });
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        SimpleGraph::from_edges(a + b, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.adj[u] & (1u64 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbor set of `v` as a bitmask.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v` in increasing label order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits(self.adj[v]).collect()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = self.adj[u] & !mask_below(u + 1);
            for v in bits(above) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexNotFound { v });
        }
        Ok(())
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotFound { u, v });
        }
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    fn unset(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    /// Copy with edge `uv` added. The edge must not already be present.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "loop".into(),
            });
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "already present".into(),
            });
        }
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    /// Copy with edge `uv` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        g.unset(u, v);
        Ok(g)
    }

    /// Copy with vertex `v` removed; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let mut adj = Vec::with_capacity(self.n - 1);
        for w in 0..self.n {
            if w == v {
                continue;
            }
            adj.push(drop_bit(self.adj[w], v));
        }
        Ok(SimpleGraph {
            n: self.n - 1,
            adj,
        })
    }

    /// Contracts edge `uv`: the smaller label keeps the merged vertex, the
    /// larger one disappears and higher labels shift down. Parallel edges
    /// collapse, so the new edge count is `m - 1 - |N(u) ∩ N(v)|`.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_edge(u, v)?;
        let (a, b) = (u.min(v), u.max(v));
        let mut g = self.clone();
        let merged = (g.adj[a] | g.adj[b]) & !(1u64 << a) & !(1u64 << b);
        g.adj[a] = merged;
        for w in 0..g.n {
            if w == a || w == b {
                continue;
            }
            if merged & (1u64 << w) != 0 {
                g.adj[w] |= 1u64 << a;
            }
        }
        g.delete_vertex(b)
    }

    /// Copy with edge `uv` replaced by a path `u - n - v` through a fresh
    /// vertex labelled `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_edge(u, v)?;
        check_n(self.n + 1)?;
        let mut adj = self.adj.clone();
        adj.push(0);
        let mut g = SimpleGraph {
            n: self.n + 1,
            adj,
        };
        g.unset(u, v);
        g.set(u, self.n);
        g.set(v, self.n);
        Ok(g)
    }

    /// Line graph. Vertex `i` of the result is `self.edges()[i]`; two
    /// vertices are adjacent when the underlying edges share an endpoint.
    pub fn line_graph(&self) -> Result<Self> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::Edgeless);
        }
        check_n(edges.len())?;
        let mut g = SimpleGraph::empty(edges.len())?;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (e, f) = (edges[i], edges[j]);
                if e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v {
                    g.set(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are relabelled to `n..n+n'`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<Self> {
        check_n(self.n + other.n)?;
        let mut adj = self.adj.clone();
        for v in 0..other.n {
            adj.push(other.adj[v] << self.n);
        }
        Ok(SimpleGraph {
            n: self.n + other.n,
            adj,
        })
    }

    pub fn complement(&self) -> Self {
        let full = mask_below(self.n);
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Triangles as ordered triples `u < v < w`, lexicographically sorted.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let above_u = self.adj[u] & !mask_below(u + 1);
            for v in bits(above_u) {
                let common = self.adj[u] & self.adj[v] & !mask_below(v + 1);
                for w in bits(common) {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    /// Subgraph induced by the vertices in `mask`, relabelled to keep their
    /// relative order. Also returns the original label of each new vertex.
    pub fn induced(&self, mask: u64) -> (SimpleGraph, Vec<usize>) {
        let keep: Vec<usize> = bits(mask & mask_below(self.n)).collect();
        let mut g = SimpleGraph {
            n: keep.len(),
            adj: vec![0; keep.len()],
        };
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j);
                }
            }
        }
        (g, keep)
    }

    /// Relabels vertices: old label `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Unsupported(format!(
                "permutation length {} does not match {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & (1u64 << p) != 0 {
                return Err(Error::Unsupported("not a permutation".into()));
            }
            seen |= 1u64 << p;
        }
        let mut g = SimpleGraph::empty(self.n)?;
        for e in self.edges() {
            g.set(perm[e.u], perm[e.v]);
        }
        Ok(g)
    }

    /// Connected components as vertex bitmasks, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & (1u64 << v) != 0 {
                continue;
            }
            let comp = self.reach(1u64 << v, mask_below(self.n));
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Graphs with zero or one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices reachable from `start` while staying inside `allowed`
    /// (both bitmasks; `start` should be a subset of `allowed`).
    pub fn reach(&self, start: u64, allowed: u64) -> u64 {
        let mut seen = start & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Number of edges with both ends inside `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        bits(mask & mask_below(self.n))
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }
}

/// Bitmask with bits `0..n` set.
pub fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn drop_bit(row: u64, v: usize) -> u64 {
    let low = row & mask_below(v);
    let high = if v + 1 >= 64 { 0 } else { row >> (v + 1) };
    low | (high << v)
}

/// Iterates set bit positions from lowest to highest.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

//! Constructive moves on graphs: vertex splits, k-sums, handle addition,
//! one-step extensions, and contraction chains between 4-connected graphs.

use std::collections::{BTreeMap, BTreeSet};

use crate::canon::{canonical_key, CanonicalKey};
use crate::connectivity::{is_separating_triangle, vertex_connectivity, Triangle};
use crate::graph::{bits, Edge, SimpleGraph};
use crate::minors::SearchConfig;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SplitArity {
    Three,
    Four,
}

/// A split of vertex `v` into an adjacent pair v′, v″ with neighbor sets
/// A ∪ {v″} and B ∪ {v′}. Both arities require A ∪ B = N(v); arity 3
/// additionally forbids overlap and needs both sides of size 2 or more,
/// while arity 4 allows overlap but needs both sides of size 3 or more.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitSpec {
    pub v: usize,
    pub a: u64,
    pub b: u64,
    pub arity: SplitArity,
}

impl SplitSpec {
    pub fn from_slices(v: usize, a: &[usize], b: &[usize], arity: SplitArity) -> Self {
        let mask = |s: &[usize]| s.iter().fold(0u64, |m, &x| m | (1u64 << x));
        SplitSpec {
            v,
            a: mask(a),
            b: mask(b),
            arity,
        }
    }
}

fn validate_split(g: &SimpleGraph, s: &SplitSpec) -> Result<()> {
    if s.v >= g.n() {
        return Err(Error::VertexNotFound { v: s.v });
    }
    if s.a | s.b != g.neighbors_mask(s.v) {
        return Err(Error::InvalidSplit(format!(
            "A and B must cover exactly the neighborhood of vertex {}",
            s.v
        )));
    }
    let (ca, cb) = (s.a.count_ones(), s.b.count_ones());
    match s.arity {
        SplitArity::Three => {
            if s.a & s.b != 0 {
                return Err(Error::InvalidSplit("A and B overlap in a 3-split".into()));
            }
            if ca < 2 || cb < 2 {
                return Err(Error::InvalidSplit(format!(
                    "3-split needs both sides of size at least 2, got {} and {}",
                    ca, cb
                )));
            }
        }
        SplitArity::Four => {
            if ca < 3 || cb < 3 {
                return Err(Error::InvalidSplit(format!(
                    "4-split needs both sides of size at least 3, got {} and {}",
                    ca, cb
                )));
            }
        }
    }
    Ok(())
}

/// Splits vertex `v` as `s` describes: v′ keeps label v, v″ gets label n, and
/// the two are adjacent. A 4-split requires a 4-connected input and the
/// result is verified to stay 4-connected.
pub fn apply_split(g: &SimpleGraph, s: &SplitSpec) -> Result<SimpleGraph> {
    validate_split(g, s)?;
    if s.arity == SplitArity::Four && vertex_connectivity(g)?.0 < 4 {
        return Err(Error::NotFourConnected);
    }
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| e.u != s.v && e.v != s.v)
        .map(|e| (e.u, e.v))
        .collect();
    for x in bits(s.a) {
        edges.push((x.min(s.v), x.max(s.v)));
    }
    for x in bits(s.b) {
        edges.push((x, n));
    }
    edges.push((s.v, n));
    let out = SimpleGraph::from_edges(n + 1, &edges)?;
    if s.arity == SplitArity::Four && vertex_connectivity(&out)?.0 < 4 {
        return Err(Error::Postcondition(
            "4-split of a 4-connected graph lost 4-connectivity".into(),
        ));
    }
    Ok(out)
}

/// All valid splits of the given arity over all vertices, one spec per
/// isomorphism class of the result (first spec found wins), returned in
/// canonical-key order of the results. For arity 4 a graph that is not
/// 4-connected admits no valid split, so the list is empty.
pub fn enumerate_splits(g: &SimpleGraph, arity: SplitArity) -> Vec<SplitSpec> {
    if arity == SplitArity::Four {
        match vertex_connectivity(g) {
            Ok((k, _)) if k >= 4 => {}
            _ => return Vec::new(),
        }
    }
    let mut by_key: BTreeMap<CanonicalKey, SplitSpec> = BTreeMap::new();
    for v in 0..g.n() {
        let nv = g.neighbors_mask(v);
        let d = nv.count_ones();
        let nbrs: Vec<usize> = bits(nv).collect();
        match arity {
            SplitArity::Three => {
                if d < 4 {
                    continue;
                }
                // unordered partitions: pin the smallest neighbor to A
                for pick in 0..(1u64 << (d - 1)) {
                    let mut a = 1u64 << nbrs[0];
                    for (i, &x) in nbrs.iter().enumerate().skip(1) {
                        if pick & (1u64 << (i - 1)) != 0 {
                            a |= 1u64 << x;
                        }
                    }
                    let b = nv & !a;
                    let s = SplitSpec { v, a, b, arity };
                    if validate_split(g, &s).is_err() {
                        continue;
                    }
                    if let Ok(out) = apply_split(g, &s) {
                        by_key.entry(canonical_key(&out)).or_insert(s);
                    }
                }
            }
            SplitArity::Four => {
                if d < 3 {
                    continue;
                }
                let submasks = |_: ()| {
                    let mut v = Vec::new();
                    let mut m = nv;
                    loop {
                        v.push(m);
                        if m == 0 {
                            break;
                        }
                        m = (m - 1) & nv;
                    }
                    v.sort_unstable();
                    v
                };
                let subs = submasks(());
                for &a in &subs {
                    if a.count_ones() < 3 {
                        continue;
                    }
                    for &b in &subs {
                        if b < a || b.count_ones() < 3 || a | b != nv {
                            continue;
                        }
                        let s = SplitSpec { v, a, b, arity };
                        if let Ok(out) = apply_split(g, &s) {
                            by_key.entry(canonical_key(&out)).or_insert(s);
                        }
                    }
                }
            }
        }
    }
    by_key.into_values().collect()
}

/// A k-sum identification for k in 0..=3: position i of `g1_vertices`
/// is glued to position i of `g2_vertices`, and `delete_common` lists
/// edges (in g1's labels) among the identified vertices to remove after
/// gluing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSpec {
    pub k: usize,
    pub g1_vertices: Vec<usize>,
    pub g2_vertices: Vec<usize>,
    pub delete_common: Vec<(usize, usize)>,
}

impl SumSpec {
    pub fn disjoint() -> Self {
        SumSpec {
            k: 0,
            g1_vertices: Vec::new(),
            g2_vertices: Vec::new(),
            delete_common: Vec::new(),
        }
    }

    pub fn gluing(g1_vertices: &[usize], g2_vertices: &[usize]) -> Self {
        SumSpec {
            k: g1_vertices.len(),
            g1_vertices: g1_vertices.to_vec(),
            g2_vertices: g2_vertices.to_vec(),
            delete_common: Vec::new(),
        }
    }
}

fn validate_sum(g1: &SimpleGraph, g2: &SimpleGraph, s: &SumSpec) -> Result<()> {
    let fail = |msg: String| Err(Error::InvalidSum(msg));
    if s.k > 3 {
        return fail(format!("k must be at most 3, got {}", s.k));
    }
    if s.g1_vertices.len() != s.k || s.g2_vertices.len() != s.k {
        return fail("identification lists must both have length k".into());
    }
    for (g, vs, side) in [(g1, &s.g1_vertices, "g1"), (g2, &s.g2_vertices, "g2")] {
        for &v in vs {
            if v >= g.n() {
                return fail(format!("vertex {} out of range in {}", v, side));
            }
        }
    }
    let distinct = |vs: &[usize]| vs.iter().collect::<BTreeSet<_>>().len() == vs.len();
    if !distinct(&s.g1_vertices) || !distinct(&s.g2_vertices) {
        return fail("identified vertices must be distinct".into());
    }
    for i in 0..s.k {
        for j in i + 1..s.k {
            if !g1.has_edge(s.g1_vertices[i], s.g1_vertices[j]) {
                return fail(format!(
                    "{}-sum needs a complete identified set; edge {}-{} missing in g1",
                    s.k, s.g1_vertices[i], s.g1_vertices[j]
                ));
            }
            if !g2.has_edge(s.g2_vertices[i], s.g2_vertices[j]) {
                return fail(format!(
                    "{}-sum needs a complete identified set; edge {}-{} missing in g2",
                    s.k, s.g2_vertices[i], s.g2_vertices[j]
                ));
            }
        }
    }
    let glue: BTreeSet<usize> = s.g1_vertices.iter().copied().collect();
    let mut seen = BTreeSet::new();
    for &(u, v) in &s.delete_common {
        let key = (u.min(v), u.max(v));
        if !glue.contains(&u) || !glue.contains(&v) || u == v {
            return fail(format!("deletion {}-{} is not a common edge", u, v));
        }
        if !seen.insert(key) {
            return fail(format!("deletion {}-{} listed twice", u, v));
        }
    }
    Ok(())
}

/// Glues g2 onto g1 along the identification in `s`. g1 keeps its labels;
/// g2's non-identified vertices are appended in ascending order.
pub fn apply_sum(g1: &SimpleGraph, g2: &SimpleGraph, s: &SumSpec) -> Result<SimpleGraph> {
    validate_sum(g1, g2, s)?;
    let mut map = vec![usize::MAX; g2.n()];
    for i in 0..s.k {
        map[s.g2_vertices[i]] = s.g1_vertices[i];
    }
    let mut next = g1.n();
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges: BTreeSet<(usize, usize)> = g1.edges().iter().map(|e| (e.u, e.v)).collect();
    for e in g2.edges() {
        let (a, b) = (map[e.u], map[e.v]);
        edges.insert((a.min(b), a.max(b)));
    }
    for &(u, v) in &s.delete_common {
        edges.remove(&(u.min(v), u.max(v)));
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    SimpleGraph::from_edges(next, &edges)
}

/// 3-sum along triangles that are non-separating on both sides, keeping
/// all three common edges.
pub fn special_3sum(
    g1: &SimpleGraph,
    t1: &Triangle,
    g2: &SimpleGraph,
    t2: &Triangle,
) -> Result<SimpleGraph> {
    special_3sum_with(g1, t1, g2, t2, &[])
}

/// Same as `special_3sum` but allowing a chosen subset of the common
/// triangle edges (in g1's labels) to be deleted after identification.
pub fn special_3sum_with(
    g1: &SimpleGraph,
    t1: &Triangle,
    g2: &SimpleGraph,
    t2: &Triangle,
    delete_common: &[(usize, usize)],
) -> Result<SimpleGraph> {
    for (g, t) in [(g1, t1), (g2, t2)] {
        let [a, b, c] = t.vertices();
        if is_separating_triangle(g, t)? {
            return Err(Error::SeparatingTriangle { a, b, c });
        }
    }
    let spec = SumSpec {
        k: 3,
        g1_vertices: t1.vertices().to_vec(),
        g2_vertices: t2.vertices().to_vec(),
        delete_common: delete_common.to_vec(),
    };
    apply_sum(g1, g2, &spec)
}

/// Subdivides two nonadjacent edges and joins the two new vertices. The
/// first new vertex (inside e1) gets label n, the second label n+1.
pub fn add_handle(g: &SimpleGraph, e1: (usize, usize), e2: (usize, usize)) -> Result<SimpleGraph> {
    for (u, v) in [e1, e2] {
        if !g.has_edge(u, v) {
            return Err(Error::EdgeNotFound { u, v });
        }
    }
    let ends = [e1.0, e1.1, e2.0, e2.1];
    let set: BTreeSet<usize> = ends.iter().copied().collect();
    if set.len() != 4 {
        return Err(Error::InvalidHandle(format!(
            "edges {}-{} and {}-{} share an endpoint",
            e1.0, e1.1, e2.0, e2.1
        )));
    }
    let g = g.subdivide_edge(e1.0, e1.1)?;
    let g = g.subdivide_edge(e2.0, e2.1)?;
    g.with_edge(g.n() - 2, g.n() - 1)
}

/// One-step extensions of a 3-connected graph: every single edge
/// addition and every 3-split, each list deduped by canonical key and
/// sorted by it.
#[derive(Debug, Clone)]
pub struct Extensions {
    pub edge_additions: Vec<SimpleGraph>,
    pub splits: Vec<SimpleGraph>,
}

pub fn enumerate_extensions(h: &SimpleGraph) -> Result<Extensions> {
    if vertex_connectivity(h)?.0 < 3 {
        return Err(Error::NotThreeConnected);
    }
    let mut additions: BTreeMap<CanonicalKey, SimpleGraph> = BTreeMap::new();
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            if !h.has_edge(u, v) {
                let g = h.with_edge(u, v)?;
                additions.entry(canonical_key(&g)).or_insert(g);
            }
        }
    }
    let mut splits: BTreeMap<CanonicalKey, SimpleGraph> = BTreeMap::new();
    for s in enumerate_splits(h, SplitArity::Three) {
        let g = apply_split(h, &s)?;
        splits.entry(canonical_key(&g)).or_insert(g);
    }
    Ok(Extensions {
        edge_additions: additions.into_values().collect(),
        splits: splits.into_values().collect(),
    })
}

/// A descent by contractions through 4-connected graphs: each link
/// contracts one edge of the previous graph, labels and all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    graphs: Vec<SimpleGraph>,
    edges: Vec<Edge>,
}

impl Chain {
    pub fn graphs(&self) -> &[SimpleGraph] {
        &self.graphs
    }

    pub fn contracted_edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of contraction steps.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first(&self) -> &SimpleGraph {
        &self.graphs[0]
    }

    pub fn last(&self) -> &SimpleGraph {
        self.graphs.last().expect("chain holds at least one graph")
    }

    /// Recomputes every link and every connectivity claim from scratch.
    pub fn verify(&self) -> bool {
        if self.graphs.len() != self.edges.len() + 1 {
            return false;
        }
        for g in &self.graphs {
            match vertex_connectivity(g) {
                Ok((k, _)) if k >= 4 => {}
                _ => return false,
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if !self.graphs[i].has_edge(e.u, e.v) {
                return false;
            }
            match self.graphs[i].contract_edge(e.u, e.v) {
                Ok(c) => {
                    if c != self.graphs[i + 1] {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
        true
    }
}

impl std::fmt::Display for Chain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, g) in self.graphs.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let g6 = crate::codec::to_graph6(g);
            if i < self.edges.len() {
                write!(f, "{} contract {}", g6, self.edges[i])?;
            } else {
                write!(f, "{}", g6)?;
            }
        }
        Ok(())
    }
}

struct ChainSearch<'a> {
    targets: &'a BTreeSet<CanonicalKey>,
    dead: BTreeSet<CanonicalKey>,
    nodes: u64,
    max_nodes: u64,
}

impl ChainSearch<'_> {
    fn dfs(&mut self, cur: &SimpleGraph) -> Result<Option<(Vec<SimpleGraph>, Vec<Edge>)>> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExhausted {
                limit: self.max_nodes,
            });
        }
        let key = canonical_key(cur);
        if self.targets.contains(&key) {
            return Ok(Some((vec![cur.clone()], Vec::new())));
        }
        if self.dead.contains(&key) {
            return Ok(None);
        }
        let mut children: Vec<(CanonicalKey, Edge, SimpleGraph)> = Vec::new();
        for e in cur.edges() {
            let c = cur.contract_edge(e.u, e.v)?;
            if c.n() >= 5 && vertex_connectivity(&c)?.0 >= 4 {
                children.push((canonical_key(&c), e, c));
            }
        }
        children.sort_by(|x, y| (&x.0, x.1).cmp(&(&y.0, y.1)));
        for (_, e, c) in children {
            if let Some((mut graphs, mut edges)) = self.dfs(&c)? {
                let mut all = vec![cur.clone()];
                all.append(&mut graphs);
                let mut es = vec![e];
                es.append(&mut edges);
                return Ok(Some((all, es)));
            }
        }
        self.dead.insert(key);
        Ok(None)
    }
}

/// Searches for a contraction chain from g down to any of the target
/// canonical keys, visiting only 4-connected graphs. Failed subtrees are
/// memoized by canonical key, and children are explored in canonical-key
/// order so the returned chain is reproducible.
pub fn find_chain(
    g: &SimpleGraph,
    targets: &BTreeSet<CanonicalKey>,
) -> Result<Option<Chain>> {
    find_chain_with(g, targets, &SearchConfig::default())
}

pub fn find_chain_with(
    g: &SimpleGraph,
    targets: &BTreeSet<CanonicalKey>,
    cfg: &SearchConfig,
) -> Result<Option<Chain>> {
    if vertex_connectivity(g)?.0 < 4 {
        return Err(Error::NotFourConnected);
    }
    let mut search = ChainSearch {
        targets,
        dead: BTreeSet::new(),
        nodes: 0,
        max_nodes: cfg.max_nodes,
    };
    match search.dfs(g)? {
        Some((graphs, edges)) => {
            let chain = Chain { graphs, edges };
            debug_assert!(chain.verify());
            Ok(Some(chain))
        }
        None => Ok(None),
    }
}

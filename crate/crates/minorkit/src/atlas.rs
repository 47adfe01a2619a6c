//! Named graphs, generated families, and the exhaustive small-graph
//! census, all deduplicated by canonical key with replayable provenance.

use std::collections::{BTreeMap, BTreeSet};

use crate::canon::{canonical_key, CanonicalKey};
use crate::connectivity::{
    is_cyclically_4_connected_cubic, is_separating_triangle, Triangle,
};
use crate::graph::{bits, SimpleGraph};
use crate::minors::is_planar;
use crate::transforms::{add_handle, apply_split, special_3sum_with, SplitArity, SplitSpec};
use crate::{Error, Result};

/// Identifier for a named graph. Parse with [`NamedGraphId::parse`];
/// the accepted spellings are the `Display` forms: `K5`, `K3,3`, `C6`,
/// `C6^2`, `W5`, `Prism`, `Cube`, `Oct`, `Oct-e`, `Oct+`, `Oct1+`,
/// `Oct2+`, `V8`, `P10`, `L4'`, `L5`, `L5'`, `L5''`, `K5^t`, `L(K3,3)`,
/// `L(Cube)`, `L(V8)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum NamedGraphId {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    SquaredCycle(usize),
    Wheel(usize),
    Prism,
    Cube,
    Oct,
    OctMinusEdge,
    OctPlus,
    Oct1Plus,
    Oct2Plus,
    V8,
    P10,
    L4Prime,
    L5,
    L5Prime,
    L5DoublePrime,
    K5Triangle,
    LineOfK33,
    LineOfCube,
    LineOfV8,
}

impl NamedGraphId {
    pub fn parse(s: &str) -> Result<Self> {
        use NamedGraphId::*;
        let s = s.trim();
        let fixed = match s {
            "Prism" => Some(Prism),
            "Cube" => Some(Cube),
            "Oct" => Some(Oct),
            "Oct-e" => Some(OctMinusEdge),
            "Oct+" => Some(OctPlus),
            "Oct1+" => Some(Oct1Plus),
            "Oct2+" => Some(Oct2Plus),
            "V8" => Some(V8),
            "P10" => Some(P10),
            "L4'" => Some(L4Prime),
            "L5" => Some(L5),
            "L5'" => Some(L5Prime),
            "L5''" => Some(L5DoublePrime),
            "K5^t" => Some(K5Triangle),
            "L(K3,3)" => Some(LineOfK33),
            "L(Cube)" => Some(LineOfCube),
            "L(V8)" => Some(LineOfV8),
            _ => None,
        };
        if let Some(id) = fixed {
            return Ok(id);
        }
        let unknown = || Error::UnknownName(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        if let Some(rest) = s.strip_prefix('K') {
            if let Some((m, n)) = rest.split_once(',') {
                return Ok(CompleteBipartite(num(m)?, num(n)?));
            }
            return Ok(Complete(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix('C') {
            if let Some(t) = rest.strip_suffix("^2") {
                return Ok(SquaredCycle(num(t)?));
            }
            return Ok(Cycle(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix('W') {
            return Ok(Wheel(num(rest)?));
        }
        Err(unknown())
    }
}

impl std::fmt::Display for NamedGraphId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use NamedGraphId::*;
        match self {
            Complete(n) => write!(f, "K{}", n),
            CompleteBipartite(m, n) => write!(f, "K{},{}", m, n),
            Cycle(n) => write!(f, "C{}", n),
            SquaredCycle(n) => write!(f, "C{}^2", n),
            Wheel(n) => write!(f, "W{}", n),
            Prism => write!(f, "Prism"),
            Cube => write!(f, "Cube"),
            Oct => write!(f, "Oct"),
            OctMinusEdge => write!(f, "Oct-e"),
            OctPlus => write!(f, "Oct+"),
            Oct1Plus => write!(f, "Oct1+"),
            Oct2Plus => write!(f, "Oct2+"),
            V8 => write!(f, "V8"),
            P10 => write!(f, "P10"),
            L4Prime => write!(f, "L4'"),
            L5 => write!(f, "L5"),
            L5Prime => write!(f, "L5'"),
            L5DoublePrime => write!(f, "L5''"),
            K5Triangle => write!(f, "K5^t"),
            LineOfK33 => write!(f, "L(K3,3)"),
            LineOfCube => write!(f, "L(Cube)"),
            LineOfV8 => write!(f, "L(V8)"),
        }
    }
}

fn cycle_square(n: usize) -> Result<SimpleGraph> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for d in [1usize, 2] {
            let (a, b) = (i, (i + d) % n);
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    SimpleGraph::from_edges(n, &edges)
}

/// Circular ladder: two disjoint n-cycles 0..n-1 and n..2n-1 joined by
/// the rungs (i, n+i).
fn circular_ladder(n: usize) -> Result<SimpleGraph> {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push(norm(i, (i + 1) % n));
        edges.push(norm(n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    edges.sort_unstable();
    edges.dedup();
    SimpleGraph::from_edges(2 * n, &edges)
}

/// Moebius ladder: the cycle 0..2n-1 plus the n main diagonals.
fn moebius_ladder(n: usize) -> Result<SimpleGraph> {
    let mut edges = Vec::new();
    for i in 0..2 * n {
        edges.push(norm(i, (i + 1) % (2 * n)));
    }
    for i in 0..n {
        edges.push((i, i + n));
    }
    edges.sort_unstable();
    edges.dedup();
    SimpleGraph::from_edges(2 * n, &edges)
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn octahedron() -> Result<SimpleGraph> {
    let mut g = SimpleGraph::complete(6)?;
    for (u, v) in [(0, 3), (1, 4), (2, 5)] {
        g = g.delete_edge(u, v)?;
    }
    Ok(g)
}

fn wagner_graph() -> Result<SimpleGraph> {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| norm(i, (i + 1) % 8)).collect();
    edges.extend((0..4).map(|i| (i, i + 4)));
    edges.sort_unstable();
    edges.dedup();
    SimpleGraph::from_edges(8, &edges)
}

/// Petersen graph as the Kneser graph on 2-element subsets of a
/// 5-element set, adjacent when disjoint.
fn petersen() -> Result<SimpleGraph> {
    let mut pairs = Vec::new();
    for a in 0..5usize {
        for b in a + 1..5 {
            pairs.push((a, b));
        }
    }
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::from_edges(10, &edges)
}

fn shortest_cycle(g: &SimpleGraph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for e in g.edges() {
        let h = g.delete_edge(e.u, e.v).expect("listed edge exists");
        let mut dist = vec![usize::MAX; h.n()];
        dist[e.u] = 0;
        let mut queue = std::collections::VecDeque::from([e.u]);
        while let Some(x) = queue.pop_front() {
            for y in bits(h.neighbors_mask(x)) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[e.v] != usize::MAX {
            let len = dist[e.v] + 1;
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

fn expect_post(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Postcondition(what.to_string()))
    }
}

/// Builds the named graph in its documented labeling and validates its
/// advertised properties before returning it.
pub fn build(id: &NamedGraphId) -> Result<SimpleGraph> {
    use NamedGraphId::*;
    match id {
        Complete(n) => SimpleGraph::complete(*n),
        CompleteBipartite(m, n) => SimpleGraph::complete_bipartite(*m, *n),
        Cycle(n) => SimpleGraph::cycle(*n),
        SquaredCycle(n) => cycle_square(*n),
        Wheel(n) => {
            let rim = SimpleGraph::cycle(*n)?;
            let mut edges: Vec<(usize, usize)> = rim.edges().iter().map(|e| (e.u, e.v)).collect();
            edges.extend((0..*n).map(|i| (i, *n)));
            SimpleGraph::from_edges(n + 1, &edges)
        }
        Prism => circular_ladder(3),
        Cube => {
            let mut edges = Vec::new();
            for v in 0..8usize {
                for b in 0..3 {
                    let w = v ^ (1 << b);
                    if v < w {
                        edges.push((v, w));
                    }
                }
            }
            let g = SimpleGraph::from_edges(8, &edges)?;
            expect_post(g.is_regular(3), "cube must be cubic")?;
            Ok(g)
        }
        Oct => {
            let g = octahedron()?;
            expect_post(
                g.is_regular(4) && g.edge_count() == 12,
                "octahedron must be 4-regular with 12 edges",
            )?;
            Ok(g)
        }
        OctMinusEdge => octahedron()?.delete_edge(0, 1),
        OctPlus => {
            let g = SimpleGraph::complete(6)?
                .delete_edge(0, 3)?
                .delete_edge(1, 4)?;
            expect_post(g.edge_count() == 13, "Oct+ must have 13 edges")?;
            Ok(g)
        }
        Oct1Plus => {
            // split a vertex of the octahedron along two adjacent pairs
            let s = SplitSpec::from_slices(0, &[1, 2], &[4, 5], SplitArity::Three);
            let g = apply_split(&octahedron()?, &s)?;
            expect_post(
                g.n() == 7 && g.edge_count() == 13 && is_planar(&g)?,
                "the adjacent-pair split of Oct must be the planar one",
            )?;
            Ok(g)
        }
        Oct2Plus => {
            // split a vertex of the octahedron along the two opposite pairs
            let s = SplitSpec::from_slices(0, &[1, 4], &[2, 5], SplitArity::Three);
            let g = apply_split(&octahedron()?, &s)?;
            expect_post(
                g.n() == 7 && g.edge_count() == 13 && !is_planar(&g)?,
                "the opposite-pair split of Oct must be the non-planar one",
            )?;
            Ok(g)
        }
        V8 => {
            let g = wagner_graph()?;
            expect_post(g.is_regular(3) && g.edge_count() == 12, "V8 must be cubic")?;
            Ok(g)
        }
        P10 => {
            let g = petersen()?;
            // a cubic graph on 10 vertices with girth 5 is unique, so these
            // three checks pin the construction completely
            expect_post(
                g.n() == 10 && g.is_regular(3) && shortest_cycle(&g) == Some(5),
                "P10 must be the cubic girth-5 graph on 10 vertices",
            )?;
            Ok(g)
        }
        L4Prime => {
            let g = wagner_graph()?;
            expect_post(
                g.is_regular(3) && !is_planar(&g)?,
                "L4' must be cubic and non-planar",
            )?;
            Ok(g)
        }
        L5 => {
            let g = circular_ladder(5)?;
            expect_post(
                g.is_regular(3) && is_planar(&g)?,
                "L5 must be cubic and planar",
            )?;
            Ok(g)
        }
        L5Prime => {
            // pentagonal ladder with one crossed pair of rungs
            let mut edges = Vec::new();
            for i in 0..5usize {
                edges.push(norm(i, (i + 1) % 5));
                edges.push(norm(5 + i, 5 + (i + 1) % 5));
            }
            edges.extend([(0, 6), (1, 5), (2, 7), (3, 8), (4, 9)]);
            edges.sort_unstable();
            let g = SimpleGraph::from_edges(10, &edges)?;
            expect_post(
                g.is_regular(3) && !is_planar(&g)?,
                "L5' must be cubic and non-planar",
            )?;
            Ok(g)
        }
        L5DoublePrime => {
            let g = moebius_ladder(5)?;
            expect_post(
                g.is_regular(3) && !is_planar(&g)?,
                "L5'' must be cubic and non-planar",
            )?;
            Ok(g)
        }
        K5Triangle => {
            let prism = circular_ladder(3)?;
            let k5 = SimpleGraph::complete(5)?;
            let t1 = Triangle::new(&prism, 0, 1, 2)?;
            let t2 = Triangle::new(&k5, 0, 1, 2)?;
            let g = special_3sum_with(&prism, &t1, &k5, &t2, &[])?;
            expect_post(
                g.n() == 8 && g.edge_count() == 16,
                "K5^t must have 8 vertices and 16 edges",
            )?;
            Ok(g)
        }
        LineOfK33 => {
            let g = SimpleGraph::complete_bipartite(3, 3)?.line_graph()?;
            expect_post(
                g.n() == 9 && g.edge_count() == 18 && g.is_regular(4),
                "L(K3,3) must be 4-regular with 9 vertices and 18 edges",
            )?;
            Ok(g)
        }
        LineOfCube => build(&Cube)?.line_graph(),
        LineOfV8 => build(&V8)?.line_graph(),
    }
}

/// Convenience wrapper: parse then build.
pub fn build_named(name: &str) -> Result<SimpleGraph> {
    build(&NamedGraphId::parse(name)?)
}

/// Whether generated triangle sums keep all three common edges or may
/// also delete subsets of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KConvention {
    KeepCommonEdges,
    AllowDeletions,
}

/// How a catalog entry came to exist; enough to rebuild it exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Base {
        name: String,
    },
    Handle {
        parent: CanonicalKey,
        e1: (usize, usize),
        e2: (usize, usize),
    },
    TriangleSum {
        parent: CanonicalKey,
        triangle: [usize; 3],
        deletions: Vec<(usize, usize)>,
    },
    Census,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub graph: SimpleGraph,
    pub provenance: Provenance,
}

/// A set of graphs up to isomorphism, keyed by canonical form, each with
/// provenance that replays to the stored representative.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: BTreeMap<CanonicalKey, CatalogEntry>,
    truncated: bool,
}

impl Catalog {
    fn insert(&mut self, graph: SimpleGraph, provenance: Provenance) -> (CanonicalKey, bool) {
        let key = canonical_key(&graph);
        let fresh = !self.entries.contains_key(&key);
        if fresh {
            self.entries
                .insert(key.clone(), CatalogEntry { graph, provenance });
        }
        (key, fresh)
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.entries.contains_key(key)
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<&CatalogEntry> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &CatalogEntry)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.entries.keys()
    }

    /// True when a size or step bound stopped the generator before the
    /// closure was complete.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Rebuilds the entry from its provenance chain and checks the result
    /// still canonizes to the same key.
    pub fn replay(&self, key: &CanonicalKey) -> Result<SimpleGraph> {
        let entry = self
            .entries
            .get(key)
            .ok_or_else(|| Error::UnknownName(format!("no catalog entry {:?}", key)))?;
        let graph = match &entry.provenance {
            Provenance::Base { name } => build_named(name)?,
            Provenance::Handle { parent, e1, e2 } => {
                let p = self.replay(parent)?;
                add_handle(&p, *e1, *e2)?
            }
            Provenance::TriangleSum {
                parent,
                triangle,
                deletions,
            } => {
                let p = self.replay(parent)?;
                let t1 = Triangle::new(&p, triangle[0], triangle[1], triangle[2])?;
                let k4 = SimpleGraph::complete(4)?;
                let t2 = Triangle::new(&k4, 0, 1, 2)?;
                special_3sum_with(&p, &t1, &k4, &t2, deletions)?
            }
            Provenance::Census => entry.graph.clone(),
        };
        if canonical_key(&graph) != *key {
            return Err(Error::Postcondition(
                "provenance replay landed on a different canonical key".into(),
            ));
        }
        Ok(graph)
    }

    /// One graph6 line per entry, in key order.
    pub fn graph6_lines(&self) -> Vec<String> {
        self.entries
            .values()
            .map(|e| crate::codec::to_graph6(&e.graph))
            .collect()
    }

    /// One provenance line per entry, parallel to `graph6_lines`.
    pub fn provenance_lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|(key, e)| {
                let path = match &e.provenance {
                    Provenance::Base { name } => format!("base {}", name),
                    Provenance::Handle { parent, e1, e2 } => format!(
                        "handle {} {}-{} {}-{}",
                        parent.to_graph6(),
                        e1.0,
                        e1.1,
                        e2.0,
                        e2.1
                    ),
                    Provenance::TriangleSum {
                        parent,
                        triangle,
                        deletions,
                    } => {
                        let dels: Vec<String> = deletions
                            .iter()
                            .map(|(u, v)| format!("{}-{}", u, v))
                            .collect();
                        format!(
                            "sum3 {} {},{},{} del [{}]",
                            parent.to_graph6(),
                            triangle[0],
                            triangle[1],
                            triangle[2],
                            dels.join(",")
                        )
                    }
                    Provenance::Census => "census".to_string(),
                };
                format!("{} {}", key.to_graph6(), path)
            })
            .collect()
    }
}

/// Closure of {K3,3, Cube} under handle addition, filtered to cyclically
/// 4-connected cubic graphs, explored breadth-first for `max_steps`
/// rounds. The closure is infinite, so the catalog reports truncation
/// whenever unexplored frontier graphs remain.
pub fn gen_cubic_cyc4(max_steps: usize) -> Result<Catalog> {
    let mut cat = Catalog::default();
    let mut frontier = Vec::new();
    for name in ["K3,3", "Cube"] {
        let g = build_named(name)?;
        debug_assert!(is_cyclically_4_connected_cubic(&g)?.0);
        let (key, fresh) = cat.insert(
            g,
            Provenance::Base {
                name: name.to_string(),
            },
        );
        if fresh {
            frontier.push(key);
        }
    }
    for _ in 0..max_steps {
        let mut next = Vec::new();
        for key in &frontier {
            let g = cat.get(key).expect("frontier key present").graph.clone();
            if g.n() + 2 > 64 {
                cat.truncated = true;
                continue;
            }
            let edges = g.edges();
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    let (e1, e2) = (edges[i], edges[j]);
                    let ends: BTreeSet<usize> = [e1.u, e1.v, e2.u, e2.v].into();
                    if ends.len() != 4 {
                        continue;
                    }
                    let h = add_handle(&g, (e1.u, e1.v), (e2.u, e2.v))?;
                    if !is_cyclically_4_connected_cubic(&h)?.0 {
                        continue;
                    }
                    let (hk, fresh) = cat.insert(
                        h,
                        Provenance::Handle {
                            parent: key.clone(),
                            e1: (e1.u, e1.v),
                            e2: (e2.u, e2.v),
                        },
                    );
                    if fresh {
                        next.push(hk);
                    }
                }
            }
        }
        frontier = next;
    }
    if !frontier.is_empty() {
        cat.truncated = true;
    }
    Ok(cat)
}

/// Closure of {K4} under gluing a fresh K4 onto a non-separating
/// triangle (a special 3-sum adding one vertex per step), up to the
/// vertex bound. The default convention keeps all common edges;
/// `AllowDeletions` also generates every deletion subset.
pub fn gen_special_3sum_k4(max_vertices: usize) -> Result<Catalog> {
    gen_special_3sum_k4_with(max_vertices, KConvention::KeepCommonEdges)
}

pub fn gen_special_3sum_k4_with(max_vertices: usize, conv: KConvention) -> Result<Catalog> {
    if max_vertices < 4 {
        return Err(Error::Unsupported(format!(
            "the closure starts at K4, so max_vertices must be at least 4, got {}",
            max_vertices
        )));
    }
    let mut cat = Catalog::default();
    let k4 = SimpleGraph::complete(4)?;
    let t2 = Triangle::new(&k4, 0, 1, 2)?;
    cat.insert(
        k4.clone(),
        Provenance::Base {
            name: "K4".to_string(),
        },
    );
    loop {
        let snapshot: Vec<CanonicalKey> = cat.keys().cloned().collect();
        let mut inserted = false;
        for key in snapshot {
            let g = cat.get(&key).expect("snapshot key present").graph.clone();
            if g.n() + 1 > max_vertices {
                if g.triangles().iter().any(|&(a, b, c)| {
                    Triangle::new(&g, a, b, c)
                        .and_then(|t| is_separating_triangle(&g, &t))
                        .map(|sep| !sep)
                        .unwrap_or(false)
                }) {
                    cat.truncated = true;
                }
                continue;
            }
            for (a, b, c) in g.triangles() {
                let t1 = Triangle::new(&g, a, b, c)?;
                if is_separating_triangle(&g, &t1)? {
                    continue;
                }
                let deletion_sets: Vec<Vec<(usize, usize)>> = match conv {
                    KConvention::KeepCommonEdges => vec![Vec::new()],
                    KConvention::AllowDeletions => {
                        let tri_edges = [(a, b), (a, c), (b, c)];
                        (0..8u8)
                            .map(|m| {
                                tri_edges
                                    .iter()
                                    .enumerate()
                                    .filter(|(i, _)| m & (1 << i) != 0)
                                    .map(|(_, &e)| e)
                                    .collect()
                            })
                            .collect()
                    }
                };
                for dels in deletion_sets {
                    let h = special_3sum_with(&g, &t1, &k4, &t2, &dels)?;
                    let (_, fresh) = cat.insert(
                        h,
                        Provenance::TriangleSum {
                            parent: key.clone(),
                            triangle: [a, b, c],
                            deletions: dels,
                        },
                    );
                    inserted |= fresh;
                }
            }
        }
        if !inserted {
            break;
        }
    }
    Ok(cat)
}

/// Every graph on n vertices up to isomorphism that satisfies the
/// predicate, for n up to 8. The predicate must be invariant under
/// isomorphism; it is applied before canonization at the final level to
/// keep the n = 8 census affordable.
pub fn gen_all_graphs<F: Fn(&SimpleGraph) -> bool>(n: usize, pred: F) -> Result<Catalog> {
    if n > 8 {
        return Err(Error::Unsupported(format!(
            "census enumeration is capped at 8 vertices, got {}",
            n
        )));
    }
    let mut cat = Catalog::default();
    if n == 0 {
        let empty = SimpleGraph::empty(0)?;
        if pred(&empty) {
            cat.insert(empty, Provenance::Census);
        }
        return Ok(cat);
    }
    let mut reps: Vec<SimpleGraph> = vec![SimpleGraph::empty(0)?];
    for k in 0..n {
        let last = k + 1 == n;
        let mut seen: BTreeSet<CanonicalKey> = BTreeSet::new();
        let mut next: Vec<SimpleGraph> = Vec::new();
        for g in &reps {
            for mask in 0..(1u64 << k) {
                let mut h = g.disjoint_union(&SimpleGraph::empty(1)?)?;
                for v in bits(mask) {
                    h = h.with_edge(v, k)?;
                }
                if last && !pred(&h) {
                    continue;
                }
                let key = canonical_key(&h);
                if seen.insert(key.clone()) {
                    next.push(key.graph());
                }
            }
        }
        reps = next;
    }
    for g in reps {
        cat.insert(g, Provenance::Census);
    }
    Ok(cat)
}

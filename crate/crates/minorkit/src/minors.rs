//! Minor and topological-minor search with verifiable certificates, plus
//! planarity through the same engine.

use crate::graph::{bits, mask_below, Edge, SimpleGraph};
use crate::{Error, Result};

/// Node budget for the backtracking searches. Exceeding it is reported as
/// an error, never as "no minor".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_nodes: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_nodes: 50_000_000,
        }
    }
}

/// Certificate that some H is a minor of some G: one branch set per
/// H-vertex, stored as a bitmask over G's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    branch_sets: Vec<u64>,
}

impl MinorModel {
    pub fn new(branch_sets: Vec<u64>) -> Self {
        MinorModel { branch_sets }
    }

    pub fn branch_mask(&self, h_vertex: usize) -> u64 {
        self.branch_sets[h_vertex]
    }

    pub fn len(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branch_sets.is_empty()
    }

    pub fn branch_sets(&self) -> Vec<Vec<usize>> {
        self.branch_sets
            .iter()
            .map(|&m| bits(m).collect())
            .collect()
    }
}

impl std::fmt::Display for MinorModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, &m) in self.branch_sets.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let set: Vec<String> = bits(m).map(|v| v.to_string()).collect();
            write!(f, "{}: {{{}}}", i, set.join(", "))?;
        }
        Ok(())
    }
}

/// Certificate that G contains a subdivision of H: an injective placement
/// of H's vertices plus one internally disjoint G-path per H-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionModel {
    branch_vertices: Vec<usize>,
    h_edges: Vec<Edge>,
    paths: Vec<Vec<usize>>,
}

impl SubdivisionModel {
    pub fn branch_vertices(&self) -> &[usize] {
        &self.branch_vertices
    }

    /// Paths listed in the order of `h.edges()`; each path starts at the
    /// image of the smaller H-endpoint.
    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn h_edges(&self) -> &[Edge] {
        &self.h_edges
    }
}

impl std::fmt::Display for SubdivisionModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (e, p)) in self.h_edges.iter().zip(&self.paths).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let path: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            write!(f, "{}: {}", e, path.join(" "))?;
        }
        Ok(())
    }
}

fn sorted_degrees_capped(g: &SimpleGraph, cap: usize) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v).min(cap)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// A branch set realizing external degree d needs a vertex of degree at
/// least min(d, 3): a tree of vertices with degree below that bound caps
/// out at external degree 2. Degrees above 3 carry no information for
/// minors, because branch sets can pool them.
fn minor_quick_reject(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    if g.n() < h.n() || g.edge_count() < h.edge_count() {
        return true;
    }
    let dg = sorted_degrees_capped(g, 3);
    let dh = sorted_degrees_capped(h, 3);
    dh.iter().zip(&dg).any(|(a, b)| a > b)
}

struct MinorSearch<'a> {
    g: &'a SimpleGraph,
    order: Vec<usize>,
    twin_with_prev: Vec<bool>,
    back: Vec<Vec<usize>>,
    has_future: Vec<bool>,
    chosen: Vec<u64>,
    nbrmask: Vec<u64>,
    seeds: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

fn expand_mask(g: &SimpleGraph, start: u64, allowed: u64) -> u64 {
    let mut r = start;
    loop {
        let mut nb = 0u64;
        for v in bits(r) {
            nb |= g.neighbors_mask(v);
        }
        let next = r | (nb & allowed);
        if next == r {
            return r;
        }
        r = next;
    }
}

fn neighborhood_of_mask(g: &SimpleGraph, m: u64) -> u64 {
    let mut nb = 0u64;
    for v in bits(m) {
        nb |= g.neighbors_mask(v);
    }
    nb & !m
}

impl<'a> MinorSearch<'a> {
    fn new(g: &'a SimpleGraph, h: &SimpleGraph, cfg: &SearchConfig) -> Self {
        let t = h.n();
        let mut order: Vec<usize> = (0..t).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
        let twin_with_prev: Vec<bool> = (0..t)
            .map(|j| {
                if j == 0 {
                    return false;
                }
                let (u, v) = (order[j - 1], order[j]);
                h.neighbors_mask(u) & !(1u64 << v) == h.neighbors_mask(v) & !(1u64 << u)
            })
            .collect();
        let pos_of: Vec<usize> = {
            let mut p = vec![0; t];
            for (j, &v) in order.iter().enumerate() {
                p[v] = j;
            }
            p
        };
        let back: Vec<Vec<usize>> = (0..t)
            .map(|j| {
                let mut b: Vec<usize> = bits(h.neighbors_mask(order[j]))
                    .map(|w| pos_of[w])
                    .filter(|&i| i < j)
                    .collect();
                b.sort_unstable();
                b
            })
            .collect();
        let has_future: Vec<bool> = (0..t)
            .map(|j| bits(h.neighbors_mask(order[j])).any(|w| pos_of[w] > j))
            .collect();
        MinorSearch {
            g,
            order,
            twin_with_prev,
            back,
            has_future,
            chosen: vec![0; t],
            nbrmask: vec![0; t],
            seeds: vec![0; t],
            nodes: 0,
            max_nodes: cfg.max_nodes,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExhausted {
                limit: self.max_nodes,
            });
        }
        Ok(())
    }

    fn level(&mut self, j: usize, free: u64) -> Result<bool> {
        let t = self.order.len();
        if j == t {
            return Ok(true);
        }
        if (free.count_ones() as usize) < t - j {
            return Ok(false);
        }
        let seed_pool = if self.twin_with_prev[j] {
            free & !mask_below(self.seeds[j - 1] + 1)
        } else {
            free
        };
        for seed in bits(seed_pool) {
            let universe = (free & !mask_below(seed + 1)) | (1u64 << seed);
            if self.grow(j, 1u64 << seed, 0, universe, free, seed)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn grow(
        &mut self,
        j: usize,
        s: u64,
        banned: u64,
        universe: u64,
        free: u64,
        seed: usize,
    ) -> Result<bool> {
        self.tick()?;
        let t = self.order.len();
        let unsatisfied: Vec<usize> = self.back[j]
            .iter()
            .copied()
            .filter(|&i| self.nbrmask[i] & s == 0)
            .collect();
        if unsatisfied.is_empty() {
            self.chosen[j] = s;
            self.nbrmask[j] = neighborhood_of_mask(self.g, s);
            self.seeds[j] = seed;
            if self.level(j + 1, free & !s)? {
                return Ok(true);
            }
            if !self.has_future[j] {
                return Ok(false);
            }
        }
        if ((free & !s).count_ones() as usize) < t - 1 - j {
            return Ok(false);
        }
        if !unsatisfied.is_empty() {
            let reachable = expand_mask(self.g, s, universe & !banned);
            if unsatisfied
                .iter()
                .any(|&i| self.nbrmask[i] & reachable == 0)
            {
                return Ok(false);
            }
        }
        let ext = neighborhood_of_mask(self.g, s) & universe & !banned;
        let mut local_ban = banned;
        for v in bits(ext) {
            if self.grow(j, s | (1u64 << v), local_ban, universe, free, seed)? {
                return Ok(true);
            }
            local_ban |= 1u64 << v;
        }
        Ok(false)
    }
}

/// Exhaustive search for h as a minor of g, default budget.
pub fn find_minor(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<MinorModel>> {
    find_minor_with(g, h, &SearchConfig::default())
}

/// Exhaustive search for h as a minor of g. Branch sets are assigned in
/// descending H-degree order and grown in ascending vertex order, so the
/// first model found is reproducible run to run.
pub fn find_minor_with(
    g: &SimpleGraph,
    h: &SimpleGraph,
    cfg: &SearchConfig,
) -> Result<Option<MinorModel>> {
    if h.n() == 0 {
        return Ok(Some(MinorModel::new(Vec::new())));
    }
    if minor_quick_reject(g, h) {
        return Ok(None);
    }
    let mut search = MinorSearch::new(g, h, cfg);
    if search.level(0, mask_below(g.n()))? {
        let mut branch_sets = vec![0u64; h.n()];
        for (j, &hv) in search.order.iter().enumerate() {
            branch_sets[hv] = search.chosen[j];
        }
        let model = MinorModel::new(branch_sets);
        debug_assert!(verify_model(g, h, &model));
        Ok(Some(model))
    } else {
        Ok(None)
    }
}

/// Certificate check, written against the three invariants directly and
/// sharing no code with the search.
pub fn verify_model(g: &SimpleGraph, h: &SimpleGraph, m: &MinorModel) -> bool {
    if m.branch_sets.len() != h.n() {
        return false;
    }
    let all = mask_below(g.n());
    let mut seen = 0u64;
    for &b in &m.branch_sets {
        if b == 0 || b & !all != 0 || b & seen != 0 {
            return false;
        }
        seen |= b;
        let start = 1u64 << b.trailing_zeros();
        if g.reach(start, b) != b {
            return false;
        }
    }
    for e in h.edges() {
        let bu = m.branch_sets[e.u];
        let bv = m.branch_sets[e.v];
        if !bits(bu).any(|x| g.neighbors_mask(x) & bv != 0) {
            return false;
        }
    }
    true
}

struct TopoSearch<'a> {
    g: &'a SimpleGraph,
    order: Vec<usize>,
    twin_with_prev: Vec<bool>,
    h_degree: Vec<usize>,
    h_edges: Vec<Edge>,
    bv: Vec<usize>,
    paths: Vec<Vec<usize>>,
    nodes: u64,
    max_nodes: u64,
}

impl<'a> TopoSearch<'a> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExhausted {
                limit: self.max_nodes,
            });
        }
        Ok(())
    }

    fn assign(&mut self, j: usize, used: u64) -> Result<bool> {
        self.tick()?;
        if j == self.order.len() {
            return self.route(0, used);
        }
        let hv = self.order[j];
        let floor = if self.twin_with_prev[j] {
            self.bv[self.order[j - 1]] + 1
        } else {
            0
        };
        for v in floor..self.g.n() {
            if used & (1u64 << v) != 0 || self.g.degree(v) < self.h_degree[hv] {
                continue;
            }
            self.bv[hv] = v;
            if self.assign(j + 1, used | (1u64 << v))? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn route(&mut self, e: usize, used: u64) -> Result<bool> {
        if e == self.h_edges.len() {
            return Ok(true);
        }
        let a = self.bv[self.h_edges[e].u];
        let b = self.bv[self.h_edges[e].v];
        let open = mask_below(self.g.n()) & !used;
        let from = 1u64 << a;
        if self.g.reach(from, open | from | (1u64 << b)) & (1u64 << b) == 0 {
            return Ok(false);
        }
        self.paths[e].clear();
        self.paths[e].push(a);
        self.extend(e, a, b, used)
    }

    fn extend(&mut self, e: usize, cur: usize, b: usize, used: u64) -> Result<bool> {
        self.tick()?;
        for w in bits(self.g.neighbors_mask(cur)) {
            if w == b {
                self.paths[e].push(b);
                if self.route(e + 1, used)? {
                    return Ok(true);
                }
                self.paths[e].pop();
            } else if used & (1u64 << w) == 0 {
                self.paths[e].push(w);
                if self.extend(e, w, b, used | (1u64 << w))? {
                    return Ok(true);
                }
                self.paths[e].pop();
            }
        }
        Ok(false)
    }
}

/// Exhaustive search for a subdivision of h inside g, default budget.
pub fn find_topological_minor(
    g: &SimpleGraph,
    h: &SimpleGraph,
) -> Result<Option<SubdivisionModel>> {
    find_topological_minor_with(g, h, &SearchConfig::default())
}

/// Exhaustive search for a subdivision of h inside g. Branch vertices
/// map injectively (unlike minors, degrees cannot pool), so uncapped
/// degree dominance is a valid prefilter here.
pub fn find_topological_minor_with(
    g: &SimpleGraph,
    h: &SimpleGraph,
    cfg: &SearchConfig,
) -> Result<Option<SubdivisionModel>> {
    if h.n() == 0 {
        return Ok(Some(SubdivisionModel {
            branch_vertices: Vec::new(),
            h_edges: Vec::new(),
            paths: Vec::new(),
        }));
    }
    if g.n() < h.n() || g.edge_count() < h.edge_count() {
        return Ok(None);
    }
    if h.max_degree() > g.max_degree() {
        return Ok(None);
    }
    let dg = sorted_degrees_capped(g, usize::MAX);
    let dh = sorted_degrees_capped(h, usize::MAX);
    if dh.iter().zip(&dg).any(|(a, b)| a > b) {
        return Ok(None);
    }
    let t = h.n();
    let mut order: Vec<usize> = (0..t).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let twin_with_prev: Vec<bool> = (0..t)
        .map(|j| {
            if j == 0 {
                return false;
            }
            let (u, v) = (order[j - 1], order[j]);
            h.neighbors_mask(u) & !(1u64 << v) == h.neighbors_mask(v) & !(1u64 << u)
        })
        .collect();
    let h_edges = h.edges();
    let mut search = TopoSearch {
        g,
        order,
        twin_with_prev,
        h_degree: (0..t).map(|v| h.degree(v)).collect(),
        h_edges: h_edges.clone(),
        bv: vec![0; t],
        paths: vec![Vec::new(); h_edges.len()],
        nodes: 0,
        max_nodes: cfg.max_nodes,
    };
    if search.assign(0, 0)? {
        let model = SubdivisionModel {
            branch_vertices: search.bv,
            h_edges,
            paths: search.paths,
        };
        debug_assert!(verify_subdivision(g, h, &model));
        Ok(Some(model))
    } else {
        Ok(None)
    }
}

/// Certificate check for subdivision models, independent of the search.
/// Paths must run from the image of the smaller H-endpoint to the larger.
pub fn verify_subdivision(g: &SimpleGraph, h: &SimpleGraph, m: &SubdivisionModel) -> bool {
    if m.branch_vertices.len() != h.n() || m.h_edges != h.edges() {
        return false;
    }
    if m.paths.len() != m.h_edges.len() {
        return false;
    }
    let mut branch_mask = 0u64;
    for &v in &m.branch_vertices {
        if v >= g.n() || branch_mask & (1u64 << v) != 0 {
            return false;
        }
        branch_mask |= 1u64 << v;
    }
    let mut internal_used = 0u64;
    for (e, path) in m.h_edges.iter().zip(&m.paths) {
        if path.len() < 2
            || path[0] != m.branch_vertices[e.u]
            || *path.last().unwrap() != m.branch_vertices[e.v]
        {
            return false;
        }
        let mut within = 0u64;
        for window in path.windows(2) {
            if !g.has_edge(window[0], window[1]) {
                return false;
            }
        }
        for &x in path {
            if within & (1u64 << x) != 0 {
                return false;
            }
            within |= 1u64 << x;
        }
        for &x in &path[1..path.len() - 1] {
            let bit = 1u64 << x;
            if branch_mask & bit != 0 || internal_used & bit != 0 {
                return false;
            }
            internal_used |= bit;
        }
    }
    true
}

/// Which forbidden minor witnesses non-planarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Forbidden {
    K5,
    K33,
}

impl std::fmt::Display for Forbidden {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Forbidden::K5 => write!(f, "K_5"),
            Forbidden::K33 => write!(f, "K_{{3,3}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarityWitness {
    pub forbidden: Forbidden,
    pub model: MinorModel,
}

fn small_cycle_rank(g: &SimpleGraph) -> bool {
    g.components()
        .iter()
        .all(|&c| g.edges_within(c) <= c.count_ones() as usize + 2)
}

fn euler_reject(g: &SimpleGraph) -> bool {
    g.n() >= 3 && g.edge_count() > 3 * g.n() - 6
}

/// Removes vertices of degree at most 1 and smooths vertices of degree 2
/// by replacing them with an edge between their neighbors. For patterns
/// of minimum degree 3 this preserves minor containment in both
/// directions, so it is a safe accelerator for planarity.
fn reduce_low_degree(g: &SimpleGraph) -> SimpleGraph {
    let mut g = g.clone();
    loop {
        let Some(v) = (0..g.n()).find(|&v| g.degree(v) <= 2) else {
            return g;
        };
        if g.degree(v) == 2 {
            let nb: Vec<usize> = g.neighbors(v);
            if !g.has_edge(nb[0], nb[1]) {
                g = g.with_edge(nb[0], nb[1]).expect("edge known absent");
            }
        }
        g = g.delete_vertex(v).expect("vertex in range");
    }
}

/// Planarity by Wagner's criterion: no K₅ minor and no K₃,₃ minor.
pub fn is_planar(g: &SimpleGraph) -> Result<bool> {
    if small_cycle_rank(g) {
        return Ok(true);
    }
    let r = reduce_low_degree(g);
    if small_cycle_rank(&r) {
        return Ok(true);
    }
    if euler_reject(&r) {
        return Ok(false);
    }
    let k5 = SimpleGraph::complete(5)?;
    if find_minor(&r, &k5)?.is_some() {
        return Ok(false);
    }
    let k33 = SimpleGraph::complete_bipartite(3, 3)?;
    Ok(find_minor(&r, &k33)?.is_none())
}

/// Planarity with a certificate: None when planar, otherwise the
/// forbidden minor found together with a model on the input graph
/// itself (not on any reduced form).
pub fn planarity(g: &SimpleGraph) -> Result<Option<PlanarityWitness>> {
    if is_planar(g)? {
        return Ok(None);
    }
    let k5 = SimpleGraph::complete(5)?;
    if let Some(model) = find_minor(g, &k5)? {
        return Ok(Some(PlanarityWitness {
            forbidden: Forbidden::K5,
            model,
        }));
    }
    let k33 = SimpleGraph::complete_bipartite(3, 3)?;
    if let Some(model) = find_minor(g, &k33)? {
        return Ok(Some(PlanarityWitness {
            forbidden: Forbidden::K33,
            model,
        }));
    }
    Err(Error::Postcondition(
        "non-planar graph yielded neither a K_5 nor a K_{3,3} model".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn squared_cycle(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for d in [1usize, 2] {
                let (a, b) = (i, (i + d) % n);
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    fn oct() -> SimpleGraph {
        let mut g = SimpleGraph::complete(6).unwrap();
        for (u, v) in [(0, 3), (1, 4), (2, 5)] {
            g = g.delete_edge(u, v).unwrap();
        }
        g
    }

    fn oct1p() -> SimpleGraph {
        SimpleGraph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 6),
                (1, 2),
                (1, 3),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 4),
                (3, 5),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap()
    }

    fn oct2p() -> SimpleGraph {
        SimpleGraph::from_edges(
            7,
            &[
                (0, 1),
                (0, 4),
                (0, 6),
                (1, 2),
                (1, 3),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 6),
                (3, 4),
                (3, 5),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap()
    }

    fn prism() -> SimpleGraph {
        SimpleGraph::from_edges(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    #[test]
    fn minor_of_subdivided_complete_graph() {
        let mut g = SimpleGraph::complete(5).unwrap();
        for e in SimpleGraph::complete(5).unwrap().edges() {
            g = g.subdivide_edge(e.u, e.v).unwrap();
        }
        let k5 = SimpleGraph::complete(5).unwrap();
        let m = find_minor(&g, &k5).unwrap().expect("subdivision contains it");
        assert!(verify_model(&g, &k5, &m));
        let s = find_topological_minor(&g, &k5)
            .unwrap()
            .expect("subdivision contains it");
        assert!(verify_subdivision(&g, &k5, &s));
    }

    #[test]
    fn high_degree_pattern_in_low_degree_host() {
        // needs a branch set pooling two degree-3 vertices, so any
        // uncapped degree prefilter would wrongly reject it
        let star = SimpleGraph::complete_bipartite(1, 4).unwrap();
        let m = find_minor(&prism(), &star).unwrap().expect("contract a rung");
        assert!(verify_model(&prism(), &star, &m));
    }

    #[test]
    fn size_rejections() {
        assert!(find_minor(&oct(), &oct1p()).unwrap().is_none());
        let v8 = squared_cycle(8);
        assert!(find_topological_minor(&SimpleGraph::complete_bipartite(3, 3).unwrap(), &v8)
            .unwrap()
            .is_none());
    }

    #[test]
    fn squared_cycle_examples() {
        let m = find_minor(&squared_cycle(8), &oct1p()).unwrap();
        assert!(verify_model(&squared_cycle(8), &oct1p(), &m.unwrap()));
        assert!(find_minor(&squared_cycle(7), &oct()).unwrap().is_none());
        assert!(find_minor(&squared_cycle(6), &oct1p()).unwrap().is_none());
    }

    #[test]
    fn verify_model_rejects_broken_certificates() {
        let g = SimpleGraph::complete(4).unwrap();
        let h = SimpleGraph::complete(3).unwrap();
        assert!(verify_model(&g, &h, &MinorModel::new(vec![0b0011, 0b0100, 0b1000])));
        // overlapping branch sets
        assert!(!verify_model(&g, &h, &MinorModel::new(vec![0b0011, 0b0110, 0b1000])));
        // empty branch set
        assert!(!verify_model(&g, &h, &MinorModel::new(vec![0b0011, 0, 0b1000])));
        // disconnected branch set
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h2 = SimpleGraph::complete(2).unwrap();
        assert!(!verify_model(&p4, &h2, &MinorModel::new(vec![0b1001, 0b0010])));
        // missing cross edge
        let c4 = SimpleGraph::cycle(4).unwrap();
        let h3 = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(!verify_model(&c4, &h3, &MinorModel::new(vec![0b0001, 0b0100])));
    }

    #[test]
    fn subdivision_needs_matching_degrees() {
        let k4 = SimpleGraph::complete(4).unwrap();
        assert!(find_topological_minor(&SimpleGraph::cycle(6).unwrap(), &k4)
            .unwrap()
            .is_none());
        // prism and K4: same counts both ways, only the minor relation holds
        let m = find_minor(&prism(), &k4).unwrap();
        assert!(m.is_some());
        let s = find_topological_minor(&prism(), &k4).unwrap();
        assert!(s.is_some(), "K4 has max degree 3, so minor implies subdivision");
    }

    #[test]
    fn topological_agrees_with_minor_on_cubic_patterns() {
        let k4 = SimpleGraph::complete(4).unwrap();
        let hosts = [
            prism(),
            SimpleGraph::cycle(7).unwrap(),
            squared_cycle(6),
            SimpleGraph::complete_bipartite(2, 3).unwrap(),
        ];
        for g in &hosts {
            let a = find_minor(g, &k4).unwrap().is_some();
            let b = find_topological_minor(g, &k4).unwrap().is_some();
            assert_eq!(a, b, "disagreement on {:?}", g);
        }
    }

    #[test]
    fn budget_is_an_error_not_a_verdict() {
        let cfg = SearchConfig { max_nodes: 1 };
        let g = squared_cycle(8);
        let r = find_minor_with(&g, &oct1p(), &cfg);
        assert!(matches!(r, Err(Error::BudgetExhausted { limit: 1 })));
    }

    #[test]
    fn planarity_of_reference_graphs() {
        assert!(is_planar(&oct1p()).unwrap());
        assert!(!is_planar(&oct2p()).unwrap());
        assert!(is_planar(&squared_cycle(8)).unwrap());
        assert!(is_planar(&squared_cycle(10)).unwrap());
        assert!(!is_planar(&SimpleGraph::complete(5).unwrap()).unwrap());
        assert!(is_planar(&SimpleGraph::complete(4).unwrap()).unwrap());
        assert!(is_planar(&oct()).unwrap());
        assert!(is_planar(&SimpleGraph::empty(0).unwrap()).unwrap());
    }

    #[test]
    fn planarity_witnesses_validate() {
        let k5 = SimpleGraph::complete(5).unwrap();
        let k33 = SimpleGraph::complete_bipartite(3, 3).unwrap();
        for g in [
            SimpleGraph::complete(6).unwrap(),
            oct2p(),
            k33.clone(),
            SimpleGraph::complete(5).unwrap(),
        ] {
            let w = planarity(&g).unwrap().expect("all are non-planar");
            let h = match w.forbidden {
                Forbidden::K5 => &k5,
                Forbidden::K33 => &k33,
            };
            assert!(verify_model(&g, h, &w.model));
        }
        assert!(planarity(&squared_cycle(8)).unwrap().is_none());
    }

    #[test]
    fn planarity_with_low_degree_padding() {
        // subdividing edges and hanging leaves never changes the verdict
        let mut g = oct2p();
        g = g.subdivide_edge(0, 1).unwrap();
        g = g.subdivide_edge(2, 6).unwrap();
        let n = g.n();
        let mut padded = SimpleGraph::empty(n + 1).unwrap();
        for e in g.edges() {
            padded = padded.with_edge(e.u, e.v).unwrap();
        }
        padded = padded.with_edge(0, n).unwrap();
        assert!(!is_planar(&padded).unwrap());
        let w = planarity(&padded).unwrap().unwrap();
        let h = match w.forbidden {
            Forbidden::K5 => SimpleGraph::complete(5).unwrap(),
            Forbidden::K33 => SimpleGraph::complete_bipartite(3, 3).unwrap(),
        };
        assert!(verify_model(&padded, &h, &w.model));
    }

    #[test]
    fn model_text_block_is_one_line_per_branch_set() {
        let g = SimpleGraph::complete(4).unwrap();
        let h = SimpleGraph::complete(3).unwrap();
        let m = MinorModel::new(vec![0b0011, 0b0100, 0b1000]);
        assert_eq!(format!("{}", m), "0: {0, 1}\n1: {2}\n2: {3}");
        let s = find_topological_minor(&g, &h).unwrap().unwrap();
        let text = format!("{}", s);
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().next().unwrap().starts_with("0-1: "));
    }

    #[test]
    fn empty_pattern_is_always_present() {
        let e = SimpleGraph::empty(0).unwrap();
        let g = SimpleGraph::complete(3).unwrap();
        assert!(find_minor(&g, &e).unwrap().is_some());
        assert!(find_topological_minor(&g, &e).unwrap().is_some());
        assert!(verify_model(&g, &e, &MinorModel::new(vec![])));
    }
}

//! The claim suite behind `verify-paper`. Each claim recomputes one
//! combinatorial fact from scratch and reports pass or fail together with
//! replayable evidence (graph6 strings, branch sets, counts). Claims run
//! on a small worker pool; the report is assembled in declaration order
//! and is byte-identical from run to run.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use minorkit::atlas::{
    build_named, gen_all_graphs, gen_cubic_cyc4, gen_special_3sum_k4_with, KConvention,
};
use minorkit::canon::{canonical_key, is_isomorphic, CanonicalKey};
use minorkit::characterize::{decide_thm14, decide_thm15_with, decide_thm16};
use minorkit::codec::to_graph6;
use minorkit::connectivity::{
    is_cubic, is_k_connected, is_separating_triangle, vertex_connectivity, Triangle,
};
use minorkit::minors::{find_minor_with, planarity, verify_model, MinorModel, SearchConfig};
use minorkit::transforms::{
    apply_split, apply_sum, enumerate_splits, special_3sum_with, SplitArity, SplitSpec, SumSpec,
};
use minorkit::SimpleGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct SuiteOptions {
    pub cfg: SearchConfig,
    pub slow: bool,
    pub only: Option<String>,
    pub timings: bool,
}

pub struct SuiteReport {
    pub text: String,
    pub summary: String,
    pub failures: usize,
}

struct Ctx<'a> {
    cfg: &'a SearchConfig,
}

struct Evidence {
    ok: bool,
    lines: Vec<String>,
}

impl Evidence {
    fn new() -> Self {
        Evidence {
            ok: true,
            lines: Vec::new(),
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn check(&mut self, cond: bool, what: impl Into<String>) {
        let what = what.into();
        if cond {
            self.lines.push(format!("ok: {}", what));
        } else {
            self.ok = false;
            self.lines.push(format!("FAIL: {}", what));
        }
    }

    fn details(&mut self, items: &[String], cap: usize) {
        for line in items.iter().take(cap) {
            self.lines.push(format!("  {}", line));
        }
        if items.len() > cap {
            self.lines.push(format!("  ... and {} more", items.len() - cap));
        }
    }
}

enum Status {
    Pass(Vec<String>),
    Fail(Vec<String>),
    Skipped(String),
}

struct Claim {
    id: &'static str,
    title: &'static str,
    slow: bool,
    run: fn(&Ctx) -> minorkit::Result<Evidence>,
}

fn named(name: &str) -> SimpleGraph {
    build_named(name).expect("atlas name used by the claim suite")
}

fn model_line(model: &MinorModel) -> String {
    let parts: Vec<String> = model
        .branch_sets()
        .iter()
        .enumerate()
        .map(|(hv, set)| {
            let vs: Vec<String> = set.iter().map(usize::to_string).collect();
            format!("{}<-{{{}}}", hv, vs.join(" "))
        })
        .collect();
    format!("branch sets: {}", parts.join(" "))
}

fn check_minor_found(
    ctx: &Ctx,
    ev: &mut Evidence,
    host: &SimpleGraph,
    host_name: &str,
    target: &SimpleGraph,
    target_name: &str,
) -> minorkit::Result<()> {
    match find_minor_with(host, target, ctx.cfg)? {
        Some(model) => {
            ev.check(
                verify_model(host, target, &model),
                format!("{} minor of {} revalidates", target_name, host_name),
            );
            ev.note(format!("  {}", model_line(&model)));
        }
        None => ev.check(false, format!("{} contains {}", host_name, target_name)),
    }
    Ok(())
}

fn check_minor_absent(
    ctx: &Ctx,
    ev: &mut Evidence,
    host: &SimpleGraph,
    host_name: &str,
    target: &SimpleGraph,
    target_name: &str,
) -> minorkit::Result<()> {
    let found = find_minor_with(host, target, ctx.cfg)?;
    ev.check(
        found.is_none(),
        format!("{} has no {} minor (exhaustive)", host_name, target_name),
    );
    Ok(())
}

fn lem31_lk33(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    check_minor_found(ctx, &mut ev, &named("L(K3,3)"), "L(K3,3)", &named("Oct1+"), "Oct1+")?;
    Ok(ev)
}

fn lem31_lcube(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    check_minor_found(ctx, &mut ev, &named("L(Cube)"), "L(Cube)", &named("Oct1+"), "Oct1+")?;
    Ok(ev)
}

fn lem31_c6sq_free(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    check_minor_absent(ctx, &mut ev, &named("C6^2"), "C6^2", &named("Oct1+"), "Oct1+")?;
    Ok(ev)
}

fn lem31_c8sq(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    check_minor_found(ctx, &mut ev, &named("C8^2"), "C8^2", &named("Oct1+"), "Oct1+")?;
    Ok(ev)
}

fn lem31_odd_sq_oct_free(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let oct = named("Oct");
    for name in ["C7^2", "C9^2"] {
        check_minor_absent(ctx, &mut ev, &named(name), name, &oct, "Oct")?;
    }
    Ok(ev)
}

fn thm32_all_splits(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let host = named("C6^2");
    let oct1 = named("Oct1+");
    let classes = enumerate_splits(&host, SplitArity::Four);
    ev.note(format!(
        "{} isomorphism classes of 4-splits of C6^2",
        classes.len()
    ));
    let mut bad = Vec::new();
    for spec in &classes {
        let split = apply_split(&host, spec)?;
        if find_minor_with(&split, &oct1, ctx.cfg)?.is_none() {
            bad.push(format!("{}: no Oct1+ minor", to_graph6(&split)));
        }
    }
    ev.check(bad.is_empty(), "every class contains Oct1+");
    ev.details(&bad, 12);

    let nbrs = host.neighbors(0);
    let mut covers = 0;
    let mut cover_bad = Vec::new();
    for &x in &nbrs {
        for &y in &nbrs {
            if x >= y {
                continue;
            }
            let a: Vec<usize> = nbrs.iter().copied().filter(|&z| z != x).collect();
            let b: Vec<usize> = nbrs.iter().copied().filter(|&z| z != y).collect();
            let split = apply_split(&host, &SplitSpec::from_slices(0, &a, &b, SplitArity::Four))?;
            if find_minor_with(&split, &oct1, ctx.cfg)?.is_none() {
                cover_bad.push(format!("cover without {} and {}: no Oct1+ minor", x, y));
            }
            covers += 1;
        }
    }
    ev.check(
        covers == 6 && cover_bad.is_empty(),
        "all six minimum covers checked individually",
    );
    ev.details(&cover_bad, 6);
    Ok(ev)
}

fn lem33_fig7(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let spec = SumSpec {
        k: 3,
        g1_vertices: vec![0, 1, 2],
        g2_vertices: vec![0, 1, 2],
        delete_common: vec![(0, 1), (0, 2), (1, 2)],
    };
    let joined = apply_sum(&named("K5"), &named("K4"), &spec)?;
    ev.note(format!("K5 +3 K4, all shared edges deleted: {}", to_graph6(&joined)));
    match planarity(&joined)? {
        Some(w) => {
            ev.check(true, format!("non-planar, {} minor found", w.forbidden));
            ev.note(format!("  {}", model_line(&w.model)));
        }
        None => ev.check(false, "non-planar"),
    }
    Ok(ev)
}

fn sum_pools() -> (Vec<SimpleGraph>, Vec<SimpleGraph>) {
    let planar = ["K4", "W4", "W5", "Prism", "Cube", "Oct", "L5", "Oct1+", "C8^2"]
        .iter()
        .map(|n| named(n))
        .collect();
    let nonplanar = ["K5", "K3,3", "Oct+", "Oct2+", "V8", "L(V8)", "K5^t", "C7^2"]
        .iter()
        .map(|n| named(n))
        .collect();
    (planar, nonplanar)
}

fn random_clique_spec(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    k: usize,
    rng: &mut ChaCha8Rng,
) -> SumSpec {
    let side = |g: &SimpleGraph, rng: &mut ChaCha8Rng| match k {
        0 => Vec::new(),
        1 => vec![rng.gen_range(0..g.n())],
        2 => {
            let edges = g.edges();
            let e = edges[rng.gen_range(0..edges.len())];
            vec![e.u, e.v]
        }
        _ => {
            let ts = g.triangles();
            let (a, b, c) = ts[rng.gen_range(0..ts.len())];
            vec![a, b, c]
        }
    };
    let s1 = side(g1, rng);
    let s2 = side(g2, rng);
    let mut spec = SumSpec::gluing(&s1, &s2);
    for i in 0..s1.len() {
        for j in i + 1..s1.len() {
            if rng.gen_bool(0.5) {
                spec.delete_common.push((s1[i], s1[j]));
            }
        }
    }
    spec
}

fn lem33_sum_nonplanar(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x33);
    let (planar_pool, nonplanar_pool) = sum_pools();
    let mixed: Vec<&SimpleGraph> = planar_pool.iter().chain(nonplanar_pool.iter()).collect();
    let mut bad = Vec::new();
    for _ in 0..60 {
        let k = rng.gen_range(1..=3usize);
        let fits = |g: &SimpleGraph| {
            is_k_connected(g, k).unwrap_or(false) && (k < 3 || !g.triangles().is_empty())
        };
        let side1: Vec<&SimpleGraph> = nonplanar_pool.iter().filter(|g| fits(g)).collect();
        let side2: Vec<&SimpleGraph> = mixed.iter().copied().filter(|g| fits(g)).collect();
        let g1 = side1[rng.gen_range(0..side1.len())];
        let g2 = side2[rng.gen_range(0..side2.len())];
        let spec = random_clique_spec(g1, g2, k, &mut rng);
        let joined = apply_sum(g1, g2, &spec)?;
        if planarity(&joined)?.is_none() {
            bad.push(format!(
                "{}-sum of {} and {} is planar",
                k,
                to_graph6(g1),
                to_graph6(g2)
            ));
        }
    }
    ev.check(
        bad.is_empty(),
        "60 random k-sums with a non-planar k-connected summand all non-planar",
    );
    ev.details(&bad, 8);
    Ok(ev)
}

fn lem34_sums_planar(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x34);
    let (planar_pool, _) = sum_pools();
    let mut bad = Vec::new();
    for _ in 0..60 {
        let k = rng.gen_range(0..=2usize);
        let g1 = &planar_pool[rng.gen_range(0..planar_pool.len())];
        let g2 = loop {
            let g2 = &planar_pool[rng.gen_range(0..planar_pool.len())];
            // Keep the host small enough that proving the absence of both
            // forbidden minors stays well inside the search budget.
            if g1.n() + g2.n() <= 14 {
                break g2;
            }
        };
        let spec = random_clique_spec(g1, g2, k, &mut rng);
        let joined = apply_sum(g1, g2, &spec)?;
        if planarity(&joined)?.is_some() {
            bad.push(format!(
                "{}-sum of {} and {} is non-planar",
                k,
                to_graph6(g1),
                to_graph6(g2)
            ));
        }
    }
    ev.check(
        bad.is_empty(),
        "60 random 0/1/2-sums of planar graphs all planar",
    );
    ev.details(&bad, 8);
    Ok(ev)
}

fn non_separating_triangles(g: &SimpleGraph) -> Vec<(usize, usize, usize)> {
    g.triangles()
        .into_iter()
        .filter(|&(a, b, c)| {
            let t = Triangle::new(g, a, b, c).expect("listed triangle");
            !is_separating_triangle(g, &t).expect("triangle in range")
        })
        .collect()
}

fn lem35_special_3sum(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x35);
    let pool: Vec<SimpleGraph> = ["K4", "W4", "W5", "Prism", "Oct", "Oct1+"]
        .iter()
        .map(|n| named(n))
        .filter(|g| !non_separating_triangles(g).is_empty())
        .collect();
    let mut bad = Vec::new();
    for _ in 0..40 {
        let g1 = &pool[rng.gen_range(0..pool.len())];
        let g2 = &pool[rng.gen_range(0..pool.len())];
        let ts1 = non_separating_triangles(g1);
        let ts2 = non_separating_triangles(g2);
        let (a1, b1, c1) = ts1[rng.gen_range(0..ts1.len())];
        let (a2, b2, c2) = ts2[rng.gen_range(0..ts2.len())];
        let t1 = Triangle::new(g1, a1, b1, c1)?;
        let t2 = Triangle::new(g2, a2, b2, c2)?;
        let mut deletions = Vec::new();
        for (u, v) in [(a1, b1), (a1, c1), (b1, c1)] {
            if rng.gen_bool(0.5) {
                deletions.push((u, v));
            }
        }
        let joined = special_3sum_with(g1, &t1, g2, &t2, &deletions)?;
        if planarity(&joined)?.is_some() {
            bad.push(format!(
                "sum of {} and {} is non-planar",
                to_graph6(g1),
                to_graph6(g2)
            ));
        }
    }
    ev.check(
        bad.is_empty(),
        "40 random triangle sums of 3-connected planar graphs all planar",
    );
    ev.details(&bad, 8);

    let k5 = named("K5");
    let k4 = named("K4");
    let ts = non_separating_triangles(&k5);
    let (a, b, c) = ts[0];
    let t1 = Triangle::new(&k5, a, b, c)?;
    let t2 = Triangle::new(&k4, 0, 1, 2)?;
    let joined = special_3sum_with(&k5, &t1, &k4, &t2, &[])?;
    ev.check(
        planarity(&joined)?.is_some(),
        "a non-planar summand keeps the triangle sum non-planar",
    );
    Ok(ev)
}

fn thm15_case1_oct_extensions(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let oct = named("Oct");
    let oct1 = named("Oct1+");
    let mut additions = 0;
    let mut planar_additions = Vec::new();
    for u in 0..oct.n() {
        for v in u + 1..oct.n() {
            if oct.has_edge(u, v) {
                continue;
            }
            additions += 1;
            if planarity(&oct.with_edge(u, v)?)?.is_none() {
                planar_additions.push(format!("+{}-{} stayed planar", u, v));
            }
        }
    }
    ev.check(
        additions == 3 && planar_additions.is_empty(),
        "all 3 single-edge additions to Oct are non-planar",
    );
    ev.details(&planar_additions, 3);

    let splits = enumerate_splits(&oct, SplitArity::Three);
    ev.check(splits.len() == 2, format!("3-splits form {} classes", splits.len()));
    let planar_splits: Vec<SimpleGraph> = splits
        .iter()
        .map(|s| apply_split(&oct, s).expect("validated split"))
        .filter(|g| planarity(g).map(|w| w.is_none()).unwrap_or(false))
        .collect();
    ev.check(planar_splits.len() == 1, "exactly one split class is planar");
    if let [only] = planar_splits.as_slice() {
        ev.check(is_isomorphic(only, &oct1), "the planar class is Oct1+");
        ev.note(format!("  planar class: {}", to_graph6(only)));
    }
    Ok(ev)
}

fn lem36_squared_cycle_parity(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    for n in 6..=11usize {
        let g = named(&format!("C{}^2", n));
        let planar = planarity(&g)?.is_none();
        ev.check(
            planar == (n % 2 == 0),
            format!("C{}^2 {}", n, if n % 2 == 0 { "planar" } else { "non-planar" }),
        );
    }
    Ok(ev)
}

fn first_contraction_class() -> (SimpleGraph, usize) {
    let host = named("L(K3,3)");
    let mut keys: std::collections::BTreeMap<CanonicalKey, SimpleGraph> = Default::default();
    for e in host.edges() {
        let c = host.contract_edge(e.u, e.v).expect("edge of the host");
        keys.entry(canonical_key(&c)).or_insert(c);
    }
    let count = keys.len();
    let rep = keys.into_values().next().expect("host has edges");
    (rep, count)
}

fn lem37_contract_once(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let (rep, classes) = first_contraction_class();
    ev.check(classes == 1, format!("first contractions form {} class", classes));
    ev.check(
        rep.n() == 8 && rep.edge_count() == 16,
        format!("representative has {} vertices, {} edges", rep.n(), rep.edge_count()),
    );
    ev.note(format!("  representative: {}", to_graph6(&rep)));
    Ok(ev)
}

fn second_contraction_classes() -> Vec<SimpleGraph> {
    let (rep, _) = first_contraction_class();
    let mut keys: std::collections::BTreeMap<CanonicalKey, SimpleGraph> = Default::default();
    for e in rep.edges() {
        let c = rep.contract_edge(e.u, e.v).expect("edge of the representative");
        keys.entry(canonical_key(&c)).or_insert(c);
    }
    keys.into_values().collect()
}

fn lem37_six_classes(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let classes = second_contraction_classes();
    ev.check(classes.len() == 6, format!("{} second-contraction classes", classes.len()));
    let mut counts: Vec<usize> = classes.iter().map(SimpleGraph::edge_count).collect();
    counts.sort_unstable();
    ev.check(
        counts == [13, 13, 14, 14, 14, 15],
        format!("edge multiset {:?}", counts),
    );
    for g in &classes {
        ev.note(format!("  {} ({} edges)", to_graph6(g), g.edge_count()));
    }
    Ok(ev)
}

fn lem37_oct2p_free(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let oct2 = named("Oct2+");
    for g in second_contraction_classes() {
        check_minor_absent(ctx, &mut ev, &g, &to_graph6(&g), &oct2, "Oct2+")?;
    }
    check_minor_absent(ctx, &mut ev, &named("L(K3,3)"), "L(K3,3)", &oct2, "Oct2+")?;
    Ok(ev)
}

fn lem37_lv8(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    check_minor_found(ctx, &mut ev, &named("L(V8)"), "L(V8)", &named("Oct2+"), "Oct2+")?;
    Ok(ev)
}

fn fig1_planarity(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let expected = [
        ("L4'", false),
        ("L5", true),
        ("L5'", false),
        ("L5''", false),
        ("P10", false),
    ];
    for (name, planar) in expected {
        let g = named(name);
        ev.check(is_cubic(&g), format!("{} cubic", name));
        ev.check(is_k_connected(&g, 3)?, format!("{} 3-connected", name));
        ev.check(
            (planarity(&g)?.is_none()) == planar,
            format!("{} {}", name, if planar { "planar" } else { "non-planar" }),
        );
    }
    ev.check(is_isomorphic(&named("L4'"), &named("V8")), "L4' is V8");
    Ok(ev)
}

fn thm15_samples(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x15);
    let oct1 = named("Oct1+");

    let mut pieces: Vec<SimpleGraph> = ["K1", "K2", "K3", "Oct"]
        .iter()
        .map(|n| named(n))
        .collect();
    for key in gen_special_3sum_k4_with(7, KConvention::AllowDeletions)?.keys() {
        pieces.push(key.graph());
    }

    let mut samples: Vec<SimpleGraph> = vec![named("W4"), named("C8^2"), named("L5"), named("Oct")];
    for _ in 0..40 {
        let mut g = pieces[rng.gen_range(0..pieces.len())].clone();
        let extra = rng.gen_range(1..=2usize);
        for _ in 0..extra {
            let p = &pieces[rng.gen_range(0..pieces.len())];
            let k_max = if g.edge_count() > 0 && p.edge_count() > 0 { 2 } else { 1 };
            let k = rng.gen_range(0..=k_max.min(g.n().min(p.n())));
            // Small hosts keep the exhaustive minor-absence proofs fast.
            if g.n() + p.n() - k > 12 {
                continue;
            }
            let spec = random_clique_spec(&g, p, k, &mut rng);
            g = apply_sum(&g, p, &spec)?;
        }
        samples.push(g);
    }

    let mut keep_mismatches = Vec::new();
    let mut deletion_mismatches = Vec::new();
    let mut planar_samples = 0;
    for g in &samples {
        if planarity(g)?.is_some() {
            continue;
        }
        planar_samples += 1;
        let free = find_minor_with(g, &oct1, ctx.cfg)?.is_none();
        let keep = decide_thm15_with(g, KConvention::KeepCommonEdges)?.member;
        let del = decide_thm15_with(g, KConvention::AllowDeletions)?.member;
        if keep != free {
            keep_mismatches.push(format!(
                "{}: verdict {} vs Oct1+-free {}",
                to_graph6(g),
                keep,
                free
            ));
        }
        if del != free {
            deletion_mismatches.push(format!(
                "{}: verdict {} vs Oct1+-free {}",
                to_graph6(g),
                del,
                free
            ));
        }
    }
    ev.note(format!("{} planar samples compared", planar_samples));
    ev.check(
        deletion_mismatches.is_empty(),
        "deletion-allowed stacking matches the minor oracle on every sample",
    );
    ev.details(&deletion_mismatches, 8);
    if keep_mismatches.is_empty() {
        ev.note("note: edge-keeping stacking also matched on every sample");
    } else {
        ev.note(format!(
            "note: edge-keeping stacking mismatches on {} samples; the sums here need shared-edge deletions",
            keep_mismatches.len()
        ));
        for line in keep_mismatches.iter().take(4) {
            ev.note(format!("  {}", line));
        }
    }
    Ok(ev)
}

fn gen_4split_sound(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x77);
    let start = named("C5^2");
    let oct1 = named("Oct1+");
    let oct2 = named("Oct2+");
    let mut violations = Vec::new();
    for _ in 0..100 {
        let steps = rng.gen_range(1..=3usize);
        let mut g = start.clone();
        for _ in 0..steps {
            let specs = enumerate_splits(&g, SplitArity::Four);
            if specs.is_empty() {
                break;
            }
            g = apply_split(&g, &specs[rng.gen_range(0..specs.len())])?;
        }
        let conn = vertex_connectivity(&g)?.0;
        if conn < 4 {
            violations.push(format!("{}: connectivity {}", to_graph6(&g), conn));
            continue;
        }
        if find_minor_with(&g, &oct1, ctx.cfg)?.is_some() {
            violations.push(format!("{}: contains Oct1+", to_graph6(&g)));
        }
        if find_minor_with(&g, &oct2, ctx.cfg)?.is_some() {
            violations.push(format!("{}: contains Oct2+", to_graph6(&g)));
        }
    }
    ev.check(
        violations.is_empty(),
        "100 random 4-split walks from C5^2 stay 4-connected and minor-free",
    );
    ev.details(&violations, 10);
    Ok(ev)
}

fn gen_kcat_sound(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let catalog = gen_special_3sum_k4_with(10, KConvention::KeepCommonEdges)?;
    let oct1 = named("Oct1+");
    ev.note(format!("{} catalog members up to 10 vertices", catalog.len()));
    let mut bad = Vec::new();
    for key in catalog.keys() {
        let g = key.graph();
        if planarity(&g)?.is_some() {
            bad.push(format!("{}: non-planar", key.to_graph6()));
        }
        if !is_k_connected(&g, 3)? {
            bad.push(format!("{}: not 3-connected", key.to_graph6()));
        }
        if find_minor_with(&g, &oct1, ctx.cfg)?.is_some() {
            bad.push(format!("{}: contains Oct1+", key.to_graph6()));
        }
    }
    ev.check(bad.is_empty(), "every member planar, 3-connected, Oct1+-free");
    ev.details(&bad, 10);
    Ok(ev)
}

fn gen_line_handle(ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let catalog = gen_cubic_cyc4(2)?;
    let oct1 = named("Oct1+");
    ev.note(format!("{} cubic roots within two handle steps", catalog.len()));
    let mut bad = Vec::new();
    for key in catalog.keys() {
        let lg = key.graph().line_graph()?;
        if find_minor_with(&lg, &oct1, ctx.cfg)?.is_none() {
            bad.push(format!("L({}): no Oct1+ minor", key.to_graph6()));
        }
    }
    ev.check(bad.is_empty(), "every line graph contains Oct1+");
    ev.details(&bad, 10);
    Ok(ev)
}

fn sanity_identities(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    ev.check(is_isomorphic(&named("C5^2"), &named("K5")), "C5^2 is K5");
    ev.check(is_isomorphic(&named("C6^2"), &named("Oct")), "C6^2 is Oct");
    let k6_minus_two = named("K6").delete_edge(0, 1)?.delete_edge(2, 3)?;
    ev.check(
        is_isomorphic(&named("Oct+"), &k6_minus_two),
        "Oct+ is K6 minus two independent edges",
    );

    let mut rng = ChaCha8Rng::seed_from_u64(0x88);
    let prepared: Vec<(SimpleGraph, Vec<SplitSpec>)> = [
        ("Oct", SplitArity::Three),
        ("K5", SplitArity::Three),
        ("K6", SplitArity::Three),
        ("Oct+", SplitArity::Three),
        ("C7^2", SplitArity::Three),
        ("C8^2", SplitArity::Three),
        ("C5^2", SplitArity::Four),
        ("K6", SplitArity::Four),
        ("C6^2", SplitArity::Four),
        ("C7^2", SplitArity::Four),
        ("Oct+", SplitArity::Four),
        ("K7", SplitArity::Four),
    ]
    .iter()
    .map(|(name, arity)| {
        let g = named(name);
        let specs = enumerate_splits(&g, *arity);
        (g, specs)
    })
    .filter(|(_, specs)| !specs.is_empty())
    .collect();
    let mut bad = 0;
    for _ in 0..500 {
        let (g, specs) = &prepared[rng.gen_range(0..prepared.len())];
        let spec = specs[rng.gen_range(0..specs.len())];
        let split = apply_split(g, &spec)?;
        let back = split.contract_edge(spec.v, g.n())?;
        if &back != g {
            bad += 1;
        }
    }
    ev.check(
        bad == 0,
        "500 split/contract round trips restore the input exactly",
    );
    Ok(ev)
}

fn four_connected_census(n: usize) -> minorkit::Result<Vec<SimpleGraph>> {
    let catalog = gen_all_graphs(n, |g| g.min_degree() >= 4)?;
    let mut out = Vec::new();
    for key in catalog.keys() {
        let g = key.graph();
        if is_k_connected(&g, 4)? {
            out.push(g);
        }
    }
    Ok(out)
}

fn census_check(
    ctx: &Ctx,
    ns: &[usize],
    target_name: &str,
    decide: fn(&SimpleGraph) -> minorkit::Result<bool>,
) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    let target = named(target_name);
    let mut total = 0;
    let mut mismatches = Vec::new();
    for &n in ns {
        let graphs = four_connected_census(n)?;
        ev.note(format!("{} 4-connected graphs on {} vertices", graphs.len(), n));
        for g in graphs {
            total += 1;
            let free = find_minor_with(&g, &target, ctx.cfg)?.is_none();
            let member = decide(&g)?;
            if member != free {
                mismatches.push(format!(
                    "{}: verdict {} vs {}-free {}",
                    to_graph6(&g),
                    member,
                    target_name,
                    free
                ));
            }
        }
    }
    ev.check(
        mismatches.is_empty(),
        format!("zero mismatches across {} graphs", total),
    );
    ev.details(&mismatches, 12);
    Ok(ev)
}

fn member14(g: &SimpleGraph) -> minorkit::Result<bool> {
    Ok(decide_thm14(g)?.member)
}

fn member16(g: &SimpleGraph) -> minorkit::Result<bool> {
    Ok(decide_thm16(g)?.member)
}

fn census7_thm14(ctx: &Ctx) -> minorkit::Result<Evidence> {
    census_check(ctx, &[5, 6, 7], "Oct1+", member14)
}

fn census7_thm16(ctx: &Ctx) -> minorkit::Result<Evidence> {
    census_check(ctx, &[5, 6, 7], "Oct2+", member16)
}

fn census8_thm14(ctx: &Ctx) -> minorkit::Result<Evidence> {
    census_check(ctx, &[8], "Oct1+", member14)
}

fn census8_thm16(ctx: &Ctx) -> minorkit::Result<Evidence> {
    census_check(ctx, &[8], "Oct2+", member16)
}

fn count_13edge_3conn(_ctx: &Ctx) -> minorkit::Result<Evidence> {
    let mut ev = Evidence::new();
    // Minimum degree 3 with 13 edges forces 6 <= n <= 8.
    let mut total = 0;
    for n in 6..=8usize {
        let catalog = gen_all_graphs(n, |g| g.edge_count() == 13 && g.min_degree() >= 3)?;
        let mut here = 0;
        for key in catalog.keys() {
            if is_k_connected(&key.graph(), 3)? {
                here += 1;
            }
        }
        ev.note(format!("{} classes on {} vertices", here, n));
        total += here;
    }
    ev.check(total == 51, format!("total {} classes with 13 edges", total));
    Ok(ev)
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "LEM-3.1-LK33-OCT1P",
        title: "L(K3,3) contains Oct1+",
        slow: false,
        run: lem31_lk33,
    },
    Claim {
        id: "LEM-3.1-LCUBE-OCT1P",
        title: "L(Cube) contains Oct1+",
        slow: false,
        run: lem31_lcube,
    },
    Claim {
        id: "LEM-3.1-C6SQ-FREE",
        title: "C6^2 has no Oct1+ minor",
        slow: false,
        run: lem31_c6sq_free,
    },
    Claim {
        id: "LEM-3.1-C8SQ-OCT1P",
        title: "C8^2 contains Oct1+",
        slow: false,
        run: lem31_c8sq,
    },
    Claim {
        id: "LEM-3.1-ODD-SQ-OCT-FREE",
        title: "C7^2 and C9^2 have no Oct minor",
        slow: false,
        run: lem31_odd_sq_oct_free,
    },
    Claim {
        id: "THM-3.2-ALL-SPLITS",
        title: "every 4-split class of C6^2 contains Oct1+",
        slow: false,
        run: thm32_all_splits,
    },
    Claim {
        id: "LEM-3.3-FIG7-K5K4",
        title: "K5 and K4 summed on a triangle with all shared edges deleted is non-planar",
        slow: false,
        run: lem33_fig7,
    },
    Claim {
        id: "LEM-3.3-SUM-NONPLANAR",
        title: "k-sums with a non-planar k-connected summand stay non-planar",
        slow: false,
        run: lem33_sum_nonplanar,
    },
    Claim {
        id: "LEM-3.4-SUMS-PLANAR",
        title: "0/1/2-sums of planar graphs stay planar",
        slow: false,
        run: lem34_sums_planar,
    },
    Claim {
        id: "LEM-3.5-SPECIAL-3SUM",
        title: "triangle sums over non-separating triangles preserve planarity",
        slow: false,
        run: lem35_special_3sum,
    },
    Claim {
        id: "THM-1.5-CASE1-OCT-EXTENSIONS",
        title: "octahedron extensions: edge additions non-planar, one planar 3-split class",
        slow: false,
        run: thm15_case1_oct_extensions,
    },
    Claim {
        id: "LEM-3.6-EVEN-SQ-PLANAR",
        title: "even squared cycles are planar, odd ones are not (n = 6..11)",
        slow: false,
        run: lem36_squared_cycle_parity,
    },
    Claim {
        id: "LEM-3.7-CONTRACT-ONCE",
        title: "first contractions of L(K3,3) form one 8-vertex 16-edge class",
        slow: false,
        run: lem37_contract_once,
    },
    Claim {
        id: "LEM-3.7-SIX-CLASSES",
        title: "second contractions form six classes with edge counts 13,13,14,14,14,15",
        slow: false,
        run: lem37_six_classes,
    },
    Claim {
        id: "LEM-3.7-OCT2P-FREE",
        title: "L(K3,3) and each double-contraction class have no Oct2+ minor",
        slow: false,
        run: lem37_oct2p_free,
    },
    Claim {
        id: "LEM-3.7-LV8-OCT2P",
        title: "L(V8) contains Oct2+",
        slow: false,
        run: lem37_lv8,
    },
    Claim {
        id: "FIG1-PLANARITY",
        title: "the sporadic cubic graphs have the advertised planarity",
        slow: false,
        run: fig1_planarity,
    },
    Claim {
        id: "THM-1.5-SAMPLES",
        title: "decide_thm15 agrees with the minor oracle on sampled sums",
        slow: false,
        run: thm15_samples,
    },
    Claim {
        id: "GEN-4SPLIT-SOUND",
        title: "random 4-split walks from C5^2 stay 4-connected and minor-free",
        slow: false,
        run: gen_4split_sound,
    },
    Claim {
        id: "GEN-KCAT-SOUND",
        title: "triangle-stack catalog members are planar, 3-connected, Oct1+-free",
        slow: false,
        run: gen_kcat_sound,
    },
    Claim {
        id: "GEN-LINE-HANDLE-OCT1P",
        title: "line graphs of the two-step handle closure contain Oct1+",
        slow: false,
        run: gen_line_handle,
    },
    Claim {
        id: "SANITY-IDENTITIES",
        title: "atlas identities and split/contract round trips",
        slow: false,
        run: sanity_identities,
    },
    Claim {
        id: "CENSUS-7-THM14",
        title: "decide_thm14 matches Oct1+-freeness on the 4-connected census (n <= 7)",
        slow: false,
        run: census7_thm14,
    },
    Claim {
        id: "CENSUS-7-THM16",
        title: "decide_thm16 matches Oct2+-freeness on the 4-connected census (n <= 7)",
        slow: false,
        run: census7_thm16,
    },
    Claim {
        id: "CENSUS-8-THM14",
        title: "decide_thm14 matches Oct1+-freeness on the 8-vertex census",
        slow: true,
        run: census8_thm14,
    },
    Claim {
        id: "CENSUS-8-THM16",
        title: "decide_thm16 matches Oct2+-freeness on the 8-vertex census",
        slow: true,
        run: census8_thm16,
    },
    Claim {
        id: "COUNT-13EDGE-3CONN",
        title: "exactly 51 isomorphism classes of 3-connected graphs have 13 edges",
        slow: true,
        run: count_13edge_3conn,
    },
];

pub fn run_suite(opts: &SuiteOptions) -> Result<SuiteReport, String> {
    let filter = opts.only.as_ref().map(|f| f.to_lowercase());
    let selected: Vec<&Claim> = CLAIMS
        .iter()
        .filter(|c| match &filter {
            Some(f) => c.id.to_lowercase().contains(f),
            None => true,
        })
        .collect();
    if selected.is_empty() {
        return Err(format!(
            "no claim id contains {:?}; try `verify-paper` without --only",
            opts.only.as_deref().unwrap_or("")
        ));
    }

    let ctx = Ctx { cfg: &opts.cfg };
    let results: Vec<Mutex<Option<(Status, u128)>>> =
        selected.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(selected.len());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= selected.len() {
                    break;
                }
                let claim = selected[i];
                let started = Instant::now();
                let status = if claim.slow && !opts.slow {
                    Status::Skipped("requires --slow".to_string())
                } else {
                    match (claim.run)(&ctx) {
                        Ok(ev) if ev.ok => Status::Pass(ev.lines),
                        Ok(ev) => Status::Fail(ev.lines),
                        Err(e) => Status::Fail(vec![format!("error: {}", e)]),
                    }
                };
                *results[i].lock().unwrap() = Some((status, started.elapsed().as_millis()));
            });
        }
    });

    let mut text = String::new();
    let mut summary = String::new();
    let (mut passes, mut failures, mut skips) = (0usize, 0usize, 0usize);
    for (claim, slot) in selected.iter().zip(&results) {
        let (status, millis) = slot.lock().unwrap().take().expect("claim ran");
        if opts.timings {
            eprintln!("{} {}ms", claim.id, millis);
        }
        text.push_str(&format!("claim {}\n", claim.id));
        text.push_str(&format!("  title: {}\n", claim.title));
        let label = match &status {
            Status::Pass(_) => {
                passes += 1;
                "pass".to_string()
            }
            Status::Fail(_) => {
                failures += 1;
                "FAIL".to_string()
            }
            Status::Skipped(reason) => {
                skips += 1;
                format!("skipped ({})", reason)
            }
        };
        text.push_str(&format!("  status: {}\n", label));
        if let Status::Pass(lines) | Status::Fail(lines) = &status {
            for line in lines {
                text.push_str(&format!("    {}\n", line));
            }
        }
        text.push('\n');
        let short = match &status {
            Status::Pass(_) => "pass",
            Status::Fail(_) => "fail",
            Status::Skipped(_) => "skipped",
        };
        summary.push_str(&format!("{}\t{}\n", claim.id, short));
    }
    text.push_str(&format!(
        "{} claims: {} pass, {} fail, {} skipped\n",
        selected.len(),
        passes,
        failures,
        skips
    ));
    Ok(SuiteReport {
        text,
        summary,
        failures,
    })
}

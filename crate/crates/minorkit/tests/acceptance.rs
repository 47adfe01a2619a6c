//! End-to-end acceptance suite. Each test pins one verification target:
//! the contraction case analysis, the minor witness table, split and sum
//! laws, the generator catalogs, and the census-level equivalence between
//! the structural deciders and direct minor search.
//!
//! Two tests fail by design and carry explicit witnesses in their failure
//! messages: the census equivalence and the random-split-walk soundness
//! check. Seven-vertex graphs reachable by repeated 4-splits from C5^2
//! (K7 among them) contain both Oct1+ and Oct2+ as minors, so the chain
//! side of the characterizations accepts graphs the minor side rejects.
//! The companion tests document the witnesses and stay green. See the
//! README for the full argument.

mod common;

use std::collections::BTreeMap;

use common::named;
use minorkit::atlas::{gen_all_graphs, gen_cubic_cyc4, gen_special_3sum_k4};
use minorkit::canon::{canonical_key, is_isomorphic, CanonicalKey};
use minorkit::characterize::{decide_thm14, decide_thm16};
use minorkit::codec::to_graph6;
use minorkit::connectivity::{is_k_connected, vertex_connectivity, Triangle};
use minorkit::minors::{find_minor, is_planar, verify_model};
use minorkit::transforms::{
    apply_split, apply_sum, special_3sum_with, enumerate_splits, SplitArity, SplitSpec, SumSpec,
};
use minorkit::SimpleGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn double_contractions_of_line_of_k33_exclude_oct2_plus() {
    let host = named("L(K3,3)");
    let oct2 = named("Oct2+");

    let mut firsts: BTreeMap<CanonicalKey, SimpleGraph> = BTreeMap::new();
    for e in host.edges() {
        let contracted = host.contract_edge(e.u, e.v).unwrap();
        assert_eq!(
            (contracted.n(), contracted.edge_count()),
            (8, 16),
            "contracting {} of L(K3,3)",
            e
        );
        firsts
            .entry(canonical_key(&contracted))
            .or_insert(contracted);
    }
    assert_eq!(firsts.len(), 1, "all first contractions are isomorphic");

    let mut seconds: BTreeMap<CanonicalKey, SimpleGraph> = BTreeMap::new();
    for g in firsts.values() {
        for e in g.edges() {
            let contracted = g.contract_edge(e.u, e.v).unwrap();
            seconds
                .entry(canonical_key(&contracted))
                .or_insert(contracted);
        }
    }
    assert_eq!(seconds.len(), 6, "second contractions form six classes");
    let mut edge_counts: Vec<usize> = seconds.values().map(|g| g.edge_count()).collect();
    edge_counts.sort_unstable();
    assert_eq!(edge_counts, [13, 13, 14, 14, 14, 15]);

    for g in seconds.values() {
        assert!(
            find_minor(g, &oct2).unwrap().is_none(),
            "double contraction {} should have no Oct2+ minor",
            to_graph6(g)
        );
    }
    assert!(
        find_minor(&host, &oct2).unwrap().is_none(),
        "L(K3,3) should have no Oct2+ minor"
    );
}

#[test]
fn minor_witness_table_for_named_graphs() {
    let table = [
        ("L(K3,3)", "Oct1+", true),
        ("L(Cube)", "Oct1+", true),
        ("L(V8)", "Oct2+", true),
        ("C8^2", "Oct1+", true),
        ("C6^2", "Oct1+", false),
        ("C7^2", "Oct", false),
        ("C9^2", "Oct", false),
    ];
    for (host_name, target_name, expect) in table {
        let host = named(host_name);
        let target = named(target_name);
        let found = find_minor(&host, &target).unwrap();
        assert_eq!(
            found.is_some(),
            expect,
            "search for {} inside {}",
            target_name,
            host_name
        );
        if let Some(model) = found {
            assert!(
                verify_model(&host, &target, &model),
                "witness for {} inside {} fails validation",
                target_name,
                host_name
            );
        }
    }
}

#[test]
fn every_four_split_of_squared_six_cycle_contains_oct1_plus() {
    let oct = named("C6^2");
    let oct1 = named("Oct1+");

    let classes = enumerate_splits(&oct, SplitArity::Four);
    assert!(!classes.is_empty());
    for spec in &classes {
        let split = apply_split(&oct, spec).unwrap();
        let model = find_minor(&split, &oct1)
            .unwrap()
            .unwrap_or_else(|| panic!("4-split {} has no Oct1+ minor", to_graph6(&split)));
        assert!(verify_model(&split, &oct1, &model));
    }

    // Minimum covers pair two 3-subsets of the (4-element) neighborhood,
    // so up to swapping sides they are exactly the choices of two distinct
    // left-out neighbors. Check each such split directly rather than one
    // representative per result class.
    let nbrs = oct.neighbors(0);
    assert_eq!(nbrs, [1, 2, 4, 5]);
    let mut checked = 0;
    for &x in &nbrs {
        for &y in &nbrs {
            if x >= y {
                continue;
            }
            let a: Vec<usize> = nbrs.iter().copied().filter(|&z| z != x).collect();
            let b: Vec<usize> = nbrs.iter().copied().filter(|&z| z != y).collect();
            let spec = SplitSpec::from_slices(0, &a, &b, SplitArity::Four);
            let split = apply_split(&oct, &spec).unwrap();
            assert!(
                find_minor(&split, &oct1).unwrap().is_some(),
                "minimum-cover split leaving out {} and {} has no Oct1+ minor",
                x,
                y
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 6);
}

#[test]
fn octahedron_edge_additions_and_three_splits() {
    let oct = named("Oct");
    let oct1 = named("Oct1+");

    let mut additions = 0;
    for u in 0..oct.n() {
        for v in u + 1..oct.n() {
            if oct.has_edge(u, v) {
                continue;
            }
            assert!(
                !is_planar(&oct.with_edge(u, v).unwrap()).unwrap(),
                "adding {}-{} to the octahedron must break planarity",
                u,
                v
            );
            additions += 1;
        }
    }
    assert_eq!(additions, 3);

    let splits = enumerate_splits(&oct, SplitArity::Three);
    assert_eq!(splits.len(), 2, "3-splits of the octahedron form two classes");
    let planar_ones: Vec<SimpleGraph> = splits
        .iter()
        .map(|s| apply_split(&oct, s).unwrap())
        .filter(|g| is_planar(g).unwrap())
        .collect();
    assert_eq!(planar_ones.len(), 1, "exactly one split class is planar");
    assert!(is_isomorphic(&planar_ones[0], &oct1));
}

fn four_connected_census(n: usize) -> Vec<SimpleGraph> {
    gen_all_graphs(n, |g| g.min_degree() >= 4)
        .unwrap()
        .keys()
        .map(|k| k.graph())
        .filter(|g| is_k_connected(g, 4).unwrap())
        .collect()
}

fn census_decider_mismatches(ns: &[usize]) -> Vec<String> {
    let oct1 = named("Oct1+");
    let oct2 = named("Oct2+");
    let mut mismatches = Vec::new();
    for &n in ns {
        for g in four_connected_census(n) {
            let free1 = find_minor(&g, &oct1).unwrap().is_none();
            let free2 = find_minor(&g, &oct2).unwrap().is_none();
            let member14 = decide_thm14(&g).unwrap().member;
            let member16 = decide_thm16(&g).unwrap().member;
            if member14 != free1 {
                mismatches.push(format!(
                    "{}: decide_thm14 says {}, Oct1+-freeness is {}",
                    to_graph6(&g),
                    member14,
                    free1
                ));
            }
            if member16 != free2 {
                mismatches.push(format!(
                    "{}: decide_thm16 says {}, Oct2+-freeness is {}",
                    to_graph6(&g),
                    member16,
                    free2
                ));
            }
        }
    }
    mismatches
}

#[test]
fn deciders_match_minor_search_on_four_connected_census() {
    let mismatches = census_decider_mismatches(&[5, 6, 7]);
    assert!(
        mismatches.is_empty(),
        "structural deciders disagree with minor search on {} cases:\n{}",
        mismatches.len(),
        mismatches.join("\n")
    );
}

#[test]
#[ignore = "fails for the same reason as the seven-vertex run; opt in with --ignored"]
fn deciders_match_minor_search_on_eight_vertex_census() {
    let mismatches = census_decider_mismatches(&[8]);
    assert!(
        mismatches.is_empty(),
        "structural deciders disagree with minor search on {} cases:\n{}",
        mismatches.len(),
        mismatches.join("\n")
    );
}

#[test]
fn complete_graph_on_seven_vertices_documents_the_census_gap() {
    // K7 contracts to K6 and on to K5 = C5^2 with every stage 4-connected,
    // so both structural deciders accept it; yet K7 contains every
    // 7-vertex graph as a spanning subgraph, the two split graphs
    // included. This is the disagreement the census test above trips on.
    let k7 = named("K7");
    assert!(decide_thm14(&k7).unwrap().member);
    assert!(decide_thm16(&k7).unwrap().member);
    for target_name in ["Oct1+", "Oct2+"] {
        let target = named(target_name);
        let model = find_minor(&k7, &target)
            .unwrap()
            .unwrap_or_else(|| panic!("K7 should contain {}", target_name));
        assert!(verify_model(&k7, &target, &model));
    }
}

#[test]
fn sum_planarity_laws_hold_on_randomized_constructions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x66);

    let planar_pool: Vec<SimpleGraph> = ["K4", "W4", "W5", "Prism", "Cube", "Oct", "L5", "Oct1+", "C8^2"]
        .iter()
        .map(|name| named(name))
        .collect();
    let nonplanar_pool: Vec<SimpleGraph> =
        ["K5", "K3,3", "Oct+", "Oct2+", "V8", "L(V8)", "K5^t", "C7^2"]
            .iter()
            .map(|name| named(name))
            .collect();
    let mixed_pool: Vec<SimpleGraph> = planar_pool
        .iter()
        .chain(nonplanar_pool.iter())
        .cloned()
        .collect();

    let pick = |pool: &[SimpleGraph], rng: &mut ChaCha8Rng, keep: &dyn Fn(&SimpleGraph) -> bool| {
        let fits: Vec<&SimpleGraph> = pool.iter().filter(|g| keep(g)).collect();
        fits[rng.gen_range(0..fits.len())].clone()
    };
    let random_clique_spec = |g1: &SimpleGraph, g2: &SimpleGraph, k: usize, rng: &mut ChaCha8Rng| {
        let sides: Vec<Vec<usize>> = [g1, g2]
            .iter()
            .map(|g| match k {
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
            })
            .collect();
        let mut spec = SumSpec::gluing(&sides[0], &sides[1]);
        let glued = sides[0].clone();
        for i in 0..glued.len() {
            for j in i + 1..glued.len() {
                if rng.gen_bool(0.5) {
                    spec.delete_common.push((glued[i], glued[j]));
                }
            }
        }
        spec
    };

    for _ in 0..80 {
        let k = rng.gen_range(0..=2usize);
        let g1 = pick(&planar_pool, &mut rng, &|_| true);
        let g2 = pick(&planar_pool, &mut rng, &|_| true);
        let spec = random_clique_spec(&g1, &g2, k, &mut rng);
        let joined = apply_sum(&g1, &g2, &spec).unwrap();
        assert!(
            is_planar(&joined).unwrap(),
            "{}-sum of planar graphs {} and {} came out non-planar",
            k,
            to_graph6(&g1),
            to_graph6(&g2)
        );
    }

    for _ in 0..80 {
        let k = rng.gen_range(1..=3usize);
        let usable = |g: &SimpleGraph| {
            is_k_connected(g, k).unwrap() && (k < 3 || !g.triangles().is_empty())
        };
        let g1 = pick(&nonplanar_pool, &mut rng, &usable);
        let g2 = pick(&mixed_pool, &mut rng, &usable);
        let spec = random_clique_spec(&g1, &g2, k, &mut rng);
        let joined = apply_sum(&g1, &g2, &spec).unwrap();
        assert!(
            !is_planar(&joined).unwrap(),
            "{}-sum with non-planar summand {} and {} came out planar",
            k,
            to_graph6(&g1),
            to_graph6(&g2)
        );
    }

    for _ in 0..40 {
        let usable = |g: &SimpleGraph| {
            is_planar(g).unwrap()
                && is_k_connected(g, 3).unwrap()
                && g.triangles().iter().any(|&(a, b, c)| {
                    let t = Triangle::new(g, a, b, c).unwrap();
                    !minorkit::connectivity::is_separating_triangle(g, &t).unwrap()
                })
        };
        let pick_triangle = |g: &SimpleGraph, rng: &mut ChaCha8Rng| {
            let good: Vec<(usize, usize, usize)> = g
                .triangles()
                .into_iter()
                .filter(|&(a, b, c)| {
                    let t = Triangle::new(g, a, b, c).unwrap();
                    !minorkit::connectivity::is_separating_triangle(g, &t).unwrap()
                })
                .collect();
            good[rng.gen_range(0..good.len())]
        };
        let g1 = pick(&planar_pool, &mut rng, &usable);
        let g2 = pick(&planar_pool, &mut rng, &usable);
        let (a1, b1, c1) = pick_triangle(&g1, &mut rng);
        let (a2, b2, c2) = pick_triangle(&g2, &mut rng);
        let t1 = Triangle::new(&g1, a1, b1, c1).unwrap();
        let t2 = Triangle::new(&g2, a2, b2, c2).unwrap();
        let mut deletions = Vec::new();
        for (u, v) in [(a1, b1), (a1, c1), (b1, c1)] {
            if rng.gen_bool(0.5) {
                deletions.push((u, v));
            }
        }
        let joined = special_3sum_with(&g1, &t1, &g2, &t2, &deletions).unwrap();
        assert!(
            is_planar(&joined).unwrap(),
            "triangle sum of planar {} and {} over non-separating triangles came out non-planar",
            to_graph6(&g1),
            to_graph6(&g2)
        );
    }

    let all_common_deleted = SumSpec {
        k: 3,
        g1_vertices: vec![0, 1, 2],
        g2_vertices: vec![0, 1, 2],
        delete_common: vec![(0, 1), (0, 2), (1, 2)],
    };
    let stitched = apply_sum(&named("K5"), &named("K4"), &all_common_deleted).unwrap();
    assert!(
        !is_planar(&stitched).unwrap(),
        "K5 and K4 joined on a triangle with all shared edges deleted must stay non-planar"
    );
}

#[test]
fn random_four_split_walks_from_squared_five_cycle_stay_minor_free() {
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
            let spec = specs[rng.gen_range(0..specs.len())];
            g = apply_split(&g, &spec).unwrap();
        }
        let conn = vertex_connectivity(&g).unwrap().0;
        if conn < 4 {
            violations.push(format!("{}: connectivity dropped to {}", to_graph6(&g), conn));
            continue;
        }
        if find_minor(&g, &oct1).unwrap().is_some() {
            violations.push(format!("{}: contains Oct1+", to_graph6(&g)));
        }
        if find_minor(&g, &oct2).unwrap().is_some() {
            violations.push(format!("{}: contains Oct2+", to_graph6(&g)));
        }
    }
    assert!(
        violations.is_empty(),
        "{} of 100 random 4-split walks from C5^2 violate minor-freeness:\n{}",
        violations.len(),
        violations.join("\n")
    );
}

#[test]
fn repeated_complete_graph_splits_reach_minor_carrying_graphs() {
    // Splitting v with A = B = N(v) adds a clone of v, so two such steps
    // climb from C5^2 = K5 to K7, whose spanning subgraphs include both
    // split graphs. This pins down why the random-walk test above fails.
    let mut g = named("C5^2");
    for _ in 0..2 {
        let nbrs = g.neighbors(0);
        let spec = SplitSpec::from_slices(0, &nbrs, &nbrs, SplitArity::Four);
        g = apply_split(&g, &spec).unwrap();
    }
    assert!(is_isomorphic(&g, &named("K7")));
    assert!(find_minor(&g, &named("Oct1+")).unwrap().is_some());
    assert!(find_minor(&g, &named("Oct2+")).unwrap().is_some());
}

#[test]
fn k4_stack_catalog_members_planar_three_connected_oct1_free() {
    let catalog = gen_special_3sum_k4(10).unwrap();
    let oct1 = named("Oct1+");
    assert!(catalog.len() > 2);
    for key in catalog.keys() {
        let g = key.graph();
        assert!(is_planar(&g).unwrap(), "{} not planar", key.to_graph6());
        assert!(
            is_k_connected(&g, 3).unwrap(),
            "{} not 3-connected",
            key.to_graph6()
        );
        assert!(
            find_minor(&g, &oct1).unwrap().is_none(),
            "{} contains Oct1+",
            key.to_graph6()
        );
    }
}

#[test]
fn line_graphs_of_cyclically_four_connected_cubics_contain_oct1_plus() {
    let catalog = gen_cubic_cyc4(2).unwrap();
    let oct1 = named("Oct1+");
    assert!(catalog.len() >= 3);
    for key in catalog.keys() {
        let root = key.graph();
        let lg = root.line_graph().unwrap();
        let model = find_minor(&lg, &oct1)
            .unwrap()
            .unwrap_or_else(|| panic!("L({}) has no Oct1+ minor", key.to_graph6()));
        assert!(verify_model(&lg, &oct1, &model));
    }
}

#[test]
fn named_identities_hold() {
    assert!(is_isomorphic(&named("C5^2"), &named("K5")));
    assert!(is_isomorphic(&named("C6^2"), &named("Oct")));
    let k6_minus_two_independent = named("K6")
        .delete_edge(0, 1)
        .unwrap()
        .delete_edge(2, 3)
        .unwrap();
    assert!(is_isomorphic(&named("Oct+"), &k6_minus_two_independent));
}

#[test]
fn split_then_contract_is_identity_on_random_specs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x88);
    let three_pool = ["Oct", "K5", "K6", "Oct+", "C7^2", "Oct2+", "C8^2", "W6"];
    let four_pool = ["C5^2", "K6", "C6^2", "C7^2", "Oct+", "C8^2", "K7"];
    let prepared: Vec<(SimpleGraph, Vec<SplitSpec>)> = three_pool
        .iter()
        .map(|name| (named(name), SplitArity::Three))
        .chain(four_pool.iter().map(|name| (named(name), SplitArity::Four)))
        .map(|(g, arity)| {
            let specs = enumerate_splits(&g, arity);
            (g, specs)
        })
        .filter(|(_, specs)| !specs.is_empty())
        .collect();
    assert!(prepared.len() >= 10);
    for _ in 0..500 {
        let (g, specs) = &prepared[rng.gen_range(0..prepared.len())];
        let spec = specs[rng.gen_range(0..specs.len())];
        let split = apply_split(g, &spec).unwrap();
        let back = split.contract_edge(spec.v, g.n()).unwrap();
        assert_eq!(
            &back, g,
            "contracting the split pair must restore the original graph exactly"
        );
    }
}

#[test]
fn three_connected_graphs_with_thirteen_edges_number_fifty_one() {
    // Minimum degree 3 with 13 edges forces 6 <= n <= 8.
    let mut total = 0;
    for n in 6..=8 {
        total += gen_all_graphs(n, |g| g.edge_count() == 13 && g.min_degree() >= 3)
            .unwrap()
            .keys()
            .map(|k| k.graph())
            .filter(|g| is_k_connected(g, 3).unwrap())
            .count();
    }
    assert_eq!(total, 51);
}

#![no_main]

use libfuzzer_sys::fuzz_target;
use minorkit::codec::{format_edge_list, from_graph6, parse_edge_list, to_graph6};
use minorkit::SimpleGraph;

fn graph_from_bytes(data: &[u8]) -> Option<SimpleGraph> {
    let (&first, rest) = data.split_first()?;
    let n = (first % 13) as usize;
    let mut g = SimpleGraph::empty(n).ok()?;
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = rest.get(pos / 8).copied().unwrap_or(0);
            if (byte >> (pos % 8)) & 1 == 1 {
                g = g.with_edge(u, v).ok()?;
            }
            pos += 1;
        }
    }
    Some(g)
}

fuzz_target!(|data: &[u8]| {
    let Some(g) = graph_from_bytes(data) else {
        return;
    };
    let g6 = to_graph6(&g);
    let back = from_graph6(&g6).expect("encoder output decodes");
    assert_eq!(back, g, "graph6 round trip must be exact");

    let listed = format_edge_list(&g);
    let back = parse_edge_list(&listed).expect("encoder output parses");
    assert_eq!(back, g, "edge-list round trip must be exact");
});

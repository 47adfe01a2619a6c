#![no_main]

use libfuzzer_sys::fuzz_target;
use minorkit::codec::{parse_graph6_stream, to_graph6};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(graphs) = parse_graph6_stream(s) {
        let joined: String = graphs
            .iter()
            .map(to_graph6)
            .collect::<Vec<_>>()
            .join("\n");
        let back = parse_graph6_stream(&joined).expect("re-encoded stream decodes");
        assert_eq!(back, graphs, "stream decode must survive a round trip");
    }
});

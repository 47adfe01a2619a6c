#![no_main]

use libfuzzer_sys::fuzz_target;
use minorkit::codec::{format_edge_list, parse_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_edge_list(s) {
        let formatted = format_edge_list(&g);
        let back = parse_edge_list(&formatted).expect("formatted edge list parses");
        assert_eq!(back, g, "parse/format/parse must be stable");
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use minorkit::codec::{from_graph6, to_graph6};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = from_graph6(s) {
        let reencoded = to_graph6(&g);
        let back = from_graph6(&reencoded).expect("re-encoded graph6 decodes");
        assert_eq!(back, g, "decode/encode/decode must be stable");
    }
});

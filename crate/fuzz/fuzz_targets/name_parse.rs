#![no_main]

use libfuzzer_sys::fuzz_target;
use minorkit::atlas::build_named;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if s.len() > 64 {
        return;
    }
    if let Ok(g) = build_named(s) {
        assert!(g.n() <= 64, "atlas graphs stay within the vertex limit");
    }
});

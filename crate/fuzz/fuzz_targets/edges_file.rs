#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(edges) = rhomix::io::parse_edges(text) {
            let _ = rhomix::graphs::Digraph::from_edges(&edges);
        }
    }
});

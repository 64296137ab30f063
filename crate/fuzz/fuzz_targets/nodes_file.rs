#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(nodes) = rhomix::io::parse_complex_list(text) {
            let _ = rhomix::numkernel::RootSet::new(nodes);
        }
    }
});

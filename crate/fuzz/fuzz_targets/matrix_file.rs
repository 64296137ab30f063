#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(rows) = rhomix::io::parse_matrix(text) {
            // Validation must never panic, whatever the parser accepted.
            let _ = rhomix::markov::TransitionMatrix::validate(rows);
        }
    }
});

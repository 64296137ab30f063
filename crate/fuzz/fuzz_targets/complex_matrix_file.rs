#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(rows) = rhomix::io::parse_complex_matrix(text) {
            let _ = rhomix::spectral::SquareMatrix::from_rows(&rows);
        }
    }
});

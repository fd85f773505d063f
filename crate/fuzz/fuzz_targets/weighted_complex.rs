#![no_main]

use libfuzzer_sys::fuzz_target;
use tropkit::json::{parse_weighted_complex, weighted_complex_to_value};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    // Hull computations grow quickly with size; keep inputs small.
    if s.len() > 2048 {
        return;
    }
    if let Ok(w) = parse_weighted_complex(s) {
        let out = weighted_complex_to_value(&w).to_string();
        let v = parse_weighted_complex(&out).expect("emitted complex re-parses");
        assert_eq!(w, v);
        assert_eq!(weighted_complex_to_value(&v).to_string(), out);
    }
});

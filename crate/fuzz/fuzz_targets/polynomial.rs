#![no_main]

use libfuzzer_sys::fuzz_target;
use tropkit::json::{parse_polynomial, polynomial_to_value};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if s.len() > 8192 {
        return;
    }
    if let Ok(f) = parse_polynomial(s) {
        let out = polynomial_to_value(&f).to_string();
        let g = parse_polynomial(&out).expect("emitted polynomial re-parses");
        assert_eq!(f, g);
        assert_eq!(polynomial_to_value(&g).to_string(), out);
    }
});

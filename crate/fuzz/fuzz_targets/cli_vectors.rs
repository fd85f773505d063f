#![no_main]

use libfuzzer_sys::fuzz_target;
use tropkit::json::{parse_point, point_to_value};
use tropkit_cli::parse_vector;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if s.len() > 1024 {
        return;
    }
    if let Ok(v) = parse_vector(s) {
        let json = point_to_value(&v).to_string();
        assert_eq!(parse_point(&json).unwrap(), v);
    }
});

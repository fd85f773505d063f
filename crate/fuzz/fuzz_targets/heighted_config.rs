#![no_main]

use libfuzzer_sys::fuzz_target;
use tropkit::json::{config_to_value, parse_config};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if s.len() > 8192 {
        return;
    }
    if let Ok(c) = parse_config(s) {
        let out = config_to_value(&c).to_string();
        let d = parse_config(&out).expect("emitted config re-parses");
        assert_eq!(c, d);
    }
});

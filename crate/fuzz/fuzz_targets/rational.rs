#![no_main]

use equiangular::linalg::{format_rational, is_lowest_terms};
use equiangular::parse_rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = parse_rational(text) {
        assert!(is_lowest_terms(&q));
        assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
});

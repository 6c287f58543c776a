#![no_main]

use equiangular::lineset::{from_json, to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 1 << 14 {
        return;
    }
    if let Ok(ls) = from_json(text) {
        assert_eq!(from_json(&to_json(&ls)).expect("round trip"), ls);
    }
});

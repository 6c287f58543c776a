#![no_main]

use equiangular::constructions::{parse_graph6, to_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // Anything accepted must re-encode to a string that decodes to the same graph.
    if let Ok(g) = parse_graph6(data) {
        let again = parse_graph6(to_graph6(&g).as_bytes()).expect("re-encoded graph6 parses");
        assert_eq!(again, g);
    }
});

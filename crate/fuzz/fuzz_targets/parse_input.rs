#![no_main]

use edgereg::parse::parse_input;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_input(text) {
        // whatever parses must survive a round trip through the edge-list form
        assert_eq!(parse_input(&g.to_edge_list()).as_ref(), Ok(&g));
    }
});

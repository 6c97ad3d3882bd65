#![no_main]

use edgereg::graph::{family, recognize_d_tree};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(spec) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = family(spec) {
        if spec.starts_with("dtree:") {
            assert!(recognize_d_tree(&g).is_some());
        }
    }
});

#![no_main]

use edgereg::harness::parse_theorem_list;
use edgereg::FieldChoice;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = s.parse::<FieldChoice>();
        let _ = parse_theorem_list(s);
    }
});

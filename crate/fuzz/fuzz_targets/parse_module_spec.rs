#![no_main]

use libfuzzer_sys::fuzz_target;
use userial::frontend::{parse, parse_module_spec};

const QUIVER: &str = "field F3; vertices 1 2 3 4; arrows a1:1->2 a2:2->3 d1:2->3 b1:3->4";

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let spec = parse(QUIVER).unwrap();
    let _ = parse_module_spec(&spec.quiver, spec.field, text);
});

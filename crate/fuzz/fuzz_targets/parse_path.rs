#![no_main]

use libfuzzer_sys::fuzz_target;
use userial::frontend::{parse, parse_path};

const QUIVER: &str = "field Q; vertices 1 2 3 4; arrows a1:1->2 a2:2->3 d1:2->3 b1:3->4 e_1:4->4";

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let spec = parse(QUIVER).unwrap();
    if let Ok(p) = parse_path(&spec.quiver, text) {
        let name = spec.quiver.path_name(&p);
        if !p.is_stationary() {
            assert_eq!(parse_path(&spec.quiver, &name).unwrap(), p);
        }
    }
});

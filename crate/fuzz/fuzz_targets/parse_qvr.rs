#![no_main]

use libfuzzer_sys::fuzz_target;
use userial::frontend::{emit, parse};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse(text) {
        let again = parse(&emit(&spec)).expect("emitted text reparses");
        assert_eq!(again, spec);
        // building only fails with an error, never a panic
        let _ = spec.build();
    }
});

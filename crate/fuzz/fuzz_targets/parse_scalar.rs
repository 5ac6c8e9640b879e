#![no_main]

use libfuzzer_sys::fuzz_target;
use userial::frontend::parse_scalar;
use userial::Field;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for f in [Field::Rational, Field::Prime(2), Field::Prime(7)] {
        if let Ok(s) = parse_scalar(f, text) {
            assert_eq!(parse_scalar(f, &s.to_exact_string()).unwrap(), s);
        }
    }
});

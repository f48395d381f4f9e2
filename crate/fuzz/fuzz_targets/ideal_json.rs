#![no_main]

use coverbetti::SquarefreeMonomialIdeal;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(ideal) = SquarefreeMonomialIdeal::from_json(text) {
        let back =
            SquarefreeMonomialIdeal::from_json(&ideal.to_json()).expect("round trip");
        assert_eq!(back, ideal);
        // generators are nonempty and minimal
        let gens = ideal.gens();
        for (i, &u) in gens.iter().enumerate() {
            assert!(!u.is_empty());
            for (j, &v) in gens.iter().enumerate() {
                assert!(i == j || !u.is_subset(v));
            }
        }
    }
});

#![no_main]

use coverbetti::SimplicialComplex;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = SimplicialComplex::from_json(text) {
        let back = SimplicialComplex::from_json(&c.to_json()).expect("round trip");
        assert_eq!(back, c);
        // facets are an antichain
        let facets = c.facets();
        for (i, &f) in facets.iter().enumerate() {
            for (j, &g) in facets.iter().enumerate() {
                assert!(i == j || !f.is_subset(g));
            }
        }
    }
});

#![no_main]

use coverbetti::Graph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // parsing must never panic; accepted graphs must round-trip
    if let Ok(g) = Graph::parse_edge_list(text) {
        let back = Graph::parse_edge_list(&g.to_edge_list_string()).expect("round trip");
        assert_eq!(back, g);
        assert_eq!(g.complement().complement(), g);
        let n = u64::from(g.n());
        assert!(g.edge_count() as u64 <= n * n.saturating_sub(1) / 2);
    }
});

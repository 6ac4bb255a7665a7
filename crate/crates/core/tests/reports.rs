use looprank::io::GraphJson;
use looprank::verify::{classify_rank3, verify_c4_table, verify_cycle_rank_bound, verify_rank12, verify_witnesses};
use looprank::{rank_graph, SelfLoopGraph, Status, VerificationReport};

fn without_timing(mut r: VerificationReport) -> VerificationReport {
    r.elapsed_ms = 0;
    r
}

#[test]
fn reports_are_deterministic() {
    assert_eq!(without_timing(verify_c4_table().unwrap()), without_timing(verify_c4_table().unwrap()));
    let a = classify_rank3(6, true, true, false).unwrap().0;
    let b = classify_rank3(6, true, true, false).unwrap().0;
    assert_eq!(without_timing(a).to_json_pretty(), without_timing(b).to_json_pretty());
}

#[test]
fn reports_round_trip_through_json() {
    let r = verify_cycle_rank_bound(5, 6).unwrap();
    let back: VerificationReport = serde_json::from_str(&r.to_json_pretty()).unwrap();
    assert_eq!(back, r);
    assert!(r.to_json_pretty().contains("\"status\": \"verified\""));
}

#[test]
fn violations_reproduce_their_rank() {
    let (report, _) = classify_rank3(6, true, true, false).unwrap();
    for v in &report.violations {
        let text = serde_json::to_string(v).unwrap();
        let g = SelfLoopGraph::try_from(&serde_json::from_str::<GraphJson>(&text).unwrap()).unwrap();
        assert_eq!(rank_graph(&g), 3, "{text}");
        assert!(g.is_triangle_free() && g.is_connected() && g.is_cyclic());
    }
}

#[test]
fn cycle_bound_counts() {
    let r = verify_cycle_rank_bound(5, 9).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert_eq!(r.checked, (5..=9).map(|n| (1u64 << n) - 1).sum::<u64>());
    assert!(verify_cycle_rank_bound(4, 9).is_err());
    assert!(verify_cycle_rank_bound(5, 13).is_err());
}

#[test]
fn witnesses_cover_every_cycle_instance() {
    let r = verify_witnesses(7).unwrap();
    assert!(r.is_verified(), "{}", r.to_json_pretty());
    assert_eq!(r.checked, 31 + 63 + 127);
}

#[test]
fn rank12_small_orders() {
    let r = verify_rank12(5).unwrap();
    assert!(r.is_verified(), "{:?}", r.witnesses.get("violation_notes"));
    assert!(verify_rank12(8).is_err());
}

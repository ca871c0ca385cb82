//! Handle-cancellation triviality over the enumerated corpus, with
//! randomized cancellation orders to pin order-insensitivity.

use protocork_core::cobordism::{
    build_c, build_q, build_t, build_w, check_trivial, check_trivial_with, compose,
    protocork_as_cobordism, Cobordism,
};
use protocork_core::graph::{enumerate, ProtocorkGraph};
use protocork_core::kirby::Stage;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn connected_corpus() -> Vec<ProtocorkGraph> {
    let mut graphs = enumerate(1, 6, 100_000).unwrap();
    graphs.extend(enumerate(2, 6, 100_000).unwrap());
    graphs.retain(|g| g.is_connected());
    graphs
}

fn assert_trivial_under_random_orders(c: &Cobordism, rng: &mut ChaCha8Rng, what: &str) {
    let baseline = check_trivial(c);
    assert!(baseline.trivial, "{what}: default order fails");
    for _ in 0..20 {
        let report = check_trivial_with(c, |cands| rng.gen_range(0..cands.len()));
        assert!(report.trivial, "{what}: randomized order fails");
        assert_eq!(report.trace.len(), baseline.trace.len());
    }
}

#[test]
fn q_after_w_is_trivial_for_every_connected_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in connected_corpus() {
        let w = build_w(&g).unwrap();
        let q = build_q(&g).unwrap();
        let qw = compose(&w, &q).unwrap();
        assert_trivial_under_random_orders(&qw, &mut rng, &g.canonical_hex());
    }
}

#[test]
fn c_after_either_end_is_trivial_for_every_connected_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for g in connected_corpus() {
        for stage in [Stage::Zero, Stage::One] {
            let n = protocork_as_cobordism(&g, stage).unwrap();
            let c = build_c(&g).unwrap();
            let nc = compose(&n, &c).unwrap();
            assert_trivial_under_random_orders(&nc, &mut rng, &g.canonical_hex());
        }
    }
}

#[test]
fn t_after_the_zero_end_is_trivial_for_every_symmetric_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for g in connected_corpus() {
        if !g.is_symmetric() {
            continue;
        }
        let n = protocork_as_cobordism(&g, Stage::Zero).unwrap();
        let t = build_t(&g).unwrap();
        let nt = compose(&n, &t.cobordism).unwrap();
        assert_trivial_under_random_orders(&nt, &mut rng, &g.canonical_hex());
    }
}

#[test]
fn lone_protocork_keeps_its_excess_handles() {
    for g in connected_corpus() {
        let n = protocork_as_cobordism(&g, Stage::Zero).unwrap();
        let report = check_trivial(&n);
        let b1 = g.stats().b1_boundary;
        assert_eq!(report.trivial, b1 == 0, "graph {}", g.canonical_hex());
        assert_eq!(
            report.survivors.iter().filter(|h| h.index == 1).count(),
            b1
        );
    }
}

#[test]
fn mutated_composition_fails_the_check() {
    // Drop the 3-handle and double one 2-handle run over the belt sphere:
    // still a chain complex, but a 2-cycle survives.
    let g = ProtocorkGraph::new(1, &[(1, 1, 1), (1, 1, 1), (1, 1, -1)]).unwrap();
    let w = build_w(&g).unwrap();
    let q = build_q(&g).unwrap();
    let mut qw = compose(&w, &q).unwrap();
    qw.handles.retain(|h| h.index != 3);
    let pos = qw
        .handles
        .iter()
        .position(|h| h.index == 2 && h.attach.iter().any(|&v| v != 0))
        .unwrap();
    for v in &mut qw.handles[pos].attach {
        *v *= 2;
    }
    let report = check_trivial(&qw);
    assert!(!report.trivial);
    assert!(report.survivors.iter().any(|h| h.index == 2));
}

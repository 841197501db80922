use steiner_core::enumerate::valid_orientations;
use steiner_core::gadgets::{build_clause2, build_clause3, build_edge_gadget, build_flip, build_variable, Gadget};
use steiner_core::pm3sat::Side;
use steiner_core::validate::check_source_sink_property;
use steiner_core::{EdgeState, Orientation};

use EdgeState::{Forward as F, Reverse as R};

fn all_valid(g: &Gadget) -> Vec<Orientation> {
    valid_orientations(&g.instance(), None, usize::MAX).unwrap()
}

#[test]
fn flip_solutions_are_exactly_the_antiparallel_pairs() {
    let g = build_flip();
    let sols = all_valid(&g);
    let expect = [
        Orientation::from_states(vec![R, F]),
        Orientation::from_states(vec![F, R]),
    ];
    assert_eq!(sols.len(), 2);
    for e in &expect {
        assert!(sols.contains(e));
    }
}

#[test]
fn variable_gadgets_have_exactly_two_rotations() {
    for p in 1..=3 {
        for n in 1..=3 {
            let g = build_variable(p, n).unwrap();
            let sols = all_valid(&g);
            let clockwise: Vec<EdgeState> = (0..p).map(|_| F).chain((0..n).map(|_| R)).collect();
            let counter: Vec<EdgeState> = clockwise.iter().map(|s| s.flipped()).collect();
            assert_eq!(sols.len(), 2, "p={p} n={n}");
            assert!(sols.contains(&Orientation::from_states(clockwise)));
            assert!(sols.contains(&Orientation::from_states(counter)));
        }
    }
}

#[test]
fn edge_gadget_copies_port_direction() {
    let g = build_edge_gadget();
    let (a, m, b) = (g.edge("a"), g.edge("m"), g.edge("b"));
    let sols = all_valid(&g);
    assert_eq!(sols.len(), 2);
    for o in sols {
        assert_eq!(o.get(a), o.get(b));
        assert_eq!(o.get(m), o.get(a).flipped());
    }
}

fn check_clause(g: &Gadget, ports: &[&str]) {
    let ids: Vec<_> = ports.iter().map(|p| g.edge(p)).collect();
    let sols = all_valid(g);
    for mask in 0u32..1 << ids.len() {
        let completable = sols.iter().any(|o| {
            ids.iter()
                .enumerate()
                .all(|(k, &e)| o.get(e) == if mask >> k & 1 == 1 { F } else { R })
        });
        assert_eq!(completable, mask != 0, "{:?} ports {mask:b}", g.kind);
    }
}

#[test]
fn clause3_is_completable_iff_some_port_points_right() {
    for side in [Side::Positive, Side::Negative] {
        check_clause(&build_clause3(side), &["x", "y", "z"]);
    }
}

#[test]
fn clause2_is_completable_iff_some_port_points_right() {
    for side in [Side::Positive, Side::Negative] {
        check_clause(&build_clause2(side), &["x", "z"]);
    }
}

#[test]
fn every_gadget_has_pure_sources_and_sinks() {
    let mut all = vec![build_flip(), build_edge_gadget()];
    for side in [Side::Positive, Side::Negative] {
        all.push(build_clause3(side));
        all.push(build_clause2(side));
    }
    for p in 1..=3 {
        for n in 1..=3 {
            all.push(build_variable(p, n).unwrap());
        }
    }
    for g in all {
        assert!(check_source_sink_property(&g.instance()).is_empty(), "{:?}", g.kind);
    }
}

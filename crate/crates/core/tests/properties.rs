use std::collections::BTreeSet;

use proptest::prelude::*;

use bwcolor::cli::{format_graph, parse_graph};
use bwcolor::generators::{generate, GenClass, GenSpec};
use bwcolor::graph::{Coloring, Graph};
use bwcolor::oracle::{brute_profile, decide_oracle, DEFAULT_CAP};
use bwcolor::recognition::threshold::ThresholdOrdering;
use bwcolor::recognition::{
    recognize_cograph, recognize_dh, recognize_difference, recognize_interval, recognize_split,
    recognize_strongly_chordal, recognize_threshold, Forbidden, IntervalError, Witness,
};
use bwcolor::reduction::{build_split_instance, inverse_decide};
use bwcolor::solvers::cograph_gamma;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e)).unwrap()
        })
    })
}

fn class_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..GenClass::ALL.len(), 0..=max_n, any::<u64>(), 0.0..=1.0f64).prop_map(|(c, n, seed, p)| {
        generate(&GenSpec::new(GenClass::ALL[c], n, seed).with_density(p)).unwrap().graph
    })
}

fn degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

fn connected(g: &Graph) -> bool {
    g.components().len() <= 1
}

fn is_simple(g: &Graph, v: usize) -> bool {
    let closed = |u: usize| -> BTreeSet<usize> { g.neighbors(u).iter().copied().chain([u]).collect() };
    let hoods: Vec<BTreeSet<usize>> = g.neighbors(v).iter().chain([&v]).map(|&u| closed(u)).collect();
    hoods.iter().all(|a| hoods.iter().all(|b| a.is_subset(b) || b.is_subset(a)))
}

fn has_pruning_step(g: &Graph) -> bool {
    let open = |u: usize| -> BTreeSet<usize> { g.neighbors(u).iter().copied().collect() };
    let closed = |u: usize| -> BTreeSet<usize> { open(u).into_iter().chain([u]).collect() };
    g.vertices().any(|v| {
        g.degree(v) <= 1 || g.vertices().any(|u| u != v && (open(u) == open(v) || closed(u) == closed(v)))
    })
}

/// The witness vertices induce what the witness kind names.
fn witness_holds(g: &Graph, w: &Witness) -> bool {
    let distinct: BTreeSet<usize> = w.vertices.iter().copied().collect();
    if distinct.len() != w.vertices.len() || w.vertices.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let h = g.induced(&w.vertices);
    let k = h.n();
    match w.kind {
        Forbidden::P4 => k == 4 && degrees(&h) == [1, 1, 2, 2] && connected(&h),
        Forbidden::C4 => k == 4 && degrees(&h) == [2; 4],
        Forbidden::TwoK2 => k == 4 && degrees(&h) == [1; 4] && !connected(&h),
        Forbidden::Triangle => k == 3 && h.m() == 3,
        Forbidden::C5 => k == 5 && degrees(&h) == [2; 5] && connected(&h),
        Forbidden::Hole => k >= 5 && degrees(&h).iter().all(|&d| d == 2) && connected(&h),
        Forbidden::NoPruningStep => k > 1 && !has_pruning_step(&h),
        Forbidden::NoSimpleVertex => k > 0 && h.vertices().all(|v| !is_simple(&h, v)),
        Forbidden::NoConsecutiveArrangement => k > 0 && connected(&h),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn format_round_trips(g in class_graph(16)) {
        prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }

    #[test]
    fn verification_matches_closed_neighborhood(g in graph(9), picks in proptest::collection::vec(0..3u8, 9)) {
        let black: BTreeSet<usize> = g.vertices().filter(|&v| picks[v] == 1).collect();
        let white: BTreeSet<usize> = g.vertices().filter(|&v| picks[v] == 2).collect();
        let hood = g.closed_neighborhood(&black).unwrap();
        let c = Coloring::new(black, white.clone());
        prop_assert_eq!(g.verify_coloring(&c).unwrap(), white.is_disjoint(&hood));
    }

    #[test]
    fn oracle_is_swap_symmetric(g in graph(9), b in 0..10usize, w in 0..10usize) {
        prop_assert_eq!(decide_oracle(&g, b, w, DEFAULT_CAP).unwrap(), decide_oracle(&g, w, b, DEFAULT_CAP).unwrap());
        let f = brute_profile(&g, DEFAULT_CAP).unwrap();
        prop_assert!(f.check_invariants().is_ok());
        prop_assert_eq!(f.admits(b, w), decide_oracle(&g, b, w, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn recognizers_are_sound(g in prop_oneof![graph(9), class_graph(10)]) {
        match recognize_cograph(&g) {
            Ok(t) => prop_assert_eq!(t.realize(), g.clone()),
            Err(w) => prop_assert!(witness_holds(&g, &w), "cograph {:?}", w),
        }
        match recognize_threshold(&g) {
            Ok(o) => {
                prop_assert!(ThresholdOrdering::from_order(&g, o.order().to_vec()).is_ok());
                prop_assert!(recognize_cograph(&g).is_ok() && recognize_split(&g).is_ok());
            }
            Err(w) => prop_assert!(witness_holds(&g, &w), "threshold {:?}", w),
        }
        match recognize_difference(&g) {
            Ok(m) => prop_assert!(m.validate(&g)),
            Err(w) => prop_assert!(witness_holds(&g, &w), "difference {:?}", w),
        }
        match recognize_split(&g) {
            Ok(p) => prop_assert!(p.validate(&g)),
            Err(w) => prop_assert!(witness_holds(&g, &w), "split {:?}", w),
        }
        match recognize_dh(&g) {
            Ok(t) => prop_assert_eq!(t.validate(&g), Ok(())),
            Err(w) => prop_assert!(witness_holds(&g, &w), "dh {:?}", w),
        }
        match recognize_interval(&g) {
            Ok(o) => prop_assert!(o.validate(&g)),
            Err(IntervalError::NotInterval(w)) => prop_assert!(witness_holds(&g, &w), "interval {:?}", w),
            Err(IntervalError::BudgetExceeded { .. }) => {}
        }
        match recognize_strongly_chordal(&g) {
            Ok(o) => prop_assert!(o.validate(&g)),
            Err(w) => prop_assert!(witness_holds(&g, &w), "strongly chordal {:?}", w),
        }
    }

    #[test]
    fn gamma_tables_are_closed_and_symmetric(seed in any::<u64>(), n in 0..14usize) {
        let g = generate(&GenSpec::new(GenClass::Cograph, n, seed)).unwrap().graph;
        let gamma = cograph_gamma(&recognize_cograph(&g).unwrap());
        prop_assert!(gamma.is_downward_closed());
        prop_assert!(gamma.is_symmetric());
    }

    #[test]
    fn split_instances(g in graph(6), s in 1..5usize) {
        prop_assume!(s <= g.n());
        let inst = build_split_instance(&g, s).unwrap();
        prop_assert!(recognize_split(&inst.h).is_ok());
        let (b, w) = (inst.target_b, inst.target_w);
        prop_assert_eq!(
            inverse_decide(&inst.h, b, w, DEFAULT_CAP).unwrap(),
            decide_oracle(&inst.h.complement(), b, w, DEFAULT_CAP).unwrap()
        );
    }
}

#[test]
fn generators_stay_in_class() {
    for seed in 0..200u64 {
        let n = (seed % 15) as usize;
        let spec = |class| GenSpec::new(class, n, seed);
        let member = |class: GenClass| -> bool {
            let g = generate(&spec(class)).unwrap().graph;
            match class {
                GenClass::Cograph => recognize_cograph(&g).is_ok(),
                GenClass::Threshold => recognize_threshold(&g).is_ok(),
                GenClass::Difference => recognize_difference(&g).is_ok(),
                GenClass::Dh => recognize_dh(&g).is_ok(),
                GenClass::Interval => recognize_interval(&g).is_ok(),
                GenClass::Split => recognize_split(&g).is_ok(),
                GenClass::Arbitrary => g.n() == n,
            }
        };
        for class in GenClass::ALL {
            assert!(member(class), "{class} seed {seed}");
            assert_eq!(generate(&spec(class)), generate(&spec(class)));
        }
    }
}

#[test]
fn generator_output_is_pinned() {
    let text = |class, n, seed| format_graph(&generate(&GenSpec::new(class, n, seed)).unwrap().graph);
    assert_eq!(text(GenClass::Arbitrary, 6, 42), "6 8\n0 1\n0 3\n0 4\n1 3\n2 4\n3 4\n3 5\n4 5\n");
    assert_eq!(text(GenClass::Threshold, 5, 7), "5 6\n0 1\n0 2\n0 4\n1 2\n1 4\n2 4\n");
}
